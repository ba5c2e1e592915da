#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "dihg/bitset.hpp"
#include "dihg/geometry.hpp"
#include "dihg/invariants.hpp"
#include "dihg/partition.hpp"

namespace dihg {

// The space of n-partitions of one copy is quotiented into finitely many
// configurations: each cut sits either at a critical value (an edge endpoint,
// 0, or 1) or inside an open gap between consecutive critical values, and
// cuts sharing a gap carry an equality pattern. Every cell predicate compares
// cuts only against critical values and neighboring cuts, so it is constant
// on each configuration; testing the gap-midpoint representative decides it
// exactly for the whole class.
struct CopyConfiguration {
  int copy = 1;
  // Per cut, weakly increasing: code 2k = at critical value k,
  // code 2k+1 = inside the open gap between values k and k+1.
  std::vector<int> position;
  // equal_prev[t] (t >= 1): cut t equals cut t-1. Forced true when both sit
  // at the same critical value, forced false when positions differ; free for
  // cuts sharing a gap.
  std::vector<bool> equal_prev;
  std::vector<Rat> cuts;  // representative interior cut values
};

// Every configuration of n-1 cuts on one copy, lexicographic in (position,
// equality pattern). Throws ScaleGuardError past limits.combo_budget.
std::vector<CopyConfiguration> enumerate_configurations(const DIntervalHypergraph& h, int n,
                                                        int copy, const SearchLimits& limits = {});

// Row j-1 holds the edges whose copy part satisfies the mode predicate
// against cell j of the configuration's representative cuts.
std::vector<BitSet> configuration_table(const DIntervalHypergraph& h, const CopyConfiguration& conf,
                                        int n, PredicateMode mode);

struct PremiseResult {
  bool holds = false;
  std::optional<CutSystem> counterexample;  // representative partition when it fails
};

// Decides exactly whether every d x n-partition has a d-cell satisfying the
// mode predicate against some common edge, by scanning all combinations of
// per-copy configurations.
PremiseResult premise_check(const DIntervalHypergraph& h, int n, PredicateMode mode,
                            const SearchLimits& limits = {});

struct PartitionCertificate {
  PredicateMode mode = PredicateMode::ContainedIn;
  CutSystem cuts;
  // ContainedIn: cell_edges[i-1][j-1] = id of an edge containing cell j of
  // copy i (every cell is witnessed).
  std::vector<std::vector<int>> cell_edges;
  // Contains: pairwise disjoint d-cells (distinct cell index in every copy)
  // and the edge each one contains.
  std::vector<std::pair<DCellIndex, int>> dcell_witness;
  std::vector<int> used_edges;  // sorted distinct witness ids (H0)
};

// Exhaustive oracle over all configuration combinations.
// ContainedIn: finds a partition with every cell contained in an edge; with
// minimize_h0 the number of distinct witness edges is minimized exactly over
// all configurations. Contains: maximizes the number of pairwise disjoint
// d-cells containing edges. Returns the first optimum in enumeration order.
std::optional<PartitionCertificate> exhaustive_partition_search(const DIntervalHypergraph& h, int n,
                                                                PredicateMode mode, bool minimize_h0,
                                                                const SearchLimits& limits = {});

}  // namespace dihg
