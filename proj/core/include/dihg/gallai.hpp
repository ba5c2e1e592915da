#pragma once

#include <optional>
#include <vector>

#include "dihg/geometry.hpp"
#include "dihg/partition.hpp"

namespace dihg {

// Greedy certificates for 1-interval hypergraphs (d = 1). Both greedies are
// exact: matching size == transversal size == nu == tau, and cover size ==
// independent-set size == iota == rho (infinite iff the edges do not cover
// [0,1]).

struct GreedyMatchingResult {
  std::vector<int> matching;     // pairwise disjoint edge ids, in pick order
  std::vector<Rat> transversal;  // one point per pick (the chosen right endpoint)
};

struct GreedyCoverResult {
  bool infinite = false;              // union of edges != [0,1]
  std::optional<Rat> gap_witness;     // a point outside the union when infinite
  std::vector<int> cover;             // edge ids covering [0,1], in pick order
  std::vector<Rat> independent_points;  // strongly independent, one per pick
};

// Sweep picking the remaining edge with the leftmost right endpoint (ties:
// lowest id), then discarding everything it meets. The picked right
// endpoints form a transversal of equal size.
GreedyMatchingResult gallai_matching(const DIntervalHypergraph& h);

// Sweep maintaining the covered prefix [0, c]: among edges with lo <= c < hi
// pick the one with the rightmost right endpoint (ties: lowest id). Each
// pick also yields an independent point just right of the old frontier
// (midpoint of the gap to the next endpoint value), so sizes match.
GreedyCoverResult gallai_cover(const DIntervalHypergraph& h);

// Constructive d=1 partition statement: if every n-partition has a cell
// that contains an edge (Contains) / is contained in an edge (ContainedIn),
// produce one n-partition all of whose cells do; otherwise report a
// counterexample partition. Decided exactly via the configuration quotient.
struct Partition1DResult {
  std::optional<CutSystem> witness;
  std::optional<CutSystem> counterexample;
};

Partition1DResult all_cells_partition_1d(const DIntervalHypergraph& h, int n, PredicateMode mode);

}  // namespace dihg
