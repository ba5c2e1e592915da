#pragma once

#include <optional>
#include <vector>

#include "dihg/geometry.hpp"
#include "dihg/partition.hpp"

namespace dihg {

// Margin arrays over the n^d d-cells of a partition. The S-array entry of a
// d-cell is a clipped containment slack, positive exactly when the d-cell
// strictly contains an edge; the T-array entry is 1 exactly when the d-cell
// is contained in an edge, decaying to 0 once the worst per-copy violation
// exceeds epsilon. Both are continuous in the partition.

struct LayerArray {
  int d = 1, n = 1;
  std::vector<Rat> entries;     // indexed by flat_index(jvec, n)
  std::optional<Rat> epsilon;   // set for T-arrays

  const Rat& at(const DCellIndex& jvec) const {
    return entries[static_cast<std::size_t>(flat_index(jvec, n))];
  }
  Rat total() const;
  bool all_zero() const;
};

struct LayerSums {
  int d = 1, n = 1;
  std::vector<Rat> sums;  // (copy-1)*n + (j-1)

  const Rat& at(int copy, int j) const {
    return sums[static_cast<std::size_t>((copy - 1) * n + (j - 1))];
  }
  // Sum of one direction's layers (the same for every direction).
  Rat total() const;
  // Largest per-direction gap between the biggest and smallest layer sum.
  Rat spread() const;
};

// Containment slack of the d-cell: max over edges of the worst per-copy
// slack min(left, right), where the slack against a closed outer boundary is
// capped at 1; clipped at 0. Positive iff some edge lies strictly inside.
Rat s_margin(const CutSystem& cuts, const DCellIndex& jvec, const DIntervalHypergraph& h);

// Capped L-infinity violation of "d-cell inside some edge": per copy
// q = min(0, max(min(c_{j-1} - a, b - c_j), -(cell length))), mu = max over
// edges of the worst q. Always in [-1, 0]; 0 iff the d-cell is contained in
// an edge (empty cells count as contained).
Rat mu_value(const CutSystem& cuts, const DCellIndex& jvec, const DIntervalHypergraph& h);

// clamp(1 + mu/epsilon, 0, 1).
Rat t_value(const CutSystem& cuts, const DCellIndex& jvec, const DIntervalHypergraph& h,
            const Rat& epsilon);

LayerArray s_array(const ProductPoint& x, const DIntervalHypergraph& h);
LayerArray t_array(const ProductPoint& x, const DIntervalHypergraph& h, const Rat& epsilon);

// S-array for Contains, T-array for ContainedIn (epsilon used only there).
LayerArray mode_array(const ProductPoint& x, const DIntervalHypergraph& h, PredicateMode mode,
                      const Rat& epsilon);

// sums(i,j) = sum of entries over d-cells with j_i = j.
LayerSums layer_sums(const LayerArray& a);

}  // namespace dihg
