#pragma once

#include <vector>

#include "dihg/finite.hpp"
#include "dihg/geometry.hpp"
#include "dihg/margins.hpp"
#include "dihg/partition.hpp"

namespace dihg {

// Auxiliary d-partite hypergraph of a balanced point: one vertex v^i_j per
// cell (vertex id (i-1)*n + j-1, part i), and one edge {v^1_{j_1}, ...,
// v^d_{j_d}} per d-cell with a positive margin entry, weighted entry / a
// where a = total/n is the common layer sum. When the layer sums are exactly
// equal the weights form a fractional matching (S-array) or fractional
// edge-cover (T-array) of the vertex set with total weight n.
struct GammaResult {
  FiniteHypergraph gamma;
  std::vector<long> flat_of_edge;  // gamma edge index -> flat d-cell index
  Rat common_value;                // a
};

// Throws std::invalid_argument when the layer-sum spread exceeds tol or the
// array vanishes identically.
GammaResult build_gamma(const ProductPoint& x, const DIntervalHypergraph& h, int n,
                        PredicateMode mode, const Rat& epsilon, const Rat& tol = Rat(0));

}  // namespace dihg
