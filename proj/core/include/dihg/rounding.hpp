#pragma once

#include <vector>

#include "dihg/finite.hpp"
#include "dihg/limits.hpp"

namespace dihg {

// Integral covers and matchings of finite hypergraphs, used to round the
// fractional objects living on the auxiliary hypergraph.

// Repeatedly picks the edge covering the most still-uncovered vertices
// (lowest id on ties). Size at most (1 + ln rank) times the optimal
// fractional edge cover. Throws std::invalid_argument on an isolated vertex.
std::vector<int> greedy_edge_cover(const FiniteHypergraph& f);

// Exact minimum edge cover of a bipartite graph (edges of size 2, parts 1
// and 2): maximum matching by augmenting paths, then one incident edge per
// unmatched vertex; the result has |V| - nu(G) edges. Throws
// std::invalid_argument on an isolated vertex or a non-bipartite input.
std::vector<int> bipartite_min_edge_cover(const FiniteHypergraph& g);

// Exact maximum matching (pairwise disjoint edges), branch and bound.
std::vector<int> max_matching(const FiniteHypergraph& f, const SearchLimits& limits = {});

// Cover of a 3-partite hypergraph with equal parts from a perfect fractional
// matching, built in three steps inside the support: a maximum matching,
// then edges covering two uncovered vertices, then one edge per leftover
// vertex. Sizes obey |C| = (3n - |M| + |V0|)/2 where V0 is the step-3
// vertex set. Throws std::invalid_argument unless every vertex weight sum
// is exactly 1.
std::vector<int> pfm_cover_3partite(const FiniteHypergraph& f, const std::vector<Rat>& pfm,
                                    const SearchLimits& limits = {});

}  // namespace dihg
