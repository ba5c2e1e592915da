#include "dihg/rounding.hpp"

#include <algorithm>
#include <stdexcept>

#include "dihg/bitset.hpp"
#include "dihg/invariants.hpp"

namespace dihg {

std::vector<int> greedy_edge_cover(const FiniteHypergraph& f) {
  f.validate();
  if (f.covered_vertices().count() != f.vertex_count)
    throw std::invalid_argument("isolated vertex: no finite edge cover exists");
  BitSet covered(f.vertex_count);
  std::vector<int> result;
  while (covered.count() < f.vertex_count) {
    int best = -1, best_gain = 0;
    for (int e = 0; e < f.edge_count(); ++e) {
      int gain = f.edge_bits(e).count_outside(covered);
      if (gain > best_gain) {
        best_gain = gain;
        best = e;
      }
    }
    result.push_back(best);
    covered |= f.edge_bits(best);
  }
  return result;
}

std::vector<int> bipartite_min_edge_cover(const FiniteHypergraph& g) {
  g.validate();
  if (!g.is_d_partite(2)) throw std::invalid_argument("input is not a bipartite graph");
  const int V = g.vertex_count;
  // Incidence with lowest edge id per pair kept first.
  std::vector<std::vector<std::pair<int, int>>> adj(static_cast<std::size_t>(V));  // (other, edge)
  for (int e = 0; e < g.edge_count(); ++e) {
    const auto& ed = g.edges[static_cast<std::size_t>(e)];
    int a = ed[0], b = ed[1];
    if (g.part_of[static_cast<std::size_t>(a)] == 2) std::swap(a, b);
    adj[static_cast<std::size_t>(a)].emplace_back(b, e);
  }
  std::vector<std::vector<std::pair<int, int>>> radj(static_cast<std::size_t>(V));
  for (int v = 0; v < V; ++v)
    for (auto [w, e] : adj[static_cast<std::size_t>(v)]) radj[static_cast<std::size_t>(w)].emplace_back(v, e);
  for (int v = 0; v < V; ++v)
    if (adj[static_cast<std::size_t>(v)].empty() && radj[static_cast<std::size_t>(v)].empty())
      throw std::invalid_argument("isolated vertex: no finite edge cover exists");

  // Kuhn's augmenting-path maximum matching, left part = part 1.
  std::vector<int> match_right(static_cast<std::size_t>(V), -1);  // right -> left
  std::vector<int> match_edge(static_cast<std::size_t>(V), -1);   // right -> edge id
  std::vector<char> seen(static_cast<std::size_t>(V), 0);
  auto augment = [&](auto&& self, int v) -> bool {
    for (auto [w, e] : adj[static_cast<std::size_t>(v)]) {
      if (seen[static_cast<std::size_t>(w)]) continue;
      seen[static_cast<std::size_t>(w)] = 1;
      if (match_right[static_cast<std::size_t>(w)] < 0 ||
          self(self, match_right[static_cast<std::size_t>(w)])) {
        match_right[static_cast<std::size_t>(w)] = v;
        match_edge[static_cast<std::size_t>(w)] = e;
        return true;
      }
    }
    return false;
  };
  for (int v = 0; v < V; ++v) {
    if (g.part_of[static_cast<std::size_t>(v)] != 1 || adj[static_cast<std::size_t>(v)].empty())
      continue;
    std::fill(seen.begin(), seen.end(), 0);
    augment(augment, v);
  }

  std::vector<char> matched(static_cast<std::size_t>(V), 0);
  std::vector<int> result;
  for (int w = 0; w < V; ++w)
    if (match_right[static_cast<std::size_t>(w)] >= 0) {
      result.push_back(match_edge[static_cast<std::size_t>(w)]);
      matched[static_cast<std::size_t>(w)] = 1;
      matched[static_cast<std::size_t>(match_right[static_cast<std::size_t>(w)])] = 1;
    }
  for (int v = 0; v < V; ++v) {
    if (matched[static_cast<std::size_t>(v)]) continue;
    const auto& inc = g.part_of[static_cast<std::size_t>(v)] == 1 ? adj[static_cast<std::size_t>(v)]
                                                                  : radj[static_cast<std::size_t>(v)];
    int pick = -1;
    for (auto [w, e] : inc)
      if (pick < 0 || e < pick) pick = e;
    result.push_back(pick);
  }
  std::sort(result.begin(), result.end());
  return result;
}

std::vector<int> max_matching(const FiniteHypergraph& f, const SearchLimits& limits) {
  return exact_invariant(f, InvariantKind::Nu, limits).witness;
}

std::vector<int> pfm_cover_3partite(const FiniteHypergraph& f, const std::vector<Rat>& pfm,
                                    const SearchLimits& limits) {
  f.validate();
  if (!f.is_d_partite(3)) throw std::invalid_argument("input is not 3-partite");
  if (static_cast<int>(pfm.size()) != f.edge_count())
    throw std::invalid_argument("one weight per edge required");
  std::vector<Rat> vertex_sum(static_cast<std::size_t>(f.vertex_count), Rat(0));
  for (int e = 0; e < f.edge_count(); ++e) {
    if (pfm[static_cast<std::size_t>(e)] < 0)
      throw std::invalid_argument("fractional matching weights must be nonnegative");
    for (int v : f.edges[static_cast<std::size_t>(e)])
      vertex_sum[static_cast<std::size_t>(v)] += pfm[static_cast<std::size_t>(e)];
  }
  for (const Rat& s : vertex_sum)
    if (s != 1) throw std::invalid_argument("weights are not a perfect fractional matching");

  std::vector<int> support;
  for (int e = 0; e < f.edge_count(); ++e)
    if (pfm[static_cast<std::size_t>(e)] > 0) support.push_back(e);

  // Step 1: maximum matching within the support.
  FiniteHypergraph sub;
  sub.vertex_count = f.vertex_count;
  sub.part_of = f.part_of;
  for (int e : support) sub.edges.push_back(f.edges[static_cast<std::size_t>(e)]);
  std::vector<int> result;
  BitSet covered(f.vertex_count);
  for (int k : max_matching(sub, limits)) {
    int e = support[static_cast<std::size_t>(k)];
    result.push_back(e);
    covered |= f.edge_bits(e);
  }
  // Step 2: edges covering two uncovered vertices (none can cover three, or
  // the matching was not maximum).
  while (true) {
    int pick = -1;
    for (int e : support)
      if (f.edge_bits(e).count_outside(covered) >= 2) {
        pick = e;
        break;
      }
    if (pick < 0) break;
    result.push_back(pick);
    covered |= f.edge_bits(pick);
  }
  // Step 3: one support edge per leftover vertex.
  for (int v = 0; v < f.vertex_count; ++v) {
    if (covered.test(v)) continue;
    int pick = -1;
    for (int e : support)
      if (std::find(f.edges[static_cast<std::size_t>(e)].begin(),
                    f.edges[static_cast<std::size_t>(e)].end(), v) !=
          f.edges[static_cast<std::size_t>(e)].end()) {
        pick = e;
        break;
      }
    if (pick < 0) throw std::logic_error("perfect fractional matching left a vertex uncovered");
    result.push_back(pick);
    covered |= f.edge_bits(pick);
  }
  std::sort(result.begin(), result.end());
  return result;
}

}  // namespace dihg
