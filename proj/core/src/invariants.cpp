#include "dihg/invariants.hpp"

#include <algorithm>
#include <string>

#include "dihg/simplex.hpp"

namespace dihg {

namespace {

struct Budget {
  long left;
  void spend() {
    if (--left < 0)
      throw ScaleGuardError("exact search exceeded its node budget; refusing to continue");
  }
};

void check_limits(const FiniteHypergraph& f, const SearchLimits& limits) {
  if (f.vertex_count > limits.max_vertices || f.edge_count() > limits.max_edges)
    throw ScaleGuardError("instance exceeds exact-search scale guard (" +
                          std::to_string(f.vertex_count) + " vertices, " +
                          std::to_string(f.edge_count()) + " edges)");
}

// ---- exact minimum set cover -------------------------------------------

struct CoverSearch {
  int universe = 0;
  std::vector<BitSet> sets;           // element masks per set
  std::vector<std::vector<int>> at;   // element -> sets containing it
  BitSet kept_elements;
  std::vector<bool> set_alive;
  int max_cover = 1;
  Budget* budget = nullptr;
  std::vector<int> chosen, best;

  bool dfs(BitSet uncovered, int depth) {
    budget->spend();
    int todo = uncovered.count();
    if (todo == 0) return true;
    if (depth == 0) return false;
    if ((todo + max_cover - 1) / max_cover > depth) return false;
    // Most constrained uncovered element.
    int pick = -1, pick_options = 0;
    for (int e = uncovered.first(); e >= 0; e = uncovered.next(e + 1)) {
      int options = 0;
      for (int s : at[static_cast<std::size_t>(e)])
        if (set_alive[static_cast<std::size_t>(s)]) ++options;
      if (pick < 0 || options < pick_options) {
        pick = e;
        pick_options = options;
        if (options <= 1) break;
      }
    }
    if (pick_options == 0) return false;
    BitSet covered = complement(uncovered);
    std::vector<std::pair<int, int>> order;  // (-coverage, id)
    for (int s : at[static_cast<std::size_t>(pick)])
      if (set_alive[static_cast<std::size_t>(s)])
        order.emplace_back(-sets[static_cast<std::size_t>(s)].count_outside(covered), s);
    std::sort(order.begin(), order.end());
    for (auto [negcov, s] : order) {
      BitSet rest = uncovered;
      rest.subtract(sets[static_cast<std::size_t>(s)]);
      chosen.push_back(s);
      if (dfs(std::move(rest), depth - 1)) return true;
      chosen.pop_back();
    }
    return false;
  }

  BitSet complement(const BitSet& b) const {
    BitSet c = kept_elements;
    c.subtract(b);
    return c;
  }
};

// Minimum number of sets covering all `universe` elements. Every element
// must be coverable (caller guarantees). Returns set indices.
std::vector<int> exact_min_cover(int universe, const std::vector<BitSet>& sets, Budget& budget) {
  const int m = static_cast<int>(sets.size());
  // Transpose: which sets contain each element.
  std::vector<BitSet> elem_sets(static_cast<std::size_t>(universe), BitSet(m));
  for (int s = 0; s < m; ++s) {
    const BitSet& b = sets[static_cast<std::size_t>(s)];
    for (int e = b.first(); e >= 0; e = b.next(e + 1)) elem_sets[static_cast<std::size_t>(e)].set(s);
  }
  // Drop elements whose covering-set family contains another element's
  // (covering the harder element covers them for free).
  BitSet kept(universe);
  kept.fill();
  for (int x = 0; x < universe; ++x) {
    for (int y = 0; y < universe; ++y) {
      if (x == y || !kept.test(y)) continue;
      const BitSet &sx = elem_sets[static_cast<std::size_t>(x)], &sy = elem_sets[static_cast<std::size_t>(y)];
      if (sy.is_subset_of(sx) && (!(sx == sy) || y < x)) {
        kept.reset(x);
        break;
      }
    }
  }
  // Restrict sets to kept elements; drop sets dominated by another set.
  std::vector<BitSet> restricted(sets.size());
  for (int s = 0; s < m; ++s) {
    restricted[static_cast<std::size_t>(s)] = sets[static_cast<std::size_t>(s)];
    restricted[static_cast<std::size_t>(s)] &= kept;
  }
  std::vector<bool> alive(static_cast<std::size_t>(m), true);
  for (int s = 0; s < m; ++s) {
    for (int t = 0; t < m && alive[static_cast<std::size_t>(s)]; ++t) {
      if (t == s || !alive[static_cast<std::size_t>(t)]) continue;
      const BitSet &bs = restricted[static_cast<std::size_t>(s)], &bt = restricted[static_cast<std::size_t>(t)];
      if (bs.is_subset_of(bt) && (!(bs == bt) || t < s)) alive[static_cast<std::size_t>(s)] = false;
    }
  }

  CoverSearch cs;
  cs.universe = universe;
  cs.sets = std::move(restricted);
  cs.kept_elements = kept;
  cs.set_alive = std::move(alive);
  cs.at.assign(static_cast<std::size_t>(universe), {});
  int max_cover = 1;
  for (int s = 0; s < m; ++s) {
    if (!cs.set_alive[static_cast<std::size_t>(s)]) continue;
    const BitSet& b = cs.sets[static_cast<std::size_t>(s)];
    max_cover = std::max(max_cover, b.count());
    for (int e = b.first(); e >= 0; e = b.next(e + 1)) cs.at[static_cast<std::size_t>(e)].push_back(s);
  }
  cs.max_cover = max_cover;
  cs.budget = &budget;

  int todo = kept.count();
  if (todo == 0) return {};
  for (int k = (todo + max_cover - 1) / max_cover;; ++k) {
    cs.chosen.clear();
    if (cs.dfs(kept, k)) return cs.chosen;
    if (k > m)
      throw std::logic_error("set cover search exhausted without a cover");
  }
}

// ---- exact maximum set packing -------------------------------------------

struct PackSearch {
  const std::vector<BitSet>* sets = nullptr;
  Budget* budget = nullptr;
  int best_possible = 0;  // floor of the LP relaxation when available
  std::vector<int> current, best;

  void dfs(const std::vector<int>& candidates, BitSet used) {
    budget->spend();
    if (current.size() > best.size()) best = current;
    if (static_cast<int>(best.size()) >= best_possible) return;
    if (current.size() + candidates.size() <= best.size()) return;
    for (std::size_t k = 0; k < candidates.size(); ++k) {
      if (current.size() + (candidates.size() - k) <= best.size()) return;
      int s = candidates[k];
      std::vector<int> rest;
      rest.reserve(candidates.size() - k);
      for (std::size_t t = k + 1; t < candidates.size(); ++t)
        if (!(*sets)[static_cast<std::size_t>(candidates[t])].intersects(
                (*sets)[static_cast<std::size_t>(s)]))
          rest.push_back(candidates[t]);
      current.push_back(s);
      BitSet used2 = used;
      used2 |= (*sets)[static_cast<std::size_t>(s)];
      dfs(rest, std::move(used2));
      current.pop_back();
      if (static_cast<int>(best.size()) >= best_possible) return;
    }
  }
};

std::vector<int> exact_max_packing(int universe, const std::vector<BitSet>& sets, Budget& budget,
                                   int lp_cap) {
  PackSearch ps;
  ps.sets = &sets;
  ps.budget = &budget;
  ps.best_possible = lp_cap;
  std::vector<int> all(sets.size());
  for (std::size_t k = 0; k < sets.size(); ++k) all[k] = static_cast<int>(k);
  ps.dfs(all, BitSet(universe));
  return ps.best;
}

// ---- exact maximum independent set (pairwise conflict graph) -------------

struct MisSearch {
  std::vector<BitSet> adj;  // closed-ish: adj[v] excludes v itself
  std::vector<int> order;   // highest conflict degree first
  Budget* budget = nullptr;
  std::vector<int> current, best;

  void dfs(BitSet remaining) {
    budget->spend();
    if (current.size() > best.size()) best = current;
    if (current.size() + static_cast<std::size_t>(remaining.count()) <= best.size()) return;
    int v = -1;
    for (int u : order)
      if (remaining.test(u)) {
        v = u;
        break;
      }
    if (v < 0) return;
    // include v
    BitSet rest = remaining;
    rest.reset(v);
    rest.subtract(adj[static_cast<std::size_t>(v)]);
    current.push_back(v);
    dfs(std::move(rest));
    current.pop_back();
    // exclude v
    remaining.reset(v);
    dfs(std::move(remaining));
  }
};

// ---- LP helpers -----------------------------------------------------------

std::vector<lp::Constraint> vertex_capacity_rows(const FiniteHypergraph& f) {
  // One row per vertex: sum of incident edge weights <= / >= 1.
  std::vector<lp::Constraint> rows(static_cast<std::size_t>(f.vertex_count));
  for (auto& r : rows) r.coeffs.assign(static_cast<std::size_t>(f.edge_count()), Rat(0));
  for (int e = 0; e < f.edge_count(); ++e)
    for (int v : f.edges[static_cast<std::size_t>(e)])
      rows[static_cast<std::size_t>(v)].coeffs[static_cast<std::size_t>(e)] = 1;
  for (auto& r : rows) r.rhs = 1;
  return rows;
}

std::vector<lp::Constraint> edge_capacity_rows(const FiniteHypergraph& f) {
  std::vector<lp::Constraint> rows(static_cast<std::size_t>(f.edge_count()));
  for (auto& r : rows) r.coeffs.assign(static_cast<std::size_t>(f.vertex_count), Rat(0));
  for (int e = 0; e < f.edge_count(); ++e)
    for (int v : f.edges[static_cast<std::size_t>(e)])
      rows[static_cast<std::size_t>(e)].coeffs[static_cast<std::size_t>(v)] = 1;
  for (auto& r : rows) r.rhs = 1;
  return rows;
}

}  // namespace

ExactValue exact_invariant(const FiniteHypergraph& f, InvariantKind kind, SearchLimits limits) {
  f.validate();
  check_limits(f, limits);
  Budget budget{limits.node_budget};
  ExactValue out;

  switch (kind) {
    case InvariantKind::Rho: {
      BitSet cov = f.covered_vertices();
      if (cov.count() != f.vertex_count) {
        out.infinite = true;
        return out;
      }
      std::vector<BitSet> sets(static_cast<std::size_t>(f.edge_count()));
      for (int e = 0; e < f.edge_count(); ++e) sets[static_cast<std::size_t>(e)] = f.edge_bits(e);
      out.witness = exact_min_cover(f.vertex_count, sets, budget);
      out.value = static_cast<int>(out.witness.size());
      return out;
    }
    case InvariantKind::Tau: {
      for (const auto& e : f.edges)
        if (e.empty()) throw std::invalid_argument("transversal number undefined with an empty edge");
      std::vector<BitSet> stars(static_cast<std::size_t>(f.vertex_count), BitSet(f.edge_count()));
      for (int e = 0; e < f.edge_count(); ++e)
        for (int v : f.edges[static_cast<std::size_t>(e)]) stars[static_cast<std::size_t>(v)].set(e);
      out.witness = exact_min_cover(f.edge_count(), stars, budget);
      out.value = static_cast<int>(out.witness.size());
      return out;
    }
    case InvariantKind::Nu: {
      std::vector<BitSet> sets(static_cast<std::size_t>(f.edge_count()));
      for (int e = 0; e < f.edge_count(); ++e) sets[static_cast<std::size_t>(e)] = f.edge_bits(e);
      int cap = f.edge_count();
      if (f.edge_count() <= 256 && f.vertex_count <= 256 && f.edge_count() > 0) {
        FractionalValue star = lp_fractional(f, FractionalKind::NuStar);
        cap = static_cast<int>(rat_floor(star.value));
      }
      out.witness = exact_max_packing(f.vertex_count, sets, budget, cap);
      out.value = static_cast<int>(out.witness.size());
      return out;
    }
    case InvariantKind::Iota: {
      MisSearch ms;
      ms.adj.assign(static_cast<std::size_t>(f.vertex_count), BitSet(f.vertex_count));
      for (const auto& e : f.edges)
        for (std::size_t a = 0; a < e.size(); ++a)
          for (std::size_t b = a + 1; b < e.size(); ++b) {
            ms.adj[static_cast<std::size_t>(e[a])].set(e[b]);
            ms.adj[static_cast<std::size_t>(e[b])].set(e[a]);
          }
      ms.order.resize(static_cast<std::size_t>(f.vertex_count));
      for (int v = 0; v < f.vertex_count; ++v) ms.order[static_cast<std::size_t>(v)] = v;
      std::stable_sort(ms.order.begin(), ms.order.end(), [&](int a, int b) {
        return ms.adj[static_cast<std::size_t>(a)].count() > ms.adj[static_cast<std::size_t>(b)].count();
      });
      ms.budget = &budget;
      BitSet all(f.vertex_count);
      all.fill();
      ms.dfs(all);
      out.witness = ms.best;
      std::sort(out.witness.begin(), out.witness.end());
      out.value = static_cast<int>(out.witness.size());
      return out;
    }
  }
  throw std::logic_error("unknown invariant kind");
}

FractionalValue lp_fractional(const FiniteHypergraph& f, FractionalKind kind) {
  f.validate();
  FractionalValue out;
  BitSet cov = f.covered_vertices();
  bool all_covered = cov.count() == f.vertex_count;

  lp::Solution sol;
  bool on_edges = kind == FractionalKind::NuStar || kind == FractionalKind::RhoStar;
  switch (kind) {
    case FractionalKind::NuStar:
      sol = lp::maximize(std::vector<Rat>(static_cast<std::size_t>(f.edge_count()), Rat(1)),
                         vertex_capacity_rows(f));
      break;
    case FractionalKind::TauStar: {
      for (const auto& e : f.edges)
        if (e.empty()) throw std::invalid_argument("fractional transversal undefined with an empty edge");
      auto rows = edge_capacity_rows(f);
      for (auto& r : rows) r.rel = lp::Rel::Ge;
      sol = lp::minimize(std::vector<Rat>(static_cast<std::size_t>(f.vertex_count), Rat(1)), rows);
      break;
    }
    case FractionalKind::IotaStar: {
      if (!all_covered) {
        out.infinite = true;
        return out;
      }
      sol = lp::maximize(std::vector<Rat>(static_cast<std::size_t>(f.vertex_count), Rat(1)),
                         edge_capacity_rows(f));
      break;
    }
    case FractionalKind::RhoStar: {
      if (!all_covered) {
        out.infinite = true;
        return out;
      }
      auto rows = vertex_capacity_rows(f);
      for (auto& r : rows) r.rel = lp::Rel::Ge;
      sol = lp::minimize(std::vector<Rat>(static_cast<std::size_t>(f.edge_count()), Rat(1)), rows);
      break;
    }
  }
  if (sol.status != lp::Status::Optimal)
    throw std::logic_error("fractional invariant LP did not solve to optimality");
  out.value = sol.value;
  for (std::size_t k = 0; k < sol.x.size(); ++k)
    if (sol.x[k] != 0) out.support.emplace_back(static_cast<int>(k), sol.x[k]);
  (void)on_edges;
  return out;
}

std::optional<std::vector<Rat>> perfect_fractional_matching(const FiniteHypergraph& f) {
  f.validate();
  auto rows = vertex_capacity_rows(f);
  for (auto& r : rows) r.rel = lp::Rel::Eq;
  lp::Solution sol =
      lp::maximize(std::vector<Rat>(static_cast<std::size_t>(f.edge_count()), Rat(0)), rows);
  if (sol.status != lp::Status::Optimal) return std::nullopt;
  return sol.x;
}

GeometricInvariants compute_invariants(const DIntervalHypergraph& h, SearchLimits limits) {
  Atomization a = atomize(h);
  GeometricInvariants out;
  out.nu = exact_invariant(a.hyper, InvariantKind::Nu, limits);
  out.tau = exact_invariant(a.hyper, InvariantKind::Tau, limits);
  if (!a.covered()) {
    out.iota.infinite = true;
    out.rho.infinite = true;
  } else {
    out.iota = exact_invariant(a.hyper, InvariantKind::Iota, limits);
    out.rho = exact_invariant(a.hyper, InvariantKind::Rho, limits);
  }
  for (int v : out.tau.witness)
    out.transversal_points.emplace_back(a.atoms[static_cast<std::size_t>(v)].copy,
                                        a.atoms[static_cast<std::size_t>(v)].representative);
  for (int v : out.iota.witness)
    out.independent_points.emplace_back(a.atoms[static_cast<std::size_t>(v)].copy,
                                        a.atoms[static_cast<std::size_t>(v)].representative);
  return out;
}

}  // namespace dihg
