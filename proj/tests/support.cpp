#include "support.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <stdexcept>

namespace testsup {

using dihg::DEdge;
using dihg::DIntervalHypergraph;
using dihg::FiniteHypergraph;
using dihg::Interval;
using dihg::Rat;

DIntervalHypergraph make_1d(const std::vector<std::pair<Rat, Rat>>& ivals) {
  std::vector<DEdge> edges;
  int id = 0;
  for (const auto& [lo, hi] : ivals) edges.push_back(DEdge{id++, {Interval{1, lo, hi}}});
  return DIntervalHypergraph::create(1, std::move(edges));
}

DIntervalHypergraph make_dih(int d,
                             const std::vector<std::vector<std::pair<Rat, Rat>>>& edges) {
  std::vector<DEdge> out;
  int id = 0;
  for (const auto& parts : edges) {
    DEdge e{id++, {}};
    for (int i = 1; i <= d; ++i)
      e.parts.push_back(Interval{i, parts[static_cast<std::size_t>(i - 1)].first,
                                 parts[static_cast<std::size_t>(i - 1)].second});
    out.push_back(std::move(e));
  }
  return DIntervalHypergraph::create(d, std::move(out));
}

FiniteHypergraph make_finite(int vertex_count, std::vector<std::vector<int>> edges) {
  FiniteHypergraph f;
  f.vertex_count = vertex_count;
  for (auto& e : edges) std::sort(e.begin(), e.end());
  f.edges = std::move(edges);
  f.validate();
  return f;
}

// ---------- d = 1 brute force ----------

Brute1D brute_1d(const DIntervalHypergraph& h) {
  if (h.d() != 1) throw std::invalid_argument("brute_1d needs d = 1");
  const int m = h.edge_count();
  if (m > 20) throw std::invalid_argument("brute_1d supports at most 20 edges");

  // Atom representatives: every endpoint (point atoms) and every open gap
  // between consecutive endpoints (midpoint representative). Membership is
  // constant on each atom because edges are closed intervals with endpoints
  // among the cut points.
  std::vector<Rat> pts{Rat(0), Rat(1)};
  for (const auto& e : h.edges()) {
    pts.push_back(e.part(1).lo);
    pts.push_back(e.part(1).hi);
  }
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());

  std::vector<Rat> reps;
  for (std::size_t k = 0; k < pts.size(); ++k) {
    reps.push_back(pts[k]);
    if (k + 1 < pts.size()) reps.push_back(Rat((pts[k] + pts[k + 1]) / 2));
  }
  const int na = static_cast<int>(reps.size());
  if (na > 64) throw std::invalid_argument("brute_1d supports at most 64 atoms");

  std::vector<std::uint32_t> atom_edges(static_cast<std::size_t>(na), 0);  // atom -> edges
  std::vector<std::uint64_t> edge_atoms(static_cast<std::size_t>(m), 0);   // edge -> atoms
  for (int a = 0; a < na; ++a)
    for (int e = 0; e < m; ++e)
      if (h.edge(e).part(1).contains(reps[static_cast<std::size_t>(a)])) {
        atom_edges[static_cast<std::size_t>(a)] |= (1u << e);
        edge_atoms[static_cast<std::size_t>(e)] |= (1ull << a);
      }

  Brute1D out;
  out.covered = std::all_of(atom_edges.begin(), atom_edges.end(),
                            [](std::uint32_t x) { return x != 0; });

  // nu: largest edge subset that is pairwise disjoint. Two closed intervals
  // intersect iff they share an atom.
  std::vector<std::uint32_t> conflict(static_cast<std::size_t>(m), 0);
  for (int e = 0; e < m; ++e)
    for (int f = 0; f < m; ++f)
      if (f != e && (edge_atoms[static_cast<std::size_t>(e)] &
                     edge_atoms[static_cast<std::size_t>(f)]) != 0)
        conflict[static_cast<std::size_t>(e)] |= (1u << f);
  for (std::uint32_t s = 0; s < (1u << m); ++s) {
    bool ok = true;
    for (std::uint32_t t = s; t && ok; t &= t - 1)
      if (conflict[static_cast<std::size_t>(std::countr_zero(t))] & s) ok = false;
    if (ok) out.nu = std::max(out.nu, std::popcount(s));
  }

  // tau: fewest atoms hitting all edges. Any transversal point can be moved
  // to its atom's representative without changing what it hits.
  const std::uint32_t all_edges = m == 32 ? ~0u : (1u << m) - 1;
  const int inf = std::numeric_limits<int>::max() / 2;
  std::vector<int> dp(static_cast<std::size_t>(all_edges) + 1, inf);
  dp[0] = 0;
  for (std::uint32_t mask = 0; mask <= all_edges; ++mask) {
    if (dp[mask] == inf || mask == all_edges) continue;
    for (int a = 0; a < na; ++a) {
      std::uint32_t next = mask | atom_edges[static_cast<std::size_t>(a)];
      if (next != mask) dp[next] = std::min(dp[next], dp[mask] + 1);
    }
  }
  out.tau = m == 0 ? 0 : dp[all_edges];

  if (!out.covered) return out;

  // rho: smallest edge subset whose atoms cover everything.
  std::uint64_t all_atoms = 0;
  for (int a = 0; a < na; ++a) all_atoms |= (1ull << a);
  out.rho = inf;
  std::vector<std::uint64_t> union_of(static_cast<std::size_t>(1u << m), 0);
  for (std::uint32_t s = 1; s < (1u << m); ++s) {
    union_of[s] = union_of[s & (s - 1)] | edge_atoms[static_cast<std::size_t>(std::countr_zero(s))];
    if (union_of[s] == all_atoms) out.rho = std::min(out.rho, std::popcount(s));
  }

  // iota: most atoms no two of which share an edge, at most one point per
  // atom (two points of a covered atom always share an edge). An edge
  // containing atoms p < q contains every atom between, so checking
  // consecutive picks in the left-to-right chain checks all pairs.
  std::vector<int> best(static_cast<std::size_t>(na), 1);
  for (int a = 0; a < na; ++a) {
    for (int b = 0; b < a; ++b)
      if ((atom_edges[static_cast<std::size_t>(a)] & atom_edges[static_cast<std::size_t>(b)]) == 0)
        best[static_cast<std::size_t>(a)] =
            std::max(best[static_cast<std::size_t>(a)], best[static_cast<std::size_t>(b)] + 1);
    out.iota = std::max(out.iota, best[static_cast<std::size_t>(a)]);
  }
  return out;
}

// ---------- finite brute force ----------

namespace {

std::vector<std::uint32_t> edge_masks(const FiniteHypergraph& f) {
  if (f.vertex_count > 20) throw std::invalid_argument("finite brute force: too many vertices");
  std::vector<std::uint32_t> out(static_cast<std::size_t>(f.edge_count()), 0);
  for (int e = 0; e < f.edge_count(); ++e)
    for (int v : f.edges[static_cast<std::size_t>(e)])
      out[static_cast<std::size_t>(e)] |= (1u << v);
  return out;
}

}  // namespace

int brute_nu(const FiniteHypergraph& f) {
  const int m = f.edge_count();
  if (m > 20) throw std::invalid_argument("brute_nu: too many edges");
  std::vector<std::uint32_t> em = edge_masks(f);
  int best = 0;
  for (std::uint32_t s = 0; s < (1u << m); ++s) {
    std::uint32_t used = 0;
    bool ok = true;
    for (std::uint32_t t = s; t && ok; t &= t - 1) {
      std::uint32_t bits = em[static_cast<std::size_t>(std::countr_zero(t))];
      if (used & bits) ok = false;
      used |= bits;
    }
    if (ok) best = std::max(best, std::popcount(s));
  }
  return best;
}

int brute_tau(const FiniteHypergraph& f) {
  std::vector<std::uint32_t> em = edge_masks(f);
  int best = f.vertex_count + 1;
  for (std::uint32_t s = 0; s < (1u << f.vertex_count); ++s) {
    bool hits = std::all_of(em.begin(), em.end(), [&](std::uint32_t e) { return (e & s) != 0; });
    if (hits) best = std::min(best, std::popcount(s));
  }
  return best;
}

int brute_iota(const FiniteHypergraph& f) {
  std::vector<std::uint32_t> em = edge_masks(f);
  int best = 0;
  for (std::uint32_t s = 0; s < (1u << f.vertex_count); ++s) {
    bool ind = std::all_of(em.begin(), em.end(),
                           [&](std::uint32_t e) { return std::popcount(e & s) <= 1; });
    if (ind) best = std::max(best, std::popcount(s));
  }
  return best;
}

std::optional<int> brute_rho(const FiniteHypergraph& f) {
  const int m = f.edge_count();
  if (m > 20) throw std::invalid_argument("brute_rho: too many edges");
  std::vector<std::uint32_t> em = edge_masks(f);
  const std::uint32_t all =
      f.vertex_count == 32 ? ~0u : (1u << f.vertex_count) - 1;
  std::uint32_t reachable = 0;
  for (std::uint32_t e : em) reachable |= e;
  if (reachable != all) return std::nullopt;
  int best = m + 1;
  std::vector<std::uint32_t> union_of(static_cast<std::size_t>(1u << m), 0);
  for (std::uint32_t s = 1; s < (1u << m); ++s) {
    union_of[s] = union_of[s & (s - 1)] | em[static_cast<std::size_t>(std::countr_zero(s))];
    if (union_of[s] == all) best = std::min(best, std::popcount(s));
  }
  return best;
}

// ---------- LP certificate checking ----------

bool lp_support_feasible(const FiniteHypergraph& f, dihg::FractionalKind kind,
                         const dihg::FractionalValue& fv) {
  if (fv.infinite) return false;
  const bool on_edges =
      kind == dihg::FractionalKind::NuStar || kind == dihg::FractionalKind::RhoStar;
  const int count = on_edges ? f.edge_count() : f.vertex_count;
  std::vector<Rat> w(static_cast<std::size_t>(count), Rat(0));
  Rat total(0);
  for (const auto& [id, value] : fv.support) {
    if (id < 0 || id >= count || value < 0) return false;
    w[static_cast<std::size_t>(id)] = value;
    total += value;
  }
  if (total != fv.value) return false;

  std::vector<Rat> vertex_sum(static_cast<std::size_t>(f.vertex_count), Rat(0));
  std::vector<Rat> edge_sum(static_cast<std::size_t>(f.edge_count()), Rat(0));
  for (int e = 0; e < f.edge_count(); ++e)
    for (int v : f.edges[static_cast<std::size_t>(e)]) {
      if (on_edges)
        vertex_sum[static_cast<std::size_t>(v)] += w[static_cast<std::size_t>(e)];
      else
        edge_sum[static_cast<std::size_t>(e)] += w[static_cast<std::size_t>(v)];
    }

  switch (kind) {
    case dihg::FractionalKind::NuStar:
      return std::all_of(vertex_sum.begin(), vertex_sum.end(),
                         [](const Rat& s) { return s <= 1; });
    case dihg::FractionalKind::RhoStar:
      return std::all_of(vertex_sum.begin(), vertex_sum.end(),
                         [](const Rat& s) { return s >= 1; });
    case dihg::FractionalKind::TauStar:
      return std::all_of(edge_sum.begin(), edge_sum.end(), [](const Rat& s) { return s >= 1; });
    case dihg::FractionalKind::IotaStar:
      return std::all_of(edge_sum.begin(), edge_sum.end(), [](const Rat& s) { return s <= 1; });
  }
  return false;
}

Rat harmonic(int r) {
  Rat h(0);
  for (int k = 1; k <= r; ++k) h += Rat(dihg::make_rat(1, k));
  return h;
}

// ---------- generators ----------

int Rng::uniform(int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(eng);
}

bool Rng::chance(double p) {
  return std::uniform_real_distribution<double>(0.0, 1.0)(eng) < p;
}

DIntervalHypergraph random_1d(Rng& rng, int max_edges, int den) {
  return random_dinterval(rng, 1, max_edges, den);
}

DIntervalHypergraph random_dinterval(Rng& rng, int d, int max_edges, int den) {
  const int m = rng.uniform(1, max_edges);
  std::vector<std::vector<std::pair<Rat, Rat>>> edges;
  for (int e = 0; e < m; ++e) {
    std::vector<std::pair<Rat, Rat>> parts;
    for (int i = 0; i < d; ++i) {
      int a = rng.uniform(0, den);
      int b = rng.uniform(0, den);
      if (a > b) std::swap(a, b);
      parts.emplace_back(dihg::make_rat(a, den), dihg::make_rat(b, den));
    }
    edges.push_back(std::move(parts));
  }
  return make_dih(d, edges);
}

FiniteHypergraph random_finite(Rng& rng, int max_v, int max_e) {
  const int v = rng.uniform(1, max_v);
  const int m = rng.uniform(1, max_e);
  std::vector<int> ids(static_cast<std::size_t>(v));
  for (int i = 0; i < v; ++i) ids[static_cast<std::size_t>(i)] = i;
  std::vector<std::vector<int>> edges;
  for (int e = 0; e < m; ++e) {
    std::shuffle(ids.begin(), ids.end(), rng.eng);
    const int size = rng.uniform(1, v);
    edges.emplace_back(ids.begin(), ids.begin() + size);
  }
  return make_finite(v, std::move(edges));
}

FiniteHypergraph random_covered(Rng& rng, int max_v, int max_e) {
  FiniteHypergraph f = random_finite(rng, max_v, max_e);
  dihg::BitSet cov = f.covered_vertices();
  for (int v = 0; v < f.vertex_count; ++v)
    if (!cov.test(v)) f.edges.push_back({v});
  f.validate();
  return f;
}

FiniteHypergraph random_dpartite(Rng& rng, int d, int max_part) {
  std::vector<int> first(static_cast<std::size_t>(d) + 1, 0);
  for (int i = 0; i < d; ++i)
    first[static_cast<std::size_t>(i) + 1] =
        first[static_cast<std::size_t>(i)] + rng.uniform(1, max_part);
  FiniteHypergraph f;
  f.vertex_count = first[static_cast<std::size_t>(d)];
  f.part_of.resize(static_cast<std::size_t>(f.vertex_count));
  for (int i = 0; i < d; ++i)
    for (int v = first[static_cast<std::size_t>(i)]; v < first[static_cast<std::size_t>(i) + 1];
         ++v)
      f.part_of[static_cast<std::size_t>(v)] = i + 1;
  const int m = rng.uniform(1, 16);
  for (int e = 0; e < m; ++e) {
    std::vector<int> edge;
    for (int i = 0; i < d; ++i)
      edge.push_back(rng.uniform(first[static_cast<std::size_t>(i)],
                                 first[static_cast<std::size_t>(i) + 1] - 1));
    std::sort(edge.begin(), edge.end());
    f.edges.push_back(std::move(edge));
  }
  f.validate();
  return f;
}

FiniteHypergraph random_bipartite_graph(Rng& rng) {
  const int a = rng.uniform(1, 4);
  const int b = rng.uniform(1, 4);
  FiniteHypergraph f;
  f.vertex_count = a + b;
  f.part_of.assign(static_cast<std::size_t>(a + b), 1);
  for (int v = a; v < a + b; ++v) f.part_of[static_cast<std::size_t>(v)] = 2;
  for (int u = 0; u < a; ++u)
    for (int w = 0; w < b; ++w)
      if (rng.chance(0.5)) f.edges.push_back({u, a + w});
  dihg::BitSet cov = f.covered_vertices();
  for (int u = 0; u < a; ++u)
    if (!cov.test(u)) f.edges.push_back({u, a + rng.uniform(0, b - 1)});
  cov = f.covered_vertices();
  for (int w = a; w < a + b; ++w)
    if (!cov.test(w)) f.edges.push_back({rng.uniform(0, a - 1), w});
  for (auto& e : f.edges) std::sort(e.begin(), e.end());
  f.validate();
  return f;
}

dihg::ProductPoint random_point(Rng& rng, int d, int n, int wmax) {
  std::vector<std::vector<Rat>> coords;
  for (int i = 0; i < d; ++i) {
    std::vector<int> w(static_cast<std::size_t>(n));
    long total = 0;
    for (int j = 0; j < n; ++j) total += (w[static_cast<std::size_t>(j)] = rng.uniform(0, wmax));
    if (total == 0) {
      w[static_cast<std::size_t>(rng.uniform(0, n - 1))] = 1;
      total = 1;
    }
    std::vector<Rat> row;
    for (int j = 0; j < n; ++j) row.push_back(dihg::make_rat(w[static_cast<std::size_t>(j)], total));
    coords.push_back(std::move(row));
  }
  return dihg::ProductPoint::create(d, n, std::move(coords));
}

}  // namespace testsup
