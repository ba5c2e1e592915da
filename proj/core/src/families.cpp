#include "dihg/families.hpp"

#include <stdexcept>
#include <string>

#include "dihg/configurations.hpp"
#include "dihg/gallai.hpp"
#include "dihg/invariants.hpp"

namespace dihg {

namespace {

constexpr long kMaxFamilyEdges = 100000;

void push_check(FamilyReport& rep, std::string claim, bool ok) {
  rep.checks.push_back(FamilyCheck{std::move(claim), ok});
}

void push_value(FamilyReport& rep, std::string name, std::string value) {
  rep.values.emplace_back(std::move(name), std::move(value));
}

}  // namespace

bool FamilyReport::all_ok() const {
  for (const FamilyCheck& c : checks)
    if (!c.ok) return false;
  return true;
}

DIntervalHypergraph grid_family(int d, int m) {
  if (d < 1 || m < 1) throw std::invalid_argument("grid family needs d >= 1 and m >= 1");
  long count = 1;
  for (int i = 0; i < d; ++i) {
    count *= m;
    if (count > kMaxFamilyEdges)
      throw ScaleGuardError("grid family size m^d exceeds " + std::to_string(kMaxFamilyEdges));
  }
  std::vector<DEdge> edges;
  edges.reserve(static_cast<std::size_t>(count));
  std::vector<int> k(static_cast<std::size_t>(d), 1);
  for (long id = 0; id < count; ++id) {
    DEdge e;
    e.id = static_cast<int>(id);
    for (int i = 1; i <= d; ++i) {
      int ki = k[static_cast<std::size_t>(i - 1)];
      e.parts.push_back(Interval{i, make_rat(ki - 1, m), make_rat(ki, m)});
    }
    edges.push_back(std::move(e));
    for (int i = d - 1; i >= 0; --i) {
      if (++k[static_cast<std::size_t>(i)] <= m) break;
      k[static_cast<std::size_t>(i)] = 1;
    }
  }
  return DIntervalHypergraph::create(d, std::move(edges));
}

DIntervalHypergraph cover_tight_family(int d, int n) {
  if (d < 2 || n < 1) throw std::invalid_argument("cover-tight family needs d >= 2 and n >= 1");
  const long q = static_cast<long>(d) * n * static_cast<long>(d) * n;  // (dn)^2
  long count = static_cast<long>(d) * n;
  for (int i = 0; i < d - 1; ++i) {
    count *= q;
    if (count > kMaxFamilyEdges)
      throw ScaleGuardError("cover-tight family size d*n*(dn)^(2(d-1)) exceeds " +
                            std::to_string(kMaxFamilyEdges));
  }
  std::vector<DEdge> edges;
  edges.reserve(static_cast<std::size_t>(count));
  int id = 0;
  for (int i = 1; i <= d; ++i)
    for (int j = 1; j <= n; ++j) {
      // odometer over the tiny-block choices of the other copies, last fastest
      std::vector<long> k(static_cast<std::size_t>(d - 1), 1);
      bool done = false;
      while (!done) {
        DEdge e;
        e.id = id++;
        int pos = 0;
        for (int c = 1; c <= d; ++c) {
          if (c == i) {
            e.parts.push_back(Interval{c, make_rat(j - 1, n), make_rat(j, n)});
          } else {
            long kc = k[static_cast<std::size_t>(pos++)];
            e.parts.push_back(Interval{c, make_rat(kc - 1, q), make_rat(kc, q)});
          }
        }
        edges.push_back(std::move(e));
        done = true;
        for (int t = d - 2; t >= 0; --t) {
          if (++k[static_cast<std::size_t>(t)] <= q) {
            done = false;
            break;
          }
          k[static_cast<std::size_t>(t)] = 1;
        }
      }
    }
  return DIntervalHypergraph::create(d, std::move(edges));
}

DIntervalHypergraph corners_family() {
  std::vector<DEdge> edges;
  int id = 0;
  for (int v1 = 0; v1 <= 1; ++v1)
    for (int v2 = 0; v2 <= 1; ++v2)
      for (int v3 = 0; v3 <= 1; ++v3) {
        const int weight = v1 + v2 + v3;
        const int sum = weight <= 1 ? 47 : 24;  // target of 24 * (l1 + l2 + l3)
        for (int k1 = 0; k1 <= 23; ++k1)
          for (int k2 = 0; k2 <= 23; ++k2) {
            const int k3 = sum - k1 - k2;
            if (k3 < 0 || k3 > 23) continue;
            const int v[3] = {v1, v2, v3};
            const int k[3] = {k1, k2, k3};
            DEdge e;
            e.id = id++;
            for (int i = 0; i < 3; ++i) {
              if (v[i] == 0)
                e.parts.push_back(Interval{i + 1, Rat(0), make_rat(k[i], 24)});
              else
                e.parts.push_back(Interval{i + 1, make_rat(24 - k[i], 24), Rat(1)});
            }
            edges.push_back(std::move(e));
          }
      }
  return DIntervalHypergraph::create(3, std::move(edges));
}

FamilyReport verify_grid(int d, int m, const SearchLimits& limits) {
  DIntervalHypergraph h = grid_family(d, m);
  FamilyReport rep;
  rep.family = "grid";
  rep.d = d;
  rep.n = m;
  rep.edge_count = h.edge_count();

  long expect = 1;
  for (int i = 0; i < d; ++i) expect *= m;
  push_check(rep, "edge count is m^d", h.edge_count() == expect);

  PremiseResult pre = premise_check(h, m, PredicateMode::ContainedIn, limits);
  push_check(rep, "every d x m-partition has a d-cell inside an edge", pre.holds);

  GeometricInvariants inv = compute_invariants(h, limits);
  push_check(rep, "rho == m", !inv.rho.infinite && inv.rho.value == m);
  push_value(rep, "rho", inv.rho.infinite ? "infinite" : std::to_string(inv.rho.value));
  return rep;
}

FamilyReport verify_cover_tight(int d, int n, const SearchLimits& limits) {
  DIntervalHypergraph h = cover_tight_family(d, n);
  FamilyReport rep;
  rep.family = "cover-tight";
  rep.d = d;
  rep.n = n;
  rep.edge_count = h.edge_count();

  const long dn = static_cast<long>(d) * n;
  long expect = dn;
  for (int i = 0; i < d - 1; ++i) expect *= dn * dn;
  push_check(rep, "edge count is d*n*(dn)^(2(d-1))", h.edge_count() == expect);

  GeometricInvariants inv = compute_invariants(h, limits);
  push_check(rep, "iota == n", !inv.iota.infinite && inv.iota.value == n);
  push_check(rep, "rho == d*n", !inv.rho.infinite && inv.rho.value == dn);
  push_value(rep, "iota", inv.iota.infinite ? "infinite" : std::to_string(inv.iota.value));
  push_value(rep, "rho", inv.rho.infinite ? "infinite" : std::to_string(inv.rho.value));

  // Per-edge length is (d^2 n + d - 1)/(dn)^2, so any dn-1 edges have total
  // length below d and cannot cover the d unit copies.
  const Rat per_edge = make_rat(static_cast<long>(d) * d * n + d - 1, dn * dn);
  bool lengths_ok = true;
  for (const DEdge& e : h.edges())
    if (e.total_length() != per_edge) {
      lengths_ok = false;
      break;
    }
  push_check(rep, "every edge has total length (d^2*n + d - 1)/(dn)^2", lengths_ok);
  push_check(rep, "total length of dn-1 edges is below d", Rat(dn - 1) * per_edge < Rat(d));
  push_value(rep, "edge_length", rat_str(per_edge));

  // Upper-bound construction: per copy, the 1-interval greedy cover; the
  // union covers everything with at most d * iota edges.
  bool gallai_ok = !inv.iota.infinite;
  long total = 0;
  for (int i = 1; i <= d && gallai_ok; ++i) {
    GreedyCoverResult gc = gallai_cover(h.restrict_to_copy(i));
    if (gc.infinite)
      gallai_ok = false;
    else
      total += static_cast<long>(gc.cover.size());
  }
  gallai_ok = gallai_ok && !inv.rho.infinite && total <= static_cast<long>(d) * inv.iota.value &&
              inv.rho.value <= total;
  push_check(rep, "per-copy greedy covers give rho <= d*iota", gallai_ok);
  return rep;
}

FamilyReport verify_corners(const SearchLimits& limits) {
  DIntervalHypergraph h = corners_family();
  FamilyReport rep;
  rep.family = "corners";
  rep.d = 3;
  rep.n = 2;
  rep.edge_count = h.edge_count();

  PremiseResult pre = premise_check(h, 2, PredicateMode::ContainedIn, limits);
  push_check(rep, "every 3 x 2-partition has a 3-cell inside an edge", pre.holds);

  GeometricInvariants inv = compute_invariants(h, limits);
  push_check(rep, "rho == 3", !inv.rho.infinite && inv.rho.value == 3);
  push_value(rep, "rho", inv.rho.infinite ? "infinite" : std::to_string(inv.rho.value));

  // Edges anchored mostly at 0 have total length 47/24, the others 1, so any
  // cross-class pair totals 71/24 < 3 and can never cover the three copies.
  bool lengths_ok = true;
  for (const DEdge& e : h.edges()) {
    int weight = 0;
    for (int i = 1; i <= 3; ++i)
      if (e.part(i).lo != 0) ++weight;
    const Rat want = weight <= 1 ? make_rat(47, 24) : Rat(1);
    if (e.total_length() != want) {
      lengths_ok = false;
      break;
    }
  }
  push_check(rep, "class total lengths are 47/24 and 1", lengths_ok);
  push_check(rep, "any cross-class pair totals 71/24 < 3",
             make_rat(47, 24) + Rat(1) == make_rat(71, 24) && make_rat(71, 24) < Rat(3));
  return rep;
}

}  // namespace dihg
