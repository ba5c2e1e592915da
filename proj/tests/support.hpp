#pragma once

// Test-side oracles and generators. Everything here is deliberately written
// against the problem definitions only (subset enumeration and tiny DPs over
// exact rationals), independent of the library's search code, so agreement
// with the library is a real cross-check rather than a tautology.

#include <cstdint>
#include <optional>
#include <random>
#include <utility>
#include <vector>

#include "dihg/finite.hpp"
#include "dihg/geometry.hpp"
#include "dihg/invariants.hpp"
#include "dihg/partition.hpp"
#include "dihg/rational.hpp"

namespace testsup {

// ---------- construction helpers ----------

// d = 1 hypergraph from (lo, hi) pairs, ids in order.
dihg::DIntervalHypergraph make_1d(const std::vector<std::pair<dihg::Rat, dihg::Rat>>& ivals);

// General d-interval hypergraph: edges[e][i-1] = (lo, hi) of copy i.
dihg::DIntervalHypergraph make_dih(
    int d, const std::vector<std::vector<std::pair<dihg::Rat, dihg::Rat>>>& edges);

// Finite hypergraph from edge lists (vertices 0..v-1), no parts or weights.
dihg::FiniteHypergraph make_finite(int vertex_count, std::vector<std::vector<int>> edges);

// ---------- exact brute-force invariants, d = 1 geometry ----------

// Subset enumeration over the endpoint-arrangement atoms. Limits: <= 20
// edges, <= 64 atoms (any instance with <= 12 edges fits).
struct Brute1D {
  bool covered = false;  // the edges cover [0,1]
  int nu = 0, tau = 0;
  int iota = 0, rho = 0;  // meaningful only when covered
};
Brute1D brute_1d(const dihg::DIntervalHypergraph& h);

// ---------- exact brute-force invariants, finite hypergraphs ----------

// Subset enumeration: 2^edges for nu/rho (<= 20 edges), 2^vertices for
// tau/iota (<= 20 vertices).
int brute_nu(const dihg::FiniteHypergraph& f);
int brute_tau(const dihg::FiniteHypergraph& f);
int brute_iota(const dihg::FiniteHypergraph& f);
std::optional<int> brute_rho(const dihg::FiniteHypergraph& f);  // nullopt = infinite

// ---------- exact LP certificate checking ----------

// Rebuilds the full weight vector from the support and re-checks, in exact
// arithmetic, nonnegativity, every constraint of the kind's LP, and that the
// weights sum to fv.value. With this, equal NuStar/TauStar (or
// IotaStar/RhoStar) values certify optimality of both by weak duality.
bool lp_support_feasible(const dihg::FiniteHypergraph& f, dihg::FractionalKind kind,
                         const dihg::FractionalValue& fv);

// H_r = 1 + 1/2 + ... + 1/r (H_0 = 0).
dihg::Rat harmonic(int r);

// ---------- seeded generators ----------

struct Rng {
  std::mt19937_64 eng;
  explicit Rng(std::uint64_t seed) : eng(seed) {}

  int uniform(int lo, int hi);  // inclusive
  bool chance(double p);
};

// d = 1, 1..max_edges edges, endpoints on the 1/den grid (point edges allowed).
dihg::DIntervalHypergraph random_1d(Rng& rng, int max_edges = 12, int den = 64);

// d copies, 1..max_edges edges, endpoints on the 1/den grid.
dihg::DIntervalHypergraph random_dinterval(Rng& rng, int d, int max_edges = 6, int den = 16);

// 1..max_v vertices, 1..max_e nonempty edges; uncovered vertices possible.
dihg::FiniteHypergraph random_finite(Rng& rng, int max_v = 10, int max_e = 16);

// Like random_finite but isolated vertices are repaired with singleton edges.
dihg::FiniteHypergraph random_covered(Rng& rng, int max_v = 10, int max_e = 16);

// d parts of size 1..max_part; every edge takes one vertex per part.
dihg::FiniteHypergraph random_dpartite(Rng& rng, int d, int max_part = 4);

// Bipartite graph (edge size 2, parts 1 and 2), sides 1..4, no isolated
// vertex; at most 16 edges.
dihg::FiniteHypergraph random_bipartite_graph(Rng& rng);

// Random point of the product of d (n-1)-simplices with small-denominator
// rational coordinates (weights 0..wmax, normalized; zero coordinates occur).
dihg::ProductPoint random_point(Rng& rng, int d, int n, int wmax = 8);

}  // namespace testsup
