#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "dihg/finite.hpp"
#include "dihg/geometry.hpp"
#include "dihg/limits.hpp"

namespace dihg {

enum class InvariantKind { Nu, Tau, Iota, Rho };
enum class FractionalKind { NuStar, TauStar, IotaStar, RhoStar };

struct ExactValue {
  bool infinite = false;
  int value = 0;
  // Edge ids for Nu/Rho, vertex ids for Tau/Iota; empty when infinite.
  std::vector<int> witness;
};

// Exact optimum by branch and bound: dominated rows/columns are removed
// first, branching follows the most-constrained element (fewest options) or
// highest-degree vertex, and subtrees are pruned against LP or counting
// bounds. Deterministic (lowest-id tie-breaks).
ExactValue exact_invariant(const FiniteHypergraph& f, InvariantKind kind, SearchLimits limits = {});

struct FractionalValue {
  bool infinite = false;  // IotaStar/RhoStar with an uncovered vertex
  Rat value;
  // Nonzero weights: edge ids for NuStar/RhoStar, vertex ids for TauStar/IotaStar.
  std::vector<std::pair<int, Rat>> support;
};

// Exact rational LP relaxation values; NuStar == TauStar and IotaStar ==
// RhoStar by duality, but each is solved from its own formulation.
FractionalValue lp_fractional(const FiniteHypergraph& f, FractionalKind kind);

// Exact nonnegative edge weights with weight exactly 1 at every vertex, if
// any exist.
std::optional<std::vector<Rat>> perfect_fractional_matching(const FiniteHypergraph& f);

// Invariants of the geometric hypergraph via its atomization. iota and rho
// are infinite exactly when the edges do not cover the d copies of [0,1].
struct GeometricInvariants {
  ExactValue nu, tau, iota, rho;
  std::vector<std::pair<int, Rat>> transversal_points;  // (copy, point)
  std::vector<std::pair<int, Rat>> independent_points;  // (copy, point)
};

GeometricInvariants compute_invariants(const DIntervalHypergraph& h, SearchLimits limits = {});

}  // namespace dihg
