#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "dihg/geometry.hpp"
#include "dihg/margins.hpp"
#include "dihg/partition.hpp"
#include "dihg/rational.hpp"

namespace dihg {

// Parameters of the numeric balanced-point search. This is the only
// floating-point zone in the library: every returned point is snapped to
// small-denominator rationals and re-verified with exact arithmetic.
struct SearchParams {
  Rat epsilon0 = make_rat(1, 8);       // first level of the epsilon loop
  double tol = 1e-9;                   // accepted layer-sum spread
  int max_iters = 100000;              // per start
  int starts = 16;                     // uniform + seeded random starts
  unsigned long snap_denominator = 65536;
  int k_max = 12;                      // epsilon halvings before giving up
  unsigned long seed = 1;
  int threads = 0;                     // 0 = pick a hardware default
};

struct BalancedPoint {
  ProductPoint x = ProductPoint::uniform(1, 1);
  PredicateMode mode = PredicateMode::ContainedIn;
  std::optional<Rat> epsilon;  // set for ContainedIn (T-array) searches
  Rat spread;                  // exact layer-sum spread at x
  Rat common_value;            // mean layer sum at x (positive on acceptance)
  LayerSums sums;              // exact layer sums at x
  bool converged = false;      // spread <= tol
  int iterations = 0;          // spent by the winning start
};

// Minimizes the layer-sum imbalance of the mode's margin array over the
// product of simplices by multiplicative-weight coordinate descent,
// multi-started from the uniform point and then seeded random points. The
// winner is the lexicographically smallest snapped point among the accepted
// starts (exact spread <= tol), independent of the thread count; if none is
// accepted, the best non-converged point is returned flagged. Throws
// std::invalid_argument when a snapped point exactly refutes the premise
// (all margin entries zero at an exact partition).
BalancedPoint balanced_point_search(const DIntervalHypergraph& h, int n, PredicateMode mode,
                                    const Rat& epsilon, const SearchParams& params = {});

// One level of the epsilon loop: the balanced point found at epsilon_k and
// the d-cell cover extracted from it (flat indices), plus whether every
// chosen d-cell had exact mu >= -epsilon_k.
struct EpsilonLevel {
  int k = 0;
  Rat epsilon;
  BalancedPoint point;
  std::vector<long> cover;
  bool mu_ok = false;
};

struct EpsilonLoopResult {
  bool stabilized = false;
  std::vector<long> cover;              // the stabilized cover (flat indices)
  std::optional<BalancedPoint> point;   // point of the accepting level
  std::vector<EpsilonLevel> levels;     // all levels run, in order
};

// Extracts a d-cell cover from a balanced point (typically by rounding the
// auxiliary hypergraph); must return sorted flat indices.
using CoverCallback = std::function<std::vector<long>(const BalancedPoint&)>;

// Runs balanced_point_search (ContainedIn) at epsilon_k = epsilon0 / 2^k and
// stops once the extracted cover is identical on two consecutive levels with
// exact mu >= -epsilon_k for every chosen d-cell on both. Not stabilizing
// within k_max levels leaves `stabilized` false (callers fall back to the
// exhaustive oracle).
EpsilonLoopResult epsilon_loop(const DIntervalHypergraph& h, int n, const CoverCallback& callback,
                               const SearchParams& params = {});

}  // namespace dihg
