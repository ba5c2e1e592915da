#pragma once

#include <vector>

#include "dihg/rational.hpp"

namespace dihg {
namespace lp {

enum class Rel { Le, Ge, Eq };
enum class Status { Optimal, Infeasible, Unbounded };

struct Constraint {
  std::vector<Rat> coeffs;
  Rel rel = Rel::Le;
  Rat rhs;
};

struct Solution {
  Status status = Status::Infeasible;
  Rat value;
  std::vector<Rat> x;
};

// Exact two-phase dense-tableau simplex over the rationals with Bland's
// rule (lowest eligible index enters, lowest-index row leaves on ratio
// ties), so it terminates and is deterministic. Variables are constrained
// to x >= 0.
Solution maximize(const std::vector<Rat>& objective, const std::vector<Constraint>& constraints);
Solution minimize(const std::vector<Rat>& objective, const std::vector<Constraint>& constraints);

}  // namespace lp
}  // namespace dihg
