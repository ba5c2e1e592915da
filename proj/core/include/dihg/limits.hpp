#pragma once

#include <stdexcept>
#include <string>

namespace dihg {

// Thrown when an exact search would exceed its configured budget; the caller
// chose limits that the instance does not fit.
struct ScaleGuardError : std::runtime_error {
  explicit ScaleGuardError(const std::string& what) : std::runtime_error(what) {}
};

struct SearchLimits {
  int max_vertices = 4096;
  int max_edges = 20000;
  long node_budget = 200000000;   // branch-and-bound nodes
  long combo_budget = 10000000;   // partition configuration combinations
};

}  // namespace dihg
