#pragma once

#include <string>
#include <utility>
#include <vector>

#include "dihg/geometry.hpp"
#include "dihg/limits.hpp"

namespace dihg {

// Built-in families with exactly verifiable properties.

// All m^d edges taking one of the m uniform blocks [(k-1)/m, k/m] per copy.
// Every d x m-partition has a d-cell inside an edge (per copy, some cell
// interior misses every block boundary), and rho = m. Throws ScaleGuardError
// when m^d exceeds 10^5.
DIntervalHypergraph grid_family(int d, int m);

// d*n*(dn)^{2(d-1)} edges (d >= 2): each takes one block [(j-1)/n, j/n] in a
// chosen copy and one tiny block of length 1/(dn)^2 in every other copy.
// iota = n while rho = d*n, so the general bound rho <= d*iota is tight; a
// length count shows dn-1 edges can never cover. Throws ScaleGuardError when
// the edge count exceeds 10^5.
DIntervalHypergraph cover_tight_family(int d, int n);

// d = 3: every edge takes per copy an interval anchored at endpoint
// v_i in {0,1} of length l_i, a multiple of 1/24. Admitted when at most one
// v_i is 1 and l_1+l_2+l_3 = 47/24, or at least two are 1 and the sum is 1.
// The 2-partition cover premise holds, yet rho = 3 > 2: any cross-class pair
// has total length 71/24 < 3, too short to cover.
DIntervalHypergraph corners_family();

struct FamilyCheck {
  std::string claim;
  bool ok = false;
};

struct FamilyReport {
  std::string family;
  int d = 0, n = 0;
  int edge_count = 0;
  std::vector<FamilyCheck> checks;
  std::vector<std::pair<std::string, std::string>> values;  // name -> exact value

  bool all_ok() const;
};

// Exact verification of each family's advertised properties.
FamilyReport verify_grid(int d, int m, const SearchLimits& limits = {});
FamilyReport verify_cover_tight(int d, int n, const SearchLimits& limits = {});
FamilyReport verify_corners(const SearchLimits& limits = {});

}  // namespace dihg
