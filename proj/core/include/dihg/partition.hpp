#pragma once

#include <vector>

#include "dihg/rational.hpp"

namespace dihg {

// Which way a d-cell relates to an edge.
enum class PredicateMode { Contains, ContainedIn };

const char* mode_name(PredicateMode mode);

// Index of one d-cell: j[i-1] in 1..n selects the cell of copy i.
struct DCellIndex {
  std::vector<int> j;

  bool operator==(const DCellIndex& o) const { return j == o.j; }
  bool operator<(const DCellIndex& o) const { return j < o.j; }
};

// One cell of one copy. Cell 1 is closed at 0, cell n is closed at 1, all
// interior boundaries are open; a cell is empty iff lo == hi.
struct CellBounds {
  Rat lo, hi;
  bool closed_left = false, closed_right = false;

  bool empty() const { return lo == hi; }
};

// An n-partition of each of the d copies, as nondecreasing interior cut
// positions c_1 <= ... <= c_{n-1} per copy (c_0 = 0 and c_n = 1 implicit).
class CutSystem {
 public:
  // Validates monotonicity and range; throws std::invalid_argument.
  static CutSystem create(int d, int n, std::vector<std::vector<Rat>> cuts);

  int d() const { return d_; }
  int n() const { return n_; }
  const std::vector<std::vector<Rat>>& cuts() const { return cuts_; }
  const Rat& cut(int copy, int t) const;  // t in 1..n-1

  // Boundary value c_t of the given copy for t in 0..n (c_0=0, c_n=1).
  Rat boundary(int copy, int t) const;
  CellBounds cell(int copy, int j) const;  // j in 1..n

  bool operator==(const CutSystem& o) const;

 private:
  int d_ = 1, n_ = 1;
  std::vector<std::vector<Rat>> cuts_;  // [copy-1][t-1]
};

// A point of the product of d standard (n-1)-simplices: per copy, n
// nonnegative coordinates summing to 1 (the cell lengths).
class ProductPoint {
 public:
  static ProductPoint create(int d, int n, std::vector<std::vector<Rat>> coords);

  int d() const { return d_; }
  int n() const { return n_; }
  const std::vector<std::vector<Rat>>& coords() const { return coords_; }
  const Rat& coord(int copy, int j) const;  // j in 1..n

  static ProductPoint uniform(int d, int n);

  bool operator==(const ProductPoint& o) const;

 private:
  int d_ = 1, n_ = 1;
  std::vector<std::vector<Rat>> coords_;  // [copy-1][j-1]
};

// Bijection between partitions and simplex-product points:
// c_j = x_1 + ... + x_j, x_j = c_j - c_{j-1}.
CutSystem cuts_from_point(const ProductPoint& x);
ProductPoint point_from_cuts(const CutSystem& c);

// Enumeration order over all n^d d-cell indices: lexicographic, last copy
// fastest. flat_index is the row-major rank of jvec under that order.
long dcell_count(int d, int n);
long flat_index(const DCellIndex& jvec, int n);
DCellIndex dcell_from_flat(long idx, int d, int n);

}  // namespace dihg
