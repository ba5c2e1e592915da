#include "dihg/partition.hpp"

#include <stdexcept>
#include <string>

namespace dihg {

const char* mode_name(PredicateMode mode) {
  return mode == PredicateMode::Contains ? "contains" : "contained-in";
}

CutSystem CutSystem::create(int d, int n, std::vector<std::vector<Rat>> cuts) {
  if (d < 1 || n < 1) throw std::invalid_argument("CutSystem needs d >= 1 and n >= 1");
  if (static_cast<int>(cuts.size()) != d)
    throw std::invalid_argument("CutSystem needs one cut row per copy");
  const Rat zero = 0, one = 1;
  for (auto& row : cuts) {
    if (static_cast<int>(row.size()) != n - 1)
      throw std::invalid_argument("CutSystem needs n-1 cuts per copy");
    Rat prev = zero;
    for (const Rat& c : row) {
      if (c < prev) throw std::invalid_argument("cuts must be nondecreasing and >= 0");
      prev = c;
    }
    if (!row.empty() && row.back() > one)
      throw std::invalid_argument("cuts must be <= 1");
  }
  CutSystem s;
  s.d_ = d;
  s.n_ = n;
  s.cuts_ = std::move(cuts);
  return s;
}

const Rat& CutSystem::cut(int copy, int t) const {
  return cuts_.at(static_cast<std::size_t>(copy) - 1).at(static_cast<std::size_t>(t) - 1);
}

Rat CutSystem::boundary(int copy, int t) const {
  if (t <= 0) return Rat(0);
  if (t >= n_) return Rat(1);
  return cut(copy, t);
}

CellBounds CutSystem::cell(int copy, int j) const {
  if (j < 1 || j > n_) throw std::out_of_range("cell index out of range");
  CellBounds b;
  b.lo = boundary(copy, j - 1);
  b.hi = boundary(copy, j);
  b.closed_left = (j == 1);
  b.closed_right = (j == n_);
  return b;
}

bool CutSystem::operator==(const CutSystem& o) const {
  return d_ == o.d_ && n_ == o.n_ && cuts_ == o.cuts_;
}

ProductPoint ProductPoint::create(int d, int n, std::vector<std::vector<Rat>> coords) {
  if (d < 1 || n < 1) throw std::invalid_argument("ProductPoint needs d >= 1 and n >= 1");
  if (static_cast<int>(coords.size()) != d)
    throw std::invalid_argument("ProductPoint needs one coordinate row per copy");
  for (auto& row : coords) {
    if (static_cast<int>(row.size()) != n)
      throw std::invalid_argument("ProductPoint needs n coordinates per copy");
    Rat sum = 0;
    for (const Rat& v : row) {
      if (v < 0) throw std::invalid_argument("simplex coordinates must be >= 0");
      sum += v;
    }
    if (sum != 1) throw std::invalid_argument("simplex coordinates must sum to 1");
  }
  ProductPoint p;
  p.d_ = d;
  p.n_ = n;
  p.coords_ = std::move(coords);
  return p;
}

const Rat& ProductPoint::coord(int copy, int j) const {
  return coords_.at(static_cast<std::size_t>(copy) - 1).at(static_cast<std::size_t>(j) - 1);
}

ProductPoint ProductPoint::uniform(int d, int n) {
  std::vector<std::vector<Rat>> coords(
      static_cast<std::size_t>(d),
      std::vector<Rat>(static_cast<std::size_t>(n), make_rat(1, n)));
  return create(d, n, std::move(coords));
}

bool ProductPoint::operator==(const ProductPoint& o) const {
  return d_ == o.d_ && n_ == o.n_ && coords_ == o.coords_;
}

CutSystem cuts_from_point(const ProductPoint& x) {
  std::vector<std::vector<Rat>> cuts(static_cast<std::size_t>(x.d()));
  for (int i = 1; i <= x.d(); ++i) {
    Rat acc = 0;
    auto& row = cuts[static_cast<std::size_t>(i - 1)];
    row.reserve(static_cast<std::size_t>(x.n() - 1));
    for (int j = 1; j <= x.n() - 1; ++j) {
      acc += x.coord(i, j);
      row.push_back(acc);
    }
  }
  return CutSystem::create(x.d(), x.n(), std::move(cuts));
}

ProductPoint point_from_cuts(const CutSystem& c) {
  std::vector<std::vector<Rat>> coords(static_cast<std::size_t>(c.d()));
  for (int i = 1; i <= c.d(); ++i) {
    auto& row = coords[static_cast<std::size_t>(i - 1)];
    row.reserve(static_cast<std::size_t>(c.n()));
    for (int j = 1; j <= c.n(); ++j) row.push_back(c.boundary(i, j) - c.boundary(i, j - 1));
  }
  return ProductPoint::create(c.d(), c.n(), std::move(coords));
}

long dcell_count(int d, int n) {
  long count = 1;
  for (int i = 0; i < d; ++i) count *= n;
  return count;
}

long flat_index(const DCellIndex& jvec, int n) {
  long idx = 0;
  for (int v : jvec.j) idx = idx * n + (v - 1);
  return idx;
}

DCellIndex dcell_from_flat(long idx, int d, int n) {
  DCellIndex jvec;
  jvec.j.assign(static_cast<std::size_t>(d), 1);
  for (int i = d - 1; i >= 0; --i) {
    jvec.j[static_cast<std::size_t>(i)] = static_cast<int>(idx % n) + 1;
    idx /= n;
  }
  return jvec;
}

}  // namespace dihg
