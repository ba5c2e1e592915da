#pragma once

#include <vector>

#include "dihg/rational.hpp"

namespace dihg {

// One closed subinterval [lo, hi] of a vertex copy. Copies are 1-based.
struct Interval {
  int copy = 1;
  Rat lo, hi;

  bool contains(const Rat& p) const { return lo <= p && p <= hi; }
  Rat length() const { return hi - lo; }
};

// A d-interval edge: exactly one non-empty closed interval per copy,
// stored in copy order (parts[i-1].copy == i).
struct DEdge {
  int id = 0;
  std::vector<Interval> parts;

  const Interval& part(int copy) const { return parts.at(static_cast<std::size_t>(copy) - 1); }
  Rat total_length() const;
};

// Finite set of d-interval edges over d disjoint copies of [0,1].
// Edge ids are dense from 0 and equal their index in edges().
class DIntervalHypergraph {
 public:
  // Validates: d >= 1, parts cover copies 1..d exactly once, 0 <= lo <= hi <= 1,
  // ids dense from 0 in order. Throws std::invalid_argument.
  static DIntervalHypergraph create(int d, std::vector<DEdge> edges);

  int d() const { return d_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<DEdge>& edges() const { return edges_; }
  const DEdge& edge(int id) const { return edges_.at(static_cast<std::size_t>(id)); }

  // Restriction to one copy: the 1-interval hypergraph of that copy's parts
  // (same edge ids).
  DIntervalHypergraph restrict_to_copy(int copy) const;

 private:
  int d_ = 1;
  std::vector<DEdge> edges_;
};

// Sorted distinct endpoint values of the given copy, always including 0 and 1.
std::vector<Rat> critical_values(const DIntervalHypergraph& h, int copy);

}  // namespace dihg
