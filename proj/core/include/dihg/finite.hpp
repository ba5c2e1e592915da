#pragma once

#include <optional>
#include <vector>

#include "dihg/bitset.hpp"
#include "dihg/geometry.hpp"

namespace dihg {

// Plain finite hypergraph on vertices 0..vertex_count-1. part_of (optional)
// assigns each vertex a 1-based part for d-partite instances; weights
// (optional) attach a rational weight per edge.
struct FiniteHypergraph {
  int vertex_count = 0;
  std::vector<std::vector<int>> edges;  // sorted vertex ids per edge
  std::vector<int> part_of;             // empty, or one 1-based part per vertex
  std::vector<Rat> weights;             // empty, or one weight per edge

  int edge_count() const { return static_cast<int>(edges.size()); }
  int rank() const;        // max edge size
  int max_degree() const;  // max vertex degree
  BitSet edge_bits(int e) const;
  BitSet covered_vertices() const;
  bool is_d_partite(int d) const;  // every edge meets parts 1..d exactly once

  void validate() const;  // throws std::invalid_argument
};

// One atom of the per-copy endpoint arrangement: either a single point
// {lo} (point == true) or a run like [lo,hi), (lo,hi), (lo,hi] with more
// than one point. representative is an interior rational usable in
// certificates. Atoms are maximal sets of points with identical edge
// membership, so every geometric statement about a point inside an atom
// holds for the whole atom.
struct Atom {
  int copy = 1;
  Rat lo, hi;
  bool closed_left = false, closed_right = false;
  bool point = false;
  Rat representative;
};

struct Atomization {
  FiniteHypergraph hyper;  // vertices = atoms across all copies, same edge ids
  std::vector<Atom> atoms;

  // True iff every atom lies in some edge, i.e. the edges cover the whole
  // vertex set of the original geometry.
  bool covered() const;
};

// Exact arrangement quotient: per copy, split [0,1] at every edge endpoint
// into point and gap atoms, then merge consecutive atoms with identical
// edge membership. Preserves nu, tau, iota, rho of the geometric hypergraph.
Atomization atomize(const DIntervalHypergraph& h);

}  // namespace dihg
