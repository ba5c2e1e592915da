#pragma once

#include <optional>

#include "dihg/geometry.hpp"
#include "dihg/partition.hpp"

namespace dihg {

// Does interval iv fit strictly inside the cell? Interior boundaries are
// open, so containment there needs strict inequalities; the closed outer
// ends (0 in cell 1, 1 in cell n) admit equality. Empty cells contain nothing.
bool interval_in_cell(const Interval& iv, const CellBounds& cell);

// Is the cell contained in [iv.lo, iv.hi]? An empty cell is contained in
// every edge; a non-empty cell needs iv.lo <= cell.lo and cell.hi <= iv.hi
// (open boundaries make the edge's closedness absorb equality).
bool cell_in_interval(const CellBounds& cell, const Interval& iv);

// Exact d-cell/edge test: Contains asks for an edge with every part inside
// the corresponding cell, ContainedIn for an edge with every cell inside the
// corresponding part. Returns the lowest qualifying edge id, or nothing.
std::optional<int> dcell_predicate(const CutSystem& cuts, const DCellIndex& jvec,
                                   const DIntervalHypergraph& h, PredicateMode mode);

// Same test for a single fixed edge.
bool dcell_predicate_edge(const CutSystem& cuts, const DCellIndex& jvec, const DEdge& e,
                          PredicateMode mode);

}  // namespace dihg
