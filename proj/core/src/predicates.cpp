#include "dihg/predicates.hpp"

#include <stdexcept>

namespace dihg {

bool interval_in_cell(const Interval& iv, const CellBounds& cell) {
  if (cell.empty()) return false;
  bool left_ok = cell.closed_left ? iv.lo >= cell.lo : iv.lo > cell.lo;
  bool right_ok = cell.closed_right ? iv.hi <= cell.hi : iv.hi < cell.hi;
  return left_ok && right_ok;
}

bool cell_in_interval(const CellBounds& cell, const Interval& iv) {
  if (cell.empty()) return true;
  return iv.lo <= cell.lo && cell.hi <= iv.hi;
}

bool dcell_predicate_edge(const CutSystem& cuts, const DCellIndex& jvec, const DEdge& e,
                          PredicateMode mode) {
  for (int i = 1; i <= cuts.d(); ++i) {
    CellBounds cell = cuts.cell(i, jvec.j.at(static_cast<std::size_t>(i - 1)));
    const Interval& iv = e.part(i);
    bool ok = mode == PredicateMode::Contains ? interval_in_cell(iv, cell)
                                              : cell_in_interval(cell, iv);
    if (!ok) return false;
  }
  return true;
}

std::optional<int> dcell_predicate(const CutSystem& cuts, const DCellIndex& jvec,
                                   const DIntervalHypergraph& h, PredicateMode mode) {
  if (cuts.d() != h.d()) throw std::invalid_argument("cut system dimension != hypergraph dimension");
  if (static_cast<int>(jvec.j.size()) != h.d())
    throw std::invalid_argument("d-cell index dimension != hypergraph dimension");
  for (const DEdge& e : h.edges())
    if (dcell_predicate_edge(cuts, jvec, e, mode)) return e.id;
  return std::nullopt;
}

}  // namespace dihg
