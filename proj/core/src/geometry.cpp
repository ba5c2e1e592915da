#include "dihg/geometry.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>

namespace dihg {

Rat DEdge::total_length() const {
  Rat s = 0;
  for (const auto& iv : parts) s += iv.length();
  return s;
}

DIntervalHypergraph DIntervalHypergraph::create(int d, std::vector<DEdge> edges) {
  if (d < 1) throw std::invalid_argument("d must be >= 1");
  const Rat zero = 0, one = 1;
  for (std::size_t k = 0; k < edges.size(); ++k) {
    DEdge& e = edges[k];
    if (e.id != static_cast<int>(k))
      throw std::invalid_argument("edge ids must be dense from 0 and in order (edge index " +
                                  std::to_string(k) + " has id " + std::to_string(e.id) + ")");
    if (static_cast<int>(e.parts.size()) != d)
      throw std::invalid_argument("edge " + std::to_string(e.id) + " must have exactly d=" +
                                  std::to_string(d) + " parts");
    std::vector<bool> seen(static_cast<std::size_t>(d), false);
    for (const Interval& iv : e.parts) {
      if (iv.copy < 1 || iv.copy > d)
        throw std::invalid_argument("edge " + std::to_string(e.id) + ": copy index out of range");
      if (seen[static_cast<std::size_t>(iv.copy - 1)])
        throw std::invalid_argument("edge " + std::to_string(e.id) + ": duplicate copy index");
      seen[static_cast<std::size_t>(iv.copy - 1)] = true;
      if (iv.lo > iv.hi)
        throw std::invalid_argument("edge " + std::to_string(e.id) + ": lo > hi");
      if (iv.lo < zero || iv.hi > one)
        throw std::invalid_argument("edge " + std::to_string(e.id) + ": interval outside [0,1]");
    }
    std::sort(e.parts.begin(), e.parts.end(),
              [](const Interval& a, const Interval& b) { return a.copy < b.copy; });
  }
  DIntervalHypergraph h;
  h.d_ = d;
  h.edges_ = std::move(edges);
  return h;
}

DIntervalHypergraph DIntervalHypergraph::restrict_to_copy(int copy) const {
  std::vector<DEdge> es;
  es.reserve(edges_.size());
  for (const DEdge& e : edges_) {
    Interval iv = e.part(copy);
    iv.copy = 1;
    es.push_back(DEdge{e.id, {iv}});
  }
  return DIntervalHypergraph::create(1, std::move(es));
}

std::vector<Rat> critical_values(const DIntervalHypergraph& h, int copy) {
  std::set<Rat> vals{Rat(0), Rat(1)};
  for (const DEdge& e : h.edges()) {
    const Interval& iv = e.part(copy);
    vals.insert(iv.lo);
    vals.insert(iv.hi);
  }
  return {vals.begin(), vals.end()};
}

}  // namespace dihg
