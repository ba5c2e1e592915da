#include "dihg/gallai.hpp"

#include <algorithm>
#include <stdexcept>

#include "dihg/configurations.hpp"

namespace dihg {

namespace {

void require_1d(const DIntervalHypergraph& h) {
  if (h.d() != 1) throw std::invalid_argument("this operation needs a 1-interval hypergraph (d = 1)");
}

// Smallest endpoint value strictly greater than c (1 is always present).
Rat next_value(const std::vector<Rat>& values, const Rat& c) {
  auto it = std::upper_bound(values.begin(), values.end(), c);
  if (it == values.end()) throw std::logic_error("no endpoint value beyond covered prefix");
  return *it;
}

}  // namespace

GreedyMatchingResult gallai_matching(const DIntervalHypergraph& h) {
  require_1d(h);
  std::vector<int> order(static_cast<std::size_t>(h.edge_count()));
  for (std::size_t k = 0; k < order.size(); ++k) order[k] = static_cast<int>(k);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    const Interval &ia = h.edge(a).part(1), &ib = h.edge(b).part(1);
    if (ia.hi != ib.hi) return ia.hi < ib.hi;
    return a < b;
  });
  GreedyMatchingResult res;
  bool have_frontier = false;
  Rat frontier;
  for (int id : order) {
    const Interval& iv = h.edge(id).part(1);
    if (have_frontier && iv.lo <= frontier) continue;  // meets a picked edge
    res.matching.push_back(id);
    res.transversal.push_back(iv.hi);
    frontier = iv.hi;
    have_frontier = true;
  }
  return res;
}

GreedyCoverResult gallai_cover(const DIntervalHypergraph& h) {
  require_1d(h);
  GreedyCoverResult res;
  std::vector<Rat> values = critical_values(h, 1);
  const Rat one = 1;
  Rat c = 0;
  for (int step = 1;; ++step) {
    int pick = -1;
    for (const DEdge& e : h.edges()) {
      const Interval& iv = e.part(1);
      bool candidate = step == 1 ? iv.lo == 0 : (iv.lo <= c && iv.hi > c);
      if (!candidate) continue;
      if (pick < 0 || iv.hi > h.edge(pick).part(1).hi) pick = e.id;
    }
    if (pick < 0) {
      res.infinite = true;
      res.gap_witness = step == 1 ? Rat(0) : (c + next_value(values, c)) / 2;
      return res;
    }
    res.cover.push_back(pick);
    res.independent_points.push_back(step == 1 ? Rat(0) : (c + next_value(values, c)) / 2);
    c = h.edge(pick).part(1).hi;
    if (c == one) return res;
  }
}

Partition1DResult all_cells_partition_1d(const DIntervalHypergraph& h, int n, PredicateMode mode) {
  require_1d(h);
  Partition1DResult out;
  PremiseResult premise = premise_check(h, n, mode);
  if (!premise.holds) {
    out.counterexample = premise.counterexample;
    return out;
  }
  auto cert = exhaustive_partition_search(h, n, mode, /*minimize_h0=*/false);
  bool all_cells = cert.has_value();
  if (cert && mode == PredicateMode::Contains)
    all_cells = static_cast<int>(cert->dcell_witness.size()) == n;
  if (!all_cells)
    throw std::logic_error("premise holds but no all-cells partition found; "
                           "this contradicts the d=1 partition theorem");
  out.witness = cert->cuts;
  return out;
}

}  // namespace dihg
