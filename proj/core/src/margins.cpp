#include "dihg/margins.hpp"

#include <algorithm>
#include <stdexcept>

#include "dihg/limits.hpp"

namespace dihg {

Rat LayerArray::total() const {
  Rat t = 0;
  for (const Rat& v : entries) t += v;
  return t;
}

bool LayerArray::all_zero() const {
  for (const Rat& v : entries)
    if (v != 0) return false;
  return true;
}

Rat LayerSums::total() const {
  Rat t = 0;
  for (int j = 1; j <= n; ++j) t += at(1, j);
  return t;
}

Rat LayerSums::spread() const {
  Rat worst = 0;
  for (int i = 1; i <= d; ++i) {
    Rat lo = at(i, 1), hi = at(i, 1);
    for (int j = 2; j <= n; ++j) {
      lo = std::min(lo, at(i, j));
      hi = std::max(hi, at(i, j));
    }
    worst = std::max(worst, Rat(hi - lo));
  }
  return worst;
}

Rat s_margin(const CutSystem& cuts, const DCellIndex& jvec, const DIntervalHypergraph& h) {
  const int n = cuts.n();
  Rat best = -1;
  for (const DEdge& e : h.edges()) {
    Rat val = 2;  // above any possible slack
    for (int i = 1; i <= h.d() && val > best; ++i) {
      int j = jvec.j[static_cast<std::size_t>(i - 1)];
      const Interval& iv = e.part(i);
      Rat left = (j == 1) ? Rat(1) : Rat(iv.lo - cuts.boundary(i, j - 1));
      Rat right = (j == n) ? Rat(1) : Rat(cuts.boundary(i, j) - iv.hi);
      val = std::min(val, std::min(left, right));
    }
    best = std::max(best, val);
  }
  return std::max(best, Rat(0));
}

Rat mu_value(const CutSystem& cuts, const DCellIndex& jvec, const DIntervalHypergraph& h) {
  Rat best = -1;
  for (const DEdge& e : h.edges()) {
    Rat val = 0;  // q values never exceed 0
    for (int i = 1; i <= h.d() && val > best; ++i) {
      int j = jvec.j[static_cast<std::size_t>(i - 1)];
      const Interval& iv = e.part(i);
      Rat lo = cuts.boundary(i, j - 1), hi = cuts.boundary(i, j);
      Rat gap = std::min(Rat(lo - iv.lo), Rat(iv.hi - hi));
      Rat q = std::min(Rat(0), std::max(gap, Rat(lo - hi)));
      val = std::min(val, q);
    }
    best = std::max(best, val);
    if (best == 0) break;  // 0 is the maximum possible value
  }
  return best;
}

Rat t_value(const CutSystem& cuts, const DCellIndex& jvec, const DIntervalHypergraph& h,
            const Rat& epsilon) {
  if (epsilon <= 0) throw std::invalid_argument("epsilon must be positive");
  if (h.edge_count() == 0) return Rat(0);
  Rat v = 1 + mu_value(cuts, jvec, h) / epsilon;
  return std::min(std::max(v, Rat(0)), Rat(1));
}

namespace {

long checked_cell_count(int d, int n) {
  long cells = dcell_count(d, n);
  if (cells > 1000000)
    throw ScaleGuardError("margin arrays support at most 10^6 d-cells");
  return cells;
}

}  // namespace

namespace {

// Per-copy scores factored out of the per-d-cell maximin: score[(i*n+j)*m+e]
// depends only on copy i's cut pair, so computing it once per (copy, cell,
// edge) and combining by comparisons leaves no rational arithmetic in the
// n^d loop.
std::vector<Rat> copy_scores(const CutSystem& cuts, const DIntervalHypergraph& h,
                             PredicateMode mode) {
  const int d = cuts.d(), n = cuts.n(), m = h.edge_count();
  std::vector<Rat> score(static_cast<std::size_t>(d) * static_cast<std::size_t>(n) *
                         static_cast<std::size_t>(m));
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < n; ++j) {
      Rat lo = cuts.boundary(i + 1, j), hi = cuts.boundary(i + 1, j + 1);
      Rat neg_len = lo - hi;
      std::size_t base = (static_cast<std::size_t>(i) * static_cast<std::size_t>(n) +
                          static_cast<std::size_t>(j)) *
                         static_cast<std::size_t>(m);
      for (int e = 0; e < m; ++e) {
        const Interval& iv = h.edge(e).part(i + 1);
        if (mode == PredicateMode::ContainedIn) {
          Rat gap = std::min(Rat(lo - iv.lo), Rat(iv.hi - hi));
          score[base + static_cast<std::size_t>(e)] = std::min(Rat(0), std::max(gap, neg_len));
        } else {
          Rat left = (j == 0) ? Rat(1) : Rat(iv.lo - lo);
          Rat right = (j == n - 1) ? Rat(1) : Rat(hi - iv.hi);
          score[base + static_cast<std::size_t>(e)] = std::min(left, right);
        }
      }
    }
  return score;
}

// max over edges of min over copies of the precomputed scores, with the
// same early exits as the per-cell functions.
Rat cell_maximin(const std::vector<Rat>& score, const DCellIndex& jvec, int d, int n, int m,
                 const Rat& top, const Rat& edge_start) {
  Rat best = -1;
  for (int e = 0; e < m; ++e) {
    Rat val = edge_start;
    for (int i = 0; i < d && val > best; ++i) {
      const Rat& q = score[(static_cast<std::size_t>(i) * static_cast<std::size_t>(n) +
                            static_cast<std::size_t>(jvec.j[static_cast<std::size_t>(i)] - 1)) *
                               static_cast<std::size_t>(m) +
                           static_cast<std::size_t>(e)];
      if (q < val) val = q;
    }
    if (val > best) best = val;
    if (best >= top) break;
  }
  return best;
}

}  // namespace

LayerArray s_array(const ProductPoint& x, const DIntervalHypergraph& h) {
  LayerArray a;
  a.d = x.d();
  a.n = x.n();
  long cells = checked_cell_count(a.d, a.n);
  CutSystem cuts = cuts_from_point(x);
  a.entries.resize(static_cast<std::size_t>(cells));
  const int m = h.edge_count();
  std::vector<Rat> score = copy_scores(cuts, h, PredicateMode::Contains);
  for (long f = 0; f < cells; ++f) {
    Rat best = cell_maximin(score, dcell_from_flat(f, a.d, a.n), a.d, a.n, m, Rat(1), Rat(2));
    a.entries[static_cast<std::size_t>(f)] = std::max(best, Rat(0));
  }
  return a;
}

LayerArray t_array(const ProductPoint& x, const DIntervalHypergraph& h, const Rat& epsilon) {
  if (epsilon <= 0) throw std::invalid_argument("epsilon must be positive");
  LayerArray a;
  a.d = x.d();
  a.n = x.n();
  a.epsilon = epsilon;
  long cells = checked_cell_count(a.d, a.n);
  CutSystem cuts = cuts_from_point(x);
  a.entries.resize(static_cast<std::size_t>(cells));
  const int m = h.edge_count();
  if (m == 0) {
    for (auto& entry : a.entries) entry = 0;
    return a;
  }
  std::vector<Rat> score = copy_scores(cuts, h, PredicateMode::ContainedIn);
  for (long f = 0; f < cells; ++f) {
    Rat mu = cell_maximin(score, dcell_from_flat(f, a.d, a.n), a.d, a.n, m, Rat(0), Rat(0));
    Rat v = 1 + mu / epsilon;
    a.entries[static_cast<std::size_t>(f)] = std::min(std::max(v, Rat(0)), Rat(1));
  }
  return a;
}

LayerArray mode_array(const ProductPoint& x, const DIntervalHypergraph& h, PredicateMode mode,
                      const Rat& epsilon) {
  return mode == PredicateMode::Contains ? s_array(x, h) : t_array(x, h, epsilon);
}

LayerSums layer_sums(const LayerArray& a) {
  LayerSums s;
  s.d = a.d;
  s.n = a.n;
  s.sums.assign(static_cast<std::size_t>(a.d) * static_cast<std::size_t>(a.n), Rat(0));
  long cells = static_cast<long>(a.entries.size());
  for (long f = 0; f < cells; ++f) {
    DCellIndex jv = dcell_from_flat(f, a.d, a.n);
    for (int i = 1; i <= a.d; ++i)
      s.sums[static_cast<std::size_t>((i - 1) * a.n + jv.j[static_cast<std::size_t>(i - 1)] - 1)] +=
          a.entries[static_cast<std::size_t>(f)];
  }
  return s;
}

}  // namespace dihg
