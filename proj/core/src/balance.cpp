#include "dihg/balance.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <limits>
#include <random>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "dihg/limits.hpp"

namespace dihg {

namespace {

double clampd(double v, double lo, double hi) { return std::min(std::max(v, lo), hi); }

// Double-precision mirror of the margin arrays, used only to steer the
// search; every accepted point is re-verified with exact arithmetic.
struct NumericEval {
  int d, n, m;
  long cells;
  PredicateMode mode;
  double eps;
  std::vector<double> lo, hi;            // [i * m + e], copies 0-based here
  std::vector<std::vector<int>> coord;   // [flat][i] = 0-based cell index

  NumericEval(const DIntervalHypergraph& h, int n_, PredicateMode mode_, double eps_)
      : d(h.d()),
        n(n_),
        m(h.edge_count()),
        cells(dcell_count(h.d(), n_)),
        mode(mode_),
        eps(eps_) {
    if (cells > 1000000) throw ScaleGuardError("balanced-point search supports at most 10^6 d-cells");
    lo.resize(static_cast<std::size_t>(d) * static_cast<std::size_t>(m));
    hi.resize(lo.size());
    for (int i = 0; i < d; ++i)
      for (int e = 0; e < m; ++e) {
        const Interval& iv = h.edge(e).part(i + 1);
        lo[static_cast<std::size_t>(i * m + e)] = rat_double(iv.lo);
        hi[static_cast<std::size_t>(i * m + e)] = rat_double(iv.hi);
      }
    coord.resize(static_cast<std::size_t>(cells));
    for (long f = 0; f < cells; ++f) {
      DCellIndex jv = dcell_from_flat(f, d, n);
      coord[static_cast<std::size_t>(f)].resize(static_cast<std::size_t>(d));
      for (int i = 0; i < d; ++i)
        coord[static_cast<std::size_t>(f)][static_cast<std::size_t>(i)] =
            jv.j[static_cast<std::size_t>(i)] - 1;
    }
  }

  struct Workspace {
    std::vector<double> score;  // [(e * d + i) * n + j]
    std::vector<double> cut;    // [i * (n + 1) + t]
  };

  Workspace make_workspace() const {
    Workspace w;
    w.score.resize(static_cast<std::size_t>(m) * static_cast<std::size_t>(d) *
                   static_cast<std::size_t>(n));
    w.cut.resize(static_cast<std::size_t>(d) * static_cast<std::size_t>(n + 1));
    return w;
  }

  // x holds d*n cell lengths row-major; fills the d*n layer sums and returns
  // the imbalance objective (sum of squared deviations from per-copy means).
  double evaluate(const std::vector<double>& x, std::vector<double>& sums, Workspace& w) const {
    for (int i = 0; i < d; ++i) {
      double running = 0;
      w.cut[static_cast<std::size_t>(i * (n + 1))] = 0;
      for (int t = 1; t < n; ++t) {
        running += x[static_cast<std::size_t>(i * n + t - 1)];
        w.cut[static_cast<std::size_t>(i * (n + 1) + t)] = clampd(running, 0.0, 1.0);
      }
      w.cut[static_cast<std::size_t>(i * (n + 1) + n)] = 1.0;
    }
    for (int e = 0; e < m; ++e)
      for (int i = 0; i < d; ++i) {
        double a = lo[static_cast<std::size_t>(i * m + e)], b = hi[static_cast<std::size_t>(i * m + e)];
        std::size_t base = static_cast<std::size_t>((e * d + i) * n);
        const double* c = &w.cut[static_cast<std::size_t>(i * (n + 1))];
        for (int j = 0; j < n; ++j) {
          double cl = c[j], cr = c[j + 1];
          double v;
          if (mode == PredicateMode::ContainedIn) {
            v = std::min(0.0, std::max(std::min(cl - a, b - cr), cl - cr));
          } else {
            double left = (j == 0) ? 1.0 : a - cl;
            double right = (j == n - 1) ? 1.0 : cr - b;
            v = std::min(left, right);
          }
          w.score[base + static_cast<std::size_t>(j)] = v;
        }
      }
    std::fill(sums.begin(), sums.end(), 0.0);
    for (long f = 0; f < cells; ++f) {
      const int* jf = coord[static_cast<std::size_t>(f)].data();
      double v = -2.0;
      for (int e = 0; e < m; ++e) {
        const double* base = &w.score[static_cast<std::size_t>(e * d) * static_cast<std::size_t>(n)];
        double mn = 2.0;
        for (int i = 0; i < d; ++i) mn = std::min(mn, base[i * n + jf[i]]);
        v = std::max(v, mn);
      }
      double entry = m == 0                             ? 0.0
                     : mode == PredicateMode::ContainedIn ? clampd(1.0 + v / eps, 0.0, 1.0)
                                                          : std::max(v, 0.0);
      if (entry > 0)
        for (int i = 0; i < d; ++i) sums[static_cast<std::size_t>(i * n + jf[i])] += entry;
    }
    double phi = 0;
    for (int i = 0; i < d; ++i) {
      double mean = 0;
      for (int j = 0; j < n; ++j) mean += sums[static_cast<std::size_t>(i * n + j)];
      mean /= n;
      for (int j = 0; j < n; ++j) {
        double dev = sums[static_cast<std::size_t>(i * n + j)] - mean;
        phi += dev * dev;
      }
    }
    return phi;
  }

  static double spread_of(const std::vector<double>& sums, int d, int n) {
    double worst = 0;
    for (int i = 0; i < d; ++i) {
      double lo = sums[static_cast<std::size_t>(i * n)], hi = lo;
      for (int j = 1; j < n; ++j) {
        lo = std::min(lo, sums[static_cast<std::size_t>(i * n + j)]);
        hi = std::max(hi, sums[static_cast<std::size_t>(i * n + j)]);
      }
      worst = std::max(worst, hi - lo);
    }
    return worst;
  }
};

struct StartResult {
  bool accepted = false;    // exact spread <= tol with positive total
  bool degenerate = false;  // exact all-zero array: the premise fails at x
  ProductPoint x = ProductPoint::uniform(1, 1);
  Rat spread;
  Rat total;
  LayerSums sums;
  int iterations = 0;
};

// Exact layer sums of one snapped candidate, shared across starts: different
// starts (and the denominator ladder within one snap) often reach identical
// snapped cuts, and the exact evaluation is the expensive step.
struct ExactEval {
  ProductPoint x = ProductPoint::uniform(1, 1);
  LayerSums sums;
  Rat spread, total;
};

struct EvalCache {
  std::mutex lock;
  std::map<std::vector<Rat>, std::shared_ptr<const ExactEval>> entries;

  std::shared_ptr<const ExactEval> find(const std::vector<Rat>& key) {
    std::lock_guard<std::mutex> guard(lock);
    auto it = entries.find(key);
    return it == entries.end() ? nullptr : it->second;
  }
  void store(const std::vector<Rat>& key, std::shared_ptr<const ExactEval> value) {
    std::lock_guard<std::mutex> guard(lock);
    entries.emplace(key, std::move(value));
  }
};

std::vector<unsigned long> snap_denominators(unsigned long cap) {
  std::vector<unsigned long> dens;
  for (unsigned long d : {8ul, 16ul, 32ul, 64ul, 128ul, 256ul, 1024ul, 4096ul, 16384ul, 65536ul})
    if (d < cap) dens.push_back(d);
  dens.push_back(cap);
  return dens;
}

// Snaps the cuts to each candidate denominator and verifies the layer sums
// exactly, keeping the best exact spread. With numeric_filter, candidates
// whose double-precision spread is clearly hopeless are skipped before any
// exact work (acceptance itself stays exact-only).
StartResult snap_point(const DIntervalHypergraph& h, const NumericEval& ev, PredicateMode mode,
                       const Rat& eps_exact, const Rat& tol_exact, const SearchParams& params,
                       const std::vector<double>& cuts, bool numeric_filter, EvalCache& cache) {
  const int d = ev.d, n = ev.n;
  StartResult out;
  bool have_candidate = false;
  std::vector<double> xs;
  std::vector<double> fsums;
  NumericEval::Workspace fws;
  if (numeric_filter) {
    xs.resize(static_cast<std::size_t>(d) * static_cast<std::size_t>(n));
    fsums.resize(xs.size());
    fws = ev.make_workspace();
  }
  std::vector<Rat> key;
  for (unsigned long den : snap_denominators(params.snap_denominator)) {
    std::vector<std::vector<Rat>> rows(static_cast<std::size_t>(d));
    bool ok = true;
    for (int i = 0; i < d && ok; ++i) {
      Rat prev = 0;
      rows[static_cast<std::size_t>(i)].resize(static_cast<std::size_t>(n - 1));
      for (int t = 1; t < n && ok; ++t) {
        auto r = rationalize(cuts[static_cast<std::size_t>(i * (n + 1) + t)], den);
        if (!r) {
          ok = false;
          break;
        }
        Rat c = std::min(std::max(*r, prev), Rat(1));
        rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(t - 1)] = c;
        prev = c;
      }
    }
    if (!ok) continue;
    CutSystem snapped = CutSystem::create(d, n, rows);
    // The filter runs before the cache so that a start's decisions never
    // depend on what other starts have already evaluated.
    if (numeric_filter) {
      for (int i = 0; i < d; ++i) {
        Rat prev = 0;
        for (int j = 1; j <= n; ++j) {
          Rat b = snapped.boundary(i + 1, j);
          xs[static_cast<std::size_t>(i * n + j - 1)] = rat_double(Rat(b - prev));
          prev = b;
        }
      }
      ev.evaluate(xs, fsums, fws);
      if (NumericEval::spread_of(fsums, d, n) > std::max(10.0 * params.tol, 1e-12)) continue;
    }
    key.clear();
    for (const auto& row : rows) key.insert(key.end(), row.begin(), row.end());
    std::shared_ptr<const ExactEval> eval = cache.find(key);
    if (!eval) {
      auto fresh = std::make_shared<ExactEval>();
      fresh->x = point_from_cuts(snapped);
      fresh->sums = layer_sums(mode_array(fresh->x, h, mode, eps_exact));
      fresh->spread = fresh->sums.spread();
      fresh->total = fresh->sums.total();
      cache.store(key, fresh);
      eval = std::move(fresh);
    }
    if (eval->total == 0) {
      // Exact all-zero array: this partition refutes the premise.
      out.degenerate = true;
      out.x = eval->x;
      out.sums = eval->sums;
      out.spread = eval->spread;
      out.total = eval->total;
      return out;
    }
    if (!have_candidate || eval->spread < out.spread) {
      have_candidate = true;
      out.x = eval->x;
      out.sums = eval->sums;
      out.spread = eval->spread;
      out.total = eval->total;
    }
    if (eval->spread <= tol_exact) {
      out.accepted = true;
      break;
    }
  }
  return out;
}

StartResult run_start(const DIntervalHypergraph& h, const NumericEval& ev, PredicateMode mode,
                      const Rat& eps_exact, const Rat& tol_exact, const SearchParams& params,
                      int start_index, EvalCache& cache) {
  const int d = ev.d, n = ev.n;
  std::vector<double> x(static_cast<std::size_t>(d) * static_cast<std::size_t>(n));
  if (start_index == 0) {
    std::fill(x.begin(), x.end(), 1.0 / n);
  } else {
    std::mt19937_64 rng(params.seed * 1000003ull + static_cast<unsigned long>(start_index));
    std::exponential_distribution<double> draw(1.0);
    for (int i = 0; i < d; ++i) {
      double total = 0;
      for (int j = 0; j < n; ++j) {
        double v = draw(rng) + 1e-9;
        x[static_cast<std::size_t>(i * n + j)] = v;
        total += v;
      }
      for (int j = 0; j < n; ++j) x[static_cast<std::size_t>(i * n + j)] /= total;
    }
  }

  NumericEval::Workspace ws = ev.make_workspace();
  std::vector<double> sums(x.size()), trial_sums(x.size()), xt(x.size());
  double phi = ev.evaluate(x, sums, ws);
  const double dir = mode == PredicateMode::ContainedIn ? 1.0 : -1.0;
  double eta = 0.5;
  double phi_mark = std::numeric_limits<double>::infinity();
  int it = 0, stalled = 0;
  for (; it < params.max_iters; ++it) {
    if (NumericEval::spread_of(sums, d, n) <= 0.25 * params.tol) break;
    if (it % 512 == 0) {
      // Periodic snap attempt: many instances balance exactly at
      // small-denominator cuts long before the numeric residual shrinks.
      ev.evaluate(x, sums, ws);
      StartResult early =
          snap_point(h, ev, mode, eps_exact, tol_exact, params, ws.cut, true, cache);
      if (early.accepted || early.degenerate) {
        early.iterations = it;
        return early;
      }
      if (phi > 0.98 * phi_mark) break;  // descent has stagnated
      phi_mark = phi;
    }
    int i = it % d;
    double mean = 0, scale = 1e-12;
    for (int j = 0; j < n; ++j) {
      mean += sums[static_cast<std::size_t>(i * n + j)];
      scale = std::max(scale, std::abs(sums[static_cast<std::size_t>(i * n + j)]));
    }
    mean /= n;
    xt = x;
    double total = 0;
    for (int j = 0; j < n; ++j) {
      double w = std::max(x[static_cast<std::size_t>(i * n + j)], 1e-15) *
                 std::exp(dir * eta * (sums[static_cast<std::size_t>(i * n + j)] - mean) / scale);
      xt[static_cast<std::size_t>(i * n + j)] = w;
      total += w;
    }
    for (int j = 0; j < n; ++j) xt[static_cast<std::size_t>(i * n + j)] /= total;
    double trial_phi = ev.evaluate(xt, trial_sums, ws);
    if (trial_phi < phi) {
      x.swap(xt);
      sums.swap(trial_sums);
      phi = trial_phi;
      eta = std::min(eta * 1.3, 32.0);
      stalled = 0;
    } else {
      eta = std::max(eta * 0.5, 1e-7);
      if (++stalled > 60 * d) break;
    }
  }

  // Final snap: exhaustive over the denominator ladder, exact verification
  // for every candidate (no numeric pre-filter).
  ev.evaluate(x, sums, ws);
  StartResult out = snap_point(h, ev, mode, eps_exact, tol_exact, params, ws.cut, false, cache);
  out.iterations = it;
  return out;
}

int worker_count(const SearchParams& params) {
  if (params.threads > 0) return params.threads;
  unsigned hc = std::thread::hardware_concurrency();
  return hc == 0 ? 4 : static_cast<int>(std::min(hc, 16u));
}

}  // namespace

BalancedPoint balanced_point_search(const DIntervalHypergraph& h, int n, PredicateMode mode,
                                    const Rat& epsilon, const SearchParams& params) {
  if (n < 1) throw std::invalid_argument("partition arity n must be at least 1");
  if (mode == PredicateMode::ContainedIn && epsilon <= 0)
    throw std::invalid_argument("epsilon must be positive");
  NumericEval ev(h, n, mode, mode == PredicateMode::ContainedIn ? rat_double(epsilon) : 1.0);
  Rat tol_exact = rationalize(params.tol, 1000000000000ul).value_or(make_rat(1, 1000000000));
  if (tol_exact < 0) tol_exact = -tol_exact;

  const int starts = std::max(params.starts, 1);
  std::vector<StartResult> results(static_cast<std::size_t>(starts));
  const int workers = worker_count(params);
  EvalCache cache;
  if (workers <= 1) {
    for (int s = 0; s < starts; ++s)
      results[static_cast<std::size_t>(s)] =
          run_start(h, ev, mode, epsilon, tol_exact, params, s, cache);
  } else {
    for (int base = 0; base < starts; base += workers) {
      std::vector<std::future<StartResult>> batch;
      for (int s = base; s < std::min(base + workers, starts); ++s)
        batch.push_back(std::async(std::launch::async, [&, s] {
          return run_start(h, ev, mode, epsilon, tol_exact, params, s, cache);
        }));
      for (int s = base; s < std::min(base + workers, starts); ++s)
        results[static_cast<std::size_t>(s)] = batch[static_cast<std::size_t>(s - base)].get();
    }
  }

  for (const StartResult& r : results)
    if (r.degenerate)
      throw std::invalid_argument(
          "the margin array vanishes identically at an exact partition, so the premise fails; "
          "run premise_check for the counterexample");

  const StartResult* winner = nullptr;
  for (const StartResult& r : results) {
    if (!r.accepted) continue;
    if (!winner || r.x.coords() < winner->x.coords()) winner = &r;
  }
  bool converged = winner != nullptr;
  if (!winner) {
    for (const StartResult& r : results) {
      if (r.total == 0 && r.spread == 0) continue;  // nothing snapped at all
      if (!winner || r.spread < winner->spread ||
          (r.spread == winner->spread && r.x.coords() < winner->x.coords()))
        winner = &r;
    }
  }
  if (!winner)
    throw std::runtime_error("balanced-point search produced no verifiable point");

  BalancedPoint out;
  out.x = winner->x;
  out.mode = mode;
  if (mode == PredicateMode::ContainedIn) out.epsilon = epsilon;
  out.spread = winner->spread;
  out.common_value = winner->total / n;
  out.sums = winner->sums;
  out.converged = converged;
  out.iterations = winner->iterations;
  return out;
}

EpsilonLoopResult epsilon_loop(const DIntervalHypergraph& h, int n, const CoverCallback& callback,
                               const SearchParams& params) {
  EpsilonLoopResult res;
  Rat eps = params.epsilon0;
  for (int k = 0; k <= params.k_max; ++k, eps /= 2) {
    EpsilonLevel level;
    level.k = k;
    level.epsilon = eps;
    level.point = balanced_point_search(h, n, PredicateMode::ContainedIn, eps, params);
    level.cover = callback(level.point);
    level.mu_ok = !level.cover.empty();
    CutSystem cuts = cuts_from_point(level.point.x);
    for (long f : level.cover) {
      Rat mu = mu_value(cuts, dcell_from_flat(f, h.d(), n), h);
      if (mu < -eps) {
        level.mu_ok = false;
        break;
      }
    }
    res.levels.push_back(level);
    std::size_t L = res.levels.size();
    if (L >= 2 && res.levels[L - 1].mu_ok && res.levels[L - 2].mu_ok &&
        res.levels[L - 1].cover == res.levels[L - 2].cover) {
      res.stabilized = true;
      res.cover = level.cover;
      res.point = level.point;
      break;
    }
  }
  return res;
}

}  // namespace dihg
