#include "dihg/pipelines.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>

#include "dihg/gamma.hpp"
#include "dihg/invariants.hpp"
#include "dihg/limits.hpp"
#include "dihg/margins.hpp"
#include "dihg/predicates.hpp"
#include "dihg/rounding.hpp"

namespace dihg {

namespace {

Rat matching_bound(int d, int n) {
  if (d <= 1) return Rat(n);
  return Rat((n + d - 2) / (d - 1));  // ceil(n/(d-1))
}

// Largest integer strictly below 7n/4.
Rat pfm_bound(int n) { return Rat(rat_ceil(make_rat(7l * n, 4)) - 1); }

Rat general_cover_bound(int d, int n) {
  if (d <= 2) return Rat(n);
  long double v = (1.0L + std::log(static_cast<long double>(d))) * n;
  return Rat(static_cast<long>(std::floor(v)));
}

// Strongest size bound the theory promises for an exact minimum cover.
Rat oracle_cover_bound(int d, int n) {
  Rat general = general_cover_bound(d, n);
  if (d == 3) return std::min(general, pfm_bound(n));
  return general;
}

std::string premise_message(const char* which, const char* shape, const PremiseResult& pre) {
  std::string msg = std::string(which) + " premise fails: some partition has " + shape;
  if (pre.counterexample) {
    const CutSystem& cs = *pre.counterexample;
    msg += "; counterexample cuts:";
    for (int i = 1; i <= cs.d(); ++i) {
      msg += " copy " + std::to_string(i) + " (";
      for (int t = 1; t <= cs.n() - 1; ++t) msg += (t > 1 ? " " : "") + rat_str(cs.cut(i, t));
      msg += ")";
    }
  }
  return msg;
}

// Worst per-copy containment slack of the d-cell inside edge e (the inner
// term of mu_value; 0 exactly when every cell of the d-cell fits in e).
Rat flat_slack(const CutSystem& cuts, const DCellIndex& jvec, const DEdge& e) {
  Rat worst(1);
  for (int i = 1; i <= cuts.d(); ++i) {
    CellBounds cell = cuts.cell(i, jvec.j[static_cast<std::size_t>(i - 1)]);
    const Interval& iv = e.part(i);
    Rat gap = std::min(Rat(cell.lo - iv.lo), Rat(iv.hi - cell.hi));
    Rat q = std::min(Rat(0), std::max(gap, Rat(cell.lo - cell.hi)));
    if (q < worst) worst = q;
  }
  return worst;
}

// Edge with the best slack against the d-cell, lowest id on ties.
int slack_witness(const CutSystem& cuts, const DCellIndex& jvec, const DIntervalHypergraph& h) {
  int best = -1;
  Rat best_q;
  for (const DEdge& e : h.edges()) {
    Rat q = flat_slack(cuts, jvec, e);
    if (best < 0 || q > best_q) {
      best = e.id;
      best_q = q;
    }
  }
  return best;
}

struct RoundedCover {
  std::vector<long> flats;
  bool pfm = false;
};

// Rounds the auxiliary hypergraph of a balanced point to an integral d-cell
// cover: exact bipartite edge cover for d = 2, the three-step cover from a
// perfect fractional matching for d = 3 when one exists, greedy otherwise.
RoundedCover round_gamma_cover(const DIntervalHypergraph& h, int n, const BalancedPoint& bp) {
  RoundedCover out;
  Rat eps = bp.epsilon.value_or(make_rat(1, 8));
  GammaResult gr = build_gamma(bp.x, h, n, PredicateMode::ContainedIn, eps, bp.spread);
  std::vector<int> chosen;
  const int d = h.d();
  if (d == 2) {
    chosen = bipartite_min_edge_cover(gr.gamma);
  } else if (d == 3) {
    std::optional<std::vector<Rat>> pfm;
    if (bp.spread == 0)
      pfm = gr.gamma.weights;
    else
      pfm = perfect_fractional_matching(gr.gamma);
    if (pfm) {
      chosen = pfm_cover_3partite(gr.gamma, *pfm);
      out.pfm = true;
    } else {
      chosen = greedy_edge_cover(gr.gamma);
    }
  } else {
    chosen = greedy_edge_cover(gr.gamma);
  }
  out.flats.reserve(chosen.size());
  for (int e : chosen) out.flats.push_back(gr.flat_of_edge[static_cast<std::size_t>(e)]);
  std::sort(out.flats.begin(), out.flats.end());
  return out;
}

struct Exactified {
  std::optional<CutSystem> cuts;
  std::vector<std::pair<DCellIndex, int>> chosen;
};

// Anchors the chosen d-cells on exactly feasible cuts. Witnesses are picked
// by best slack at the numeric point; if containment is not already exact,
// each cut is moved to the smallest value meeting every witness's left end
// (c_t = max(c_{t-1}, max over witnesses of cell t+1 of their left ends)).
// Leaves cuts empty when even the moved partition fails exact verification.
Exactified exactify_cover(const DIntervalHypergraph& h, int n, const CutSystem& cuts0,
                          const std::vector<long>& flats) {
  const int d = h.d();
  Exactified out;
  std::vector<std::pair<DCellIndex, int>> chosen;
  chosen.reserve(flats.size());
  bool exact_already = true;
  for (long f : flats) {
    DCellIndex jv = dcell_from_flat(f, d, n);
    int w = slack_witness(cuts0, jv, h);
    if (w < 0) return out;
    if (flat_slack(cuts0, jv, h.edge(w)) != 0) exact_already = false;
    chosen.emplace_back(std::move(jv), w);
  }
  if (exact_already) {
    out.cuts = cuts0;
    out.chosen = std::move(chosen);
    return out;
  }

  std::vector<std::vector<Rat>> lo(static_cast<std::size_t>(d),
                                   std::vector<Rat>(static_cast<std::size_t>(n), Rat(0)));
  for (const auto& [jv, w] : chosen)
    for (int i = 1; i <= d; ++i) {
      Rat& left = lo[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(jv.j[static_cast<std::size_t>(i - 1)] - 1)];
      const Rat& a = h.edge(w).part(i).lo;
      if (a > left) left = a;
    }
  std::vector<std::vector<Rat>> cc(static_cast<std::size_t>(d));
  for (int i = 1; i <= d; ++i) {
    std::vector<Rat>& row = cc[static_cast<std::size_t>(i - 1)];
    row.resize(static_cast<std::size_t>(n - 1));
    Rat prev(0);
    for (int t = 1; t <= n - 1; ++t) {
      Rat c = std::max(prev, lo[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(t)]);
      row[static_cast<std::size_t>(t - 1)] = c;
      prev = c;
    }
  }
  CutSystem cuts = CutSystem::create(d, n, std::move(cc));
  for (const auto& [jv, w] : chosen)
    if (!dcell_predicate_edge(cuts, jv, h.edge(w), PredicateMode::ContainedIn)) return out;
  out.cuts = std::move(cuts);
  out.chosen = std::move(chosen);
  return out;
}

CoverCertificate assemble_cover(const DIntervalHypergraph& h, int n, PipelinePath path, bool pfm,
                                CutSystem cuts, std::vector<std::pair<DCellIndex, int>> chosen) {
  const int d = h.d();
  CoverCertificate cert;
  cert.kind = CertificateKind::Cover;
  cert.path = path;
  cert.pfm_branch = pfm;
  cert.cell_edges.assign(static_cast<std::size_t>(d), std::vector<int>(static_cast<std::size_t>(n), -1));
  for (const auto& [jv, w] : chosen)
    for (int i = 1; i <= d; ++i) {
      int& slot = cert.cell_edges[static_cast<std::size_t>(i - 1)]
                                 [static_cast<std::size_t>(jv.j[static_cast<std::size_t>(i - 1)] - 1)];
      if (slot < 0 || w < slot) slot = w;
    }
  std::set<int> ids;
  for (const auto& row : cert.cell_edges)
    for (int w : row) {
      if (w < 0) throw std::logic_error("rounded d-cell cover misses a cell");
      ids.insert(w);
    }
  for (const auto& [jv, w] : chosen) ids.insert(w);
  cert.h0.assign(ids.begin(), ids.end());
  cert.partition = std::move(cuts);
  cert.chosen = std::move(chosen);
  return cert;
}

bool edges_disjoint(const DEdge& a, const DEdge& b, int d) {
  for (int i = 1; i <= d; ++i) {
    const Interval& u = a.part(i);
    const Interval& v = b.part(i);
    if (!(u.hi < v.lo || v.hi < u.lo)) return false;
  }
  return true;
}

bool valid_dcell(const DCellIndex& jv, int d, int n) {
  if (static_cast<int>(jv.j.size()) != d) return false;
  for (int j : jv.j)
    if (j < 1 || j > n) return false;
  return true;
}

}  // namespace

CoverCertificate matching_pipeline(const DIntervalHypergraph& h, int n, const SearchParams& params) {
  PremiseResult pre = premise_check(h, n, PredicateMode::Contains);
  if (!pre.holds)
    throw std::invalid_argument(
        premise_message("matching", "no d-cell strictly containing an edge", pre));
  const int d = h.d();
  const Rat bound = matching_bound(d, n);

  std::optional<CoverCertificate> numeric;
  try {
    BalancedPoint bp = balanced_point_search(h, n, PredicateMode::Contains, params.epsilon0, params);
    if (bp.converged) {
      GammaResult gr = build_gamma(bp.x, h, n, PredicateMode::Contains, params.epsilon0, bp.spread);
      std::vector<int> match = max_matching(gr.gamma);
      if (Rat(static_cast<long>(match.size())) >= bound) {
        CutSystem cuts = cuts_from_point(bp.x);
        CoverCertificate cert;
        cert.kind = CertificateKind::Matching;
        cert.path = PipelinePath::Numeric;
        bool ok = true;
        for (int ge : match) {
          DCellIndex jv = dcell_from_flat(gr.flat_of_edge[static_cast<std::size_t>(ge)], d, n);
          std::optional<int> w = dcell_predicate(cuts, jv, h, PredicateMode::Contains);
          if (!w) {
            ok = false;
            break;
          }
          cert.chosen.emplace_back(std::move(jv), *w);
        }
        if (ok) {
          std::set<int> ids;
          for (const auto& p : cert.chosen) ids.insert(p.second);
          cert.h0.assign(ids.begin(), ids.end());
          cert.partition = std::move(cuts);
          cert.bound_claimed = bound;
          if (verify_certificate(h, n, cert)) numeric = std::move(cert);
        }
      }
    }
  } catch (const ScaleGuardError&) {
    throw;
  } catch (const std::invalid_argument&) {
  } catch (const std::runtime_error&) {
  }
  if (numeric) return *numeric;

  std::optional<PartitionCertificate> pc =
      exhaustive_partition_search(h, n, PredicateMode::Contains, false);
  if (!pc || Rat(static_cast<long>(pc->dcell_witness.size())) < bound)
    throw std::logic_error(
        "matching bound unreachable: the exhaustive maximum over all partitions is below "
        "ceil(n/(d-1)) although the premise holds");
  CoverCertificate cert;
  cert.kind = CertificateKind::Matching;
  cert.path = PipelinePath::Oracle;
  cert.partition = pc->cuts;
  cert.chosen = pc->dcell_witness;
  cert.h0 = pc->used_edges;
  cert.bound_claimed = bound;
  if (!verify_certificate(h, n, cert))
    throw std::logic_error("oracle matching certificate failed exact re-verification");
  return cert;
}

CoverCertificate cover_pipeline(const DIntervalHypergraph& h, int n, const SearchParams& params) {
  PremiseResult pre = premise_check(h, n, PredicateMode::ContainedIn);
  if (!pre.holds)
    throw std::invalid_argument(
        premise_message("cover", "no edge containing one cell from every copy", pre));
  const int d = h.d();

  std::optional<CoverCertificate> numeric;
  try {
    bool last_pfm = false;
    CoverCallback cb = [&](const BalancedPoint& bp) -> std::vector<long> {
      try {
        RoundedCover rc = round_gamma_cover(h, n, bp);
        last_pfm = rc.pfm;
        return rc.flats;
      } catch (const ScaleGuardError&) {
        throw;
      } catch (const std::invalid_argument&) {
        return {};
      }
    };
    EpsilonLoopResult loop = epsilon_loop(h, n, cb, params);
    if (loop.stabilized && loop.point) {
      CutSystem cuts0 = cuts_from_point(loop.point->x);
      Exactified ex = exactify_cover(h, n, cuts0, loop.cover);
      if (ex.cuts) {
        PipelinePath path =
            (*ex.cuts == cuts0) ? PipelinePath::Numeric : PipelinePath::Exactified;
        CoverCertificate cert =
            assemble_cover(h, n, path, last_pfm, std::move(*ex.cuts), std::move(ex.chosen));
        cert.bound_claimed = cert.pfm_branch ? pfm_bound(n) : general_cover_bound(d, n);
        if (Rat(static_cast<long>(cert.h0.size())) <= cert.bound_claimed &&
            verify_certificate(h, n, cert))
          numeric = std::move(cert);
      }
    }
  } catch (const ScaleGuardError&) {
    throw;
  } catch (const std::invalid_argument&) {
  } catch (const std::runtime_error&) {
  }
  if (numeric) return *numeric;

  std::optional<PartitionCertificate> pc =
      exhaustive_partition_search(h, n, PredicateMode::ContainedIn, true);
  if (!pc)
    throw std::logic_error(
        "no partition with every cell contained in an edge exists although the premise holds");
  CoverCertificate cert;
  cert.kind = CertificateKind::Cover;
  cert.path = PipelinePath::Oracle;
  cert.partition = pc->cuts;
  cert.cell_edges = pc->cell_edges;
  cert.chosen = pc->dcell_witness;
  cert.h0 = pc->used_edges;
  cert.bound_claimed = oracle_cover_bound(d, n);
  if (Rat(static_cast<long>(cert.h0.size())) > cert.bound_claimed)
    throw std::logic_error("exact minimum cover exceeds the theoretical bound");
  if (!verify_certificate(h, n, cert))
    throw std::logic_error("oracle cover certificate failed exact re-verification");
  return cert;
}

bool verify_certificate(const DIntervalHypergraph& h, int n, const CoverCertificate& cert) {
  const int d = h.d();
  const CutSystem& cuts = cert.partition;
  if (cuts.d() != d || cuts.n() != n || n < 1) return false;
  for (std::size_t k = 0; k < cert.h0.size(); ++k) {
    if (cert.h0[k] < 0 || cert.h0[k] >= h.edge_count()) return false;
    if (k > 0 && cert.h0[k] <= cert.h0[k - 1]) return false;
  }

  if (cert.kind == CertificateKind::Matching) {
    if (cert.chosen.empty()) return false;
    for (int i = 0; i < d; ++i) {
      std::set<int> seen;
      for (const auto& [jv, w] : cert.chosen) {
        if (!valid_dcell(jv, d, n)) return false;
        if (!seen.insert(jv.j[static_cast<std::size_t>(i)]).second) return false;
      }
    }
    std::set<int> ids;
    for (const auto& [jv, w] : cert.chosen) {
      if (w < 0 || w >= h.edge_count()) return false;
      if (!dcell_predicate_edge(cuts, jv, h.edge(w), PredicateMode::Contains)) return false;
      ids.insert(w);
    }
    for (std::size_t a = 0; a < cert.chosen.size(); ++a)
      for (std::size_t b = a + 1; b < cert.chosen.size(); ++b)
        if (!edges_disjoint(h.edge(cert.chosen[a].second), h.edge(cert.chosen[b].second), d))
          return false;
    if (std::vector<int>(ids.begin(), ids.end()) != cert.h0) return false;
    return Rat(static_cast<long>(cert.chosen.size())) >= cert.bound_claimed;
  }

  if (static_cast<int>(cert.cell_edges.size()) != d) return false;
  std::set<int> ids;
  for (int i = 1; i <= d; ++i) {
    const auto& row = cert.cell_edges[static_cast<std::size_t>(i - 1)];
    if (static_cast<int>(row.size()) != n) return false;
    for (int j = 1; j <= n; ++j) {
      int w = row[static_cast<std::size_t>(j - 1)];
      if (w < 0 || w >= h.edge_count()) return false;
      if (!cell_in_interval(cuts.cell(i, j), h.edge(w).part(i))) return false;
      ids.insert(w);
    }
  }
  for (const auto& [jv, w] : cert.chosen) {
    if (!valid_dcell(jv, d, n) || w < 0 || w >= h.edge_count()) return false;
    if (!dcell_predicate_edge(cuts, jv, h.edge(w), PredicateMode::ContainedIn)) return false;
    ids.insert(w);
  }
  if (std::vector<int>(ids.begin(), ids.end()) != cert.h0) return false;

  // Independent geometric check: per copy, the closed parts of the h0 edges
  // must sweep out all of [0,1] with no gap.
  for (int i = 1; i <= d; ++i) {
    std::vector<std::pair<Rat, Rat>> ivs;
    ivs.reserve(cert.h0.size());
    for (int w : cert.h0) ivs.emplace_back(h.edge(w).part(i).lo, h.edge(w).part(i).hi);
    std::sort(ivs.begin(), ivs.end());
    Rat reach(0);
    for (const auto& [a, b] : ivs) {
      if (a > reach) return false;
      if (b > reach) reach = b;
    }
    if (reach < 1) return false;
  }
  return Rat(static_cast<long>(cert.h0.size())) <= cert.bound_claimed;
}

}  // namespace dihg
