#include <fstream>
#include <iostream>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "dihg/balance.hpp"
#include "dihg/configurations.hpp"
#include "dihg/families.hpp"
#include "dihg/finite.hpp"
#include "dihg/geometry.hpp"
#include "dihg/invariants.hpp"
#include "dihg/json_io.hpp"
#include "dihg/limits.hpp"
#include "dihg/pipelines.hpp"
#include "dihg/rational.hpp"

#ifndef DIHG_VERSION
#define DIHG_VERSION "0.0.0"
#endif

namespace {

using nlohmann::ordered_json;

struct Options {
  std::string input;
  std::string output;
  int n = 2;
  std::string mode = "containedin";
  std::string epsilon0 = "1/8";
  std::string epsilon;  // balance only; defaults to epsilon0
  double tol = 1e-9;
  int max_iters = 100000;
  int starts = 16;
  unsigned long snap_den = 65536;
  int k_max = 12;
  unsigned long seed = 1;
  int threads = 0;
  bool minimize = false;
  dihg::SearchLimits limits;
};

dihg::PredicateMode mode_of(const Options& o) {
  return o.mode == "contains" ? dihg::PredicateMode::Contains : dihg::PredicateMode::ContainedIn;
}

dihg::SearchParams params_of(const Options& o) {
  dihg::SearchParams p;
  p.epsilon0 = dihg::parse_rat(o.epsilon0);
  p.tol = o.tol;
  p.max_iters = o.max_iters;
  p.starts = o.starts;
  p.snap_denominator = o.snap_den;
  p.k_max = o.k_max;
  p.seed = o.seed;
  p.threads = o.threads;
  return p;
}

ordered_json config_echo(const Options& o, const std::string& command) {
  ordered_json c;
  c["command"] = command;
  if (!o.input.empty()) c["input"] = o.input;
  c["n"] = o.n;
  c["mode"] = o.mode;
  c["epsilon0"] = o.epsilon0;
  c["tol"] = o.tol;
  c["max_iters"] = o.max_iters;
  c["starts"] = o.starts;
  c["snap_denominator"] = o.snap_den;
  c["k_max"] = o.k_max;
  c["seed"] = o.seed;
  c["threads"] = o.threads;
  c["limits"] = {{"max_vertices", o.limits.max_vertices},
                 {"max_edges", o.limits.max_edges},
                 {"node_budget", o.limits.node_budget},
                 {"combo_budget", o.limits.combo_budget}};
  return c;
}

ordered_json report_shell(const Options& o, const std::string& command) {
  ordered_json r;
  r["tool"] = "dihg";
  r["version"] = DIHG_VERSION;
  r["config"] = config_echo(o, command);
  return r;
}

int emit(const ordered_json& report, const Options& o, const std::string& summary, int code) {
  std::string text = report.dump(2);
  text.push_back('\n');
  if (o.output.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(o.output, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file: " + o.output);
    out << text;
  }
  std::cerr << summary << "\n";
  return code;
}

ordered_json exact_value_json(const dihg::ExactValue& v) {
  ordered_json j;
  if (v.infinite)
    j["value"] = "infinite";
  else
    j["value"] = v.value;
  j["witness"] = v.witness;
  return j;
}

ordered_json fractional_json(const dihg::FractionalValue& v) {
  ordered_json j;
  if (v.infinite) {
    j["value"] = "infinite";
  } else {
    j["value"] = dihg::rat_str(v.value);
  }
  ordered_json sup = ordered_json::array();
  for (const auto& [id, w] : v.support) sup.push_back({id, dihg::rat_str(w)});
  j["support"] = sup;
  return j;
}

ordered_json points_json(const std::vector<std::pair<int, dihg::Rat>>& pts) {
  ordered_json a = ordered_json::array();
  for (const auto& [copy, p] : pts) a.push_back({copy, dihg::rat_str(p)});
  return a;
}

ordered_json sums_json(const dihg::LayerSums& s) {
  ordered_json rows = ordered_json::array();
  for (int i = 1; i <= s.d; ++i) {
    ordered_json row = ordered_json::array();
    for (int j = 1; j <= s.n; ++j) row.push_back(dihg::rat_str(s.at(i, j)));
    rows.push_back(row);
  }
  return rows;
}

const char* path_name(dihg::PipelinePath p) {
  switch (p) {
    case dihg::PipelinePath::Numeric: return "numeric";
    case dihg::PipelinePath::Exactified: return "exactified";
    default: return "oracle";
  }
}

ordered_json certificate_json(const dihg::CoverCertificate& cert) {
  ordered_json j;
  j["kind"] = cert.kind == dihg::CertificateKind::Matching ? "matching" : "cover";
  j["path"] = path_name(cert.path);
  j["pfm_branch"] = cert.pfm_branch;
  j["partition"] = dihg::cuts_to_json(cert.partition);
  ordered_json chosen = ordered_json::array();
  for (const auto& [jv, e] : cert.chosen) chosen.push_back({{"cells", jv.j}, {"edge", e}});
  j["chosen"] = chosen;
  if (!cert.cell_edges.empty()) j["cell_edges"] = cert.cell_edges;
  j["h0"] = cert.h0;
  j["h0_size"] = cert.h0.size();
  j["bound"] = dihg::rat_str(cert.bound_claimed);
  return j;
}

ordered_json partition_certificate_json(const dihg::PartitionCertificate& pc) {
  ordered_json j;
  j["mode"] = pc.mode == dihg::PredicateMode::Contains ? "contains" : "containedin";
  j["cuts"] = dihg::cuts_to_json(pc.cuts);
  if (!pc.cell_edges.empty()) j["cell_edges"] = pc.cell_edges;
  ordered_json wit = ordered_json::array();
  for (const auto& [jv, e] : pc.dcell_witness) wit.push_back({{"cells", jv.j}, {"edge", e}});
  j["dcell_witness"] = wit;
  j["used_edges"] = pc.used_edges;
  return j;
}

ordered_json family_report_json(const dihg::FamilyReport& rep) {
  ordered_json j;
  j["family"] = rep.family;
  j["d"] = rep.d;
  j["n"] = rep.n;
  j["edge_count"] = rep.edge_count;
  ordered_json checks = ordered_json::array();
  for (const auto& c : rep.checks) checks.push_back({{"claim", c.claim}, {"ok", c.ok}});
  j["checks"] = checks;
  ordered_json vals;
  for (const auto& [k, v] : rep.values) vals[k] = v;
  j["values"] = vals;
  j["all_ok"] = rep.all_ok();
  return j;
}

int run_invariants(const Options& o) {
  dihg::DIntervalHypergraph h = dihg::load_hypergraph(o.input);
  dihg::GeometricInvariants gi = dihg::compute_invariants(h, o.limits);
  dihg::Atomization at = dihg::atomize(h);
  ordered_json rep = report_shell(o, "invariants");
  rep["d"] = h.d();
  rep["edges"] = h.edge_count();
  rep["atoms"] = at.hyper.vertex_count;
  rep["nu"] = exact_value_json(gi.nu);
  rep["tau"] = exact_value_json(gi.tau);
  rep["iota"] = exact_value_json(gi.iota);
  rep["rho"] = exact_value_json(gi.rho);
  rep["transversal_points"] = points_json(gi.transversal_points);
  rep["independent_points"] = points_json(gi.independent_points);
  rep["nu_star"] = fractional_json(dihg::lp_fractional(at.hyper, dihg::FractionalKind::NuStar));
  rep["tau_star"] = fractional_json(dihg::lp_fractional(at.hyper, dihg::FractionalKind::TauStar));
  rep["iota_star"] = fractional_json(dihg::lp_fractional(at.hyper, dihg::FractionalKind::IotaStar));
  rep["rho_star"] = fractional_json(dihg::lp_fractional(at.hyper, dihg::FractionalKind::RhoStar));
  std::string summary = "nu=" + std::string(rep["nu"]["value"].is_number()
                                                ? std::to_string(gi.nu.value)
                                                : "infinite") +
                        " tau=" + (gi.tau.infinite ? "infinite" : std::to_string(gi.tau.value)) +
                        " iota=" + (gi.iota.infinite ? "infinite" : std::to_string(gi.iota.value)) +
                        " rho=" + (gi.rho.infinite ? "infinite" : std::to_string(gi.rho.value));
  return emit(rep, o, summary, 0);
}

int run_premise(const Options& o) {
  dihg::DIntervalHypergraph h = dihg::load_hypergraph(o.input);
  dihg::PremiseResult pre = dihg::premise_check(h, o.n, mode_of(o), o.limits);
  ordered_json rep = report_shell(o, "premise");
  rep["holds"] = pre.holds;
  if (pre.counterexample) rep["counterexample"] = dihg::cuts_to_json(*pre.counterexample);
  return emit(rep, o, pre.holds ? "premise holds" : "premise fails (counterexample emitted)",
              pre.holds ? 0 : 2);
}

int run_find_partition(const Options& o) {
  dihg::DIntervalHypergraph h = dihg::load_hypergraph(o.input);
  dihg::PredicateMode m = mode_of(o);
  ordered_json rep = report_shell(o, "find-partition");
  dihg::PremiseResult pre = dihg::premise_check(h, o.n, m, o.limits);
  rep["premise_holds"] = pre.holds;
  if (!pre.holds) {
    if (pre.counterexample) rep["counterexample"] = dihg::cuts_to_json(*pre.counterexample);
    return emit(rep, o, "premise fails (counterexample emitted)", 2);
  }
  std::optional<dihg::PartitionCertificate> pc =
      dihg::exhaustive_partition_search(h, o.n, m, o.minimize, o.limits);
  if (!pc) return emit(rep, o, "no realizing partition exists", 2);
  rep["certificate"] = partition_certificate_json(*pc);
  return emit(rep, o,
              "partition found; distinct witness edges: " + std::to_string(pc->used_edges.size()),
              0);
}

int run_balance(const Options& o) {
  dihg::DIntervalHypergraph h = dihg::load_hypergraph(o.input);
  dihg::Rat eps = dihg::parse_rat(o.epsilon.empty() ? o.epsilon0 : o.epsilon);
  ordered_json rep = report_shell(o, "balance");
  try {
    dihg::BalancedPoint bp = dihg::balanced_point_search(h, o.n, mode_of(o), eps, params_of(o));
    rep["point"] = dihg::point_to_json(bp.x);
    if (bp.epsilon) rep["epsilon"] = dihg::rat_str(*bp.epsilon);
    rep["spread"] = dihg::rat_str(bp.spread);
    rep["common_value"] = dihg::rat_str(bp.common_value);
    rep["layer_sums"] = sums_json(bp.sums);
    rep["converged"] = bp.converged;
    rep["iterations"] = bp.iterations;
    return emit(rep, o,
                bp.converged ? "balanced point found (spread " + dihg::rat_str(bp.spread) + ")"
                             : "search did not converge; best point emitted",
                bp.converged ? 0 : 1);
  } catch (const std::invalid_argument& e) {
    rep["refuted"] = e.what();
    return emit(rep, o, std::string("refuted: ") + e.what(), 2);
  }
}

int run_pipeline(const Options& o, bool matching) {
  dihg::DIntervalHypergraph h = dihg::load_hypergraph(o.input);
  ordered_json rep = report_shell(o, matching ? "match" : "cover");
  try {
    dihg::CoverCertificate cert = matching ? dihg::matching_pipeline(h, o.n, params_of(o))
                                           : dihg::cover_pipeline(h, o.n, params_of(o));
    rep["certificate"] = certificate_json(cert);
    rep["verified"] = dihg::verify_certificate(h, o.n, cert);
    std::string summary =
        matching ? "matching of size " + std::to_string(cert.chosen.size()) + " >= " +
                       dihg::rat_str(cert.bound_claimed) + " (path: " + path_name(cert.path) + ")"
                 : "cover of size " + std::to_string(cert.h0.size()) + " <= " +
                       dihg::rat_str(cert.bound_claimed) + " (path: " + path_name(cert.path) + ")";
    return emit(rep, o, summary, 0);
  } catch (const std::invalid_argument& e) {
    rep["premise_holds"] = false;
    rep["reason"] = e.what();
    dihg::PremiseResult pre = dihg::premise_check(
        h, o.n, matching ? dihg::PredicateMode::Contains : dihg::PredicateMode::ContainedIn,
        o.limits);
    if (pre.counterexample) rep["counterexample"] = dihg::cuts_to_json(*pre.counterexample);
    return emit(rep, o, std::string("premise fails: ") + e.what(), 2);
  }
}

int run_family(const Options& o, const std::string& name, int d, int m, bool verify) {
  if (!verify) {
    dihg::DIntervalHypergraph h = name == "grid"         ? dihg::grid_family(d, m)
                                  : name == "cover-tight" ? dihg::cover_tight_family(d, m)
                                                          : dihg::corners_family();
    ordered_json j = dihg::hypergraph_to_json(h);
    Options oo = o;
    return emit(j, oo, name + ": " + std::to_string(h.edge_count()) + " edges", 0);
  }
  dihg::FamilyReport fr = name == "grid"         ? dihg::verify_grid(d, m, o.limits)
                          : name == "cover-tight" ? dihg::verify_cover_tight(d, m, o.limits)
                                                  : dihg::verify_corners(o.limits);
  ordered_json rep = report_shell(o, "family");
  rep["report"] = family_report_json(fr);
  return emit(rep, o, fr.all_ok() ? name + ": all checks pass" : name + ": CHECK FAILED",
              fr.all_ok() ? 0 : 1);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact invariants, premise decisions and certified partition pipelines "
               "for d-interval hypergraphs"};
  app.set_version_flag("--version", DIHG_VERSION);
  app.require_subcommand(1);

  Options o;
  std::string family_name;
  int family_d = 2;
  int family_m = 1;
  bool family_verify = false;

  auto add_common = [&](CLI::App* cmd, bool needs_input) {
    if (needs_input)
      cmd->add_option("-i,--input", o.input, "hypergraph JSON file")->required();
    cmd->add_option("-o,--output", o.output, "write the JSON report here instead of stdout");
    cmd->add_option("--threads", o.threads, "worker cap (0 = hardware default)")
        ->envname("DIHG_THREADS");
    cmd->add_option("--max-vertices", o.limits.max_vertices, "finite-search vertex guard");
    cmd->add_option("--max-edges", o.limits.max_edges, "finite-search edge guard");
    cmd->add_option("--node-budget", o.limits.node_budget, "branch-and-bound node budget");
    cmd->add_option("--combo-budget", o.limits.combo_budget, "configuration combination budget");
  };
  auto add_numeric = [&](CLI::App* cmd) {
    cmd->add_option("--epsilon0", o.epsilon0, "first epsilon level (rational p/q)");
    cmd->add_option("--tol", o.tol, "layer-sum spread tolerance");
    cmd->add_option("--max-iters", o.max_iters, "descent iterations per start");
    cmd->add_option("--starts", o.starts, "multistart count");
    cmd->add_option("--snap-den", o.snap_den, "largest snap denominator");
    cmd->add_option("--k-max", o.k_max, "epsilon halvings");
    cmd->add_option("--seed", o.seed, "random seed");
  };
  auto add_mode = [&](CLI::App* cmd) {
    cmd->add_option("--mode", o.mode, "predicate side")
        ->check(CLI::IsMember({"contains", "containedin"}));
  };

  CLI::App* c_inv = app.add_subcommand("invariants", "exact nu, tau, iota, rho and LP relaxations");
  add_common(c_inv, true);

  CLI::App* c_pre = app.add_subcommand("premise", "decide the partition premise exactly");
  add_common(c_pre, true);
  add_mode(c_pre);
  c_pre->add_option("-n,--n", o.n, "partition arity")->required();

  CLI::App* c_find = app.add_subcommand("find-partition", "exhaustive certified partition search");
  add_common(c_find, true);
  add_mode(c_find);
  c_find->add_option("-n,--n", o.n, "partition arity")->required();
  c_find->add_flag("--minimize", o.minimize, "minimize the number of distinct witness edges");

  CLI::App* c_bal = app.add_subcommand("balance", "numeric balanced-point search (exact snap)");
  add_common(c_bal, true);
  add_mode(c_bal);
  add_numeric(c_bal);
  c_bal->add_option("-n,--n", o.n, "partition arity")->required();
  c_bal->add_option("--epsilon", o.epsilon, "epsilon for the containment side (rational p/q)");

  CLI::App* c_cov = app.add_subcommand("cover", "certified edge-cover pipeline");
  add_common(c_cov, true);
  add_numeric(c_cov);
  c_cov->add_option("-n,--n", o.n, "partition arity")->required();

  CLI::App* c_mat = app.add_subcommand("match", "certified matching pipeline");
  add_common(c_mat, true);
  add_numeric(c_mat);
  c_mat->add_option("-n,--n", o.n, "partition arity")->required();

  CLI::App* c_fam = app.add_subcommand("family", "generate or verify a built-in family");
  add_common(c_fam, false);
  c_fam->add_option("name", family_name, "grid | cover-tight | corners")
      ->required()
      ->check(CLI::IsMember({"grid", "cover-tight", "corners"}));
  c_fam->add_option("--d", family_d, "number of copies");
  c_fam->add_option("--m,--n", family_m, "blocks per copy (grid) / block count n (cover-tight)");
  c_fam->add_flag("--verify", family_verify, "run the family's exact checks");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*c_inv) return run_invariants(o);
    if (*c_pre) return run_premise(o);
    if (*c_find) return run_find_partition(o);
    if (*c_bal) return run_balance(o);
    if (*c_cov) return run_pipeline(o, false);
    if (*c_mat) return run_pipeline(o, true);
    if (*c_fam) return run_family(o, family_name, family_d, family_m, family_verify);
  } catch (const dihg::ScaleGuardError& e) {
    std::cerr << "scale guard: " << e.what() << "\n";
    std::cout << ordered_json{{"error", e.what()}}.dump(2) << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    std::cout << ordered_json{{"error", e.what()}}.dump(2) << "\n";
    return 1;
  }
  return 1;
}
