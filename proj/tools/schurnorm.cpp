// schurnorm: Schur multiplier norms of 0-1 matrices from the command line.
//
// Subcommands: norm, classify, catalog, verify-certs, table, paths,
// enumerate, random, remark56, witness. Every subcommand accepts --json and
// then emits a reproducible run report (command, inputs, results, versions,
// seeds, wall clock). Exit codes: 0 success / all checks pass, 1 check
// failure, 2 input error.

#include "schur/bigraph.hpp"
#include "schur/bounds.hpp"
#include "schur/certificates.hpp"
#include "schur/classify.hpp"
#include "schur/enumerate.hpp"
#include "schur/eta.hpp"
#include "schur/path_witness.hpp"
#include "schur/random_graphs.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

using namespace schur;
using nlohmann::json;
using Tag = GraphName::Tag;

namespace {

constexpr const char* kVersion = "1.0.0";

json matrix_to_json(const Matrix& m) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
    rows.push_back(std::move(row));
  }
  return rows;
}

json vector_to_json(const Vector& v) {
  json out = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(v(i));
  return out;
}

json graph_to_json(const BiGraph& g) {
  json rows = json::array();
  for (std::size_t i = 0; i < g.rows(); ++i) {
    std::string row(g.cols(), '0');
    for (std::size_t j = 0; j < g.cols(); ++j) row[j] = g.bit(i, j) ? '1' : '0';
    rows.push_back(row);
  }
  return json{{"m", g.rows()}, {"n", g.cols()}, {"rows", rows}};
}

BiGraph graph_from_json(const json& j) {
  if (!j.contains("m") || !j.contains("n") || !j.contains("rows")) {
    throw InputError("matrix JSON needs fields m, n, rows");
  }
  std::vector<std::string> rows;
  for (const auto& r : j.at("rows")) rows.push_back(r.get<std::string>());
  return BiGraph::from_bits(j.at("m").get<std::size_t>(),
                            j.at("n").get<std::size_t>(), rows);
}

BiGraph read_graph(const std::string& path) {
  std::string text;
  if (path == "-") {
    std::stringstream buf;
    buf << std::cin.rdbuf();
    text = buf.str();
  } else {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open matrix file: " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    text = buf.str();
  }
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) throw InputError("empty matrix input");
  if (text[first] == '{') {
    return graph_from_json(json::parse(text, nullptr, true));
  }
  return BiGraph::from_text(text);
}

GraphName parse_name_or_throw(const std::string& raw) {
  const auto name = GraphName::parse(raw);
  if (!name) throw InputError("unknown catalog name: " + raw);
  return *name;
}

// Run-report envelope shared by every --json command.
struct Report {
  std::string command;
  json inputs = json::object();
  json results = json::object();
  std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();

  void emit() const {
    json out{
        {"command", command},
        {"inputs", inputs},
        {"results", results},
        {"versions", {{"schurnorm", kVersion}}},
        {"wall_ms",
         std::chrono::duration<double, std::milli>(
             std::chrono::steady_clock::now() - t0)
             .count()},
    };
    std::cout << out.dump(2) << "\n";
  }
};

json bounds_to_json(const NormBounds& nb, bool witnesses) {
  json out{
      {"lower", nb.lower},          {"upper", nb.upper},
      {"midpoint", nb.midpoint()},  {"gap", nb.gap()},
      {"converged", nb.converged},  {"iterations", nb.iterations},
  };
  if (witnesses) {
    out["witness_U"] = matrix_to_json(nb.witness_U);
    out["witness_x"] = vector_to_json(nb.witness_x);
    out["witness_y"] = vector_to_json(nb.witness_y);
    out["S"] = matrix_to_json(nb.factorization.S);
    out["R"] = matrix_to_json(nb.factorization.R);
  }
  return out;
}

int cmd_norm(const std::string& input, const BoundsOptions& opts,
             bool as_json, bool witnesses) {
  Report rep;
  rep.command = "norm";
  const BiGraph g = read_graph(input);
  rep.inputs = {{"matrix", graph_to_json(g)},
                {"tol", opts.tol},
                {"restarts", opts.restarts},
                {"max_iters", opts.max_iters},
                {"seed", opts.seed}};
  const NormBounds nb = norm_bounds(g.to_matrix(), opts);
  rep.results = bounds_to_json(nb, witnesses);
  if (as_json) {
    rep.emit();
  } else {
    std::printf("lower    %.9f\nupper    %.9f\nmidpoint %.6f\n", nb.lower,
                nb.upper, nb.midpoint());
    std::printf("converged %s after %d iterations (gap %.2e)\n",
                nb.converged ? "yes" : "no", nb.iterations, nb.gap());
  }
  return 0;
}

int cmd_classify(const std::string& input, bool as_json) {
  Report rep;
  rep.command = "classify";
  const BiGraph g = read_graph(input);
  rep.inputs = {{"matrix", graph_to_json(g)}};
  const ClassResult res = classify(g);
  json comps = json::array();
  for (const auto& cc : res.per_component) {
    comps.push_back(json{{"rows", cc.component.rows()},
                         {"cols", cc.component.cols()},
                         {"reduced_rows", cc.reduced.rows()},
                         {"reduced_cols", cc.reduced.cols()},
                         {"matched_f", cc.matched_f},
                         {"contains_e", cc.contains_e}});
  }
  rep.results = {{"label", res.label()},
                 {"eta_index",
                  res.at_least_eta6 ? json() : json(res.eta_index)},
                 {"eta_value",
                  res.at_least_eta6 ? json() : json(res.eta_value())},
                 {"components", comps}};
  if (res.numeric) {
    rep.results["numeric"] = bounds_to_json(*res.numeric, false);
  }
  if (as_json) {
    rep.emit();
  } else {
    if (res.at_least_eta6) {
      std::printf("label: at least eta_6 (norm > %.6f)\n", eta(6));
      if (res.numeric) {
        std::printf("numeric bounds of the heaviest component: [%.6f, %.6f]\n",
                    res.numeric->lower, res.numeric->upper);
      }
    } else {
      std::printf("label: eta_%d = %.6f\n", res.eta_index, res.eta_value());
    }
    for (const auto& cc : res.per_component) {
      std::printf("  component %zux%zu -> reduced %zux%zu, least F_j: %s\n",
                  cc.component.rows(), cc.component.cols(), cc.reduced.rows(),
                  cc.reduced.cols(),
                  cc.matched_f ? ("F" + std::to_string(cc.matched_f)).c_str()
                               : "none");
    }
  }
  return 0;
}

int cmd_catalog(const std::string& raw, bool as_json) {
  Report rep;
  rep.command = "catalog";
  const GraphName name = parse_name_or_throw(raw);
  rep.inputs = {{"name", name.str()}};
  const BiGraph g = catalog(name);
  rep.results = graph_to_json(g);
  if (as_json) {
    rep.emit();
  } else {
    std::fputs(g.to_text().c_str(), stdout);
  }
  return 0;
}

json cert_report_to_json(const CertReport& cr) {
  json checks = json::array();
  for (const auto& chk : cr.checks) {
    checks.push_back(json{{"name", chk.name},
                          {"pass", chk.pass},
                          {"error", chk.error}});
  }
  json out{{"graph", cr.name.str()},
           {"value", cr.exact_value},
           {"pass", cr.pass},
           {"checks", checks}};
  if (!cr.char_poly.empty()) out["char_poly"] = cr.char_poly;
  return out;
}

int cmd_verify_certs(double tol, bool as_json) {
  Report rep;
  rep.command = "verify-certs";
  rep.inputs = {{"tol", tol}};
  json certs = json::array();
  bool all_pass = true;
  std::vector<std::pair<NormCertificate, CertReport>> rows;
  for (const GraphName& name : certified_catalog()) {
    NormCertificate cert = certificate(name);
    CertReport cr = verify_certificate(cert, tol);
    all_pass = all_pass && cr.pass;
    certs.push_back(cert_report_to_json(cr));
    rows.emplace_back(std::move(cert), std::move(cr));
  }
  rep.results = {{"certificates", certs}, {"all_pass", all_pass}};
  if (as_json) {
    rep.emit();
  } else {
    std::printf("%-16s %-30s %10s  %6s  checks\n", "graph", "closed form",
                "value", "status");
    for (const auto& [cert, cr] : rows) {
      std::string checklist;
      for (const auto& chk : cr.checks) checklist += chk.pass ? "+" : "!";
      std::printf("%-16s %-30s %10.6f  %6s  %s\n", cert.name.str().c_str(),
                  cert.value_text.c_str(), cert.exact_value,
                  cr.pass ? "PASS" : "FAIL", checklist.c_str());
      if (!cr.pass) {
        for (const auto& chk : cr.checks) {
          if (!chk.pass) {
            std::printf("    failed: %s (err %.3e)\n", chk.name.c_str(),
                        chk.error);
          }
        }
      }
    }
    std::printf("%s\n", all_pass ? "all certificates verified"
                                 : "certificate verification FAILED");
  }
  return all_pass ? 0 : 1;
}

int cmd_table(bool as_json) {
  Report rep;
  rep.command = "table";
  // The nine exact-norm rows, in ascending norm order.
  const std::vector<GraphName> names = {
      {Tag::SingleEdge, 0}, {Tag::SigmaSquare, 2}, {Tag::SigmaSquare, 3},
      {Tag::E, 4},          {Tag::E, 5},           {Tag::SigmaSquare, 4},
      {Tag::Trie, 0},       {Tag::Gee7, 0},        {Tag::Gee6Cycle, 0},
  };
  json rows = json::array();
  bool ok = true;
  if (!as_json) {
    std::printf("%-12s %-30s %9s  [%9s, %9s]  %s\n", "graph", "closed form",
                "decimal", "lower", "upper", "certificate");
  }
  for (const GraphName& name : names) {
    const NormCertificate cert = certificate(name);
    const CertReport cr = verify_certificate(cert, 1e-9);
    const NormBounds nb = norm_bounds(cert.graph.to_matrix());
    const bool row_ok = cr.pass && nb.converged &&
                        std::abs(nb.midpoint() - cert.exact_value) <= 1e-5;
    ok = ok && row_ok;
    rows.push_back(json{{"graph", name.str()},
                        {"closed_form", cert.value_text},
                        {"value", cert.exact_value},
                        {"decimal5", std::round(cert.exact_value * 1e5) / 1e5},
                        {"lower", nb.lower},
                        {"upper", nb.upper},
                        {"converged", nb.converged},
                        {"certificate_pass", cr.pass}});
    if (!as_json) {
      std::printf("%-12s %-30s %9.5f  [%9.6f, %9.6f]  %s\n",
                  name.str().c_str(), cert.value_text.c_str(),
                  cert.exact_value, nb.lower, nb.upper,
                  cr.pass ? "PASS" : "FAIL");
    }
  }
  rep.results = {{"rows", rows}, {"all_pass", ok}};
  if (as_json) rep.emit();
  return ok ? 0 : 1;
}

int cmd_paths(int max_n, bool as_json) {
  Report rep;
  rep.command = "paths";
  rep.inputs = {{"max_n", max_n}};
  json rows = json::array();
  if (!as_json) {
    std::printf("n,path_norm,popa_lower,popa_upper,lower,upper,converged\n");
  }
  for (int n = 1; n <= max_n; ++n) {
    const double value = path_norm(n);
    const auto [plo, pup] = popa_bounds(n);
    json row{{"n", n},
             {"path_norm", value},
             {"popa_lower", plo},
             {"popa_upper", pup}};
    std::string numeric = ",,";
    if (n <= 8) {
      const NormBounds nb =
          norm_bounds(catalog(Tag::SigmaSquare, n).to_matrix());
      row["lower"] = nb.lower;
      row["upper"] = nb.upper;
      row["converged"] = nb.converged;
      char buf[64];
      std::snprintf(buf, sizeof buf, "%.9f,%.9f,%d", nb.lower, nb.upper,
                    nb.converged ? 1 : 0);
      numeric = buf;
    }
    rows.push_back(std::move(row));
    if (!as_json) {
      std::printf("%d,%.6f,%.6f,%.6f,%s\n", n, value, plo, pup,
                  numeric.c_str());
    }
  }
  rep.results = {{"rows", rows}, {"four_over_pi", four_over_pi()}};
  if (as_json) {
    rep.emit();
  } else {
    std::printf("# 4/pi reference: %.6f\n", four_over_pi());
  }
  return 0;
}

int cmd_enumerate(int max_m, int max_n, bool check, int threads,
                  bool as_json) {
  Report rep;
  rep.command = "enumerate";
  rep.inputs = {{"max_m", max_m},
                {"max_n", max_n},
                {"check", check},
                {"threads", threads}};
  SweepOptions opts;
  opts.max_m = max_m;
  opts.max_n = max_n;
  opts.check = check;
  opts.threads = threads;
  const SweepResult res = enumerate_sweep(opts);
  json histogram = json::object();
  for (int k = 0; k <= 6; ++k) {
    histogram["eta" + std::to_string(k)] =
        res.label_counts[static_cast<std::size_t>(k)];
  }
  histogram["at_least_eta6"] = res.label_counts[7];
  json mism = json::array();
  for (const auto& an : res.oracle_mismatches) {
    mism.push_back(json{{"matrix", graph_to_json(an.graph)},
                        {"what", an.what},
                        {"lower", an.lower},
                        {"upper", an.upper}});
  }
  json gaps = json::array();
  for (const auto& an : res.gap_violations) {
    gaps.push_back(json{{"matrix", graph_to_json(an.graph)},
                        {"what", an.what},
                        {"lower", an.lower},
                        {"upper", an.upper}});
  }
  const bool pass = !check || res.pass();
  rep.results = {{"total_matrices", res.total_matrices},
                 {"classes", res.classes},
                 {"label_histogram", histogram},
                 {"oracle_mismatches", mism},
                 {"gap_violations", gaps},
                 {"non_converged", res.non_converged},
                 {"pass", pass},
                 {"wall_seconds", res.wall_seconds}};
  if (as_json) {
    rep.emit();
  } else {
    std::printf("%zu matrices up to %dx%d, %zu isomorphism classes\n",
                res.total_matrices, max_m, max_n, res.classes);
    for (int k = 0; k <= 6; ++k) {
      std::printf("  eta_%d: %zu classes\n", k,
                  res.label_counts[static_cast<std::size_t>(k)]);
    }
    std::printf("  at least eta_6: %zu classes\n", res.label_counts[7]);
    if (check) {
      std::printf(
          "oracle mismatches: %zu, gap violations: %zu, open intervals: %zu\n",
          res.oracle_mismatches.size(), res.gap_violations.size(),
          res.non_converged);
      std::printf("%s (%.1f s)\n", pass ? "sweep PASS" : "sweep FAIL",
                  res.wall_seconds);
    }
  }
  return pass ? 0 : 1;
}

int cmd_random(int m, int n, double p, int trials, std::uint64_t seed,
               bool exhaustive, const std::string& csv_path, bool as_json) {
  Report rep;
  rep.command = "random";
  rep.inputs = {{"m", m},           {"n", n},       {"p", p},
                {"trials", trials}, {"seed", seed},
                {"exhaustive", exhaustive}};
  const RandomModel model{m, n, p, seed};
  const MonteCarloEstimate est = exhaustive ? expected_norm_exhaustive(model)
                                            : expected_norm(model, trials);
  if (!csv_path.empty()) {
    std::ofstream csv(csv_path);
    if (!csv) throw InputError("cannot open CSV output: " + csv_path);
    csv.precision(12);
    csv << "trial,lower,upper,converged\n";
    for (std::size_t t = 0; t < est.per_trial.size(); ++t) {
      csv << t << "," << est.per_trial_lower[t] << ","
          << est.per_trial_upper[t] << ","
          << (est.trial_converged[t] ? 1 : 0) << "\n";
    }
  }
  rep.results = {{"mean", est.mean},
                 {"std_error", est.std_error},
                 {"trials", est.trials},
                 {"non_converged", est.non_converged},
                 {"generator", est.generator}};
  if (as_json) {
    rep.emit();
  } else {
    std::printf("E[norm] over %s G(%d,%d,%g): %.6f (std error %.6f)\n",
                exhaustive ? "all graphs of" : "sampled", m, n, p, est.mean,
                est.std_error);
    if (est.non_converged > 0) {
      std::printf(
          "%d trials did not certify; their upper bounds entered the mean\n",
          est.non_converged);
    }
  }
  return 0;
}

int cmd_remark56(bool as_json) {
  Report rep;
  rep.command = "remark56";
  struct Row {
    GraphName name;
    double reference;
  };
  const std::vector<Row> refs = {{{Tag::Obstruction54, 0}, 1.24131},
                                 {{Tag::Obstruction55, 0}, 1.25048},
                                 {{Tag::Obstruction56, 0}, 1.25655},
                                 {{Tag::Obstruction53, 0}, 1.25906}};
  BoundsOptions opts;
  opts.tol = 1e-8;
  json rows = json::array();
  bool ok = true;
  for (const Row& row : refs) {
    const NormBounds nb = norm_bounds(catalog(row.name).to_matrix(), opts);
    const double err = std::abs(nb.midpoint() - row.reference);
    const bool row_ok = nb.converged && err <= 5e-6;
    ok = ok && row_ok;
    rows.push_back(json{{"graph", row.name.str()},
                        {"reference", row.reference},
                        {"midpoint", nb.midpoint()},
                        {"lower", nb.lower},
                        {"upper", nb.upper},
                        {"error", err},
                        {"converged", nb.converged},
                        {"pass", row_ok}});
    if (!as_json) {
      std::printf("%-16s reference %.5f  computed %.6f  error %.1e  %s\n",
                  row.name.str().c_str(), row.reference, nb.midpoint(), err,
                  row_ok ? "PASS" : "FAIL");
    }
  }
  rep.results = {{"rows", rows}, {"all_pass", ok}};
  if (as_json) {
    rep.emit();
  } else {
    std::printf("%s\n", ok ? "all reference norms reproduced"
                           : "reference mismatch beyond 5 decimals");
  }
  return ok ? 0 : 1;
}

int cmd_witness(int n, bool as_json) {
  Report rep;
  rep.command = "witness";
  rep.inputs = {{"path_n", n}};
  const PathWitness w = build_path_witness(n);
  rep.results = {{"n", w.n},
                 {"value", path_norm(n)},
                 {"attained", w.attained()},
                 {"W", matrix_to_json(w.W)},
                 {"r", vector_to_json(w.r)},
                 {"R", matrix_to_json(w.R)},
                 {"S", matrix_to_json(w.S)},
                 {"Rt", matrix_to_json(w.Rt)},
                 {"St", matrix_to_json(w.St)},
                 {"B", matrix_to_json(w.B)},
                 {"Bt", matrix_to_json(w.Bt)},
                 {"U", matrix_to_json(w.U)},
                 {"x", vector_to_json(w.x)},
                 {"y", vector_to_json(w.y)},
                 {"a", vector_to_json(w.a)},
                 {"b", vector_to_json(w.b)}};
  if (as_json) {
    rep.emit();
  } else {
    std::ostringstream out;
    out << "path witness for n = " << n << " (norm " << path_norm(n) << ")\n";
    out << "W =\n" << w.W << "\nR =\n" << w.R << "\nS =\n" << w.S
        << "\nRt =\n" << w.Rt << "\nSt =\n" << w.St << "\nB =\n" << w.B
        << "\nBt =\n" << w.Bt << "\nU =\n" << w.U << "\nx = "
        << w.x.transpose() << "\ny = " << w.y.transpose()
        << "\n<(B.U^t)x, y> = " << w.attained() << "\n";
    std::fputs(out.str().c_str(), stdout);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Schur multiplier norms of 0-1 matrices: certified bounds, "
               "exact catalog values, gap-theorem classification"};
  app.require_subcommand(1);

  std::string norm_input = "-";
  BoundsOptions nopts;
  bool norm_json = false, norm_witnesses = false;
  auto* norm_cmd = app.add_subcommand("norm", "two-sided norm bounds");
  norm_cmd->add_option("matrix", norm_input,
                       "matrix file (text or JSON), or - for stdin");
  norm_cmd->add_option("--tol", nopts.tol, "certification tolerance");
  norm_cmd->add_option("--restarts", nopts.restarts, "ascent restarts");
  norm_cmd->add_option("--max-iters", nopts.max_iters,
                       "iterations per restart");
  norm_cmd->add_option("--seed", nopts.seed, "seed for the random restarts");
  norm_cmd->add_flag("--json", norm_json, "emit a JSON run report");
  norm_cmd->add_flag("--witnesses", norm_witnesses,
                     "include witness matrices in the report");

  std::string cls_input = "-";
  bool cls_json = false;
  auto* cls_cmd = app.add_subcommand("classify", "gap-theorem class label");
  cls_cmd->add_option("matrix", cls_input, "matrix file or - for stdin");
  cls_cmd->add_flag("--json", cls_json, "emit a JSON run report");

  std::string cat_name;
  bool cat_json = false;
  auto* cat_cmd = app.add_subcommand("catalog", "print a named graph");
  cat_cmd
      ->add_option("name", cat_name,
                   "e.g. sigma:3,3 lambda:4 E4 F6 trie gee7 "
                   "obstruction:5.4 bracket-ones:3")
      ->required();
  cat_cmd->add_flag("--json", cat_json, "emit a JSON run report");

  double vc_tol = 1e-9;
  bool vc_json = false;
  auto* vc_cmd =
      app.add_subcommand("verify-certs", "check every stored certificate");
  vc_cmd->add_option("--tol", vc_tol, "verification tolerance");
  vc_cmd->add_flag("--json", vc_json, "emit a JSON run report");

  bool table_json = false;
  auto* table_cmd =
      app.add_subcommand("table", "the nine exact-norm rows with bounds");
  table_cmd->add_flag("--json", table_json, "emit a JSON run report");

  int paths_max_n = 200;
  bool paths_json = false;
  auto* paths_cmd =
      app.add_subcommand("paths", "path norms, Popa bracket, numeric bounds");
  paths_cmd->add_option("--max-n", paths_max_n, "largest path parameter");
  paths_cmd->add_flag("--json", paths_json, "emit a JSON run report");

  int en_m = 4, en_n = 4, en_threads = 0;
  bool en_check = false, en_json = false;
  auto* en_cmd = app.add_subcommand(
      "enumerate", "sweep all isomorphism classes up to max-m x max-n");
  en_cmd->add_option("--max-m", en_m, "row bound (<= 4)");
  en_cmd->add_option("--max-n", en_n, "column bound (<= 4)");
  en_cmd->add_flag("--check", en_check,
                   "certify bounds against the classifier on every class");
  en_cmd->add_option("--threads", en_threads, "worker threads (0 = auto)");
  en_cmd->add_flag("--json", en_json, "emit a JSON run report");

  int rd_m = 8, rd_n = 8, rd_trials = 200;
  double rd_p = 0.5;
  std::uint64_t rd_seed = 42;
  bool rd_exhaustive = false, rd_json = false;
  std::string rd_csv;
  auto* rd_cmd =
      app.add_subcommand("random", "expected norm of G(m,n,p) samples");
  rd_cmd->add_option("--m", rd_m, "rows");
  rd_cmd->add_option("--n", rd_n, "columns");
  rd_cmd->add_option("--p", rd_p, "edge probability in (0,1)");
  rd_cmd->add_option("--trials", rd_trials, "Monte Carlo trials");
  rd_cmd->add_option("--seed", rd_seed, "master seed");
  rd_cmd->add_flag("--exhaustive", rd_exhaustive,
                   "exact expectation over all 2^(mn) graphs");
  rd_cmd->add_option("--csv", rd_csv, "write per-trial bounds to a CSV file");
  rd_cmd->add_flag("--json", rd_json, "emit a JSON run report");

  bool r56_json = false;
  auto* r56_cmd = app.add_subcommand(
      "remark56", "reproduce the four 5-decimal obstruction norms");
  r56_cmd->add_flag("--json", r56_json, "emit a JSON run report");

  int wit_n = 4;
  bool wit_json = false;
  auto* wit_cmd =
      app.add_subcommand("witness", "dump the extremal path construction");
  wit_cmd->add_option("--path-n", wit_n, "path parameter n")->required();
  wit_cmd->add_flag("--json", wit_json, "emit a JSON run report");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (norm_cmd->parsed()) {
      return cmd_norm(norm_input, nopts, norm_json, norm_witnesses);
    }
    if (cls_cmd->parsed()) return cmd_classify(cls_input, cls_json);
    if (cat_cmd->parsed()) return cmd_catalog(cat_name, cat_json);
    if (vc_cmd->parsed()) return cmd_verify_certs(vc_tol, vc_json);
    if (table_cmd->parsed()) return cmd_table(table_json);
    if (paths_cmd->parsed()) return cmd_paths(paths_max_n, paths_json);
    if (en_cmd->parsed()) {
      return cmd_enumerate(en_m, en_n, en_check, en_threads, en_json);
    }
    if (rd_cmd->parsed()) {
      return cmd_random(rd_m, rd_n, rd_p, rd_trials, rd_seed, rd_exhaustive,
                        rd_csv, rd_json);
    }
    if (r56_cmd->parsed()) return cmd_remark56(r56_json);
    if (wit_cmd->parsed()) return cmd_witness(wit_n, wit_json);
  } catch (const InputError& e) {
    std::fprintf(stderr, "input error: %s\n", e.what());
    return 2;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
  return 2;
}
