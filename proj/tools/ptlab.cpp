// Copyright 2026 The ptlab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command-line front end: ensemble, critical, laws, tw, rotor, verify.

#include <CLI11.hpp>
#include <cmath>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include "ptlab/harness.hpp"
#include "ptlab/io.hpp"
#include "ptlab/laws.hpp"
#include "ptlab/rotor.hpp"
#include "ptlab/tracy_widom.hpp"

namespace {

using namespace ptlab;

constexpr int kOk = 0;
constexpr int kInvariantFailure = 1;
constexpr int kBadConfig = 2;

struct DimsFlags {
  std::vector<int> qubits;
  std::vector<std::int64_t> ns;

  void attach(CLI::App* app) {
    auto* q = app->add_option("--qubits", qubits, "L1 L2 L (qubit counts, L the total)")
                  ->expected(3)
                  ->envname("PTLAB_QUBITS")
                  ->delimiter(',');
    auto* n = app->add_option("--ns", ns, "N1 N2 N3 (local dimensions)")
                  ->expected(3)
                  ->envname("PTLAB_NS")
                  ->delimiter(',');
    q->excludes(n);
  }

  PartitionDims resolve() const {
    if (!qubits.empty()) return PartitionDims::from_qubits(qubits[0], qubits[1], qubits[2]);
    if (!ns.empty()) return PartitionDims::from_dims(ns[0], ns[1], ns[2]);
    throw ConfigError("one of --qubits or --ns is required");
  }
};

struct CommonFlags {
  DimsFlags dims;
  std::string field = "complex";
  std::int64_t trials = 10000;
  std::uint64_t seed = 20260101;
  int bins = 40;
  std::string out;
  int workers = 1;

  void attach(CLI::App* app) {
    dims.attach(app);
    app->add_option("--field", field, "complex|real")->envname("PTLAB_FIELD");
    app->add_option("--trials", trials)->envname("PTLAB_TRIALS");
    app->add_option("--seed", seed)->envname("PTLAB_SEED");
    app->add_option("--bins", bins)->envname("PTLAB_BINS");
    app->add_option("--out", out, "output file (CSV rows)")->envname("PTLAB_OUT");
    app->add_option("--workers", workers)->envname("PTLAB_WORKERS");
  }

  ExperimentConfig config(const std::string& tag) const {
    ExperimentConfig c;
    c.dims = dims.resolve();
    try {
      c.field = parse_field(field);
    } catch (const std::invalid_argument& e) {
      throw ConfigError(e.what());
    }
    c.trials = trials;
    c.seed = seed;
    c.bins = bins;
    c.out = out;
    c.tag = tag;
    c.workers = workers;
    c.validate();
    return c;
  }
};

std::ofstream open_out(const std::string& path) {
  std::ofstream f(path);
  if (!f) throw ConfigError("cannot open '" + path + "' for writing");
  return f;
}

int run_ensemble_cmd(const CommonFlags& flags, const std::string& hist_path) {
  ExperimentConfig c = flags.config("ensemble");
  c.keep_rows = !c.out.empty();
  const EnsembleSummary s = run_ensemble(c);
  if (!c.out.empty()) {
    auto f = open_out(c.out);
    io::write_reports_csv(f, s.rows);
  }
  if (!hist_path.empty()) {
    auto f = open_out(hist_path);
    write_histogram_csv(f, s.histogram);
  }
  std::cout << to_json(s).dump(2) << '\n';
  return s.max_trace_error < 1e-10 && s.max_purity_error < 1e-10 ? kOk : kInvariantFailure;
}

int run_critical_cmd(const CommonFlags& flags, const std::string& input) {
  const TWTable tw = solve_painleve2();
  CriticalReport r;
  if (!input.empty()) {
    std::ifstream f(input);
    if (!f) throw ConfigError("cannot read '" + input + "'");
    const auto rows = io::read_reports_csv(f);
    if (rows.empty()) throw ConfigError("input has no rows");
    const auto dims = PartitionDims::from_dims(rows[0].n1, rows[0].n2, rows[0].n3);
    r = analyze_critical(rows, dims, rows[0].field, tw);
  } else {
    r = run_critical(flags.config("critical"), tw);
  }
  const std::string text = to_json(r).dump(2);
  if (!flags.out.empty()) {
    auto f = open_out(flags.out);
    f << text << '\n';
  }
  std::cout << text << '\n';
  return kOk;
}

int run_laws_cmd(const DimsFlags& dims_flags, const std::string& law, int points, double q,
                 const std::string& out) {
  nlohmann::ordered_json j;
  if (law == "kappa") {
    j["Q"] = q;
    j["kappa"] = kappa(q);
    if (q > 1.0) j["kappa_hypergeometric"] = kappa_hypergeometric(q);
    std::cout << j.dump(2) << '\n';
    return kOk;
  }
  if (law == "tn") {
    const auto s = tn_sequences(points);
    for (std::size_t n = 0; n < s.t.size(); ++n) {
      std::cout << n + 1 << ',' << to_string(s.t[n]) << ',' << to_string(s.t_prime[n]) << '\n';
    }
    return kOk;
  }
  const PartitionDims dims = dims_flags.resolve();
  if (law == "constants") {
    const auto g = model_geometry(dims);
    j["N1"] = dims.n1();
    j["N2"] = dims.n2();
    j["N3"] = dims.n3();
    j["r_tilde"] = g.r_tilde;
    j["regime"] = to_string(g.regime);
    j["third_moment_pt_complex"] = avg_third_moment_pt(dims, Field::complex);
    j["third_moment_pt_real"] = avg_third_moment_pt(dims, Field::real);
    j["third_moment_rho_complex"] = avg_third_moment_rho(dims, Field::complex);
    j["third_moment_rho_real"] = avg_third_moment_rho(dims, Field::real);
    j["third_moment_model"] = model_third_moment(dims);
    j["skewness_complex"] = skewness_analytic(dims, Field::complex);
    j["skewness_real"] = skewness_analytic(dims, Field::real);
    j["avg_log_negativity_model"] = avg_log_negativity_model(dims).value;
    j["avg_purity"] = avg_purity(dims.n(), dims.n3());
    j["page_entropy"] = page_entropy(dims.n(), dims.n3());
    std::cout << j.dump(2) << '\n';
    return kOk;
  }
  LawTag tag;
  try {
    tag = parse_law(law);
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
  const DensityCurve c = make_curve(tag, dims, points);
  if (out.empty()) {
    io::write_table_csv(std::cout, {"grid", "value"}, {c.grid, c.values});
  } else {
    auto f = open_out(out);
    io::write_table_csv(f, {"grid", "value"}, {c.grid, c.values});
  }
  return kOk;
}

int run_tw_cmd(int beta, const std::string& out) {
  if (beta != 1 && beta != 2) throw ConfigError("--beta must be 1 or 2");
  const TWTable tw = solve_painleve2();
  const auto& cdf = beta == 2 ? tw.f2_cdf : tw.f1_cdf;
  const auto& pdf = beta == 2 ? tw.f2_pdf : tw.f1_pdf;
  if (out.empty()) {
    io::write_table_csv(std::cout, {"s", "F", "density"}, {tw.s, cdf, pdf});
  } else {
    auto f = open_out(out);
    io::write_table_csv(f, {"s", "F", "density"}, {tw.s, cdf, pdf});
  }
  return kOk;
}

int run_rotor_cmd(const std::vector<std::int64_t>& dims, const std::vector<double>& k,
                  const std::vector<double>& b, double alpha, const std::string& out, int workers) {
  RotorParams p;
  p.n = {dims[0], dims[1], dims[2]};
  p.k = {k[0], k[1], k[2]};
  p.b12 = b[0];
  p.b13 = b[1];
  p.b23 = b[2];
  p.alpha = alpha;
  try {
    p.validate();
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
  const RotorResult r = eigenstate_pipeline(p, workers);
  if (!out.empty()) {
    auto f = open_out(out);
    io::write_reports_csv(f, r.reports);
  }
  std::vector<double> logneg;
  std::int64_t npt = 0;
  for (const auto& row : r.reports) {
    logneg.push_back(row.log_negativity);
    npt += row.is_npt ? 1 : 0;
  }
  const Stat s = summarize(logneg);
  nlohmann::ordered_json j;
  j["dim"] = r.reports.size();
  j["unitarity_residual"] = r.unitarity_residual;
  j["schur_offdiag"] = r.spectrum.schur_offdiag;
  j["modulus_error"] = r.spectrum.modulus_error;
  j["reconstruction_error"] = r.spectrum.reconstruction_error;
  j["log_negativity_mean"] = s.mean;
  j["log_negativity_se"] = s.se;
  j["npt_fraction"] = static_cast<double>(npt) / r.reports.size();
  std::cout << j.dump(2) << '\n';
  const bool ok = r.unitarity_residual < 1e-10 && r.spectrum.reconstruction_error < 1e-8;
  return ok ? kOk : kInvariantFailure;
}

int run_verify_cmd(std::uint64_t seed, int workers) {
  const VerifyReport rep = verify_suite(seed, workers);
  for (const auto& c : rep.checks) {
    std::cout << (c.passed ? "PASS " : "FAIL ") << c.name << "  value=" << io::format_double(c.value)
              << " limit=" << io::format_double(c.limit);
    if (!c.detail.empty()) std::cout << "  (" << c.detail << ")";
    std::cout << '\n';
  }
  return rep.all_passed() ? kOk : kInvariantFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Partial-transpose spectra of random tripartite states"};
  app.require_subcommand(1);

  CommonFlags ens_flags;
  std::string hist_path;
  auto* ens = app.add_subcommand("ensemble", "Monte Carlo over Haar states");
  ens_flags.attach(ens);
  ens->add_option("--histogram", hist_path, "pooled N*mu histogram CSV")->envname("PTLAB_HISTOGRAM");

  CommonFlags crit_flags;
  std::string input;
  auto* crit = app.add_subcommand("critical", "Tracy-Widom fit of minimum PT eigenvalues");
  crit_flags.attach(crit);
  crit->add_option("--input", input, "ensemble CSV to analyze instead of sampling")->envname("PTLAB_INPUT");

  DimsFlags law_dims;
  std::string law = "scaled-semicircle", law_out;
  int points = 201;
  double q = 1.0;
  auto* laws = app.add_subcommand("laws", "Reference curves and exact averages");
  law_dims.attach(laws);
  laws->add_option("--law", law, "mp|semicircle|scaled-semicircle|constants|kappa|tn")->envname("PTLAB_LAW");
  laws->add_option("--points", points)->envname("PTLAB_POINTS");
  laws->add_option("--q", q, "Q for kappa")->envname("PTLAB_Q");
  laws->add_option("--out", law_out)->envname("PTLAB_OUT");

  int beta = 2;
  std::string tw_out;
  auto* tw = app.add_subcommand("tw", "Tabulated Tracy-Widom law");
  tw->add_option("--beta", beta, "1|2")->envname("PTLAB_BETA");
  tw->add_option("--out", tw_out)->envname("PTLAB_OUT");

  std::vector<std::int64_t> rotor_dims{8, 8, 32};
  std::vector<double> rotor_k{8.0, 7.0, 6.0}, rotor_b{1.60, 1.51, 1.42};
  double alpha = 0.35;
  std::string rotor_out;
  int rotor_workers = 1;
  auto* rotor = app.add_subcommand("rotor", "Eigenstates of three coupled quantum standard maps");
  rotor->add_option("--dims", rotor_dims, "N1 N2 N3")->expected(3)->envname("PTLAB_DIMS")->delimiter(',');
  rotor->add_option("--K", rotor_k, "K1 K2 K3")->expected(3)->envname("PTLAB_K")->delimiter(',');
  rotor->add_option("--b", rotor_b, "b12 b13 b23")->expected(3)->envname("PTLAB_B")->delimiter(',');
  rotor->add_option("--alpha", alpha)->envname("PTLAB_ALPHA");
  rotor->add_option("--out", rotor_out)->envname("PTLAB_OUT");
  rotor->add_option("--workers", rotor_workers)->envname("PTLAB_WORKERS");

  std::uint64_t verify_seed = 20260101;
  int verify_workers = 1;
  auto* verify = app.add_subcommand("verify", "Run the invariant checks");
  verify->add_option("--seed", verify_seed)->envname("PTLAB_SEED");
  verify->add_option("--workers", verify_workers)->envname("PTLAB_WORKERS");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kBadConfig;
  }

  try {
    if (*ens) return run_ensemble_cmd(ens_flags, hist_path);
    if (*crit) return run_critical_cmd(crit_flags, input);
    if (*laws) return run_laws_cmd(law_dims, law, points, q, law_out);
    if (*tw) return run_tw_cmd(beta, tw_out);
    if (*rotor) return run_rotor_cmd(rotor_dims, rotor_k, rotor_b, alpha, rotor_out, rotor_workers);
    if (*verify) return run_verify_cmd(verify_seed, verify_workers);
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kBadConfig;
  } catch (const std::invalid_argument& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kBadConfig;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInvariantFailure;
  }
  return kOk;
}
