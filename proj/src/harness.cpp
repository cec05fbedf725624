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

#include "ptlab/harness.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <limits>
#include <mutex>
#include <numbers>
#include <ostream>
#include <sstream>
#include <thread>

#include "ptlab/ensembles.hpp"
#include "ptlab/io.hpp"
#include "ptlab/laws.hpp"
#include "ptlab/qstate.hpp"
#include "ptlab/rotor.hpp"

namespace ptlab {

Histogram::Histogram(double lo_, double hi_, int bins) : lo(lo_), hi(hi_), counts(bins, 0) {
  if (bins < 1 || !(hi_ > lo_)) throw std::invalid_argument("histogram needs bins >= 1 and hi > lo");
}

void Histogram::add(double x) {
  ++total;
  if (x < lo) {
    ++underflow;
    return;
  }
  auto k = static_cast<std::int64_t>((x - lo) / width());
  if (x == hi) k = bins() - 1;
  if (k >= bins()) {
    ++overflow;
    return;
  }
  ++counts[k];
}

void Histogram::merge(const Histogram& other) {
  if (other.lo != lo || other.hi != hi || other.bins() != bins()) {
    throw std::invalid_argument("merging histograms with different binning");
  }
  for (int k = 0; k < bins(); ++k) counts[k] += other.counts[k];
  total += other.total;
  underflow += other.underflow;
  overflow += other.overflow;
}

std::vector<double> Histogram::density() const {
  std::vector<double> d(bins(), 0.0);
  if (total == 0) return d;
  for (int k = 0; k < bins(); ++k) d[k] = static_cast<double>(counts[k]) / (total * width());
  return d;
}

Histogram make_histogram(std::span<const double> samples, int bins,
                         std::optional<std::pair<double, double>> range) {
  if (samples.empty()) throw std::invalid_argument("histogram needs at least one sample");
  double lo, hi;
  if (range) {
    std::tie(lo, hi) = *range;
  } else {
    const auto [mn, mx] = std::minmax_element(samples.begin(), samples.end());
    lo = *mn;
    hi = *mx;
    if (!(hi > lo)) {
      lo -= 0.5;
      hi += 0.5;
    }
  }
  Histogram h(lo, hi, bins);
  for (double x : samples) h.add(x);
  return h;
}

void write_histogram_csv(std::ostream& out, const Histogram& h) {
  std::vector<double> left, right;
  for (int k = 0; k < h.bins(); ++k) {
    left.push_back(h.lo + k * h.width());
    right.push_back(h.lo + (k + 1) * h.width());
  }
  io::write_table_csv(out, {"bin_left", "bin_right", "density"}, {left, right, h.density()});
}

double law_misfit(const Histogram& h, const std::function<double(double)>& law, double peak) {
  const auto d = h.density();
  constexpr int kSub = 256;
  double worst = 0.0;
  for (int k = 0; k < h.bins(); ++k) {
    const double a = h.lo + k * h.width();
    double avg = 0.0;
    for (int j = 0; j < kSub; ++j) avg += law(a + (j + 0.5) * h.width() / kSub);
    avg /= kSub;
    worst = std::max(worst, std::abs(d[k] - avg));
  }
  return worst / peak;
}

double semicircle_misfit(const Histogram& h, const PartitionDims& dims) {
  const double r = model_geometry(dims).r_tilde;
  return law_misfit(h, [&](double x) { return semicircle_scaled(dims, x); },
                    2.0 / (std::numbers::pi * r));
}

std::pair<double, double> default_histogram_range(const PartitionDims& dims) {
  const double r = model_geometry(dims).r_tilde;
  return {1.0 - 1.5 * r, 1.0 + 1.5 * r};
}

void ExperimentConfig::validate() const {
  if (trials < 1) throw ConfigError("trials must be >= 1");
  if (bins < 10) throw ConfigError("bins must be >= 10");
  if (workers < 1) throw ConfigError("workers must be >= 1");
  if (hist_range && !(hist_range->second > hist_range->first)) {
    throw ConfigError("histogram range must have hi > lo");
  }
  if (dims.m() > (std::int64_t{1} << 28)) throw ConfigError("state too large for dense sampling");
}

Stat summarize(std::span<const double> values) {
  Stat s;
  s.count = static_cast<std::int64_t>(values.size());
  if (values.empty()) {
    s.mean = s.se = std::numeric_limits<double>::quiet_NaN();
    return s;
  }
  double sum = 0.0;
  for (double v : values) sum += v;
  s.mean = sum / s.count;
  if (s.count > 1) {
    double ss = 0.0;
    for (double v : values) ss += (v - s.mean) * (v - s.mean);
    s.se = std::sqrt(ss / (s.count - 1) / s.count);
  }
  return s;
}

namespace {

struct TrialOutcome {
  bool ok = false;
  MeasureReport report;
  double trace_error = 0.0;
  double purity_error = 0.0;
  std::string error;
};

// Runs fn(trial, histogram) for every trial on `workers` threads.
template <typename Fn>
void parallel_trials(std::int64_t trials, int workers, std::vector<Histogram>& hists, Fn fn) {
  std::atomic<std::int64_t> next{0};
  std::vector<std::exception_ptr> errors(workers);
  auto body = [&](int w) {
    try {
      for (std::int64_t t = next++; t < trials; t = next++) fn(t, hists[w]);
    } catch (...) {
      errors[w] = std::current_exception();
    }
  };
  std::vector<std::thread> pool;
  for (int w = 1; w < workers; ++w) pool.emplace_back(body, w);
  body(0);
  for (auto& t : pool) t.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

}  // namespace

EnsembleSummary run_ensemble(const ExperimentConfig& config) {
  config.validate();
  const auto& dims = config.dims;
  const auto range = config.hist_range.value_or(default_histogram_range(dims));
  const Histogram empty(range.first, range.second, config.bins);
  std::vector<Histogram> hists(config.workers, empty);
  std::vector<TrialOutcome> outcomes(config.trials);
  const double n = static_cast<double>(dims.n());

  parallel_trials(config.trials, config.workers, hists, [&](std::int64_t t, Histogram& h) {
    TrialOutcome& o = outcomes[t];
    try {
      const PureState psi = sample_haar_state(dims, config.field, SeedSpec{config.seed, static_cast<std::uint64_t>(t)});
      const HermitianOperator rho = partial_trace(psi);
      const SpectrumSample mus = hermitian_spectrum(partial_transpose(rho, dims));
      std::optional<SpectrumSample> lambdas;
      if (config.pre_pt_spectrum) lambdas = hermitian_spectrum(rho);
      o.report = measure_from_spectra(dims, config.field, t, rho, lambdas ? &*lambdas : nullptr, mus);
      double s1 = 0.0, s2 = 0.0;
      for (double m : mus.values()) {
        s1 += m;
        s2 += m * m;
        h.add(n * m);
      }
      o.trace_error = std::abs(s1 - 1.0);
      o.purity_error = std::abs(s2 - rho.entries().squaredNorm());
      o.ok = true;
    } catch (const std::exception& e) {
      o.error = e.what();
    }
  });

  EnsembleSummary s;
  s.config = config;
  s.histogram = empty;
  for (const auto& h : hists) s.histogram.merge(h);
  std::vector<double> purity, entropy, neg, logneg, mumin, skew, m3;
  for (std::int64_t t = 0; t < config.trials; ++t) {
    const auto& o = outcomes[t];
    if (!o.ok) {
      s.failed_trials.push_back(t);
      continue;
    }
    const auto& r = o.report;
    ++s.completed;
    purity.push_back(r.purity);
    if (!std::isnan(r.entropy)) entropy.push_back(r.entropy);
    neg.push_back(r.negativity);
    logneg.push_back(r.log_negativity);
    mumin.push_back(r.mu_min);
    if (r.skewness) skew.push_back(*r.skewness);
    m3.push_back(r.m3_pt);
    if (r.is_npt) {
      ++s.npt_count;
      if (r.negative_count >= 2) ++s.multi_negative;
    }
    s.max_trace_error = std::max(s.max_trace_error, o.trace_error);
    s.max_purity_error = std::max(s.max_purity_error, o.purity_error);
    if (config.keep_rows) s.rows.push_back(r);
  }
  if (s.failed_trials.size() * 1000 > static_cast<std::size_t>(config.trials)) {
    const auto first = s.failed_trials.front();
    throw std::runtime_error("ensemble aborted: " + std::to_string(s.failed_trials.size()) +
                             " failed trials, first at trial " + std::to_string(first) + ": " +
                             outcomes[first].error);
  }
  s.purity = summarize(purity);
  s.entropy = summarize(entropy);
  s.negativity = summarize(neg);
  s.log_negativity = summarize(logneg);
  s.mu_min = summarize(mumin);
  s.skewness = summarize(skew);
  s.m3_pt = summarize(m3);
  if (s.completed > 0) {
    s.npt_fraction = static_cast<double>(s.npt_count) / s.completed;
    s.npt_se = std::sqrt(s.npt_fraction * (1.0 - s.npt_fraction) / s.completed);
  }
  s.misfit = semicircle_misfit(s.histogram, dims);
  return s;
}

namespace {

nlohmann::ordered_json stat_json(const Stat& s) {
  nlohmann::ordered_json j;
  j["mean"] = std::isfinite(s.mean) ? nlohmann::ordered_json(s.mean) : nullptr;
  j["se"] = s.se;
  j["count"] = s.count;
  return j;
}

nlohmann::ordered_json finite_or_null(double v) {
  return std::isfinite(v) ? nlohmann::ordered_json(v) : nlohmann::ordered_json(nullptr);
}

}  // namespace

nlohmann::ordered_json to_json(const EnsembleSummary& s) {
  nlohmann::ordered_json j;
  const auto& d = s.config.dims;
  j["N1"] = d.n1();
  j["N2"] = d.n2();
  j["N3"] = d.n3();
  j["field"] = to_string(s.config.field);
  j["trials"] = s.config.trials;
  j["seed"] = s.config.seed;
  j["completed"] = s.completed;
  j["failed_trials"] = s.failed_trials;
  j["purity"] = stat_json(s.purity);
  j["entropy"] = stat_json(s.entropy);
  j["negativity"] = stat_json(s.negativity);
  j["log_negativity"] = stat_json(s.log_negativity);
  j["mu_min"] = stat_json(s.mu_min);
  j["skewness"] = stat_json(s.skewness);
  j["m3_pt"] = stat_json(s.m3_pt);
  j["npt_fraction"] = s.npt_fraction;
  j["npt_se"] = s.npt_se;
  j["npt_count"] = s.npt_count;
  j["multi_negative"] = s.multi_negative;
  j["semicircle_misfit"] = s.misfit;
  j["max_trace_error"] = s.max_trace_error;
  j["max_purity_error"] = s.max_purity_error;
  nlohmann::ordered_json h;
  h["lo"] = s.histogram.lo;
  h["hi"] = s.histogram.hi;
  h["counts"] = s.histogram.counts;
  h["underflow"] = s.histogram.underflow;
  h["overflow"] = s.histogram.overflow;
  j["histogram"] = h;
  return j;
}

CriticalReport analyze_critical(const std::vector<MeasureReport>& rows, const PartitionDims& dims,
                                Field field, const TWTable& tw) {
  CriticalReport r;
  r.beta = field == Field::real ? 1 : 2;
  r.samples = static_cast<std::int64_t>(rows.size());
  std::vector<double> x, logneg;
  std::int64_t npt = 0, multi = 0;
  for (const auto& row : rows) {
    x.push_back(scale_min_eigenvalue(row.mu_min, dims));
    logneg.push_back(row.log_negativity);
    if (row.is_npt) {
      ++npt;
      if (row.negative_count >= 2) ++multi;
    }
  }
  const CriticalFit fit = fit_shift(x, tw, r.beta);
  r.shift = fit.shift;
  r.ks = fit.ks;
  r.ks_unshifted = fit.ks_unshifted;
  r.bracketed = fit.bracketed;
  r.warning = fit.warning;
  r.f_npt_predicted = npt_fraction(tw, r.beta, r.shift);
  r.f_npt_unshifted = npt_fraction(tw, r.beta, 0.0);
  const double n = static_cast<double>(r.samples);
  r.f_npt_observed = npt / n;
  r.f_npt_se = std::sqrt(r.f_npt_observed * (1.0 - r.f_npt_observed) / n);
  r.avg_logneg_predicted = dims.is_critical() ? avg_logneg_critical(dims, tw, r.beta, r.shift)
                                              : std::numeric_limits<double>::quiet_NaN();
  const Stat ln = summarize(logneg);
  r.avg_logneg_observed = ln.mean;
  r.avg_logneg_se = ln.se;
  r.multi_negative_fraction = npt > 0 ? static_cast<double>(multi) / npt : 0.0;
  return r;
}

CriticalReport run_critical(const ExperimentConfig& config, const TWTable& tw) {
  ExperimentConfig c = config;
  c.pre_pt_spectrum = false;
  c.keep_rows = true;
  const EnsembleSummary s = run_ensemble(c);
  return analyze_critical(s.rows, c.dims, c.field, tw);
}

nlohmann::ordered_json to_json(const CriticalReport& r) {
  nlohmann::ordered_json j;
  j["beta"] = r.beta;
  j["samples"] = r.samples;
  j["shift"] = r.shift;
  j["ks"] = r.ks;
  j["ks_unshifted"] = r.ks_unshifted;
  j["bracketed"] = r.bracketed;
  if (!r.warning.empty()) j["warning"] = r.warning;
  j["f_npt_predicted"] = r.f_npt_predicted;
  j["f_npt_unshifted"] = r.f_npt_unshifted;
  j["f_npt_observed"] = r.f_npt_observed;
  j["f_npt_se"] = r.f_npt_se;
  j["avg_logneg_predicted"] = finite_or_null(r.avg_logneg_predicted);
  j["avg_logneg_observed"] = finite_or_null(r.avg_logneg_observed);
  j["avg_logneg_se"] = r.avg_logneg_se;
  j["multi_negative_fraction"] = r.multi_negative_fraction;
  return j;
}

bool VerifyReport::all_passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

namespace {

CheckResult below(std::string name, double value, double limit, std::string detail = "") {
  return {std::move(name), value < limit, value, limit, std::move(detail)};
}

// |MC mean - exact| in units of the standard error.
CheckResult within_se(std::string name, const Stat& s, double exact, double n_se = 3.0) {
  const double z = std::abs(s.mean - exact) / s.se;
  std::ostringstream d;
  d << "mean " << io::format_double(s.mean) << " se " << s.se << " exact " << exact;
  return {std::move(name), z < n_se, z, n_se, d.str()};
}

}  // namespace

VerifyReport verify_suite(std::uint64_t seed, int workers) {
  VerifyReport rep;
  auto& out = rep.checks;

  {  // per-state Kempe symmetry
    double worst = 0.0;
    const auto dims = PartitionDims::from_dims(2, 3, 4);
    for (int t = 0; t < 200; ++t) {
      for (Field f : {Field::complex, Field::real}) {
        const auto k = kempe_invariant(sample_haar_state(dims, f, SeedSpec{seed, static_cast<std::uint64_t>(t)}));
        worst = std::max(worst, k.max_pairwise_difference());
      }
    }
    out.push_back(below("kempe symmetry (2,3,4)", worst, 1e-12));
  }
  {  // PT invariants and the first/second-factor equivalence
    const auto dims = PartitionDims::from_dims(3, 2, 5);
    double worst_inv = 0.0, worst_moments = 0.0, worst_party = 0.0, worst_identity = 0.0;
    for (int t = 0; t < 50; ++t) {
      const auto psi = sample_haar_state(dims, Field::complex, SeedSpec{seed + 1, static_cast<std::uint64_t>(t)});
      const auto rho = partial_trace(psi);
      const auto pt = partial_transpose(rho, dims);
      worst_inv = std::max(worst_inv, (partial_transpose(pt, dims).entries() - rho.entries()).cwiseAbs().maxCoeff());
      const auto mu2 = hermitian_spectrum(pt);
      const auto mu1 = hermitian_spectrum(partial_transpose(rho, dims, Party::first));
      for (std::size_t i = 0; i < mu2.size(); ++i) {
        worst_party = std::max(worst_party, std::abs(mu2.values()[i] - mu1.values()[i]));
      }
      worst_moments = std::max({worst_moments, std::abs(moment(mu2, 1) - 1.0),
                                std::abs(moment(mu2, 2) - rho.entries().squaredNorm())});
      worst_identity = std::max(worst_identity,
                                std::abs(log_negativity(mu2) - std::log(2.0 * negativity(mu2) + 1.0)));
    }
    out.push_back({"pt involution is exact", worst_inv == 0.0, worst_inv, 0.0, ""});
    out.push_back(below("pt trace and purity", worst_moments, 1e-10));
    out.push_back(below("pt first vs second factor", worst_party, 1e-10));
    out.push_back(below("log-negativity identity", worst_identity, 1e-10));
  }
  {  // Schmidt route against the matrix route
    double worst = 0.0;
    for (std::int64_t a : {2, 3, 4}) {
      for (std::int64_t b : {2, 4, 8}) {
        const auto dims = PartitionDims::from_dims(a, b, 1);
        const auto psi = sample_haar_state(dims, Field::complex, SeedSpec{seed + 2, static_cast<std::uint64_t>(a * 10 + b)});
        const auto w = schmidt_weights(psi);
        const auto s1 = schmidt_pt_spectrum(w, a, b);
        const auto s2 = pt_spectrum(psi);
        for (std::size_t i = 0; i < s1.size(); ++i) worst = std::max(worst, std::abs(s1.values()[i] - s2.values()[i]));
      }
    }
    out.push_back(below("schmidt pt spectrum", worst, 1e-10));
  }
  {  // exact third moments
    ExperimentConfig c;
    c.dims = PartitionDims::from_dims(2, 2, 2);
    c.trials = 20000;
    c.seed = seed + 3;
    c.workers = workers;
    c.keep_rows = false;
    for (Field f : {Field::complex, Field::real}) {
      c.field = f;
      const auto s = run_ensemble(c);
      out.push_back(within_se("third moment (2,2,2) " + std::string(to_string(f)), s.m3_pt, avg_third_moment_pt(c.dims, f)));
    }
  }
  {  // W state
    const double a = std::sqrt(3.0 / 7.0), b = std::sqrt(2.0 / 7.0);
    const auto w = wstate_analytics(a, b, b);
    CVector amp = CVector::Zero(8);
    amp[1] = a;
    amp[2] = b;
    amp[4] = b;
    const PureState psi(PartitionDims::from_dims(2, 2, 2), Field::real, amp);
    const auto m12 = pt_spectrum(psi);
    const auto m13 = pt_spectrum(permute_subsystems(psi, {0, 2, 1}));
    double worst = 0.0;
    for (int i = 0; i < 4; ++i) {
      worst = std::max({worst, std::abs(m12.values()[i] - w.pt12[i]), std::abs(m13.values()[i] - w.pt13[i])});
    }
    out.push_back(below("w-state spectra", worst, 1e-12));
  }
  {  // integer sequences
    const auto s = tn_sequences(20);
    bool ok = s.t[0] == s.t_prime[0] && s.t[2] == s.t_prime[2];
    for (int n = 4; n <= 20; ++n) ok = ok && s.t[n - 1] < s.t_prime[n - 1];
    out.push_back({"t_n < t'_n for 4 <= n <= 20", ok, ok ? 0.0 : 1.0, 0.5, ""});
  }
  {  // Tracy-Widom table
    const TWTable tw = solve_painleve2();
    double worst_mono = 0.0;
    bool in_range = true;
    for (std::size_t k = 0; k + 1 < tw.s.size(); ++k) {
      worst_mono = std::max({worst_mono, tw.f2_cdf[k + 1] - tw.f2_cdf[k], tw.f1_cdf[k + 1] - tw.f1_cdf[k]});
      in_range = in_range && tw.f2_cdf[k] >= 0 && tw.f2_cdf[k] <= 1 && tw.f1_cdf[k] >= 0 && tw.f1_cdf[k] <= 1;
    }
    out.push_back(below("tw monotone", worst_mono, 1e-15));
    out.push_back({"tw cdf in [0,1]", in_range, 0.0, 0.0, ""});
    double mass2 = 0.0, mass1 = 0.0;
    for (std::size_t k = 0; k + 1 < tw.s.size(); ++k) {
      const double h = tw.s[k] - tw.s[k + 1];
      mass2 += 0.5 * h * (tw.f2_pdf[k] + tw.f2_pdf[k + 1]);
      mass1 += 0.5 * h * (tw.f1_pdf[k] + tw.f1_pdf[k + 1]);
    }
    out.push_back(below("tw density mass", std::max(std::abs(mass2 - 1.0), std::abs(mass1 - 1.0)), 1e-5));
    out.push_back(below("tw2 tails", std::max(1.0 - tw.f2_cdf.front(), tw.f2_cdf.back()), 1e-9));
    // 1 - F1(8) = 1 - exp(-int_8^inf Ai / 2) is 8.05e-9, so beta = 1 gets a looser upper bound.
    out.push_back(below("tw1 tails", std::max(1.0 - tw.f1_cdf.front(), tw.f1_cdf.back()), 1e-8));
  }
  {  // rotor construction
    RotorParams p = RotorParams::set1({2, 3, 4});
    out.push_back(below("rotor unitarity (2,3,4)", coupled_unitary(p).unitarity_residual(), 1e-10));
  }
  {  // worker-count independence
    ExperimentConfig c;
    c.dims = PartitionDims::from_dims(2, 2, 3);
    c.field = Field::real;
    c.trials = 300;
    c.seed = seed + 4;
    auto csv = [&](int w) {
      c.workers = w;
      std::ostringstream os;
      io::write_reports_csv(os, run_ensemble(c).rows);
      return os.str();
    };
    const bool same = csv(1) == csv(std::max(2, workers + 1));
    out.push_back({"worker-count independence", same, same ? 0.0 : 1.0, 0.5, ""});
  }
  return rep;
}

}  // namespace ptlab
