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

#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <json.hpp>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "ptlab/dims.hpp"
#include "ptlab/measures.hpp"
#include "ptlab/tracy_widom.hpp"

namespace ptlab {

class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct Histogram {
  double lo = 0.0, hi = 1.0;
  std::vector<std::int64_t> counts;
  std::int64_t total = 0;  // includes samples outside [lo, hi)
  std::int64_t underflow = 0, overflow = 0;

  Histogram() = default;
  Histogram(double lo, double hi, int bins);
  int bins() const { return static_cast<int>(counts.size()); }
  double width() const { return (hi - lo) / bins(); }
  void add(double x);
  void merge(const Histogram& other);
  /// count / (total * width), so a histogram holding every sample has area 1.
  std::vector<double> density() const;
};

/// Without a range the histogram spans [min, max] of the samples (a
/// unit-width window around a constant sample set).
Histogram make_histogram(std::span<const double> samples, int bins,
                         std::optional<std::pair<double, double>> range = std::nullopt);
void write_histogram_csv(std::ostream& out, const Histogram& h);

/// max over bins of |density - bin average of law| divided by `peak`.
double law_misfit(const Histogram& h, const std::function<double(double)>& law, double peak);
/// The same against the scaled semicircle of `dims`.
double semicircle_misfit(const Histogram& h, const PartitionDims& dims);

/// [1 - 1.5 r_tilde, 1 + 1.5 r_tilde] on the scaled axis.
std::pair<double, double> default_histogram_range(const PartitionDims& dims);

struct ExperimentConfig {
  PartitionDims dims = PartitionDims::from_dims(2, 2, 2);
  Field field = Field::complex;
  std::int64_t trials = 10000;
  std::uint64_t seed = 20260101;
  int bins = 40;
  std::string out;
  std::string tag = "ensemble";
  int workers = 1;
  bool pre_pt_spectrum = true;
  bool keep_rows = true;
  std::optional<std::pair<double, double>> hist_range;

  /// Throws ConfigError.
  void validate() const;
};

struct Stat {
  double mean = 0.0;
  double se = 0.0;
  std::int64_t count = 0;
};
Stat summarize(std::span<const double> values);

struct EnsembleSummary {
  ExperimentConfig config;
  std::int64_t completed = 0;
  std::vector<std::uint64_t> failed_trials;
  Stat purity, entropy, negativity, log_negativity, mu_min, skewness, m3_pt;
  std::int64_t npt_count = 0;
  double npt_fraction = 0.0;
  double npt_se = 0.0;  // sqrt(f (1 - f) / trials)
  std::int64_t multi_negative = 0;  // NPT samples with two or more negative eigenvalues
  Histogram histogram;              // pooled x = N mu
  double misfit = 0.0;              // against the scaled semicircle
  double max_trace_error = 0.0;     // |sum mu - 1|
  double max_purity_error = 0.0;    // |sum mu^2 - tr rho^2|
  std::vector<MeasureReport> rows;
};

/// Samples, measures and aggregates `config.trials` states. Output depends
/// only on (seed, trials), never on the worker count. Throws
/// std::runtime_error if more than 0.1% of trials fail.
EnsembleSummary run_ensemble(const ExperimentConfig& config);
nlohmann::ordered_json to_json(const EnsembleSummary& s);

struct CriticalReport {
  int beta = 2;
  std::int64_t samples = 0;
  double shift = 0.0;
  double ks = 0.0;
  double ks_unshifted = 0.0;
  bool bracketed = true;
  std::string warning;
  double f_npt_predicted = 0.0;   // with the fitted shift
  double f_npt_unshifted = 0.0;
  double f_npt_observed = 0.0;
  double f_npt_se = 0.0;
  double avg_logneg_predicted = 0.0;  // NaN off criticality
  double avg_logneg_observed = 0.0;
  double avg_logneg_se = 0.0;
  double multi_negative_fraction = 0.0;
};

CriticalReport analyze_critical(const std::vector<MeasureReport>& rows, const PartitionDims& dims,
                                Field field, const TWTable& tw);
CriticalReport run_critical(const ExperimentConfig& config, const TWTable& tw);
nlohmann::ordered_json to_json(const CriticalReport& r);

struct CheckResult {
  std::string name;
  bool passed = false;
  double value = 0.0;
  double limit = 0.0;
  std::string detail;
};

struct VerifyReport {
  std::vector<CheckResult> checks;
  bool all_passed() const;
};

/// Module invariants at small dimensions.
VerifyReport verify_suite(std::uint64_t seed = 20260101, int workers = 1);

}  // namespace ptlab
