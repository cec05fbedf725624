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

#include <gtest/gtest.h>

#include <cmath>
#include <sstream>

#include "ptlab/harness.hpp"
#include "ptlab/io.hpp"
#include "ptlab/laws.hpp"

namespace ptlab {
namespace {

ExperimentConfig config(PartitionDims d, Field f, std::int64_t trials, int workers = 1) {
  ExperimentConfig c;
  c.dims = d;
  c.field = f;
  c.trials = trials;
  c.workers = workers;
  return c;
}

TEST(Histogram, ConstantSamplesFillOneBin) {
  const std::vector<double> x(50, 2.5);
  const auto h = make_histogram(x, 10);
  const auto dens = h.density();
  int occupied = 0;
  for (int k = 0; k < h.bins(); ++k) {
    if (h.counts[k] > 0) {
      ++occupied;
      EXPECT_NEAR(dens[k], 1 / h.width(), 1e-12);
    }
  }
  EXPECT_EQ(occupied, 1);
  EXPECT_THROW(make_histogram(std::vector<double>{}, 10), std::invalid_argument);
}

TEST(Histogram, AreaCountsOutOfRangeSamples) {
  const std::vector<double> x{-2.0, 0.1, 0.2, 0.5, 0.99, 1.0, 3.0};
  const auto h = make_histogram(x, 10, std::make_pair(0.0, 1.0));
  EXPECT_EQ(h.underflow, 1);
  EXPECT_EQ(h.overflow, 1);
  EXPECT_EQ(h.total, 7);
  double area = 0;
  for (double v : h.density()) area += v * h.width();
  EXPECT_NEAR(area, 5.0 / 7, 1e-12);
  auto a = make_histogram(std::vector<double>{0.1, 0.7}, 10, std::make_pair(0.0, 1.0));
  a.merge(h);
  EXPECT_EQ(a.total, 9);
  EXPECT_THROW(a.merge(Histogram(0.0, 2.0, 10)), std::invalid_argument);
  std::ostringstream os;
  write_histogram_csv(os, a);
  EXPECT_EQ(os.str().substr(0, os.str().find('\n')), "bin_left,bin_right,density");
}

TEST(Histogram, LawMisfitOfExactSamplesIsSmall) {
  std::vector<double> x;
  for (int k = 0; k < 100000; ++k) x.push_back((k + 0.5) / 100000);
  const auto h = make_histogram(x, 20, std::make_pair(0.0, 1.0));
  EXPECT_LT(law_misfit(h, [](double) { return 1.0; }, 1.0), 1e-9);
  EXPECT_NEAR(law_misfit(h, [](double) { return 0.5; }, 1.0), 0.5, 1e-9);
}

TEST(Config, Validation) {
  auto c = config(PartitionDims::from_dims(2, 2, 2), Field::complex, 0);
  EXPECT_THROW(c.validate(), ConfigError);
  c.trials = 10;
  c.bins = 5;
  EXPECT_THROW(c.validate(), ConfigError);
  c.bins = 10;
  c.workers = 0;
  EXPECT_THROW(c.validate(), ConfigError);
  c.workers = 1;
  EXPECT_NO_THROW(c.validate());
  EXPECT_THROW(run_ensemble(config(PartitionDims::from_dims(2, 2, 2), Field::complex, -3)), ConfigError);
}

TEST(Ensemble, DeterministicAcrossRunsAndWorkers) {
  const auto d = PartitionDims::from_dims(2, 3, 4);
  auto csv = [](const EnsembleSummary& s) {
    std::ostringstream os;
    io::write_reports_csv(os, s.rows);
    return os.str();
  };
  const auto a = run_ensemble(config(d, Field::complex, 300, 1));
  const auto b = run_ensemble(config(d, Field::complex, 300, 1));
  const auto c = run_ensemble(config(d, Field::complex, 300, 3));
  EXPECT_EQ(csv(a), csv(b));
  EXPECT_EQ(csv(a), csv(c));
  EXPECT_EQ(to_json(a).dump(), to_json(c).dump());
  EXPECT_EQ(a.histogram.counts, c.histogram.counts);
  ASSERT_EQ(a.rows.size(), 300u);
  for (std::size_t k = 0; k < a.rows.size(); ++k) EXPECT_EQ(a.rows[k].trial, k);
  EXPECT_LT(a.max_trace_error, 1e-10);
  EXPECT_LT(a.max_purity_error, 1e-10);
}

TEST(Ensemble, SummaryStatistics) {
  const auto s = run_ensemble(config(PartitionDims::from_qubits(1, 1, 5), Field::real, 4000));
  EXPECT_EQ(s.completed, 4000);
  EXPECT_TRUE(s.failed_trials.empty());
  std::int64_t npt = 0;
  double sum = 0, sum2 = 0;
  for (const auto& r : s.rows) {
    npt += r.is_npt;
    sum += r.log_negativity;
    sum2 += r.log_negativity * r.log_negativity;
  }
  EXPECT_EQ(npt, s.npt_count);
  const double f = npt / 4000.0;
  EXPECT_DOUBLE_EQ(s.npt_fraction, f);
  EXPECT_NEAR(s.npt_se, std::sqrt(f * (1 - f) / 4000), 1e-15);
  const double mean = sum / 4000, var = (sum2 - 4000 * mean * mean) / 3999;
  EXPECT_NEAR(s.log_negativity.mean, mean, 1e-12);
  EXPECT_NEAR(s.log_negativity.se, std::sqrt(var / 4000), 1e-9);
  // Table II neighbourhood: 25.39%.
  EXPECT_NEAR(100 * f, 25.39, 2.5);
}

TEST(Ensemble, RarelyNptAtSixQubits) {
  // About 0.6% of complex states (see the notes on the Table I entry).
  auto c = config(PartitionDims::from_qubits(1, 1, 6), Field::complex, 40000);
  c.keep_rows = false;
  c.pre_pt_spectrum = false;
  const auto s = run_ensemble(c);
  EXPECT_TRUE(s.rows.empty());
  EXPECT_LT(std::abs(s.npt_fraction - 0.006), 4 * s.npt_se) << s.npt_fraction;
}

TEST(Ensemble, PooledSupportAtRTilde2) {
  auto c = config(PartitionDims::from_qubits(3, 3, 12), Field::complex, 400);
  const auto s = run_ensemble(c);
  EXPECT_EQ(s.histogram.lo, -2.0);
  EXPECT_EQ(s.histogram.hi, 4.0);
  std::int64_t inside = 0, total = 0;
  const auto dens = s.histogram.density();
  for (int k = 0; k < s.histogram.bins(); ++k) {
    const double mid = s.histogram.lo + (k + 0.5) * s.histogram.width();
    total += s.histogram.counts[k];
    if (mid > -1.15 && mid < 3.15) inside += s.histogram.counts[k];
  }
  EXPECT_GT(double(inside) / total, 0.995);
  EXPECT_LT(s.misfit, 0.1);
}

TEST(Ensemble, PureCaseIsNotASemicircle) {
  const auto s = run_ensemble(config(PartitionDims::from_qubits(3, 3, 6), Field::complex, 1000));
  EXPECT_GT(s.misfit, 0.2);
}

TEST(Critical, ReportAtSmallCriticalDims) {
  const TWTable tw = solve_painleve2();
  // L1 = L2 = 1, L = 6: N3 = 4 N.
  auto c = config(PartitionDims::from_qubits(1, 1, 6), Field::complex, 2000);
  const auto r = run_critical(c, tw);
  EXPECT_EQ(r.beta, 2);
  EXPECT_EQ(r.samples, 2000);
  EXPECT_GE(r.shift, 0.0);
  EXPECT_LE(r.f_npt_predicted, r.f_npt_unshifted + 1e-15);
  EXPECT_LT(r.f_npt_observed, 0.02);
  EXPECT_NEAR(r.f_npt_se, std::sqrt(r.f_npt_observed * (1 - r.f_npt_observed) / 2000), 1e-15);
  EXPECT_TRUE(std::isfinite(r.avg_logneg_predicted));
  const auto j = to_json(r);
  for (const char* key : {"shift", "ks", "f_npt_predicted", "f_npt_observed", "avg_logneg_predicted", "avg_logneg_observed"}) {
    EXPECT_TRUE(j.contains(key)) << key;
  }
}

TEST(Critical, AnalyzeMatchesRows) {
  const TWTable tw = solve_painleve2();
  auto c = config(PartitionDims::from_dims(2, 2, 12), Field::real, 3000);
  const auto s = run_ensemble(c);
  const auto r = analyze_critical(s.rows, c.dims, Field::real, tw);
  EXPECT_EQ(r.beta, 1);
  EXPECT_NEAR(r.f_npt_observed, s.npt_fraction, 1e-15);
  EXPECT_NEAR(r.avg_logneg_observed, s.log_negativity.mean, 1e-15);
  EXPECT_TRUE(std::isnan(r.avg_logneg_predicted));  // off criticality
  const std::vector<MeasureReport> few(s.rows.begin(), s.rows.begin() + 100);
  EXPECT_THROW(analyze_critical(few, c.dims, Field::real, tw), std::invalid_argument);
}

TEST(Verify, AllChecksPass) {
  const auto v = verify_suite(20260101, 1);
  EXPECT_FALSE(v.checks.empty());
  for (const auto& c : v.checks) EXPECT_TRUE(c.passed) << c.name << " value " << c.value << " limit " << c.limit << " " << c.detail;
}

}  // namespace
}  // namespace ptlab
