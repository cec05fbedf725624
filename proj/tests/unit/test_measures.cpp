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

#include "oracles.hpp"
#include "ptlab/ensembles.hpp"
#include "ptlab/laws.hpp"
#include "ptlab/measures.hpp"
#include "ptlab/qstate.hpp"

namespace ptlab {
namespace {

SpectrumSample spec(std::vector<double> v) {
  double s = 0;
  for (double x : v) s += x;
  std::sort(v.begin(), v.end());
  return SpectrumSample(std::move(v), s);
}

PureState w_state(double a, double b, double c) {
  CVector amp = CVector::Zero(8);
  amp[1] = a;
  amp[2] = b;
  amp[4] = c;
  return PureState(PartitionDims::from_dims(2, 2, 2), Field::real, amp);
}

double fourth_moment_13(const PureState& psi) {
  return moment(pt_spectrum(permute_subsystems(psi, {0, 2, 1})), 4);
}

TEST(Negativity, Examples) {
  EXPECT_EQ(negativity(spec({0.1, 0.2, 0.3, 0.4})), 0.0);
  EXPECT_EQ(log_negativity(spec({0.1, 0.2, 0.3, 0.4})), 0.0);
  const auto bell = spec({-0.5, 0.5, 0.5, 0.5});
  EXPECT_DOUBLE_EQ(negativity(bell), 0.5);
  EXPECT_NEAR(log_negativity(bell), std::log(2.0), 1e-15);
  EXPECT_TRUE(is_npt(bell));
  EXPECT_EQ(negative_count(bell), 1);
  EXPECT_THROW(negativity(spec({0.3, 0.3})), std::invalid_argument);
}

TEST(Negativity, ThresholdIsStrict) {
  EXPECT_FALSE(is_npt(spec({-1e-13, 0.5, 0.5 + 1e-13})));
  EXPECT_TRUE(is_npt(spec({-1e-11, 0.5, 0.5 + 1e-11})));
}

TEST(Negativity, PureStateAverageAt32x32) {
  const auto d = PartitionDims::from_dims(32, 32, 1);
  std::vector<double> v;
  for (std::uint64_t t = 0; t < 200; ++t) {
    const auto psi = sample_haar_state(d, Field::complex, SeedSpec{30, t});
    v.push_back(negativity(schmidt_pt_spectrum(schmidt_weights(psi), 32, 32)));
  }
  const double k = 8.0 / (3.0 * M_PI);
  const double expected = 0.5 * (k * k * 32 - 1);
  EXPECT_NEAR(oracle::mean_se(v).mean, expected, 0.02 * expected);
}

TEST(LogNegativity, RealStatesAt10x10x10) {
  const auto d = PartitionDims::from_dims(10, 10, 10);
  std::vector<double> v;
  for (std::uint64_t t = 0; t < 1000; ++t) v.push_back(measure_state(sample_haar_state(d, Field::real, SeedSpec{31, t}), t).log_negativity);
  EXPECT_NEAR(oracle::mean_se(v).mean, 1.0032, 0.01);
}

TEST(Moment, SpectrumAndMatrixAgree) {
  const auto d = PartitionDims::from_dims(3, 3, 4);
  for (std::uint64_t t = 0; t < 10; ++t) {
    const auto rho = partial_trace(sample_haar_state(d, Field::complex, SeedSpec{32, t}));
    const auto pt = partial_transpose(rho, d);
    const auto mu = hermitian_spectrum(pt);
    for (int m = 1; m <= 6; ++m) EXPECT_NEAR(moment(mu, m), moment(pt, m), 1e-10) << m;
    EXPECT_NEAR(moment(mu, 1), 1.0, 1e-12);
    EXPECT_NEAR(moment(mu, 2), moment(hermitian_spectrum(rho), 2), 1e-10);
  }
  EXPECT_THROW(moment(spec({1.0}), 0), std::invalid_argument);
}

TEST(Moment, KempeAverageForQubits) {
  const auto d = PartitionDims::from_dims(2, 2, 2);
  std::vector<double> v, r;
  for (std::uint64_t t = 0; t < 100000; ++t) {
    const auto rho = partial_trace(sample_haar_state(d, Field::complex, SeedSpec{33, t}));
    v.push_back(moment(partial_transpose(rho, d), 3));
    r.push_back(moment(rho, 3));
  }
  const auto s = oracle::mean_se(v);
  EXPECT_LT(std::abs(s.mean - 0.4), 3 * s.se) << s.mean << " +- " << s.se;
  const auto sr = oracle::mean_se(r);
  EXPECT_LT(std::abs(sr.mean - 0.5), 3 * sr.se) << sr.mean << " +- " << sr.se;
}

TEST(Kempe, WStates) {
  const double a = 1 / std::sqrt(3.0);
  const auto k = kempe_invariant(w_state(a, a, a));
  EXPECT_NEAR(k.pt12, 2.0 / 9, 1e-14);
  EXPECT_LT(k.max_pairwise_difference(), 1e-14);
  const auto k2 = kempe_invariant(w_state(std::sqrt(3.0 / 7), std::sqrt(2.0 / 7), std::sqrt(2.0 / 7)));
  const double from_eigs = (8.0 + 8.0 + 64.0 - 1.0) / 343.0;
  EXPECT_NEAR(k2.pt12, from_eigs, 1e-14);
  EXPECT_NEAR(k2.pt23, from_eigs, 1e-14);
  EXPECT_NEAR(k2.pt31, from_eigs, 1e-14);
}

TEST(Kempe, PermutationSymmetricOnEverySample) {
  for (auto d : {PartitionDims::from_dims(2, 2, 2), PartitionDims::from_dims(2, 3, 4), PartitionDims::from_dims(4, 4, 4)}) {
    for (Field f : {Field::complex, Field::real}) {
      for (std::uint64_t t = 0; t < 50; ++t) {
        const auto k = kempe_invariant(sample_haar_state(d, f, SeedSpec{34, t}));
        EXPECT_LT(k.max_pairwise_difference(), 1e-12);
      }
    }
  }
}

TEST(Kempe, QutritAverage) {
  const auto d = PartitionDims::from_dims(3, 3, 3);
  std::vector<double> v;
  for (std::uint64_t t = 0; t < 50000; ++t) v.push_back(kempe_invariant(sample_haar_state(d, Field::complex, SeedSpec{35, t})).pt12);
  const auto s = oracle::mean_se(v);
  EXPECT_LT(std::abs(s.mean - 27.0 / 203), 3 * s.se) << s.mean << " +- " << s.se;
}

TEST(Kempe, FourthMomentIsNotSymmetric) {
  const auto d = PartitionDims::from_dims(2, 2, 2);
  int asym = 0;
  const int n = 200;
  for (std::uint64_t t = 0; t < n; ++t) {
    const auto psi = sample_haar_state(d, Field::complex, SeedSpec{36, t});
    if (std::abs(moment(pt_spectrum(psi), 4) - fourth_moment_13(psi)) > 1e-6) ++asym;
  }
  EXPECT_GT(asym, n / 2);
}

TEST(Kempe, OddMomentsSymmetricWhenOneFactorIsProduct) {
  // |phi>_{12} (x) |chi>_3: every odd PT moment agrees across pairings.
  for (std::uint64_t t = 0; t < 20; ++t) {
    const auto phi = sample_haar_state(PartitionDims::from_dims(2, 3, 1), Field::complex, SeedSpec{37, t});
    const auto chi = sample_haar_state(PartitionDims::from_dims(1, 1, 2), Field::complex, SeedSpec{38, t});
    CVector amp(12);
    for (int i = 0; i < 6; ++i)
      for (int c = 0; c < 2; ++c) amp[i * 2 + c] = phi.amplitudes()[i] * chi.amplitudes()[c];
    const PureState psi(PartitionDims::from_dims(2, 3, 2), Field::complex, amp.normalized());
    const auto s12 = pt_spectrum(psi);
    const auto s23 = pt_spectrum(permute_subsystems(psi, {1, 2, 0}));
    const auto s31 = pt_spectrum(permute_subsystems(psi, {2, 0, 1}));
    for (int m : {1, 3, 5, 7}) {
      EXPECT_NEAR(moment(s12, m), moment(s23, m), 1e-12) << m;
      EXPECT_NEAR(moment(s12, m), moment(s31, m), 1e-12) << m;
    }
  }
}

TEST(Skewness, Basics) {
  EXPECT_NEAR(*sample_skewness(spec({-0.5, 0.0, 0.5})), 0.0, 1e-15);
  EXPECT_FALSE(sample_skewness(spec({0.25, 0.25, 0.25, 0.25})).has_value());
  EXPECT_THROW(sample_skewness(spec({0.5, 0.5})), std::invalid_argument);
  // {0, 0, 1}: mean 1/3, m2 = 2/9, m3 = 2/27, skewness 1/sqrt 2.
  EXPECT_NEAR(*sample_skewness(spec({0.0, 0.0, 1.0})), 1 / std::sqrt(2.0), 1e-14);
}

TEST(Skewness, AsymmetricBipartitionAtL16) {
  // Few states suffice: the per-state spread is small compared with 0.25.
  const auto d = PartitionDims::from_qubits(1, 7, 16);
  std::vector<double> v;
  for (std::uint64_t t = 0; t < 5; ++t) v.push_back(*measure_state(sample_haar_state(d, Field::complex, SeedSpec{39, t}), t).skewness);
  EXPECT_NEAR(oracle::mean_se(v).mean, 0.2509, 0.02);
}

TEST(PurityEntropy, MaximallyMixed) {
  const auto s = spec(std::vector<double>(5, 0.2));
  EXPECT_NEAR(purity(s), 0.2, 1e-15);
  EXPECT_NEAR(von_neumann_entropy(s), std::log(5.0), 1e-14);
  EXPECT_NEAR(von_neumann_entropy(spec({-1e-9, 0.5, 0.5 + 1e-9})), std::log(2.0), 1e-8);
  EXPECT_THROW(von_neumann_entropy(spec({-1e-6, 0.5, 0.5 + 1e-6})), std::invalid_argument);
}

TEST(PurityEntropy, QubitWithQubitEnvironment) {
  const auto d = PartitionDims::from_dims(2, 1, 2);
  std::vector<double> p, e;
  for (std::uint64_t t = 0; t < 100000; ++t) {
    const auto lam = hermitian_spectrum(partial_trace(sample_haar_state(d, Field::complex, SeedSpec{40, t})));
    p.push_back(purity(lam));
    e.push_back(von_neumann_entropy(lam));
  }
  const auto sp = oracle::mean_se(p), se = oracle::mean_se(e);
  EXPECT_LT(std::abs(sp.mean - 0.8), 3 * sp.se);
  EXPECT_LT(std::abs(se.mean - 1.0 / 3), 3 * se.se);
  EXPECT_NEAR(avg_purity(2, 2), 0.8, 1e-15);
  EXPECT_NEAR(page_entropy(2, 2), 1.0 / 3, 1e-15);
}

TEST(MeasureReport, InvariantsOnRandomStates) {
  for (auto d : {PartitionDims::from_dims(2, 2, 2), PartitionDims::from_dims(4, 4, 4), PartitionDims::from_dims(4, 4, 2)}) {
    for (Field f : {Field::complex, Field::real}) {
      for (std::uint64_t t = 0; t < 30; ++t) {
        const auto r = measure_state(sample_haar_state(d, f, SeedSpec{41, t}), t);
        EXPECT_NEAR(r.log_negativity, std::log(2 * r.negativity + 1), 1e-10);
        EXPECT_EQ(r.is_npt, r.mu_min < -1e-12);
        EXPECT_GE(r.purity, 1.0 / d.n() - 1e-12);
        EXPECT_LE(r.purity, 1.0 + 1e-12);
        EXPECT_GE(r.entropy, 0.0);
        EXPECT_GE(r.negativity, 0.0);
      }
    }
  }
  const auto r = measure_state(sample_haar_state(PartitionDims::from_dims(2, 2, 2), Field::complex, SeedSpec{42, 0}), 0,
                               MeasureOptions{false});
  EXPECT_TRUE(std::isnan(r.entropy));
  EXPECT_EQ(measure_report_columns().front(), "trial");
  EXPECT_EQ(measure_report_columns().back(), "m3_pt");
}

}  // namespace
}  // namespace ptlab
