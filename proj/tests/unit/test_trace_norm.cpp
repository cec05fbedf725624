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
#include "ptlab/qstate.hpp"
#include "ptlab/trace_norm.hpp"

namespace ptlab {
namespace {

TEST(PartialTransposeOperator, MatchesDenseMatrix) {
  const auto d = PartitionDims::from_dims(3, 4, 5);
  const auto psi = sample_haar_state(d, Field::complex, SeedSpec{60, 0});
  const CMatrix dense = oracle::transpose_second(oracle::partial_trace(psi.amplitudes(), 3, 4, 5), 3, 4);
  const PartialTransposeOperator op(psi);
  EXPECT_EQ(op.dim(), 12);
  for (int k = 0; k < 12; ++k) {
    CVector e = CVector::Zero(12), out;
    e[k] = 1.0;
    op.apply(e, out);
    EXPECT_LT((out - dense.col(k)).cwiseAbs().maxCoeff(), 1e-15) << k;
  }
}

TEST(Chebyshev, ReproducesAbsoluteValue) {
  const auto c = abs_chebyshev_coefficients(1.0, 0.0, 200);
  for (double x : {-0.9, -0.3, 0.05, 0.5, 1.0}) {
    double s = 0, t0 = 1, t1 = x;
    s = c[0] * t0 + c[1] * t1;
    for (std::size_t k = 2; k < c.size(); ++k) {
      const double t2 = 2 * x * t1 - t0;
      s += c[k] * t2;
      t0 = t1;
      t1 = t2;
    }
    EXPECT_NEAR(s, std::abs(x), 5e-3) << x;
  }
  // An affine map that keeps the kink out of range is reproduced exactly.
  const auto shifted = abs_chebyshev_coefficients(0.5, 2.0, 20);
  EXPECT_NEAR(shifted[0], 2.0, 1e-12);
  EXPECT_NEAR(shifted[1], 0.5, 1e-12);
}

TEST(TraceNormEstimate, LanczosBracketsSpectrum) {
  const auto d = PartitionDims::from_dims(8, 8, 20);
  const auto psi = sample_haar_state(d, Field::complex, SeedSpec{61, 0});
  const auto mu = pt_spectrum(psi);
  const auto [lo, hi] = lanczos_extremes(PartialTransposeOperator(psi), 64, 1);
  EXPECT_NEAR(lo, mu.min_value(), 1e-10);
  EXPECT_NEAR(hi, mu.max_value(), 1e-10);
}

TEST(TraceNormEstimate, AgreesWithDenseSpectrum) {
  for (Field f : {Field::complex, Field::real}) {
    const auto d = PartitionDims::from_qubits(4, 4, 12);
    const auto psi = sample_haar_state(d, f, SeedSpec{62, 0});
    double dense = 0;
    const auto mu = pt_spectrum(psi);
    for (double v : mu.values()) dense += std::abs(v);
    const auto est = estimate_trace_norm(PartialTransposeOperator(psi), TraceNormOptions{});
    EXPECT_NEAR(est.trace_norm, dense, std::max(4 * est.std_error, 0.01 * dense));
    EXPECT_NEAR(est.trace_norm, dense, 0.03 * dense);
    EXPECT_GT(est.std_error, 0.0);
  }
}

}  // namespace
}  // namespace ptlab
