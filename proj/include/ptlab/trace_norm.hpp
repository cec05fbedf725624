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
#include <vector>

#include "ptlab/state.hpp"

namespace ptlab {

/// rho_12^{T2} of a tripartite pure state applied to vectors without forming
/// the N x N matrix. With V the input reshaped to N1 x N2 and Psi_m the
/// N1 x N2 slice of amplitudes at environment index m,
///   out = sum_m Psi_m V^T conj(Psi_m)
/// reshaped back to length N.
class PartialTransposeOperator {
 public:
  explicit PartialTransposeOperator(const PureState& state);

  std::int64_t dim() const { return n1_ * n2_; }
  void apply(const CVector& in, CVector& out) const;

 private:
  std::int64_t n1_, n2_;
  std::vector<CMatrix> slices_;
  std::vector<CMatrix> conj_slices_;
};

struct TraceNormOptions {
  int degree = 400;          // Chebyshev expansion order of |x|
  int probes = 8;            // Hutchinson probe vectors
  int lanczos_steps = 80;    // for the spectral interval
  double margin = 0.1;       // relative widening of the Lanczos interval
  std::uint64_t seed = 1;
};

struct TraceNormEstimate {
  double trace_norm = 0.0;
  double std_error = 0.0;  // spread over probes
  double lo = 0.0, hi = 0.0;
};

/// Extreme Ritz values after `steps` Lanczos iterations from a random start.
std::pair<double, double> lanczos_extremes(const PartialTransposeOperator& op, int steps,
                                           std::uint64_t seed);

/// Stochastic estimate of tr|H| from a Chebyshev expansion of |x| on a
/// widened Lanczos interval. Throws SolverError if the Chebyshev moments
/// show that the spectrum leaks outside the interval.
TraceNormEstimate estimate_trace_norm(const PartialTransposeOperator& op,
                                      const TraceNormOptions& options = {});

/// Chebyshev coefficients c_k of |a x + b| on [-1, 1], k < degree.
std::vector<double> abs_chebyshev_coefficients(double a, double b, int degree);

}  // namespace ptlab
