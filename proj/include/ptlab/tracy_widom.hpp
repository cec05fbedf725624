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

#include <span>
#include <string>
#include <vector>

#include "ptlab/dims.hpp"

namespace ptlab {

/// Ai(x) and Ai'(x) from the large-argument asymptotic series, x >= 5.
struct AiryPair {
  double ai, aip;
};
AiryPair airy_asymptotic(double x);

struct TWOptions {
  double s_start = 8.0;
  double s_end = -10.0;
  double step = 0.005;   // output grid spacing
  double rtol = 1e-13;
  double atol = 1e-22;
  // Below s_switch the solution is taken from its left-tail series; the
  // backward integration amplifies departures from the branch like
  // exp((2 sqrt 2 / 3) |s|^{3/2}).
  double s_switch = -6.0;
};

/// Hastings-McLeod left tail sqrt(-s/2) (1 + 1/(8 s^3) - 73/(128 s^6) + ...),
/// optimally truncated; value and derivative, for s <= -4.
std::pair<double, double> hm_left_tail(double s);

/// Hastings-McLeod solution tabulated on a descending grid together with the
/// beta = 1 and beta = 2 largest-eigenvalue laws.
struct TWTable {
  std::vector<double> s;  // descending
  std::vector<double> q, qp;
  std::vector<double> f2_cdf, f1_cdf;
  std::vector<double> f2_pdf, f1_pdf;

  double step() const { return s[0] - s[1]; }
  /// F_beta(x), cubic Hermite between grid points; 1 above and 0 below it.
  double cdf(int beta, double x) const;
  double pdf(int beta, double x) const;
  /// int_x^inf (1 - F_beta(y)) dy = int_x^inf (y - x) f_beta(y) dy.
  double excess_above(int beta, double x) const;
  /// Mean and variance of f_beta by quadrature on the grid.
  std::pair<double, double> moments(int beta) const;
};

/// Integrates q'' = s q + 2 q^3 downward from Airy data, carrying
/// I = int_s (x - s) q^2, K = int_s q^2 and J = int_s q so that
/// F2 = exp(-I) and F1 = exp(-J/2) sqrt(F2). Throws SolverError if q leaves
/// the Hastings-McLeod branch before the switch point or disagrees there
/// with the left-tail series.
TWTable solve_painleve2(const TWOptions& options = {});

/// The scaled minimum PT eigenvalue matched to a unit-variance GUE edge.
double scale_min_eigenvalue(double mu_min, const PartitionDims& dims);

/// Mass of the minimum-eigenvalue law p(x) = f(-x) below -shift.
double npt_fraction(const TWTable& tw, int beta, double shift);

/// CDF of the minimum-eigenvalue law, G(x) = 1 - F(-x).
double min_law_cdf(const TWTable& tw, int beta, double x);

struct CriticalFit {
  double shift = 0.0;
  double ks = 0.0;           // at the fitted shift
  double ks_unshifted = 0.0;
  std::vector<double> scaled;
  bool bracketed = true;
  std::string warning;
};

/// Kolmogorov-Smirnov distance between {x_i - shift} and the minimum law.
double ks_distance(std::span<const double> sorted_x, const TWTable& tw, int beta, double shift);

/// Shift s >= 0 minimizing the KS distance of {x_i - s} to the minimum law.
/// When no interior minimum is found the shift is 0 and `warning` says so.
CriticalFit fit_shift(std::span<const double> scaled_mins, const TWTable& tw, int beta);

/// (2 / (sqrt(N3) N^{7/6})) int_{-inf}^{-s} -(x + s) p(x) dx.
double avg_logneg_critical(const PartitionDims& dims, const TWTable& tw, int beta, double shift);

}  // namespace ptlab
