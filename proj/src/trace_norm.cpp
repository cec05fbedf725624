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

#include "ptlab/trace_norm.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <numbers>
#include <random>
#include <string>

namespace ptlab {

PartialTransposeOperator::PartialTransposeOperator(const PureState& state)
    : n1_(state.dims().n1()), n2_(state.dims().n2()) {
  const std::int64_t n3 = state.dims().n3();
  slices_.assign(n3, CMatrix(n1_, n2_));
  for (std::int64_t m = 0; m < n3; ++m) {
    for (std::int64_t j1 = 0; j1 < n1_; ++j1) {
      for (std::int64_t j2 = 0; j2 < n2_; ++j2) slices_[m](j1, j2) = state.amplitude(j1 * n2_ + j2, m);
    }
  }
  conj_slices_.reserve(n3);
  for (const auto& s : slices_) conj_slices_.push_back(s.conjugate());
}

void PartialTransposeOperator::apply(const CVector& in, CVector& out) const {
  Eigen::Map<const CMatrix> v(in.data(), n1_, n2_);
  CMatrix acc = CMatrix::Zero(n1_, n2_);
  CMatrix w(n2_, n2_);
  for (std::size_t m = 0; m < slices_.size(); ++m) {
    w.noalias() = v.transpose() * conj_slices_[m];
    acc.noalias() += slices_[m] * w;
  }
  out.resize(dim());
  Eigen::Map<CMatrix>(out.data(), n1_, n2_) = acc;
}

std::pair<double, double> lanczos_extremes(const PartialTransposeOperator& op, int steps,
                                           std::uint64_t seed) {
  const std::int64_t n = op.dim();
  steps = static_cast<int>(std::min<std::int64_t>(steps, n));
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal;
  CVector v(n);
  for (auto& x : v) x = cplx(normal(rng), normal(rng));
  v.normalize();
  // Full reorthogonalization keeps the Ritz values clean at these step counts.
  std::vector<CVector> basis{v};
  std::vector<double> alpha, beta;
  CVector w;
  for (int k = 0; k < steps; ++k) {
    op.apply(basis.back(), w);
    alpha.push_back(basis.back().dot(w).real());
    for (const auto& b : basis) w -= b.dot(w) * b;
    for (const auto& b : basis) w -= b.dot(w) * b;
    const double nb = w.norm();
    if (k + 1 == steps || nb < 1e-14) break;
    beta.push_back(nb);
    basis.push_back(w / nb);
  }
  const int m = static_cast<int>(alpha.size());
  Eigen::VectorXd d = Eigen::Map<Eigen::VectorXd>(alpha.data(), m);
  Eigen::VectorXd e = Eigen::Map<Eigen::VectorXd>(beta.data(), m - 1);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
  solver.computeFromTridiagonal(d, e, Eigen::EigenvaluesOnly);
  return {solver.eigenvalues()(0), solver.eigenvalues()(m - 1)};
}

std::vector<double> abs_chebyshev_coefficients(double a, double b, int degree) {
  // Gauss-Chebyshev nodes; the kink makes coefficients decay like 1/k^2, so
  // the node count is kept far above the degree to suppress aliasing.
  const int nodes = std::max(16 * degree, 4096);
  std::vector<double> c(degree, 0.0);
  for (int j = 0; j < nodes; ++j) {
    const double theta = std::numbers::pi * (j + 0.5) / nodes;
    const double f = std::abs(a * std::cos(theta) + b);
    for (int k = 0; k < degree; ++k) c[k] += f * std::cos(k * theta);
  }
  for (int k = 0; k < degree; ++k) c[k] *= (k == 0 ? 1.0 : 2.0) / nodes;
  return c;
}

TraceNormEstimate estimate_trace_norm(const PartialTransposeOperator& op,
                                      const TraceNormOptions& options) {
  const std::int64_t n = op.dim();
  auto [lo, hi] = lanczos_extremes(op, options.lanczos_steps, options.seed);
  const double pad = options.margin * (hi - lo);
  lo -= pad;
  hi += pad;
  const double center = 0.5 * (hi + lo);
  const double half = 0.5 * (hi - lo);
  const int deg = options.degree;
  const std::vector<double> coef = abs_chebyshev_coefficients(half, center, deg);

  std::mt19937_64 rng(options.seed ^ 0x5bd1e995ULL);
  std::bernoulli_distribution coin;
  std::vector<double> samples;
  CVector t0(n), t1(n), t2(n), hv;
  for (int p = 0; p < options.probes; ++p) {
    CVector r(n);
    for (auto& x : r) x = coin(rng) ? 1.0 : -1.0;
    auto scaled_apply = [&](const CVector& x, CVector& y) {
      op.apply(x, hv);
      y = (hv - center * x) / half;
    };
    t0 = r;
    scaled_apply(t0, t1);
    double acc = coef[0] * r.dot(t0).real() + coef[1] * r.dot(t1).real();
    for (int k = 2; k < deg; ++k) {
      scaled_apply(t1, t2);
      t2 = 2.0 * t2 - t0;
      const double mk = r.dot(t2).real();
      if (std::abs(mk) > 4.0 * static_cast<double>(n)) {
        throw SolverError("trace norm: spectrum outside the Chebyshev interval at order " +
                          std::to_string(k));
      }
      acc += coef[k] * mk;
      std::swap(t0, t1);
      std::swap(t1, t2);
    }
    samples.push_back(acc);
  }
  double mean = 0.0;
  for (double s : samples) mean += s;
  mean /= static_cast<double>(samples.size());
  double var = 0.0;
  for (double s : samples) var += (s - mean) * (s - mean);
  const double k = static_cast<double>(samples.size());
  TraceNormEstimate est;
  est.trace_norm = mean;
  est.std_error = k > 1 ? std::sqrt(var / (k - 1) / k) : 0.0;
  est.lo = lo;
  est.hi = hi;
  return est;
}

}  // namespace ptlab
