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

// Independent reference computations for tests. Nothing here reuses the
// index arithmetic or samplers of the library.
#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <random>
#include <span>
#include <vector>

#include <Eigen/Eigenvalues>

#include "ptlab/types.hpp"

namespace oracle {

using ptlab::CMatrix;
using ptlab::cplx;
using ptlab::CVector;

// rho[(a1 a2), (b1 b2)] = sum_m psi[a1 a2 m] conj(psi[b1 b2 m]), explicit loops.
inline CMatrix partial_trace(const CVector& psi, int n1, int n2, int n3) {
  const int n = n1 * n2;
  CMatrix rho = CMatrix::Zero(n, n);
  for (int a1 = 0; a1 < n1; ++a1)
    for (int a2 = 0; a2 < n2; ++a2)
      for (int b1 = 0; b1 < n1; ++b1)
        for (int b2 = 0; b2 < n2; ++b2) {
          cplx acc = 0.0;
          for (int m = 0; m < n3; ++m) {
            acc += psi[(a1 * n2 + a2) * n3 + m] * std::conj(psi[(b1 * n2 + b2) * n3 + m]);
          }
          rho(a1 * n2 + a2, b1 * n2 + b2) = acc;
        }
  return rho;
}

// <a1 a2| rho^{T2} |b1 b2> = <a1 b2| rho |b1 a2>.
inline CMatrix transpose_second(const CMatrix& rho, int n1, int n2) {
  CMatrix out(rho.rows(), rho.cols());
  for (int a1 = 0; a1 < n1; ++a1)
    for (int a2 = 0; a2 < n2; ++a2)
      for (int b1 = 0; b1 < n1; ++b1)
        for (int b2 = 0; b2 < n2; ++b2) out(a1 * n2 + a2, b1 * n2 + b2) = rho(a1 * n2 + b2, b1 * n2 + a2);
  return out;
}

// <a1 a2| rho^{T1} |b1 b2> = <b1 a2| rho |a1 b2>.
inline CMatrix transpose_first(const CMatrix& rho, int n1, int n2) {
  CMatrix out(rho.rows(), rho.cols());
  for (int a1 = 0; a1 < n1; ++a1)
    for (int a2 = 0; a2 < n2; ++a2)
      for (int b1 = 0; b1 < n1; ++b1)
        for (int b2 = 0; b2 < n2; ++b2) out(a1 * n2 + a2, b1 * n2 + b2) = rho(b1 * n2 + a2, a1 * n2 + b2);
  return out;
}

// Sorted eigenvalues through Eigen, independent of the LAPACK path.
inline std::vector<double> eigenvalues(const CMatrix& h) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(Eigen::MatrixXcd(h), Eigen::EigenvaluesOnly);
  std::vector<double> v(es.eigenvalues().data(), es.eigenvalues().data() + es.eigenvalues().size());
  std::sort(v.begin(), v.end());
  return v;
}

struct MeanSe {
  double mean = 0.0, se = 0.0;
};

inline MeanSe mean_se(std::span<const double> x) {
  MeanSe r;
  const double n = static_cast<double>(x.size());
  for (double v : x) r.mean += v;
  r.mean /= n;
  double ss = 0.0;
  for (double v : x) ss += (v - r.mean) * (v - r.mean);
  r.se = std::sqrt(ss / (n - 1.0) / n);
  return r;
}

// Largest eigenvalue of the symmetric tridiagonal (d, e) by Sturm bisection.
inline double tridiagonal_max(const std::vector<double>& d, const std::vector<double>& e) {
  const std::size_t n = d.size();
  double bound = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double off = (i > 0 ? std::abs(e[i - 1]) : 0.0) + (i + 1 < n ? std::abs(e[i]) : 0.0);
    bound = std::max(bound, std::abs(d[i]) + off);
  }
  auto count_below = [&](double x) {
    int c = 0;
    double q = d[0] - x;
    if (q < 0) ++c;
    for (std::size_t i = 1; i < n; ++i) {
      if (q == 0.0) q = 1e-300;
      q = d[i] - x - e[i - 1] * e[i - 1] / q;
      if (q < 0) ++c;
    }
    return c;
  };
  double lo = -bound, hi = bound;
  for (int it = 0; it < 200 && hi - lo > 1e-13 * std::max(1.0, std::abs(hi)); ++it) {
    const double mid = 0.5 * (lo + hi);
    if (count_below(mid) < static_cast<int>(n)) lo = mid; else hi = mid;
  }
  return 0.5 * (lo + hi);
}

// Largest eigenvalue of an n-dimensional GUE (diagonal N(0,1), off-diagonal
// E|z|^2 = 1) from the Dumitriu-Edelman tridiagonal model at beta = 2.
inline double gue_tridiagonal_max(int n, std::mt19937_64& rng) {
  std::normal_distribution<double> normal;
  std::vector<double> d(n), e(n - 1);
  for (int i = 0; i < n; ++i) d[i] = normal(rng);
  for (int k = 0; k < n - 1; ++k) {
    std::chi_squared_distribution<double> chi2(2.0 * (n - 1 - k));
    e[k] = std::sqrt(chi2(rng) / 2.0);
  }
  return tridiagonal_max(d, e);
}

// Kolmogorov-Smirnov distance of sorted samples to a CDF.
inline double ks(std::vector<double> x, const std::function<double(double)>& cdf) {
  std::sort(x.begin(), x.end());
  const double n = static_cast<double>(x.size());
  double d = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double g = cdf(x[i]);
    d = std::max({d, std::abs(g - i / n), std::abs((i + 1) / n - g)});
  }
  return d;
}

}  // namespace oracle
