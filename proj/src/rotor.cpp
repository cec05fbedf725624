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

#include "ptlab/rotor.hpp"

#include <cmath>
#include <exception>
#include <numbers>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "ptlab/linalg.hpp"
#include "ptlab/qstate.hpp"

namespace ptlab {

using std::numbers::pi;

double RotorParams::coupling(int i, int j) const {
  if (i > j) std::swap(i, j);
  if (i == 0 && j == 1) return b12;
  if (i == 0 && j == 2) return b13;
  if (i == 1 && j == 2) return b23;
  throw std::invalid_argument("coupling needs two distinct rotors");
}

void RotorParams::validate() const {
  for (auto d : n) {
    if (d < 2) throw std::invalid_argument("rotor dimensions must be >= 2");
  }
  if (!(alpha >= 0.0 && alpha < 1.0)) throw std::invalid_argument("alpha must lie in [0, 1)");
}

RotorParams RotorParams::set1(std::array<std::int64_t, 3> dims) {
  RotorParams p;
  p.k = {8.0, 7.0, 6.0};
  p.b12 = 1.60;
  p.b13 = 1.51;
  p.b23 = 1.42;
  p.n = dims;
  return p;
}

RotorParams RotorParams::set2(std::array<std::int64_t, 3> dims) {
  RotorParams p;
  p.k = {15.0, 14.0, 13.0};
  p.b12 = 2.60;
  p.b13 = 2.51;
  p.b23 = 2.42;
  p.n = dims;
  return p;
}

double mod1(double x) {
  const double r = x - std::floor(x);
  return r >= 1.0 ? 0.0 : r;
}

PhasePoint classical_step(const PhasePoint& x, const RotorParams& params) {
  PhasePoint y = x;
  for (int i = 0; i < 3; ++i) {
    const double qi = x[2 * i];
    double p = x[2 * i + 1] + params.k[i] / (2.0 * pi) * std::sin(2.0 * pi * qi);
    for (int j = 0; j < 3; ++j) {
      if (j == i) continue;
      p += params.coupling(i, j) / (2.0 * pi) * std::sin(2.0 * pi * (qi + x[2 * j]));
    }
    y[2 * i + 1] = mod1(p);
  }
  for (int i = 0; i < 3; ++i) y[2 * i] = mod1(x[2 * i] + y[2 * i + 1]);
  return y;
}

namespace {

// exp(i pi d^2 / N) / sqrt(iN) for d = n' - n.
cplx free_kernel(std::int64_t d, std::int64_t n) {
  const double nn = static_cast<double>(n);
  const double phase = pi * static_cast<double>(d * d % (2 * n)) / nn - pi / 4.0;
  return std::polar(1.0 / std::sqrt(nn), phase);
}

double kick_phase(double k, std::int64_t n, double alpha, std::int64_t m) {
  const double nn = static_cast<double>(n);
  return -nn * k / (2.0 * pi) * std::cos(2.0 * pi * (m + alpha) / nn);
}

}  // namespace

CMatrix single_map_unitary(double k, std::int64_t n, double alpha) {
  if (n < 2) throw std::invalid_argument("single map needs N >= 2");
  CMatrix u(n, n);
  for (std::int64_t col = 0; col < n; ++col) {
    const cplx kick = std::polar(1.0, kick_phase(k, n, alpha, col));
    for (std::int64_t row = 0; row < n; ++row) u(row, col) = free_kernel(row - col, n) * kick;
  }
  return u;
}

double FloquetOperator::unitarity_residual() const {
  const CMatrix g = entries.adjoint() * entries;
  return (g - CMatrix::Identity(dim(), dim())).cwiseAbs().maxCoeff();
}

FloquetOperator coupled_unitary(const RotorParams& params, std::int64_t max_dim) {
  params.validate();
  const auto [n1, n2, n3] = params.n;
  const std::int64_t dim = n1 * n2 * n3;
  if (dim > max_dim) {
    std::ostringstream msg;
    msg << "rotor dimension " << dim << " exceeds the limit " << max_dim << " (dense U needs "
        << (dim * dim * 16) / (1 << 20) << " MiB; eigenvectors as much again)";
    throw std::invalid_argument(msg.str());
  }
  const double a = params.alpha;
  auto pos = [&](std::int64_t m, std::int64_t n) { return (m + a) / static_cast<double>(n); };
  // Diagonal phase of every basis state before the free evolution.
  std::vector<cplx> kick(dim);
  for (std::int64_t i1 = 0; i1 < n1; ++i1) {
    for (std::int64_t i2 = 0; i2 < n2; ++i2) {
      for (std::int64_t i3 = 0; i3 < n3; ++i3) {
        double phase = kick_phase(params.k[0], n1, a, i1) + kick_phase(params.k[1], n2, a, i2) +
                       kick_phase(params.k[2], n3, a, i3);
        auto pair = [&](double b, std::int64_t ni, std::int64_t mi, std::int64_t nj, std::int64_t mj) {
          return -std::sqrt(static_cast<double>(ni * nj)) * b / (2.0 * pi) *
                 std::cos(2.0 * pi * (pos(mi, ni) + pos(mj, nj)));
        };
        phase += pair(params.b12, n1, i1, n2, i2) + pair(params.b13, n1, i1, n3, i3) +
                 pair(params.b23, n2, i2, n3, i3);
        kick[(i1 * n2 + i2) * n3 + i3] = std::polar(1.0, phase);
      }
    }
  }
  std::vector<CVector> f(3);
  for (int r = 0; r < 3; ++r) {
    const std::int64_t n = params.n[r];
    f[r].resize(2 * n - 1);
    for (std::int64_t d = -(n - 1); d <= n - 1; ++d) f[r][d + n - 1] = free_kernel(d, n);
  }
  FloquetOperator u;
  u.params = params;
  u.entries.resize(dim, dim);
  for (std::int64_t r1 = 0; r1 < n1; ++r1) {
    for (std::int64_t r2 = 0; r2 < n2; ++r2) {
      for (std::int64_t r3 = 0; r3 < n3; ++r3) {
        const std::int64_t row = (r1 * n2 + r2) * n3 + r3;
        for (std::int64_t c1 = 0; c1 < n1; ++c1) {
          const cplx a1 = f[0][r1 - c1 + n1 - 1];
          for (std::int64_t c2 = 0; c2 < n2; ++c2) {
            const cplx a12 = a1 * f[1][r2 - c2 + n2 - 1];
            const std::int64_t base = (c1 * n2 + c2) * n3;
            for (std::int64_t c3 = 0; c3 < n3; ++c3) {
              u.entries(row, base + c3) = a12 * f[2][r3 - c3 + n3 - 1] * kick[base + c3];
            }
          }
        }
      }
    }
  }
  return u;
}

RotorSpectrum diagonalize(const FloquetOperator& u) {
  const std::int64_t n = u.dim();
  linalg::SchurResult schur = linalg::complex_schur(u.entries);
  RotorSpectrum s;
  s.eigenvalues.resize(n);
  for (std::int64_t i = 0; i < n; ++i) {
    s.eigenvalues[i] = schur.t(i, i);
    s.modulus_error = std::max(s.modulus_error, std::abs(std::abs(schur.t(i, i)) - 1.0));
    for (std::int64_t j = i + 1; j < n; ++j) s.schur_offdiag = std::max(s.schur_offdiag, std::abs(schur.t(i, j)));
  }
  if (s.schur_offdiag > 1e-8 || s.modulus_error > 1e-8) {
    std::ostringstream msg;
    msg << "unitary eigen-decomposition failed: max off-diagonal Schur entry " << s.schur_offdiag
        << ", max modulus error " << s.modulus_error;
    throw SolverError(msg.str());
  }
  s.eigenvectors = std::move(schur.z);
  CMatrix scaled = s.eigenvectors;
  for (std::int64_t j = 0; j < n; ++j) scaled.col(j) *= s.eigenvalues[j];
  const CMatrix rebuilt = scaled * s.eigenvectors.adjoint();
  s.reconstruction_error = (rebuilt - u.entries).cwiseAbs().maxCoeff();
  return s;
}

RotorResult eigenstate_pipeline(const RotorParams& params, int workers, bool keep_spectra) {
  RotorResult out;
  {
    const FloquetOperator u = coupled_unitary(params);
    out.unitarity_residual = u.unitarity_residual();
    out.spectrum = diagonalize(u);
  }
  const auto dims = PartitionDims::from_dims(params.n[0], params.n[1], params.n[2]);
  const std::int64_t n = dims.m();
  out.reports.resize(n);
  std::vector<std::vector<double>> scaled(keep_spectra ? n : 0);
  std::vector<std::exception_ptr> errors(std::max(1, workers));
  auto work = [&](int w) {
    try {
      for (std::int64_t j = w; j < n; j += workers) {
      const PureState psi = PureState::normalized(dims, Field::complex, out.spectrum.eigenvectors.col(j));
      const HermitianOperator rho = partial_trace(psi);
      const SpectrumSample mus = hermitian_spectrum(partial_transpose(rho, dims));
      const SpectrumSample lambdas = hermitian_spectrum(rho);
      out.reports[j] = measure_from_spectra(dims, Field::complex, j, rho, &lambdas, mus);
        if (keep_spectra) scaled[j] = mus.scaled();
      }
    } catch (...) {
      errors[w] = std::current_exception();
    }
  };
  workers = std::max(1, workers);
  std::vector<std::thread> pool;
  for (int w = 1; w < workers; ++w) pool.emplace_back(work, w);
  work(0);
  for (auto& t : pool) t.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  for (auto& v : scaled) out.pooled_scaled.insert(out.pooled_scaled.end(), v.begin(), v.end());
  return out;
}

}  // namespace ptlab
