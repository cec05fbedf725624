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

#include <array>
#include <cstdint>
#include <vector>

#include "ptlab/measures.hpp"
#include "ptlab/types.hpp"

namespace ptlab {

struct RotorParams {
  std::array<double, 3> k{8.0, 7.0, 6.0};
  double b12 = 1.60, b13 = 1.51, b23 = 1.42;
  std::array<std::int64_t, 3> n{8, 8, 32};
  double alpha = 0.35;

  double coupling(int i, int j) const;
  /// Throws std::invalid_argument unless every N_i >= 2 and alpha in [0, 1).
  void validate() const;

  static RotorParams set1(std::array<std::int64_t, 3> dims);
  static RotorParams set2(std::array<std::int64_t, 3> dims);
};

/// Wraps into [0, 1) with floor semantics.
double mod1(double x);

using PhasePoint = std::array<double, 6>;  // q1, p1, q2, p2, q3, p3

/// One iteration of the three coupled standard maps: momenta are kicked
/// first, then positions move with the new momenta.
PhasePoint classical_step(const PhasePoint& x, const RotorParams& params);

/// N x N single-map kernel with the 1/sqrt(iN) branch fixed as e^{-i pi/4}/sqrt(N).
CMatrix single_map_unitary(double k, std::int64_t n, double alpha);

struct FloquetOperator {
  RotorParams params;
  CMatrix entries;

  std::int64_t dim() const { return entries.rows(); }
  /// max |U^dagger U - I|.
  double unitarity_residual() const;
};

inline constexpr std::int64_t kMaxRotorDim = 6144;

/// Kernels of the three maps times the pairwise coupling phases, indexed by
/// (n1 N2 + n2) N3 + n3. Rejects dimensions above `max_dim`.
FloquetOperator coupled_unitary(const RotorParams& params, std::int64_t max_dim = kMaxRotorDim);

struct RotorSpectrum {
  std::vector<cplx> eigenvalues;
  CMatrix eigenvectors;           // columns, orthonormal
  double schur_offdiag = 0.0;     // max |T_ij|, i < j
  double modulus_error = 0.0;     // max ||lambda| - 1|
  double reconstruction_error = 0.0;  // max |U - V diag(lambda) V^dagger|
};

/// Complex Schur form; since U is normal the Schur vectors are eigenvectors.
/// Throws SolverError if T is not diagonal to 1e-8 or |lambda| deviates
/// from 1 by more than 1e-8.
RotorSpectrum diagonalize(const FloquetOperator& u);

struct RotorResult {
  RotorSpectrum spectrum;
  double unitarity_residual = 0.0;
  std::vector<MeasureReport> reports;  // one per eigenstate, in Schur order
  std::vector<double> pooled_scaled;   // N mu over all eigenstates
};

/// Builds U, diagonalizes it and measures every eigenvector as a tripartite
/// state on (N1, N2, N3).
RotorResult eigenstate_pipeline(const RotorParams& params, int workers = 1,
                                bool keep_spectra = false);

}  // namespace ptlab
