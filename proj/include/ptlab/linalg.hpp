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

#include <vector>

#include "ptlab/types.hpp"

// Thin wrappers over LAPACK dense solvers.
namespace ptlab::linalg {

/// Eigenvalues (ascending) of the Hermitian part of `h`. Real-valued input is
/// routed through the real symmetric solver.
std::vector<double> eigvalsh(const CMatrix& h);

struct SchurResult {
  CMatrix t;  // upper triangular
  CMatrix z;  // unitary, a = z t z^dagger
};

/// Complex Schur decomposition. For a normal matrix t is diagonal up to
/// rounding and z holds an orthonormal eigenbasis.
SchurResult complex_schur(const CMatrix& a);

}  // namespace ptlab::linalg
