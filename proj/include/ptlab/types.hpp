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

#include <complex>
#include <stdexcept>
#include <string>
#include <string_view>

#include <Eigen/Dense>

namespace ptlab {

using cplx = std::complex<double>;

// Matrices are row-major so that entry (i, j) lives at i * N + j.
using CMatrix = Eigen::Matrix<cplx, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
using CVector = Eigen::VectorXcd;
using RVector = Eigen::VectorXd;

enum class Field { complex, real };

Field parse_field(std::string_view text);
std::string_view to_string(Field field);

/// Raised when a numerical routine (eigen-solver, ODE integrator) cannot
/// produce a trustworthy result.
class SolverError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace ptlab
