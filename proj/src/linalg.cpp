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

#include "ptlab/linalg.hpp"

#include <complex>
#define lapack_complex_float std::complex<float>
#define lapack_complex_double std::complex<double>
#include <lapacke.h>

#include <sstream>

namespace ptlab::linalg {
namespace {

std::string diagnostics(const CMatrix& h) {
  std::ostringstream os;
  os << "dim=" << h.rows() << "x" << h.cols() << " frobenius=" << h.norm()
     << " finite=" << (h.allFinite() ? "yes" : "no");
  return os.str();
}

bool is_real_valued(const CMatrix& h) {
  for (Eigen::Index k = 0; k < h.size(); ++k) {
    if (h.data()[k].imag() != 0.0) return false;
  }
  return true;
}

}  // namespace

std::vector<double> eigvalsh(const CMatrix& h) {
  if (h.rows() != h.cols()) throw std::invalid_argument("eigvalsh: matrix is not square");
  const lapack_int n = static_cast<lapack_int>(h.rows());
  std::vector<double> w(static_cast<std::size_t>(n));
  if (n == 0) return w;
  if (!h.allFinite()) throw SolverError("eigvalsh: non-finite entries, " + diagnostics(h));

  lapack_int info = 0;
  if (is_real_valued(h)) {
    Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor> a =
        0.5 * (h.real() + h.real().transpose());
    info = LAPACKE_dsyevd(LAPACK_ROW_MAJOR, 'N', 'U', n, a.data(), n, w.data());
  } else {
    CMatrix a = 0.5 * (h + h.adjoint());
    info = LAPACKE_zheevd(LAPACK_ROW_MAJOR, 'N', 'U', n, a.data(), n, w.data());
  }
  if (info != 0) {
    std::ostringstream os;
    os << "eigvalsh: LAPACK info=" << info << ", " << diagnostics(h);
    throw SolverError(os.str());
  }
  return w;
}

SchurResult complex_schur(const CMatrix& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("complex_schur: matrix is not square");
  const lapack_int n = static_cast<lapack_int>(a.rows());
  SchurResult out{a, CMatrix(n, n)};
  if (n == 0) return out;
  if (!a.allFinite()) throw SolverError("complex_schur: non-finite entries, " + diagnostics(a));
  std::vector<std::complex<double>> w(static_cast<std::size_t>(n));
  lapack_int sdim = 0;
  lapack_int info = LAPACKE_zgees(LAPACK_ROW_MAJOR, 'V', 'N', nullptr, n, out.t.data(), n, &sdim,
                                  w.data(), out.z.data(), n);
  if (info != 0) {
    std::ostringstream os;
    os << "complex_schur: LAPACK info=" << info << ", " << diagnostics(a);
    throw SolverError(os.str());
  }
  return out;
}

}  // namespace ptlab::linalg
