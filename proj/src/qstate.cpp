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

#include "ptlab/qstate.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

#include "ptlab/linalg.hpp"

namespace ptlab {

PureState::PureState(PartitionDims dims, Field field, CVector amplitudes)
    : dims_(dims), field_(field), amplitudes_(std::move(amplitudes)) {
  if (amplitudes_.size() != dims_.m()) {
    throw std::invalid_argument("amplitude count " + std::to_string(amplitudes_.size()) +
                                " does not match M = " + std::to_string(dims_.m()));
  }
  if (std::abs(amplitudes_.squaredNorm() - 1.0) > 1e-12) {
    throw std::invalid_argument("state is not normalized");
  }
  if (field_ == Field::real) {
    for (Eigen::Index k = 0; k < amplitudes_.size(); ++k) {
      if (amplitudes_[k].imag() != 0.0) {
        throw std::invalid_argument("real state has a nonzero imaginary part");
      }
    }
  }
}

PureState PureState::normalized(PartitionDims dims, Field field, CVector amplitudes) {
  const double norm = amplitudes.norm();
  if (!(norm > 0.0)) throw std::invalid_argument("cannot normalize a zero vector");
  amplitudes /= norm;
  return PureState(dims, field, std::move(amplitudes));
}

HermitianOperator::HermitianOperator(CMatrix entries) : entries_(std::move(entries)) {
  if (entries_.rows() != entries_.cols()) {
    throw std::invalid_argument("Hermitian operator must be square");
  }
  const double scale = std::max(1.0, entries_.cwiseAbs().maxCoeff());
  if (entries_.size() > 0 && hermiticity_error() > kHermiticityTolerance * scale) {
    throw std::invalid_argument("matrix is not Hermitian within tolerance");
  }
}

double HermitianOperator::trace() const { return entries_.trace().real(); }

double HermitianOperator::hermiticity_error() const {
  if (entries_.size() == 0) return 0.0;
  return (entries_ - entries_.adjoint()).cwiseAbs().maxCoeff();
}

SpectrumSample::SpectrumSample(std::vector<double> values, double source_trace)
    : values_(std::move(values)), source_trace_(source_trace) {
  if (values_.empty()) throw std::invalid_argument("empty spectrum");
  std::sort(values_.begin(), values_.end());
  double sum = 0.0, scale = 1.0;
  for (double v : values_) {
    sum += v;
    scale += std::abs(v);
  }
  if (std::abs(sum - source_trace_) > 1e-10 * scale) {
    throw std::invalid_argument("spectrum does not sum to the source trace");
  }
}

std::vector<double> SpectrumSample::scaled() const {
  std::vector<double> out(values_.size());
  const double dim = static_cast<double>(values_.size());
  std::transform(values_.begin(), values_.end(), out.begin(), [dim](double v) { return dim * v; });
  return out;
}

HermitianOperator partial_trace(const PureState& state) {
  const auto a = state.as_matrix();
  if (state.field() == Field::real) {
    Eigen::MatrixXd ar = a.real();
    Eigen::MatrixXd rho = ar * ar.transpose();
    rho = 0.5 * (rho + rho.transpose()).eval();
    return HermitianOperator(rho.cast<cplx>());
  }
  CMatrix rho = a * a.adjoint();
  rho = 0.5 * (rho + rho.adjoint()).eval();
  return HermitianOperator(std::move(rho));
}

HermitianOperator partial_transpose(const HermitianOperator& rho, const PartitionDims& dims,
                                    Party which) {
  const std::int64_t n = dims.n();
  if (rho.dim() != n) {
    throw std::invalid_argument("partial_transpose: operator dimension " +
                                std::to_string(rho.dim()) + " != N1*N2 = " + std::to_string(n));
  }
  const std::int64_t n2 = dims.n2();
  const CMatrix& in = rho.entries();
  CMatrix out(n, n);
  for (std::int64_t i = 0; i < n; ++i) {
    for (std::int64_t j = 0; j < n; ++j) {
      auto [ti, tj] = pt_index_map(i, j, n2);
      if (which == Party::second) {
        out(ti, tj) = in(i, j);
      } else {
        // Transposing factor 1 is the full transpose of transposing factor 2.
        out(tj, ti) = in(i, j);
      }
    }
  }
  return HermitianOperator(std::move(out));
}

SpectrumSample hermitian_spectrum(const HermitianOperator& h) {
  return SpectrumSample(linalg::eigvalsh(h.entries()), h.trace());
}

SpectrumSample schmidt_pt_spectrum(std::span<const double> lambdas, std::int64_t n1,
                                   std::int64_t n2) {
  if (lambdas.empty()) throw std::invalid_argument("schmidt_pt_spectrum: no Schmidt weights");
  if (static_cast<std::int64_t>(lambdas.size()) > std::min(n1, n2)) {
    throw std::invalid_argument("schmidt_pt_spectrum: more weights than min(N1, N2)");
  }
  double sum = 0.0;
  for (double l : lambdas) {
    if (l < 0.0) throw std::invalid_argument("schmidt_pt_spectrum: negative Schmidt weight");
    sum += l;
  }
  if (std::abs(sum - 1.0) > 1e-10) {
    throw std::invalid_argument("schmidt_pt_spectrum: weights do not sum to 1");
  }
  std::vector<double> values;
  values.reserve(static_cast<std::size_t>(n1 * n2));
  values.assign(lambdas.begin(), lambdas.end());
  for (std::size_t i = 0; i < lambdas.size(); ++i) {
    for (std::size_t j = i + 1; j < lambdas.size(); ++j) {
      const double r = std::sqrt(lambdas[i] * lambdas[j]);
      values.push_back(r);
      values.push_back(-r);
    }
  }
  values.resize(static_cast<std::size_t>(n1 * n2), 0.0);
  return SpectrumSample(std::move(values), 1.0);
}

std::vector<double> schmidt_weights(const PureState& state) {
  const auto& dims = state.dims();
  if (dims.n3() != 1) throw std::invalid_argument("schmidt_weights: state is not bipartite (N3 != 1)");
  const auto psi = Eigen::Map<const CMatrix>(state.amplitudes().data(), dims.n1(), dims.n2());
  CMatrix gram = dims.n1() <= dims.n2() ? CMatrix(psi * psi.adjoint()) : CMatrix(psi.adjoint() * psi);
  std::vector<double> w = linalg::eigvalsh(gram);
  for (double& v : w) v = std::max(v, 0.0);
  const double sum = std::accumulate(w.begin(), w.end(), 0.0);
  for (double& v : w) v /= sum;
  return w;
}

PureState permute_subsystems(const PureState& state, std::array<int, 3> order) {
  std::array<int, 3> check = order;
  std::sort(check.begin(), check.end());
  if (check != std::array<int, 3>{0, 1, 2}) {
    throw std::invalid_argument("permute_subsystems: order must be a permutation of {0,1,2}");
  }
  const auto& d = state.dims();
  const std::array<std::int64_t, 3> old_dims{d.n1(), d.n2(), d.n3()};
  const std::array<std::int64_t, 3> new_dims{old_dims[order[0]], old_dims[order[1]],
                                             old_dims[order[2]]};
  CVector out(state.amplitudes().size());
  std::array<std::int64_t, 3> idx{};
  for (idx[0] = 0; idx[0] < old_dims[0]; ++idx[0]) {
    for (idx[1] = 0; idx[1] < old_dims[1]; ++idx[1]) {
      for (idx[2] = 0; idx[2] < old_dims[2]; ++idx[2]) {
        const std::int64_t src = (idx[0] * old_dims[1] + idx[1]) * old_dims[2] + idx[2];
        const std::int64_t dst =
            (idx[order[0]] * new_dims[1] + idx[order[1]]) * new_dims[2] + idx[order[2]];
        out[dst] = state.amplitudes()[src];
      }
    }
  }
  return PureState(PartitionDims::from_dims(new_dims[0], new_dims[1], new_dims[2]), state.field(),
                   std::move(out));
}

SpectrumSample pt_spectrum(const PureState& state) {
  return hermitian_spectrum(partial_transpose(partial_trace(state), state.dims()));
}

}  // namespace ptlab
