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

#include "ptlab/dims.hpp"
#include "ptlab/types.hpp"

namespace ptlab {

/// A normalized pure state on the N x N3 grid, amplitude a_{in} stored at
/// index i * N3 + n, where i runs over the 1+2 block and n over subsystem 3.
class PureState {
 public:
  /// Throws std::invalid_argument if the amplitude count is not M, the norm
  /// differs from 1 by more than 1e-12, or a real state has a nonzero
  /// imaginary part.
  PureState(PartitionDims dims, Field field, CVector amplitudes);

  /// Rescales `amplitudes` to unit norm before validating.
  static PureState normalized(PartitionDims dims, Field field, CVector amplitudes);

  const PartitionDims& dims() const { return dims_; }
  Field field() const { return field_; }
  const CVector& amplitudes() const { return amplitudes_; }

  cplx amplitude(std::int64_t i, std::int64_t n) const { return amplitudes_[i * dims_.n3() + n]; }

  /// The amplitudes viewed as an N x N3 row-major matrix.
  Eigen::Map<const CMatrix> as_matrix() const {
    return Eigen::Map<const CMatrix>(amplitudes_.data(), dims_.n(), dims_.n3());
  }

 private:
  PartitionDims dims_;
  Field field_;
  CVector amplitudes_;
};

/// A dense Hermitian matrix. Construction checks ||H - H^dagger||_max.
class HermitianOperator {
 public:
  static constexpr double kHermiticityTolerance = 1e-12;

  explicit HermitianOperator(CMatrix entries);

  std::int64_t dim() const { return entries_.rows(); }
  const CMatrix& entries() const { return entries_; }
  cplx operator()(std::int64_t i, std::int64_t j) const { return entries_(i, j); }

  double trace() const;
  double hermiticity_error() const;

 private:
  CMatrix entries_;
};

/// Real spectrum of a Hermitian operator, sorted ascending.
class SpectrumSample {
 public:
  /// Sorts `values`; throws std::invalid_argument if their sum differs from
  /// `source_trace` by more than 1e-10 (relative to the spectrum's scale).
  SpectrumSample(std::vector<double> values, double source_trace);

  const std::vector<double>& values() const { return values_; }
  std::size_t size() const { return values_.size(); }
  double source_trace() const { return source_trace_; }
  double min_value() const { return values_.front(); }
  double max_value() const { return values_.back(); }

  /// x_i = dim * mu_i, so that a unit-trace spectrum has mean 1.
  std::vector<double> scaled() const;

 private:
  std::vector<double> values_;
  double source_trace_;
};

}  // namespace ptlab
