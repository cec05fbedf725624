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
#include <optional>
#include <string>

namespace ptlab {

/// Dimension bookkeeping for a tripartite split 1|2|3 of a pure state.
///
/// Subsystems 1 and 2 form the block whose reduced density matrix is
/// studied; subsystem 3 is traced out. When built from qubit counts the
/// local dimensions are powers of two, but arbitrary dimensions are allowed.
class PartitionDims {
 public:
  /// Throws std::invalid_argument unless every dimension is at least 1.
  static PartitionDims from_dims(std::int64_t n1, std::int64_t n2, std::int64_t n3);

  /// `total` is the qubit count of the whole system, so L3 = total - l1 - l2.
  static PartitionDims from_qubits(int l1, int l2, int total);

  std::int64_t n1() const { return n1_; }
  std::int64_t n2() const { return n2_; }
  std::int64_t n3() const { return n3_; }
  /// Dimension of the 1+2 block.
  std::int64_t n() const { return n1_ * n2_; }
  /// Dimension of the full Hilbert space.
  std::int64_t m() const { return n1_ * n2_ * n3_; }
  /// N3 / N.
  double q() const { return static_cast<double>(n3_) / static_cast<double>(n()); }

  bool has_qubits() const { return qubits_.has_value(); }
  int l1() const;
  int l2() const;
  int l3() const;
  int total_qubits() const;

  /// N3 = 4 N1 N2: the scaled semicircle touches zero.
  bool is_critical() const { return n3_ == 4 * n(); }

  std::string describe() const;

  friend bool operator==(const PartitionDims&, const PartitionDims&) = default;

 private:
  struct Qubits {
    int l1, l2, l3;
    friend bool operator==(const Qubits&, const Qubits&) = default;
  };
  PartitionDims(std::int64_t n1, std::int64_t n2, std::int64_t n3, std::optional<Qubits> q)
      : n1_(n1), n2_(n2), n3_(n3), qubits_(q) {}

  std::int64_t n1_ = 1, n2_ = 1, n3_ = 1;
  std::optional<Qubits> qubits_;
};

}  // namespace ptlab
