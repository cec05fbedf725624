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

#include "ptlab/dims.hpp"

#include <sstream>
#include <stdexcept>

#include "ptlab/types.hpp"

namespace ptlab {

Field parse_field(std::string_view text) {
  if (text == "complex") return Field::complex;
  if (text == "real") return Field::real;
  throw std::invalid_argument("field must be 'complex' or 'real', got '" + std::string(text) + "'");
}

std::string_view to_string(Field field) { return field == Field::complex ? "complex" : "real"; }

PartitionDims PartitionDims::from_dims(std::int64_t n1, std::int64_t n2, std::int64_t n3) {
  if (n1 < 1 || n2 < 1 || n3 < 1) {
    throw std::invalid_argument("subsystem dimensions must be >= 1");
  }
  if (n1 * n2 * n3 > (std::int64_t{1} << 40)) {
    throw std::invalid_argument("total dimension too large");
  }
  return PartitionDims(n1, n2, n3, std::nullopt);
}

PartitionDims PartitionDims::from_qubits(int l1, int l2, int total) {
  int l3 = total - l1 - l2;
  if (l1 < 0 || l2 < 0 || l3 < 0) {
    throw std::invalid_argument("qubit counts must satisfy 0 <= L1, L2 and L1 + L2 <= L");
  }
  if (total > 40) throw std::invalid_argument("total qubit count too large");
  return PartitionDims(std::int64_t{1} << l1, std::int64_t{1} << l2, std::int64_t{1} << l3,
                       Qubits{l1, l2, l3});
}

int PartitionDims::l1() const {
  if (!qubits_) throw std::logic_error("dimensions were not given as qubit counts");
  return qubits_->l1;
}
int PartitionDims::l2() const {
  if (!qubits_) throw std::logic_error("dimensions were not given as qubit counts");
  return qubits_->l2;
}
int PartitionDims::l3() const {
  if (!qubits_) throw std::logic_error("dimensions were not given as qubit counts");
  return qubits_->l3;
}
int PartitionDims::total_qubits() const { return l1() + l2() + l3(); }

std::string PartitionDims::describe() const {
  std::ostringstream os;
  os << "(" << n1_ << "," << n2_ << "," << n3_ << ")";
  if (qubits_) os << " [L1=" << qubits_->l1 << " L2=" << qubits_->l2 << " L=" << total_qubits() << "]";
  return os.str();
}

}  // namespace ptlab
