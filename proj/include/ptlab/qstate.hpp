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
#include <span>
#include <utility>
#include <vector>

#include "ptlab/state.hpp"

namespace ptlab {

/// rho_12 = tr_3 |psi><psi|, i.e. (rho_12)_{ij} = sum_n a_{in} conj(a_{jn}).
HermitianOperator partial_trace(const PureState& state);

/// Position of (rho)_{ij} after transposing the trailing factor of
/// dimension n2: returns (g(i, j), g(j, i)) with
/// g(i, j) = i - i mod n2 + j mod n2. The map is an involution.
constexpr std::pair<std::int64_t, std::int64_t> pt_index_map(std::int64_t i, std::int64_t j,
                                                             std::int64_t n2) {
  return {i - i % n2 + j % n2, j - j % n2 + i % n2};
}

enum class Party { first, second };

/// Partial transpose of an N1*N2 square operator on factor 1 or factor 2
/// (factor 2 is the trailing n2-dimensional index). An exact permutation
/// of entries.
HermitianOperator partial_transpose(const HermitianOperator& rho, const PartitionDims& dims,
                                    Party which = Party::second);

/// Full spectrum via a backward-stable dense Hermitian eigen-solve of
/// (H + H^dagger) / 2.
SpectrumSample hermitian_spectrum(const HermitianOperator& h);

/// Spectrum of the partial transpose of a pure bipartite state with Schmidt
/// weights `lambdas`: {lambda_i} U {+-sqrt(lambda_i lambda_j), i < j},
/// padded with zeros to n1 * n2 entries.
SpectrumSample schmidt_pt_spectrum(std::span<const double> lambdas, std::int64_t n1,
                                   std::int64_t n2);

/// Schmidt weights of a pure state across the 1|2 cut; requires N3 = 1.
/// These are the eigenvalues of rho_1, clipped at zero and renormalized.
std::vector<double> schmidt_weights(const PureState& state);

/// Reorders tensor factors: new factor k is old factor order[k].
PureState permute_subsystems(const PureState& state, std::array<int, 3> order);

/// Spectrum of rho_12^{T_2} for the given state.
SpectrumSample pt_spectrum(const PureState& state);

}  // namespace ptlab
