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
#include <random>

#include "ptlab/state.hpp"

namespace ptlab {

/// Identifies one reproducible random stream. The pair (master_seed,
/// trial_index) fully determines every sample drawn from it.
struct SeedSpec {
  std::uint64_t master_seed = 0;
  std::uint64_t trial_index = 0;
};

using Engine = std::mt19937_64;

/// Engine for one trial. Streams for distinct trial indices are derived
/// through std::seed_seq, so no state is shared between trials.
Engine make_engine(SeedSpec seed);

struct GaussEnsembleParams {
  std::int64_t dim = 1;
  double sigma2 = 1.0;  // variance of the diagonal entries
  int beta = 2;         // 1: real symmetric, 2: complex Hermitian
};

/// Uniform (Haar) random pure state: normalized iid standard normals.
PureState sample_haar_state(const PartitionDims& dims, Field field, SeedSpec seed);
PureState sample_haar_state(const PartitionDims& dims, Field field, Engine& engine);

/// Gaussian ensemble with diagonal variance sigma2 and E|A_ij|^2 = sigma2
/// off the diagonal (for beta = 2 the real and imaginary parts each carry
/// sigma2 / 2), so <tr A^2> = N^2 sigma2 for both classes.
HermitianOperator sample_gauss(const GaussEnsembleParams& params, SeedSpec seed);
HermitianOperator sample_gauss(const GaussEnsembleParams& params, Engine& engine);

/// sigma2 used by the shifted model: 1 / (N^2 N3), giving <tr A^2> = 1 / N3.
double shifted_model_sigma2(const PartitionDims& dims);

/// B = A + I / N with A Gaussian (beta = 1 or 2) of variance
/// shifted_model_sigma2(dims).
HermitianOperator sample_shifted_model(const PartitionDims& dims, int beta, SeedSpec seed);

}  // namespace ptlab
