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

#include "ptlab/ensembles.hpp"

#include <array>
#include <cmath>
#include <stdexcept>

namespace ptlab {

Engine make_engine(SeedSpec seed) {
  const std::array<std::uint32_t, 5> words{
      static_cast<std::uint32_t>(seed.master_seed), static_cast<std::uint32_t>(seed.master_seed >> 32),
      static_cast<std::uint32_t>(seed.trial_index), static_cast<std::uint32_t>(seed.trial_index >> 32),
      0x9e3779b9u};
  std::seed_seq seq(words.begin(), words.end());
  return Engine(seq);
}

PureState sample_haar_state(const PartitionDims& dims, Field field, Engine& engine) {
  std::normal_distribution<double> normal(0.0, 1.0);
  CVector amps(dims.m());
  if (field == Field::complex) {
    for (Eigen::Index k = 0; k < amps.size(); ++k) {
      const double re = normal(engine);
      const double im = normal(engine);
      amps[k] = cplx(re, im);
    }
  } else {
    for (Eigen::Index k = 0; k < amps.size(); ++k) amps[k] = cplx(normal(engine), 0.0);
  }
  return PureState::normalized(dims, field, std::move(amps));
}

PureState sample_haar_state(const PartitionDims& dims, Field field, SeedSpec seed) {
  Engine engine = make_engine(seed);
  return sample_haar_state(dims, field, engine);
}

HermitianOperator sample_gauss(const GaussEnsembleParams& params, Engine& engine) {
  if (params.dim < 1) throw std::invalid_argument("sample_gauss: dim must be >= 1");
  if (!(params.sigma2 > 0.0)) throw std::invalid_argument("sample_gauss: sigma2 must be > 0");
  if (params.beta != 1 && params.beta != 2) {
    throw std::invalid_argument("sample_gauss: beta must be 1 or 2");
  }
  const double sigma = std::sqrt(params.sigma2);
  std::normal_distribution<double> normal(0.0, 1.0);
  const std::int64_t n = params.dim;
  CMatrix a(n, n);
  for (std::int64_t i = 0; i < n; ++i) {
    a(i, i) = cplx(sigma * normal(engine), 0.0);
    for (std::int64_t j = i + 1; j < n; ++j) {
      cplx v;
      if (params.beta == 2) {
        const double re = normal(engine);
        const double im = normal(engine);
        v = cplx(re, im) * (sigma / std::sqrt(2.0));
      } else {
        v = cplx(sigma * normal(engine), 0.0);
      }
      a(i, j) = v;
      a(j, i) = std::conj(v);
    }
  }
  return HermitianOperator(std::move(a));
}

HermitianOperator sample_gauss(const GaussEnsembleParams& params, SeedSpec seed) {
  Engine engine = make_engine(seed);
  return sample_gauss(params, engine);
}

double shifted_model_sigma2(const PartitionDims& dims) {
  const double n = static_cast<double>(dims.n());
  return 1.0 / (n * n * static_cast<double>(dims.n3()));
}

HermitianOperator sample_shifted_model(const PartitionDims& dims, int beta, SeedSpec seed) {
  const HermitianOperator a = sample_gauss({dims.n(), shifted_model_sigma2(dims), beta}, seed);
  CMatrix b = a.entries();
  b.diagonal().array() += cplx(1.0 / static_cast<double>(dims.n()), 0.0);
  return HermitianOperator(std::move(b));
}

}  // namespace ptlab
