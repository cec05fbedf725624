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

#include "ptlab/measures.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "ptlab/qstate.hpp"

namespace ptlab {
namespace {

void require_unit_trace(const SpectrumSample& spec) {
  double sum = 0.0;
  for (double v : spec.values()) sum += v;
  if (std::abs(sum - 1.0) > 1e-8) {
    throw std::invalid_argument("negativity requires a unit-trace spectrum");
  }
}

double trace_of_cube(const CMatrix& x) {
  const CMatrix x2 = x * x;
  // tr(X^2 X) = sum_ij (X^2)_ij X_ji
  return (x2.array() * x.transpose().array()).sum().real();
}

}  // namespace

double negativity(const SpectrumSample& spec) {
  require_unit_trace(spec);
  double neg = 0.0;
  for (double v : spec.values()) {
    if (v >= 0.0) break;
    neg -= v;
  }
  return neg;
}

double log_negativity(const SpectrumSample& spec) { return std::log1p(2.0 * negativity(spec)); }

bool is_npt(const SpectrumSample& spec) { return spec.min_value() < kNptThreshold; }

int negative_count(const SpectrumSample& spec) {
  return static_cast<int>(std::count_if(spec.values().begin(), spec.values().end(),
                                        [](double v) { return v < kNptThreshold; }));
}

double moment(const SpectrumSample& spec, int m) {
  if (m < 1) throw std::invalid_argument("moment order must be >= 1");
  double sum = 0.0;
  for (double v : spec.values()) sum += std::pow(v, m);
  return sum;
}

double moment(const HermitianOperator& h, int m) {
  if (m < 1) throw std::invalid_argument("moment order must be >= 1");
  if (m == 3) return trace_of_cube(h.entries());
  CMatrix p = h.entries();
  for (int k = 1; k < m; ++k) p = (p * h.entries()).eval();
  return p.trace().real();
}

double purity(const SpectrumSample& spec) {
  double sum = 0.0;
  for (double v : spec.values()) sum += v * v;
  return sum;
}

double von_neumann_entropy(const SpectrumSample& spec) {
  double s = 0.0;
  for (double v : spec.values()) {
    if (v < -1e-8) throw std::invalid_argument("entropy of a spectrum with negative eigenvalues");
    if (v > 0.0) s -= v * std::log(v);
  }
  return s;
}

std::optional<double> sample_skewness(const SpectrumSample& spec) {
  const auto& v = spec.values();
  if (v.size() < 3) throw std::invalid_argument("skewness needs at least 3 eigenvalues");
  const double n = static_cast<double>(v.size());
  double mean = 0.0;
  for (double x : v) mean += x;
  mean /= n;
  double m2 = 0.0, m3 = 0.0;
  for (double x : v) {
    const double d = x - mean;
    m2 += d * d;
    m3 += d * d * d;
  }
  m2 /= n;
  m3 /= n;
  if (!(m2 > 0.0)) return std::nullopt;
  return m3 / std::pow(m2, 1.5);
}

double KempeInvariant::max_pairwise_difference() const {
  return std::max({std::abs(pt12 - pt23), std::abs(pt23 - pt31), std::abs(pt31 - pt12)});
}

KempeInvariant kempe_invariant(const PureState& state) {
  auto third = [](const PureState& s) {
    return trace_of_cube(partial_transpose(partial_trace(s), s.dims()).entries());
  };
  KempeInvariant k;
  k.pt12 = third(state);
  // Factor orders (2,3,1) and (3,1,2): the block is the first two factors
  // and the transpose acts on the second of them.
  k.pt23 = third(permute_subsystems(state, {1, 2, 0}));
  k.pt31 = third(permute_subsystems(state, {2, 0, 1}));
  return k;
}

const std::vector<std::string>& measure_report_columns() {
  static const std::vector<std::string> cols{
      "trial",          "N1",     "N2",     "N3",       "field", "purity", "entropy", "negativity",
      "log_negativity", "mu_min", "is_npt", "skewness", "m3_pt"};
  return cols;
}

MeasureReport measure_from_spectra(const PartitionDims& dims, Field field, std::uint64_t trial,
                                   const HermitianOperator& rho, const SpectrumSample* lambdas,
                                   const SpectrumSample& mus) {
  MeasureReport r;
  r.trial = trial;
  r.n1 = dims.n1();
  r.n2 = dims.n2();
  r.n3 = dims.n3();
  r.field = field;
  if (lambdas != nullptr) {
    r.purity = purity(*lambdas);
    r.entropy = von_neumann_entropy(*lambdas);
  } else {
    r.purity = rho.entries().squaredNorm();
    r.entropy = std::numeric_limits<double>::quiet_NaN();
  }
  r.negativity = negativity(mus);
  r.log_negativity = log_negativity(mus);
  r.mu_min = mus.min_value();
  r.is_npt = is_npt(mus);
  r.negative_count = negative_count(mus);
  r.skewness = mus.size() >= 3 ? sample_skewness(mus) : std::nullopt;
  r.m3_pt = moment(mus, 3);
  return r;
}

MeasureReport measure_state(const PureState& state, std::uint64_t trial,
                            const MeasureOptions& options) {
  const HermitianOperator rho = partial_trace(state);
  const SpectrumSample mus = hermitian_spectrum(partial_transpose(rho, state.dims()));
  if (options.pre_pt_spectrum) {
    const SpectrumSample lambdas = hermitian_spectrum(rho);
    return measure_from_spectra(state.dims(), state.field(), trial, rho, &lambdas, mus);
  }
  return measure_from_spectra(state.dims(), state.field(), trial, rho, nullptr, mus);
}

}  // namespace ptlab
