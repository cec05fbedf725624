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
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ptlab/state.hpp"

namespace ptlab {

/// A spectrum is NPT when its smallest eigenvalue is below this value.
inline constexpr double kNptThreshold = -1e-12;

/// Sum of the moduli of the negative eigenvalues, equal to
/// (sum |mu_i| - 1) / 2 for a unit-trace spectrum. Throws
/// std::invalid_argument if the trace differs from 1 by more than 1e-8.
double negativity(const SpectrumSample& spec);

/// Natural-log trace norm, ln sum |mu_i| = ln(1 + 2 negativity).
double log_negativity(const SpectrumSample& spec);

bool is_npt(const SpectrumSample& spec);
int negative_count(const SpectrumSample& spec);

/// sum_i mu_i^m.
double moment(const SpectrumSample& spec, int m);
/// tr(H^m) by repeated multiplication.
double moment(const HermitianOperator& h, int m);

double purity(const SpectrumSample& spec);

/// -sum lambda ln lambda. Eigenvalues in (-1e-8, 0) are treated as zero;
/// anything more negative throws std::invalid_argument.
double von_neumann_entropy(const SpectrumSample& spec);

/// Population skewness of the eigenvalues. Empty when the spectrum has zero
/// spread. Throws std::invalid_argument for fewer than 3 values.
std::optional<double> sample_skewness(const SpectrumSample& spec);

/// tr(rho_12^{T2})^3, tr(rho_23^{T3})^3 and tr(rho_31^{T1})^3 for one state.
struct KempeInvariant {
  double pt12 = 0.0;
  double pt23 = 0.0;
  double pt31 = 0.0;
  double max_pairwise_difference() const;
};
KempeInvariant kempe_invariant(const PureState& state);

struct MeasureReport {
  std::uint64_t trial = 0;
  std::int64_t n1 = 0, n2 = 0, n3 = 0;
  Field field = Field::complex;
  double purity = 0.0;
  double entropy = 0.0;  // NaN when the pre-PT spectrum was skipped
  double negativity = 0.0;
  double log_negativity = 0.0;
  double mu_min = 0.0;
  bool is_npt = false;
  std::optional<double> skewness;
  double m3_pt = 0.0;
  int negative_count = 0;
};

/// Stable CSV column order for MeasureReport rows.
const std::vector<std::string>& measure_report_columns();

struct MeasureOptions {
  // The entropy needs the spectrum of rho_12 itself; purity falls back to
  // the Frobenius norm when it is skipped.
  bool pre_pt_spectrum = true;
};

/// Measures from precomputed spectra; `lambdas` may be null, in which case
/// purity comes from `rho` and entropy is NaN.
MeasureReport measure_from_spectra(const PartitionDims& dims, Field field, std::uint64_t trial,
                                   const HermitianOperator& rho, const SpectrumSample* lambdas,
                                   const SpectrumSample& mus);

/// Partial trace, partial transpose, spectrum and all measures for one state.
MeasureReport measure_state(const PureState& state, std::uint64_t trial,
                            const MeasureOptions& options = {});

}  // namespace ptlab
