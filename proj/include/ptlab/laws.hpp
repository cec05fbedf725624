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
#include <string>
#include <utility>
#include <vector>

#include "ptlab/dims.hpp"
#include "ptlab/types.hpp"

namespace ptlab {

enum class LawTag { mp, semicircle, scaled_semicircle };
std::string to_string(LawTag tag);
LawTag parse_law(const std::string& name);

struct DensityCurve {
  std::vector<double> grid;
  std::vector<double> values;
  double lo = 0.0, hi = 0.0;
  LawTag tag = LawTag::scaled_semicircle;
};

enum class Regime { ppt, critical, npt };
std::string to_string(Regime regime);

struct ModelGeometry {
  double r = 0.0;        // radius of the shifted-GUE semicircle in mu
  double r_tilde = 0.0;  // N * r = 2 sqrt(N1 N2 / N3)
  double lambda_minus = 0.0, lambda_plus = 0.0;
  Regime regime = Regime::ppt;
};
ModelGeometry model_geometry(const PartitionDims& dims);

/// Marchenko-Pastur edges of the rho_12 spectrum, Q = N3 / N. Throws
/// std::invalid_argument when Q < 1.
std::pair<double, double> mp_support(const PartitionDims& dims);
double mp_density(const PartitionDims& dims, double lambda);

/// Semicircle of the given radius centered at `center`.
double semicircle_density(double x, double center, double radius);
/// The shifted-GUE model density in mu: center 1/N, radius 2 / sqrt(N3 N).
double semicircle_model(const PartitionDims& dims, double mu);
/// The same on the scaled axis x = N mu: center 1, radius r_tilde.
double semicircle_scaled(const PartitionDims& dims, double x);

/// Curve sampled on `points` equally spaced abscissae across its support.
DensityCurve make_curve(LawTag tag, const PartitionDims& dims, int points);

/// Matrix entries moved by a partial transpose on k of m qubits, for m <= 31.
std::uint64_t exchange_count(int m_qubits, int k);

double avg_third_moment_pt(const PartitionDims& dims, Field field);
double avg_third_moment_rho(const PartitionDims& dims, Field field);
/// <tr B^3> for B = A + I/N: 3/M + 1/N^2.
double model_third_moment(const PartitionDims& dims);

/// Large-dimension skewness of the PT spectrum. The real-state correction
/// 3(1/N1 + 1/N2) reduces to the qubit form for power-of-two dims.
double skewness_analytic(const PartitionDims& dims, Field field);

struct ModelLogNegativity {
  double value = 0.0;
  Regime regime = Regime::ppt;
};
/// Semicircle-model <E_LN>; zero at or below criticality, where the value
/// is governed by the extreme eigenvalue instead.
ModelLogNegativity avg_log_negativity_model(const PartitionDims& dims);
/// Large-r_tilde asymptote ln((8/3pi) sqrt(N1 N2 / N3)).
double avg_log_negativity_asymptote(const PartitionDims& dims);

/// kappa(Q) = (Q/2pi) int sqrt((x+ - x)(x - x-)/x) dx with
/// x+- = (1 +- 1/sqrt Q)^2, by tanh-sinh quadrature. Q >= 1.
double kappa(double q);
/// The hypergeometric closed form, for Q > 1.
double kappa_hypergeometric(double q);

struct PureMeasures {
  double log_negativity = 0.0;
  double negativity = 0.0;
};
/// Averages for a random pure state on N1 x N2 with N2 >= N1.
PureMeasures avg_measures_pure(std::int64_t n1, std::int64_t n2);

/// <tr rho^2> for the n-dimensional reduction of a random state on n x m.
double avg_purity(std::int64_t n, std::int64_t m);
/// Average entanglement entropy of the smaller factor of n x m.
double page_entropy(std::int64_t n, std::int64_t m);

struct WStateAnalytics {
  std::array<double, 4> pt12{};
  std::array<double, 4> pt13{};
  std::array<double, 4> pt23{};
  double invariant = 0.0;
};
/// alpha|001> + beta|010> + gamma|100> with real coefficients.
WStateAnalytics wstate_analytics(double alpha, double beta, double gamma);

struct IntegerSequences {
  std::vector<__int128> t;        // t_1 .. t_nmax
  std::vector<__int128> t_prime;  // t'_1 .. t'_nmax
};
IntegerSequences tn_sequences(int n_max);
std::string to_string(__int128 v);

}  // namespace ptlab
