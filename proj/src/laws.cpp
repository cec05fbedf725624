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

#include "ptlab/laws.hpp"

#include <algorithm>
#include <boost/math/quadrature/tanh_sinh.hpp>
#include <boost/math/special_functions/digamma.hpp>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace ptlab {

using std::numbers::pi;

std::string to_string(LawTag tag) {
  switch (tag) {
    case LawTag::mp: return "mp";
    case LawTag::semicircle: return "semicircle";
    case LawTag::scaled_semicircle: return "scaled-semicircle";
  }
  return "?";
}

LawTag parse_law(const std::string& name) {
  if (name == "mp") return LawTag::mp;
  if (name == "semicircle") return LawTag::semicircle;
  if (name == "scaled-semicircle") return LawTag::scaled_semicircle;
  throw std::invalid_argument("unknown law '" + name + "'");
}

std::string to_string(Regime regime) {
  switch (regime) {
    case Regime::ppt: return "ppt";
    case Regime::critical: return "critical";
    case Regime::npt: return "npt";
  }
  return "?";
}

ModelGeometry model_geometry(const PartitionDims& dims) {
  const double n = static_cast<double>(dims.n());
  const double n3 = static_cast<double>(dims.n3());
  ModelGeometry g;
  g.r = 2.0 / std::sqrt(n3 * n);
  g.r_tilde = 2.0 * std::sqrt(n / n3);
  const double q = dims.q();
  g.lambda_minus = (1.0 + 1.0 / q - 2.0 / std::sqrt(q)) / n;
  g.lambda_plus = (1.0 + 1.0 / q + 2.0 / std::sqrt(q)) / n;
  if (dims.is_critical()) {
    g.regime = Regime::critical;
  } else {
    g.regime = 4 * dims.n() > dims.n3() ? Regime::npt : Regime::ppt;
  }
  return g;
}

std::pair<double, double> mp_support(const PartitionDims& dims) {
  if (dims.n3() < dims.n()) throw std::invalid_argument("MP law needs N3 >= N1 N2");
  const auto g = model_geometry(dims);
  return {g.lambda_minus, g.lambda_plus};
}

double mp_density(const PartitionDims& dims, double lambda) {
  const auto [lo, hi] = mp_support(dims);
  if (lambda <= lo || lambda >= hi || lambda <= 0.0) return 0.0;
  const double n = static_cast<double>(dims.n());
  return n * dims.q() / (2.0 * pi) * std::sqrt((hi - lambda) * (lambda - lo)) / lambda;
}

double semicircle_density(double x, double center, double radius) {
  const double d = x - center;
  if (std::abs(d) >= radius) return 0.0;
  return 2.0 / (pi * radius * radius) * std::sqrt(radius * radius - d * d);
}

double semicircle_model(const PartitionDims& dims, double mu) {
  return semicircle_density(mu, 1.0 / static_cast<double>(dims.n()), model_geometry(dims).r);
}

double semicircle_scaled(const PartitionDims& dims, double x) {
  return semicircle_density(x, 1.0, model_geometry(dims).r_tilde);
}

DensityCurve make_curve(LawTag tag, const PartitionDims& dims, int points) {
  if (points < 2) throw std::invalid_argument("curve needs at least 2 points");
  DensityCurve c;
  c.tag = tag;
  const auto g = model_geometry(dims);
  const double n = static_cast<double>(dims.n());
  switch (tag) {
    case LawTag::mp: std::tie(c.lo, c.hi) = mp_support(dims); break;
    case LawTag::semicircle:
      c.lo = 1.0 / n - g.r;
      c.hi = 1.0 / n + g.r;
      break;
    case LawTag::scaled_semicircle:
      c.lo = 1.0 - g.r_tilde;
      c.hi = 1.0 + g.r_tilde;
      break;
  }
  for (int k = 0; k < points; ++k) {
    const double x = c.lo + (c.hi - c.lo) * k / (points - 1);
    c.grid.push_back(x);
    switch (tag) {
      case LawTag::mp: c.values.push_back(mp_density(dims, x)); break;
      case LawTag::semicircle: c.values.push_back(semicircle_model(dims, x)); break;
      case LawTag::scaled_semicircle: c.values.push_back(semicircle_scaled(dims, x)); break;
    }
  }
  return c;
}

std::uint64_t exchange_count(int m_qubits, int k) {
  if (m_qubits < 0 || m_qubits > 31 || k < 0 || 2 * k > m_qubits) {
    throw std::invalid_argument("exchange_count needs 0 <= k <= m/2 and m <= 31");
  }
  return (std::uint64_t{1} << (2 * m_qubits)) - (std::uint64_t{1} << (2 * m_qubits - k));
}

double avg_third_moment_pt(const PartitionDims& dims, Field field) {
  const double a = static_cast<double>(dims.n1());
  const double b = static_cast<double>(dims.n2());
  const double c = static_cast<double>(dims.n3());
  const double m = a * b * c;
  const double squares = a * a + b * b + c * c;
  if (field == Field::complex) return (squares + 3.0 * m) / ((m + 1.0) * (m + 2.0));
  return (squares + 3.0 * (a + b + c + m)) / ((m + 2.0) * (m + 4.0));
}

double avg_third_moment_rho(const PartitionDims& dims, Field field) {
  return avg_third_moment_pt(PartitionDims::from_dims(dims.n(), 1, dims.n3()), field);
}

double model_third_moment(const PartitionDims& dims) {
  const double n = static_cast<double>(dims.n());
  return 3.0 / static_cast<double>(dims.m()) + 1.0 / (n * n);
}

double skewness_analytic(const PartitionDims& dims, Field field) {
  const double a = static_cast<double>(dims.n1());
  const double b = static_cast<double>(dims.n2());
  double bracket = b / a + a / b;
  if (field == Field::real) bracket += 3.0 * (1.0 / a + 1.0 / b);
  return bracket / std::sqrt(static_cast<double>(dims.m()));
}

ModelLogNegativity avg_log_negativity_model(const PartitionDims& dims) {
  const auto g = model_geometry(dims);
  ModelLogNegativity out;
  out.regime = g.regime;
  const double r = g.r_tilde;
  if (g.regime != Regime::npt || r <= 1.0) return out;
  const double bracket = 2.0 / pi * std::asin(1.0 / r) +
                         2.0 / (3.0 * pi * r) * std::sqrt(1.0 - 1.0 / (r * r)) * (1.0 + 2.0 * r * r);
  out.value = std::log(bracket);
  return out;
}

double avg_log_negativity_asymptote(const PartitionDims& dims) {
  return std::log(8.0 / (3.0 * pi) *
                  std::sqrt(static_cast<double>(dims.n()) / static_cast<double>(dims.n3())));
}

double kappa(double q) {
  if (!(q >= 1.0)) throw std::invalid_argument("kappa needs Q >= 1; swap the subsystems");
  const double s = 1.0 / std::sqrt(q);
  const double lo = (1.0 - s) * (1.0 - s);
  const double hi = (1.0 + s) * (1.0 + s);
  boost::math::quadrature::tanh_sinh<double> integrator;
  auto f = [&](double x, double xc) {
    // xc is the distance to the nearer endpoint, which keeps the square
    // roots accurate where the integrand vanishes.
    const double to_hi = xc > 0 ? xc : hi - x;
    const double to_lo = xc < 0 ? -xc : x - lo;
    if (x <= 0.0) return 0.0;
    return std::sqrt(std::max(0.0, to_hi) * std::max(0.0, to_lo) / x);
  };
  return q / (2.0 * pi) * integrator.integrate(f, lo, hi);
}

namespace {

// Gauss series for 2F1(a, b; c; w) with 0 <= w < 1.
double hyp2f1_series(double a, double b, double c, double w) {
  double term = 1.0, sum = 1.0;
  for (int k = 0; k < 10'000'000; ++k) {
    term *= (a + k) * (b + k) / ((c + k) * (k + 1.0)) * w;
    sum += term;
    if (std::abs(term) < 1e-17 * std::abs(sum) && k > 10) return sum;
  }
  throw SolverError("2F1 series did not converge");
}

// 2F1(a, b; c; z) for z < 0 via the Pfaff transformation.
double hyp2f1_negative(double a, double b, double c, double z) {
  return std::pow(1.0 - z, -a) * hyp2f1_series(a, c - b, c, z / (z - 1.0));
}

}  // namespace

double kappa_hypergeometric(double q) {
  if (!(q > 1.0)) throw std::invalid_argument("hypergeometric kappa needs Q > 1");
  const double sq = std::sqrt(q);
  const double z = -4.0 * sq / ((sq - 1.0) * (sq - 1.0));
  return (sq - 1.0) * (hyp2f1_negative(0.5, -0.5, 2.0, z) - hyp2f1_negative(0.5, 0.5, 2.0, z));
}

PureMeasures avg_measures_pure(std::int64_t n1, std::int64_t n2) {
  if (n1 < 1 || n2 < n1) throw std::invalid_argument("avg_measures_pure needs N2 >= N1 >= 1");
  const double k = kappa(static_cast<double>(n2) / static_cast<double>(n1));
  const double t = k * k * static_cast<double>(n1);
  return {std::log(t), 0.5 * (t - 1.0)};
}

double avg_purity(std::int64_t n, std::int64_t m) {
  const double a = static_cast<double>(n), b = static_cast<double>(m);
  return (a + b) / (a * b + 1.0);
}

double page_entropy(std::int64_t n, std::int64_t m) {
  if (n < 1 || m < 1) throw std::invalid_argument("page_entropy needs positive dims");
  if (n > m) std::swap(n, m);
  const double a = static_cast<double>(n), b = static_cast<double>(m);
  double harmonic = 0.0;
  if (n * m <= 1'000'000) {
    for (std::int64_t k = m + 1; k <= n * m; ++k) harmonic += 1.0 / static_cast<double>(k);
  } else {
    harmonic = boost::math::digamma(a * b + 1.0) - boost::math::digamma(b + 1.0);
  }
  return harmonic - (a - 1.0) / (2.0 * b);
}

WStateAnalytics wstate_analytics(double alpha, double beta, double gamma) {
  const double a2 = alpha * alpha, b2 = beta * beta, c2 = gamma * gamma;
  if (std::abs(a2 + b2 + c2 - 1.0) > 1e-12) {
    throw std::invalid_argument("W-state coefficients must be normalized");
  }
  auto block = [](double p, double q, double r, double s) {
    // {p, q, (r +- sqrt(r^2 + 4 s)) / 2}
    const double d = std::sqrt(r * r + 4.0 * s);
    std::array<double, 4> v{p, q, 0.5 * (r + d), 0.5 * (r - d)};
    std::sort(v.begin(), v.end());
    return v;
  };
  WStateAnalytics w;
  w.pt12 = block(b2, c2, a2, b2 * c2);
  w.pt13 = block(a2, c2, b2, a2 * c2);
  w.pt23 = block(a2, b2, c2, a2 * b2);
  w.invariant = a2 * a2 * a2 + b2 * b2 * b2 + c2 * c2 * c2 + 3.0 * a2 * b2 * c2;
  return w;
}

IntegerSequences tn_sequences(int n_max) {
  if (n_max < 3) throw std::invalid_argument("tn_sequences needs n_max >= 3");
  IntegerSequences s;
  // Seeds from the exact integer forms
  //   t_n  = 3^n + 2 sum_j C(n, 2j) 7^j,   t'_n = 2^n + 4^n + (-1)^n.
  auto pow_int = [](__int128 b, int e) {
    __int128 r = 1;
    while (e-- > 0) r *= b;
    return r;
  };
  for (int n = 1; n <= 3; ++n) {
    __int128 binom_sum = 0, binom = 1;  // binom = C(n, k)
    for (int k = 0; k <= n; ++k) {
      if (k % 2 == 0) binom_sum += binom * pow_int(7, k / 2);
      binom = binom * (n - k) / (k + 1);
    }
    s.t.push_back(pow_int(3, n) + 2 * binom_sum);
    s.t_prime.push_back(pow_int(2, n) + pow_int(4, n) + (n % 2 == 0 ? 1 : -1));
  }
  for (int n = 3; n < n_max; ++n) {
    s.t.push_back(5 * s.t[n - 1] - 18 * s.t[n - 3]);
    s.t_prime.push_back(5 * s.t_prime[n - 1] - 2 * s.t_prime[n - 2] - 8 * s.t_prime[n - 3]);
  }
  s.t.resize(n_max);
  s.t_prime.resize(n_max);
  return s;
}

std::string to_string(__int128 v) {
  if (v == 0) return "0";
  const bool neg = v < 0;
  unsigned __int128 u = neg ? -static_cast<unsigned __int128>(v) : static_cast<unsigned __int128>(v);
  std::string out;
  while (u > 0) {
    out.push_back(static_cast<char>('0' + static_cast<int>(u % 10)));
    u /= 10;
  }
  if (neg) out.push_back('-');
  return {out.rbegin(), out.rend()};
}

}  // namespace ptlab
