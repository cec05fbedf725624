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

#include "ptlab/tracy_widom.hpp"

#include <algorithm>
#include <array>
#include <boost/math/quadrature/exp_sinh.hpp>
#include <boost/numeric/odeint.hpp>
#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "ptlab/types.hpp"

namespace ptlab {
namespace {

using State = std::array<double, 5>;  // q, q', I, K, J

int check_beta(int beta) {
  if (beta != 1 && beta != 2) throw std::invalid_argument("beta must be 1 or 2");
  return beta;
}

}  // namespace

AiryPair airy_asymptotic(double x) {
  if (x < 5.0) throw std::invalid_argument("asymptotic Airy series needs x >= 5");
  const double zeta = 2.0 / 3.0 * x * std::sqrt(x);
  double u = 1.0, su = 1.0, sv = 1.0;
  double prev = 1.0;
  for (int k = 1; k < 60; ++k) {
    u *= (6.0 * k - 5.0) * (6.0 * k - 3.0) * (6.0 * k - 1.0) / (216.0 * k * (2.0 * k - 1.0));
    const double term = u / std::pow(zeta, k);
    if (term > prev) break;  // optimal truncation
    const double sign = (k % 2 == 0) ? 1.0 : -1.0;
    su += sign * term;
    sv += sign * term * (-(6.0 * k + 1.0) / (6.0 * k - 1.0));
    prev = term;
    if (term < 1e-18) break;
  }
  const double pref = std::exp(-zeta) / (2.0 * std::sqrt(std::numbers::pi));
  return {pref / std::pow(x, 0.25) * su, -pref * std::pow(x, 0.25) * sv};
}

std::pair<double, double> hm_left_tail(double s) {
  if (s > -4.0) throw std::invalid_argument("left-tail series needs s <= -4");
  static constexpr double a[] = {1.0 / 8, -73.0 / 128, 10657.0 / 1024, -13912277.0 / 32768,
                                 8045883943.0 / 262144, -14518451390349.0 / 4194304};
  const double t = 1.0 / (s * s * s);
  double sum = 1.0, dsum = 0.0, tn = 1.0, prev = 1.0;
  for (int k = 0; k < 6; ++k) {
    tn *= t;
    const double term = a[k] * tn;
    if (std::abs(term) > prev) break;
    sum += term;
    dsum += -3.0 * (k + 1) * term / s;
    prev = std::abs(term);
  }
  const double r = std::sqrt(-0.5 * s);
  return {r * sum, -sum / (4.0 * r) + r * dsum};
}

TWTable solve_painleve2(const TWOptions& o) {
  namespace odeint = boost::numeric::odeint;
  if (!(o.s_start > o.s_end) || !(o.step > 0.0)) throw std::invalid_argument("bad TW grid");
  if (o.s_start < 5.0) throw std::invalid_argument("TW start must be >= 5 for the Airy series");
  const int n = static_cast<int>(std::lround((o.s_start - o.s_end) / o.step)) + 1;

  // Beyond s_start q is Ai to far below double precision in the cubic term,
  // so the tails of the auxiliary integrals come from the Airy series.
  boost::math::quadrature::exp_sinh<double> tail;
  auto ai = [](double x) { return airy_asymptotic(x).ai; };
  const double k0 = tail.integrate([&](double t) { return ai(o.s_start + t) * ai(o.s_start + t); });
  const double i0 = tail.integrate([&](double t) { return t * ai(o.s_start + t) * ai(o.s_start + t); });
  const double j0 = tail.integrate([&](double t) { return ai(o.s_start + t); });
  const AiryPair a = airy_asymptotic(o.s_start);

  TWTable t;
  t.s.resize(n);
  for (int k = 0; k < n; ++k) t.s[k] = o.s_start - k * o.step;
  t.s.back() = o.s_end;
  // Grid points at or above the switch use the full equation.
  int n_ode = n;
  for (int k = 0; k < n; ++k) {
    if (t.s[k] < o.s_switch - 1e-12) {
      n_ode = k;
      break;
    }
  }
  std::vector<State> out(n);

  auto rhs = [](const State& x, State& dx, double s) {
    dx[0] = x[1];
    dx[1] = s * x[0] + 2.0 * x[0] * x[0] * x[0];
    dx[2] = -x[3];
    dx[3] = -x[0] * x[0];
    dx[4] = -x[0];
  };
  State y{a.ai, a.aip, i0, k0, j0};
  auto stepper = odeint::make_dense_output(o.atol, o.rtol, odeint::runge_kutta_dopri5<State>());
  int idx = 0;
  odeint::integrate_times(stepper, rhs, y, t.s.begin(), t.s.begin() + n_ode, -o.step / 4,
                          [&](const State& x, double) { out[idx++] = x; });

  auto off_branch = [](double s, double q) {
    return !std::isfinite(q) || q < 0.0 || (s < -2.0 && std::abs(q / std::sqrt(-0.5 * s) - 1.0) > 0.05);
  };
  for (int k = 0; k < n_ode; ++k) {
    if (off_branch(t.s[k], out[k][0])) {
      std::ostringstream msg;
      msg << "Painleve II left the Hastings-McLeod branch at s=" << t.s[k] << " (q=" << out[k][0]
          << ", rtol=" << o.rtol << ")";
      throw SolverError(msg.str());
    }
  }

  if (n_ode < n) {
    // Hand over to the series and keep integrating I, K, J only.
    const State& last = out[n_ode - 1];
    const double s_hand = t.s[n_ode - 1];
    const auto [qa, qpa] = hm_left_tail(s_hand);
    if (std::abs(last[0] / qa - 1.0) > 1e-5) {
      std::ostringstream msg;
      msg << "Painleve II integration disagrees with the left-tail series at s=" << s_hand
          << ": q=" << last[0] << " vs " << qa;
      throw SolverError(msg.str());
    }
    using Aux = std::array<double, 3>;  // I, K, J
    auto aux_rhs = [](const Aux& x, Aux& dx, double s) {
      const double q = hm_left_tail(s).first;
      dx[0] = -x[1];
      dx[1] = -q * q;
      dx[2] = -q;
    };
    Aux z{last[2], last[3], last[4]};
    auto aux_stepper = odeint::make_dense_output(1e-14, 1e-13, odeint::runge_kutta_dopri5<Aux>());
    std::vector<double> times(t.s.begin() + n_ode - 1, t.s.end());
    int j = n_ode - 1;
    odeint::integrate_times(aux_stepper, aux_rhs, z, times.begin(), times.end(), -o.step / 4,
                            [&](const Aux& x, double s) {
                              const auto [q, qp] = hm_left_tail(s);
                              if (j >= n_ode) out[j] = State{q, qp, x[0], x[1], x[2]};
                              ++j;
                            });
  }

  t.q.resize(n);
  t.qp.resize(n);
  t.f2_cdf.resize(n);
  t.f1_cdf.resize(n);
  t.f2_pdf.resize(n);
  t.f1_pdf.resize(n);
  for (int k = 0; k < n; ++k) {
    const State& x = out[k];
    t.q[k] = x[0];
    t.qp[k] = x[1];
    t.f2_cdf[k] = std::exp(-x[2]);
    t.f1_cdf[k] = std::exp(-0.5 * (x[4] + x[2]));
    t.f2_pdf[k] = t.f2_cdf[k] * x[3];
    t.f1_pdf[k] = 0.5 * t.f1_cdf[k] * (x[0] + x[3]);
  }
  return t;
}

double TWTable::cdf(int beta, double x) const {
  check_beta(beta);
  if (x >= s.front()) return 1.0;
  if (x <= s.back()) return 0.0;
  const auto& f = beta == 2 ? f2_cdf : f1_cdf;
  const auto& d = beta == 2 ? f2_pdf : f1_pdf;
  const double h = step();
  const std::size_t k = std::min(static_cast<std::size_t>((s.front() - x) / h), s.size() - 2);
  // Hermite on [s[k+1], s[k]] with the density as the derivative.
  const double span = s[k] - s[k + 1];
  const double u = (x - s[k + 1]) / span;
  const double h00 = (1 + 2 * u) * (1 - u) * (1 - u), h10 = u * (1 - u) * (1 - u);
  const double h01 = u * u * (3 - 2 * u), h11 = u * u * (u - 1);
  return h00 * f[k + 1] + h10 * span * d[k + 1] + h01 * f[k] + h11 * span * d[k];
}

double TWTable::pdf(int beta, double x) const {
  check_beta(beta);
  if (x >= s.front() || x <= s.back()) return 0.0;
  const auto& d = beta == 2 ? f2_pdf : f1_pdf;
  const double h = step();
  const std::size_t k = std::min(static_cast<std::size_t>((s.front() - x) / h), s.size() - 2);
  const double u = (x - s[k + 1]) / (s[k] - s[k + 1]);
  return (1 - u) * d[k + 1] + u * d[k];
}

double TWTable::excess_above(int beta, double x) const {
  check_beta(beta);
  if (x >= s.front()) return 0.0;
  // Simpson on a fine uniform grid over [x, s_start] of 1 - F.
  const double hi = s.front();
  int m = static_cast<int>(std::ceil((hi - x) / (0.25 * step())));
  if (m % 2) ++m;
  const double h = (hi - x) / m;
  double acc = 0.0;
  for (int k = 0; k <= m; ++k) {
    const double w = (k == 0 || k == m) ? 1.0 : (k % 2 ? 4.0 : 2.0);
    acc += w * (1.0 - cdf(beta, x + k * h));
  }
  return acc * h / 3.0;
}

std::pair<double, double> TWTable::moments(int beta) const {
  check_beta(beta);
  const auto& d = beta == 2 ? f2_pdf : f1_pdf;
  double m0 = 0, m1 = 0, m2 = 0;
  for (std::size_t k = 0; k + 1 < s.size(); ++k) {
    const double h = s[k] - s[k + 1];
    auto add = [&](std::size_t i, double w) {
      m0 += w * d[i];
      m1 += w * d[i] * s[i];
      m2 += w * d[i] * s[i] * s[i];
    };
    add(k, 0.5 * h);
    add(k + 1, 0.5 * h);
  }
  const double mean = m1 / m0;
  return {mean, m2 / m0 - mean * mean};
}

double scale_min_eigenvalue(double mu_min, const PartitionDims& dims) {
  const double n = static_cast<double>(dims.n());
  const double n3 = static_cast<double>(dims.n3());
  return (std::sqrt(n3) * (n * mu_min - 1.0) + 2.0 * std::sqrt(n)) * std::cbrt(std::sqrt(n));
}

double npt_fraction(const TWTable& tw, int beta, double shift) {
  if (shift < 0.0) throw std::invalid_argument("shift must be >= 0");
  return 1.0 - tw.cdf(beta, shift);
}

double min_law_cdf(const TWTable& tw, int beta, double x) { return 1.0 - tw.cdf(beta, -x); }

double ks_distance(std::span<const double> sorted_x, const TWTable& tw, int beta, double shift) {
  const double n = static_cast<double>(sorted_x.size());
  double d = 0.0;
  for (std::size_t i = 0; i < sorted_x.size(); ++i) {
    const double g = min_law_cdf(tw, beta, sorted_x[i] - shift);
    d = std::max({d, std::abs(g - i / n), std::abs((i + 1) / n - g)});
  }
  return d;
}

CriticalFit fit_shift(std::span<const double> scaled_mins, const TWTable& tw, int beta) {
  check_beta(beta);
  if (scaled_mins.size() < 500) throw std::invalid_argument("fit_shift needs >= 500 samples");
  CriticalFit fit;
  fit.scaled.assign(scaled_mins.begin(), scaled_mins.end());
  std::vector<double> xs = fit.scaled;
  std::sort(xs.begin(), xs.end());
  auto ks = [&](double s) { return ks_distance(xs, tw, beta, s); };
  fit.ks_unshifted = ks(0.0);

  // Coarse scan, then golden-section refinement around the best node.
  constexpr double kMax = 3.0, kStep = 0.02;
  const int nodes = static_cast<int>(kMax / kStep);
  int best = 0;
  double best_ks = fit.ks_unshifted;
  for (int k = 1; k <= nodes; ++k) {
    const double v = ks(k * kStep);
    if (v < best_ks) {
      best_ks = v;
      best = k;
    }
  }
  if (best == 0 || best == nodes) {
    fit.bracketed = false;
    fit.shift = 0.0;
    fit.ks = fit.ks_unshifted;
    fit.warning = best == 0 ? "KS distance is smallest without a shift; reporting the unshifted fit"
                            : "KS minimum not bracketed below the scan limit; reporting the unshifted fit";
    return fit;
  }
  double a = (best - 1) * kStep, b = (best + 1) * kStep;
  const double g = 0.5 * (std::sqrt(5.0) - 1.0);
  double c = b - g * (b - a), d = a + g * (b - a);
  double fc = ks(c), fd = ks(d);
  while (b - a > 1e-4) {
    if (fc < fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - g * (b - a);
      fc = ks(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + g * (b - a);
      fd = ks(d);
    }
  }
  const double s = 0.5 * (a + b);
  const double v = ks(s);
  // KS is piecewise, so keep the scan node if the refinement did worse.
  if (v <= best_ks) {
    fit.shift = s;
    fit.ks = v;
  } else {
    fit.shift = best * kStep;
    fit.ks = best_ks;
  }
  return fit;
}

double avg_logneg_critical(const PartitionDims& dims, const TWTable& tw, int beta, double shift) {
  if (!dims.is_critical()) throw std::invalid_argument("avg_logneg_critical needs N3 = 4 N1 N2");
  if (shift < 0.0) throw std::invalid_argument("shift must be >= 0");
  const double n = static_cast<double>(dims.n());
  const double pref = 2.0 / (std::sqrt(static_cast<double>(dims.n3())) * std::pow(n, 7.0 / 6.0));
  return pref * tw.excess_above(beta, shift);
}

}  // namespace ptlab
