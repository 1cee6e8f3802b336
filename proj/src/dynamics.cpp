// Copyright 2026 The jcstrong Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "jcs/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "jcs/errors.hpp"
#include "jcs/kernels.hpp"
#include "jcs/matelem.hpp"
#include "jcs/special.hpp"

namespace jcs {

namespace {

constexpr double kInitNormTol = 1e-12;

void check_sigma(int sigma, const char* what) { check_lambda(sigma, what); }

// F-function prefactor sqrt(n! m! / (norm_n norm_m)) in the log domain;
// norm_k = (2K)_k (K) or 2J P_k (J).
double log_su_norm(AlgebraKind kind, double spin, int n, int m) {
  if (kind == AlgebraKind::SU11K) {
    return 0.5 * (log_factorial(n) + log_factorial(m) - log_pochhammer(2.0 * spin, n) -
                  log_pochhammer(2.0 * spin, m));
  }
  const int two_j = validate_spin(kind, spin);
  return 0.5 * (log_factorial(n) + log_factorial(m) + log_factorial(two_j - n) +
                log_factorial(two_j - m) - 2.0 * log_factorial(two_j));
}

// <n| e^{x(L+ - L-)} |m> for n >= m at real x, written in terms of the
// model's kappa and the F-functions.
double displaced_closed_form(const ModelParams& p, int n, int m) {
  const Displacement d = displacement_params(p);
  const int diff = n - m;
  switch (p.kind) {
    case AlgebraKind::HeisenbergN: {
      const double r = 2.0 * p.g / p.omega;  // = x
      const double r2 = r * r;
      const double log_mag = 0.5 * (log_factorial(m) - log_factorial(n)) - 0.5 * r2;
      return std::exp(log_mag) * ipow(r, diff) * laguerre_assoc(m, diff, r2);
    }
    case AlgebraKind::SU11K: {
      const double kappa = std::sinh(d.x);
      const double k2 = kappa * kappa;
      const double log_mag = log_su_norm(p.kind, p.spin, n, m) -
                             (p.spin + 0.5 * (n + m)) * std::log1p(k2);
      return std::exp(log_mag) * ipow(kappa, diff) * f_function(m, diff, k2, 2.0 * p.spin, p.kind);
    }
    case AlgebraKind::SU2J: {
      const int two_j = validate_spin(p.kind, p.spin);
      if (n > two_j) {
        throw ParameterError("su(2) level index beyond 2J");
      }
      const double kappa = std::sin(d.x);
      const double k2 = kappa * kappa;
      const double log_mag = log_su_norm(p.kind, p.spin, n, m) +
                             (p.spin - 0.5 * (n + m)) * std::log1p(-k2);
      return std::exp(log_mag) * ipow(kappa, diff) * f_function(m, diff, k2, 2.0 * p.spin, p.kind);
    }
  }
  return 0.0;
}

template <typename Deriv>
Amplitudes4 rk4_step(const Deriv& f, double t, const Amplitudes4& y, double h) {
  const auto axpy = [](const Amplitudes4& a, const Amplitudes4& b, double s) {
    Amplitudes4 out;
    for (int i = 0; i < 4; ++i) out[i] = a[i] + s * b[i];
    return out;
  };
  const Amplitudes4 k1 = f(t, y);
  const Amplitudes4 k2 = f(t + 0.5 * h, axpy(y, k1, 0.5 * h));
  const Amplitudes4 k3 = f(t + 0.5 * h, axpy(y, k2, 0.5 * h));
  const Amplitudes4 k4 = f(t + h, axpy(y, k3, h));
  Amplitudes4 out;
  for (int i = 0; i < 4; ++i) {
    out[i] = y[i] + (h / 6.0) * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
  }
  return out;
}

}  // namespace

double norm_squared(const Amplitudes4& a) {
  double s = 0.0;
  for (const cplx& v : a) s += std::norm(v);
  return s;
}

LevelPair level_pair(int m, int n) {
  return {m, n, ((n - m) % 2 != 0) ? Band::Interband : Band::Intraband};
}

void validate(const LevelPair& pair) {
  if (pair.m < 0 || pair.n <= pair.m) {
    throw ParameterError("level pair needs 0 <= m < n, got m=" + std::to_string(pair.m) +
                         ", n=" + std::to_string(pair.n));
  }
  const bool odd = (pair.n - pair.m) % 2 != 0;
  if (odd && pair.band != Band::Interband) {
    throw ParameterError("n-m = " + std::to_string(pair.n - pair.m) +
                         " is odd: only the interband transition (R) couples this pair");
  }
  if (!odd && pair.band != Band::Intraband) {
    throw ParameterError("n-m = " + std::to_string(pair.n - pair.m) +
                         " is even: only the intraband transition (R') couples this pair");
  }
}

double displaced_element(const ModelParams& p, int n, int m) {
  if (m < 0 || n <= m) {
    throw ParameterError("displaced_element expects n > m >= 0");
  }
  return displaced_closed_form(p, n, m);
}

double displaced_diagonal(const ModelParams& p, int n) {
  if (n < 0) {
    throw ParameterError("level index must be non-negative");
  }
  return displaced_closed_form(p, n, n);
}

EnergyShift energy_shift(const ModelParams& p, int n, int sigma) {
  check_sigma(sigma, "sigma");
  return {n, sigma, 0.5 * p.delta * sigma * displaced_diagonal(p, n)};
}

double resonance_detuning(const ModelParams& p, const LevelPair& pair, int sigma, int sigma_prime) {
  validate(pair);
  const Displacement d = displacement_params(p);
  return energy_shift(p, pair.n, sigma_prime).value - energy_shift(p, pair.m, sigma).value -
         (pair.m - pair.n) * d.omega_dressed;
}

int partner_sigma(Band band, int sigma) { return band == Band::Interband ? -sigma : sigma; }

RabiPair rabi_frequencies(const ModelParams& p, const LevelPair& pair) {
  validate(pair);
  const double element = displaced_element(p, pair.n, pair.m);
  const double parity = ((pair.n - pair.m) % 2 == 0) ? 1.0 : -1.0;  // (-1)^{n-m}
  RabiPair out;
  out.pair = pair;
  out.rabi = 0.5 * p.delta * element * (1.0 - parity);
  out.rabi_prime = 0.5 * p.delta * element * (1.0 + parity);
  out.detuning = resonance_detuning(p, pair, 1, partner_sigma(pair.band, 1));
  return out;
}

std::pair<int, int> active_slots(Band band, int sigma) {
  check_sigma(sigma, "sigma");
  const int m_slot = sigma == 1 ? 0 : 1;
  const int n_sigma = partner_sigma(band, sigma);
  const int n_slot = n_sigma == 1 ? 2 : 3;
  return {m_slot, n_slot};
}

Eigen::Matrix2cd rwa_propagator(Band band, int sigma, double rabi, double t) {
  check_sigma(sigma, "sigma");
  const double c = std::cos(0.5 * rabi * t);
  const double s = std::sin(0.5 * rabi * t);
  const cplx off = (band == Band::Interband ? 1.0 : -1.0) * sigma * kI * s;
  Eigen::Matrix2cd u;
  u << c, off, off, c;
  return u;
}

Amplitudes2 rwa_evolve(const ModelParams& p, const LevelPair& pair, int sigma, double t,
                       const Amplitudes2& init) {
  const RabiPair r = rabi_frequencies(p, pair);
  const double freq = pair.band == Band::Interband ? r.rabi : r.rabi_prime;
  const Eigen::Matrix2cd u = rwa_propagator(pair.band, sigma, freq, t);
  return {u(0, 0) * init[0] + u(0, 1) * init[1], u(1, 0) * init[0] + u(1, 1) * init[1]};
}

TimeSeries rwa_series(const ModelParams& p, const LevelPair& pair, int sigma,
                      const Amplitudes4& init, const std::vector<double>& times) {
  const RabiPair r = rabi_frequencies(p, pair);
  const double freq = pair.band == Band::Interband ? r.rabi : r.rabi_prime;
  const auto [a, b] = active_slots(pair.band, sigma);
  TimeSeries out;
  out.times = times;
  out.amplitudes.reserve(times.size());
  for (double t : times) {
    const Eigen::Matrix2cd u = rwa_propagator(pair.band, sigma, freq, t);
    Amplitudes4 y = init;
    y[a] = u(0, 0) * init[a] + u(0, 1) * init[b];
    y[b] = u(1, 0) * init[a] + u(1, 1) * init[b];
    out.amplitudes.push_back(y);
  }
  return out;
}

double max_full_step(const ModelParams& p, const RabiPair& rabi) {
  const Displacement d = displacement_params(p);
  const double scale = std::max({d.omega_dressed, std::abs(rabi.rabi),
                                 std::abs(rabi.rabi_prime), p.delta});
  return 0.01 / scale;
}

Eigen::Matrix2cd coupling_block(const ModelParams& p, const RabiPair& rabi, double t) {
  const Displacement d = displacement_params(p);
  const int m = rabi.pair.m;
  const int n = rabi.pair.n;
  const double em_p = energy_shift(p, m, 1).value;
  const double em_m = energy_shift(p, m, -1).value;
  const double en_p = energy_shift(p, n, 1).value;
  const double en_m = energy_shift(p, n, -1).value;
  const double base = d.omega_dressed * (m - n);
  const auto ph = [t, base](double f) { return std::polar(1.0, t * (f + base)); };
  Eigen::Matrix2cd a;
  a(0, 0) = 0.5 * rabi.rabi_prime * ph(-en_p + em_p);
  a(0, 1) = -0.5 * rabi.rabi * ph(-en_m + em_p);
  a(1, 0) = 0.5 * rabi.rabi * ph(-en_p + em_m);
  a(1, 1) = -0.5 * rabi.rabi_prime * ph(-en_m + em_m);
  return a;
}

TimeSeries full_evolve(const ModelParams& p, const LevelPair& pair, const Amplitudes4& init,
                       double t_end, double dt, int sample_every) {
  const RabiPair rabi = rabi_frequencies(p, pair);
  const Displacement d = displacement_params(p);
  const double bound = max_full_step(p, rabi);
  if (!(dt > 0.0) || dt > bound * (1.0 + 1e-12)) {
    throw ParameterError("time step " + std::to_string(dt) + " violates the bound dt <= " +
                         std::to_string(bound));
  }
  if (!(t_end >= 0.0) || !std::isfinite(t_end)) {
    throw ParameterError("t_end must be a finite non-negative time");
  }
  if (std::abs(norm_squared(init) - 1.0) > kInitNormTol) {
    throw ParameterError("initial amplitudes must have unit norm");
  }
  if (sample_every < 1) {
    throw ParameterError("sample_every must be positive");
  }

  // Frequencies of the four A(t) entries, hoisted out of the stepping loop.
  const int m = pair.m;
  const int n = pair.n;
  const double em_p = energy_shift(p, m, 1).value;
  const double em_m = energy_shift(p, m, -1).value;
  const double en_p = energy_shift(p, n, 1).value;
  const double en_m = energy_shift(p, n, -1).value;
  const double base = d.omega_dressed * (m - n);
  const std::array<double, 4> freq = {-en_p + em_p + base, -en_m + em_p + base,
                                      -en_p + em_m + base, -en_m + em_m + base};
  const std::array<double, 4> amp = {0.5 * rabi.rabi_prime, -0.5 * rabi.rabi, 0.5 * rabi.rabi,
                                     -0.5 * rabi.rabi_prime};

  const auto deriv = [&](double t, const Amplitudes4& y) {
    std::array<cplx, 4> a;
    for (int k = 0; k < 4; ++k) a[k] = amp[k] * std::polar(1.0, t * freq[k]);
    // i dy/dt = [[0, A], [A^dagger, 0]] y
    Amplitudes4 out;
    out[0] = -kI * (a[0] * y[2] + a[1] * y[3]);
    out[1] = -kI * (a[2] * y[2] + a[3] * y[3]);
    out[2] = -kI * (std::conj(a[0]) * y[0] + std::conj(a[2]) * y[1]);
    out[3] = -kI * (std::conj(a[1]) * y[0] + std::conj(a[3]) * y[1]);
    return out;
  };

  const long steps = t_end == 0.0 ? 0 : static_cast<long>(std::ceil(t_end / dt - 1e-9));
  const double h = steps == 0 ? 0.0 : t_end / static_cast<double>(steps);

  TimeSeries out;
  const std::size_t expected = static_cast<std::size_t>(steps / sample_every) + 2;
  out.times.reserve(expected);
  out.amplitudes.reserve(expected);
  out.times.push_back(0.0);
  out.amplitudes.push_back(init);
  Amplitudes4 y = init;
  for (long k = 0; k < steps; ++k) {
    const double t = k * h;
    y = rk4_step(deriv, t, y, h);
    if ((k + 1) % sample_every == 0 || k + 1 == steps) {
      out.times.push_back((k + 1) * h);
      out.amplitudes.push_back(y);
    }
  }
  return out;
}

double HfCoefficients::at(int lambda, int m, int n) const {
  check_lambda(lambda, "lambda");
  return lambda == 1 ? plus(m, n) : minus(m, n);
}

HfCoefficients hf_coefficients(const ModelParams& p, int mmax) {
  if (mmax < 1) {
    throw ParameterError("hf_coefficients needs mmax >= 1");
  }
  const Displacement d = displacement_params(p);
  if (p.kind == AlgebraKind::SU2J && mmax > validate_spin(p.kind, p.spin)) {
    throw ParameterError("su(2) levels run only up to 2J");
  }
  HfCoefficients out;
  out.mmax = mmax;
  out.plus = 0.5 * p.delta * element_table(p.kind, p.spin, cplx{d.x, 0.0}, mmax).real();
  out.minus = 0.5 * p.delta * element_table(p.kind, p.spin, cplx{-d.x, 0.0}, mmax).real();
  return out;
}

CVector cat_state(const ModelParams& p, int sigma, int n, int dim) {
  check_sigma(sigma, "sigma");
  const CVector up = dressed_state(p, 1, n, dim);
  const CVector down = dressed_state(p, -1, n, dim);
  return (static_cast<double>(sigma) * up + down) / std::sqrt(2.0);
}

cplx secular_demo(double omega, cplx c, double t) {
  if (omega == 0.0) {
    return c * std::exp(t);
  }
  // (e^{i w t} - 1) / (i w) = sin(wt)/w + i 2 sin^2(wt/2)/w
  const double half = std::sin(0.5 * omega * t);
  const cplx exponent{std::sin(omega * t) / omega, 2.0 * half * half / omega};
  return c * std::exp(exponent);
}

}  // namespace jcs
