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

#include <catch_amalgamated.hpp>

#include <cmath>
#include <random>
#include <vector>

#include "jcs/dynamics.hpp"
#include "jcs/errors.hpp"
#include "jcs/matelem.hpp"
#include "oracles.hpp"

using jcs::AlgebraKind;
using jcs::Band;
using jcs::cplx;
using jcs::ModelParams;
using Catch::Matchers::WithinAbs;

namespace {

ModelParams model(AlgebraKind kind, double omega, double delta, double g, double spin = 0.5) {
  ModelParams p;
  p.kind = kind;
  p.omega = omega;
  p.delta = delta;
  p.g = g;
  p.spin = spin;
  return p;
}

// Random strong-coupling parameters valid for every model.
std::vector<ModelParams> random_params(AlgebraKind kind, int count, std::uint32_t seed) {
  std::mt19937 gen(seed);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::vector<ModelParams> out;
  for (int i = 0; i < count; ++i) {
    ModelParams p;
    p.kind = kind;
    p.omega = 0.5 + 1.5 * u(gen);
    p.delta = 0.01 + 0.09 * u(gen);
    const double r = kind == AlgebraKind::SU11K ? 0.05 + 0.45 * u(gen) : 0.1 + 1.4 * u(gen);
    p.g = 0.5 * r * p.omega;
    p.spin = kind == AlgebraKind::SU11K ? 0.25 + 0.25 * (i % 6) : 3.5;
    out.push_back(p);
  }
  return out;
}

// Oracle <n| e^{s x (L+ - L-)} |m> for s = +/-1, at a converged cutoff.
double oracle_displaced(const ModelParams& p, int n, int m, int s) {
  const double x = jcs::displacement_params(p).x;
  const int dim = p.kind == AlgebraKind::SU2J ? jcs::su2_dimension(p.spin)
                  : p.kind == AlgebraKind::SU11K ? 240
                                                 : 100;
  const auto rep = jcs::build_rep(p.kind, p.spin, dim);
  return jcs::oracle_element(rep, n, m, cplx(s * x, 0.0), 1e-11).real();
}

}  // namespace

TEST_CASE("energy shift examples", "[dynamics]") {
  const auto pn = model(AlgebraKind::HeisenbergN, 1.0, 0.1, 0.5);
  CHECK_THAT(jcs::energy_shift(pn, 0, 1).value, WithinAbs(0.05 * std::exp(-0.5), 1e-16));
  const auto pj = model(AlgebraKind::SU2J, 1.0, 0.1, 0.5, 0.5);
  CHECK_THAT(jcs::energy_shift(pj, 0, 1).value, WithinAbs(0.05 * std::sqrt(0.5), 1e-16));
  CHECK_THROWS_AS(jcs::energy_shift(pn, 0, 0), jcs::ParameterError);
}

TEST_CASE("energy shift antisymmetry", "[dynamics][property]") {
  for (auto kind : {AlgebraKind::HeisenbergN, AlgebraKind::SU11K, AlgebraKind::SU2J}) {
    for (const auto& p : random_params(kind, 5, 11u)) {
      for (int n = 0; n <= 7; ++n) {
        CHECK(jcs::energy_shift(p, n, -1).value == -jcs::energy_shift(p, n, 1).value);
      }
    }
  }
}

TEST_CASE("Rabi frequency examples", "[dynamics]") {
  const auto pn = model(AlgebraKind::HeisenbergN, 1.0, 0.1, 0.5);
  auto r = jcs::rabi_frequencies(pn, jcs::level_pair(0, 1));
  CHECK_THAT(r.rabi, WithinAbs(0.1 * std::exp(-0.5), 1e-16));
  CHECK(r.rabi_prime == 0.0);
  r = jcs::rabi_frequencies(pn, jcs::level_pair(0, 2));
  CHECK(r.rabi == 0.0);
  CHECK(r.rabi_prime != 0.0);
  r = jcs::rabi_frequencies(model(AlgebraKind::HeisenbergN, 1.0, 0.0, 0.5), jcs::level_pair(0, 1));
  CHECK(r.rabi == 0.0);
  CHECK(r.rabi_prime == 0.0);
  const auto pj = model(AlgebraKind::SU2J, 1.0, 0.1, 0.5, 0.5);
  r = jcs::rabi_frequencies(pj, jcs::level_pair(0, 1));
  CHECK_THAT(r.rabi, WithinAbs(0.1 * std::sqrt(0.5), 1e-16));
  CHECK(r.rabi_prime == 0.0);
}

TEST_CASE("level pair validation", "[dynamics]") {
  CHECK(jcs::level_pair(0, 3).band == Band::Interband);
  CHECK(jcs::level_pair(1, 5).band == Band::Intraband);
  const auto p = model(AlgebraKind::HeisenbergN, 1.0, 0.1, 0.5);
  CHECK_THROWS_AS(jcs::rabi_frequencies(p, {0, 2, Band::Interband}), jcs::ParameterError);
  CHECK_THROWS_AS(jcs::rabi_frequencies(p, {0, 1, Band::Intraband}), jcs::ParameterError);
  CHECK_THROWS_AS(jcs::rabi_frequencies(p, {2, 2, Band::Intraband}), jcs::ParameterError);
  CHECK_THROWS_AS(jcs::rabi_frequencies(p, {3, 1, Band::Intraband}), jcs::ParameterError);
  CHECK_THROWS_AS(jcs::rwa_evolve(p, {0, 1, Band::Intraband}, 1, 1.0, {1.0, 0.0}),
                  jcs::ParameterError);
}

TEST_CASE("parity selection", "[dynamics][property]") {
  for (auto kind : {AlgebraKind::HeisenbergN, AlgebraKind::SU11K, AlgebraKind::SU2J}) {
    for (const auto& p : random_params(kind, 10, 5u)) {
      for (int m = 0; m <= 1; ++m) {
        for (int d = 1; d <= 6; ++d) {
          const auto r = jcs::rabi_frequencies(p, jcs::level_pair(m, m + d));
          if (d % 2 == 0) {
            CHECK(r.rabi == 0.0);
          } else {
            CHECK(r.rabi_prime == 0.0);
          }
        }
      }
    }
  }
}

TEST_CASE("Rabi frequencies match the oracle", "[dynamics][property]") {
  for (auto kind : {AlgebraKind::HeisenbergN, AlgebraKind::SU11K, AlgebraKind::SU2J}) {
    for (const auto& p : random_params(kind, 3, 21u)) {
      for (int m = 0; m <= 2; ++m) {
        for (int d = 1; d <= 5; ++d) {
          const int n = m + d;
          const double up = oracle_displaced(p, n, m, 1);
          const double down = oracle_displaced(p, n, m, -1);
          const auto r = jcs::rabi_frequencies(p, jcs::level_pair(m, n));
          CHECK_THAT(r.rabi, WithinAbs(p.delta * 0.5 * (up - down), 1e-8));
          CHECK_THAT(r.rabi_prime, WithinAbs(p.delta * 0.5 * (up + down), 1e-8));
          // Delta <m| sinh |n> = -R
          const double rev = p.delta * 0.5 * (oracle_displaced(p, m, n, 1) -
                                              oracle_displaced(p, m, n, -1));
          CHECK_THAT(rev, WithinAbs(-r.rabi, 1e-8));
          CHECK_THAT(jcs::displaced_diagonal(p, n), WithinAbs(oracle_displaced(p, n, n, 1), 1e-8));
        }
      }
    }
  }
}

TEST_CASE("resonance detuning", "[dynamics]") {
  const auto p0 = model(AlgebraKind::SU11K, 1.0, 0.0, 0.3, 1.0);
  const auto pair = jcs::level_pair(1, 4);
  CHECK_THAT(jcs::resonance_detuning(p0, pair, 1, -1), WithinAbs(3.0 * 0.8, 1e-14));

  const auto pn = model(AlgebraKind::HeisenbergN, 1.0, 0.1, 0.5);
  const double want = -jcs::energy_shift(pn, 1, 1).value - jcs::energy_shift(pn, 0, 1).value + 1.0;
  CHECK_THAT(jcs::resonance_detuning(pn, jcs::level_pair(0, 1), 1, -1), WithinAbs(want, 1e-16));
  CHECK(jcs::rabi_frequencies(pn, jcs::level_pair(0, 1)).detuning ==
        jcs::resonance_detuning(pn, jcs::level_pair(0, 1), 1, -1));
  CHECK(jcs::rabi_frequencies(pn, jcs::level_pair(0, 2)).detuning ==
        jcs::resonance_detuning(pn, jcs::level_pair(0, 2), 1, 1));

  for (auto kind : {AlgebraKind::HeisenbergN, AlgebraKind::SU11K, AlgebraKind::SU2J}) {
    for (const auto& p : random_params(kind, 4, 8u)) {
      const double big = jcs::displacement_params(p).omega_dressed;
      for (int s : {1, -1}) {
        for (int sp : {1, -1}) {
          const auto lp = jcs::level_pair(1, 4);
          const double sum = jcs::resonance_detuning(p, lp, s, sp) +
                             jcs::resonance_detuning(p, lp, -s, -sp);
          CHECK_THAT(sum, WithinAbs(2.0 * 3.0 * big, 1e-13));
        }
      }
    }
  }
}

TEST_CASE("RWA propagators", "[dynamics]") {
  for (auto band : {Band::Interband, Band::Intraband}) {
    for (int sigma : {1, -1}) {
      CHECK(jcs::max_abs(jcs::rwa_propagator(band, sigma, 0.3, 0.0) -
                         Eigen::Matrix2cd::Identity()) == 0.0);
      for (double t = 0.0; t < 50.0; t += 0.37) {
        const Eigen::Matrix2cd u = jcs::rwa_propagator(band, sigma, 0.3, t);
        CHECK(jcs::max_abs(u.adjoint() * u - Eigen::Matrix2cd::Identity()) <= 1e-15);
        CHECK_THAT(std::abs(u.determinant()), WithinAbs(1.0, 1e-15));
      }
    }
  }
  const Eigen::Matrix2cd u = jcs::rwa_propagator(Band::Intraband, 1, 2.0, 0.5);
  CHECK(std::abs(u(0, 1) - cplx(0.0, -std::sin(0.5))) <= 1e-16);
}

TEST_CASE("RWA evolution", "[dynamics]") {
  const auto p = model(AlgebraKind::HeisenbergN, 1.0, 0.1, 0.5);
  const auto pair = jcs::level_pair(0, 1);
  const double r = jcs::rabi_frequencies(p, pair).rabi;
  auto a = jcs::rwa_evolve(p, pair, 1, 0.0, {0.6, cplx(0.0, 0.8)});
  CHECK(a[0] == cplx(0.6));
  CHECK(a[1] == cplx(0.0, 0.8));
  a = jcs::rwa_evolve(p, pair, 1, M_PI / r, {0.6, cplx(0.0, 0.8)});
  CHECK_THAT(std::abs(a[0]), WithinAbs(0.8, 1e-14));
  CHECK_THAT(std::abs(a[1]), WithinAbs(0.6, 1e-14));
  a = jcs::rwa_evolve(p, pair, 1, M_PI / (2.0 * r), {1.0, 0.0});
  CHECK(std::abs(a[0] - std::sqrt(0.5)) <= 1e-15);
  CHECK(std::abs(a[1] - cplx(0.0, std::sqrt(0.5))) <= 1e-15);

  const jcs::Amplitudes4 init{0.5, cplx(0.0, 0.5), 0.5, cplx(0.5, 0.0)};
  const auto series = jcs::rwa_series(p, pair, -1, init, {0.0, 3.0, 70.0});
  const auto [sa, sb] = jcs::active_slots(Band::Interband, -1);
  CHECK(sa == 1);
  CHECK(sb == 2);
  for (const auto& y : series.amplitudes) {
    CHECK(y[0] == init[0]);
    CHECK(y[3] == init[3]);
    CHECK_THAT(jcs::norm_squared(y), WithinAbs(1.0, 1e-14));
  }
}

TEST_CASE("full equation at zero splitting is static", "[dynamics]") {
  const auto p = model(AlgebraKind::HeisenbergN, 1.0, 0.0, 0.5);
  const jcs::Amplitudes4 init{0.5, 0.5, 0.5, 0.5};
  const auto s = jcs::full_evolve(p, jcs::level_pair(0, 1), init, 1.0, 0.01);
  for (int k = 0; k < 4; ++k) {
    CHECK(s.amplitudes.back()[k] == init[k]);
  }
}

TEST_CASE("full equation input checks", "[dynamics]") {
  const auto p = model(AlgebraKind::HeisenbergN, 1.0, 0.1, 0.5);
  const auto pair = jcs::level_pair(0, 1);
  const jcs::Amplitudes4 init{1.0, 0.0, 0.0, 0.0};
  const double h = jcs::max_full_step(p, jcs::rabi_frequencies(p, pair));
  CHECK_THAT(h, WithinAbs(0.01, 1e-16));
  CHECK_THROWS_AS(jcs::full_evolve(p, pair, init, 1.0, 0.02), jcs::ParameterError);
  CHECK_THROWS_AS(jcs::full_evolve(p, pair, {1.0, 1.0, 0.0, 0.0}, 1.0, 0.01),
                  jcs::ParameterError);
  CHECK_THROWS_AS(jcs::full_evolve(p, pair, init, -1.0, 0.01), jcs::ParameterError);
  const auto s = jcs::full_evolve(p, pair, init, 1.0, 0.003, 10);
  CHECK(s.times.front() == 0.0);
  CHECK_THAT(s.times.back(), WithinAbs(1.0, 1e-15));
  CHECK(s.times.size() == s.amplitudes.size());
  CHECK(s.amplitudes.front() == init);
}

TEST_CASE("coupling block at t = 0", "[dynamics]") {
  const auto p = model(AlgebraKind::SU2J, 1.0, 0.1, 0.5, 1.0);
  const auto r = jcs::rabi_frequencies(p, jcs::level_pair(0, 2));
  const auto a = jcs::coupling_block(p, r, 0.0);
  CHECK(a(0, 0) == cplx(0.5 * r.rabi_prime));
  CHECK(a(1, 1) == cplx(-0.5 * r.rabi_prime));
  CHECK(a(0, 1) == cplx(-0.5 * r.rabi));
  CHECK(a(1, 0) == cplx(0.5 * r.rabi));
}

TEST_CASE("full equation matches the detuned two-level solution", "[dynamics][property]") {
  // Interband (0,1): a_{0,+} couples only to a_{1,-} with strength R/2 and
  // phase frequency -detuning, so |a_{1,-}|^2 = (R/W)^2 sin^2(W t/2),
  // W = sqrt(R^2 + detuning^2).
  struct Case {
    ModelParams p;
    int m, n;
  };
  const Case cases[] = {
      {model(AlgebraKind::HeisenbergN, 1.0, 0.1, 0.5), 0, 1},
      {model(AlgebraKind::HeisenbergN, 0.0060653, 0.02, 0.0030327), 0, 1},
      {model(AlgebraKind::SU11K, 0.5, 0.3, 0.1, 0.75), 1, 2},
      {model(AlgebraKind::SU2J, 0.3, 0.5, 0.2, 1.5), 0, 3},
  };
  for (const auto& c : cases) {
    const auto pair = jcs::level_pair(c.m, c.n);
    const auto r = jcs::rabi_frequencies(c.p, pair);
    const double det = r.detuning;
    const double w = std::hypot(r.rabi, det);
    const double t_end = 2.0 * M_PI / w;
    const double dt = jcs::max_full_step(c.p, r);
    const auto s = jcs::full_evolve(c.p, pair, {1.0, 0.0, 0.0, 0.0}, t_end, dt, 50);
    for (std::size_t k = 0; k < s.times.size(); ++k) {
      const double t = s.times[k];
      const double sn = std::sin(0.5 * w * t);
      const double want = (r.rabi / w) * (r.rabi / w) * sn * sn;
      CHECK_THAT(std::norm(s.amplitudes[k][3]), WithinAbs(want, 1e-8));
      CHECK(std::abs(s.amplitudes[k][1]) == 0.0);
      CHECK(std::abs(s.amplitudes[k][2]) == 0.0);
      CHECK_THAT(jcs::norm_squared(s.amplitudes[k]), WithinAbs(1.0, 1e-8));
    }
  }
}

TEST_CASE("intraband full equation against the two-level solution", "[dynamics][property]") {
  const auto p = model(AlgebraKind::HeisenbergN, 0.01, 0.05, 0.004);
  const auto pair = jcs::level_pair(0, 2);
  const auto r = jcs::rabi_frequencies(p, pair);
  const double det = r.detuning;
  const double w = std::hypot(r.rabi_prime, det);
  const double dt = jcs::max_full_step(p, r);
  const auto s = jcs::full_evolve(p, pair, {1.0, 0.0, 0.0, 0.0}, 2.0 * M_PI / w, dt, 100);
  for (std::size_t k = 0; k < s.times.size(); ++k) {
    const double sn = std::sin(0.5 * w * s.times[k]);
    const double want = (r.rabi_prime / w) * (r.rabi_prime / w) * sn * sn;
    CHECK_THAT(std::norm(s.amplitudes[k][2]), WithinAbs(want, 1e-8));
  }
}

TEST_CASE("RWA tracks the full equation near resonance", "[dynamics][property]") {
  // omega tuned so that the (0,+) -> (1,-) detuning vanishes at x = 1.
  const double delta = 0.02;
  const double omega = 0.5 * delta * std::exp(-0.5);
  const auto p = model(AlgebraKind::HeisenbergN, omega, delta, 0.5 * omega);
  const auto pair = jcs::level_pair(0, 1);
  const auto r = jcs::rabi_frequencies(p, pair);
  REQUIRE(std::abs(r.detuning) <= 0.01 * r.rabi);
  const double period = 2.0 * M_PI / r.rabi;
  const auto full = jcs::full_evolve(p, pair, {1.0, 0.0, 0.0, 0.0}, period,
                                     jcs::max_full_step(p, r), 20);
  const auto rwa = jcs::rwa_series(p, pair, 1, {1.0, 0.0, 0.0, 0.0}, full.times);
  double worst = 0.0;
  for (std::size_t k = 0; k < full.times.size(); ++k) {
    for (int slot = 0; slot < 4; ++slot) {
      worst = std::max(worst, std::abs(std::norm(full.amplitudes[k][slot]) -
                                       std::norm(rwa.amplitudes[k][slot])));
    }
  }
  CHECK(worst <= 0.1);
}

TEST_CASE("H_F coefficients", "[dynamics]") {
  for (auto kind : {AlgebraKind::HeisenbergN, AlgebraKind::SU11K, AlgebraKind::SU2J}) {
    const auto p = random_params(kind, 1, 4u).front();
    const auto hf = jcs::hf_coefficients(p, 6);
    for (int m = 0; m <= 6; ++m) {
      CHECK_THAT(hf.at(1, m, m), WithinAbs(jcs::energy_shift(p, m, 1).value, 1e-15));
      CHECK_THAT(hf.at(1, m, m), WithinAbs(hf.at(-1, m, m), 1e-14));
      for (int n = 0; n <= 6; ++n) {
        if (n != m) {
          CHECK_THAT(hf.at(1, m, n), WithinAbs(0.5 * p.delta * oracle_displaced(p, m, n, 1), 1e-8));
        }
      }
    }
    // R and R' come from the same coefficients.
    const auto r = jcs::rabi_frequencies(p, jcs::level_pair(1, 4));
    CHECK_THAT(r.rabi, WithinAbs(hf.at(1, 4, 1) - hf.at(-1, 4, 1), 1e-14));
  }
  CHECK_THROWS_AS(jcs::hf_coefficients(model(AlgebraKind::SU2J, 1, 0.1, 0.5, 1.0), 3),
                  jcs::ParameterError);
}

TEST_CASE("cat states", "[dynamics]") {
  const auto p = model(AlgebraKind::HeisenbergN, 1.0, 0.1, 0.5);
  const int dim = 60;
  jcs::CMatrix sz = jcs::CMatrix::Identity(2 * dim, 2 * dim);
  sz.bottomRightCorner(dim, dim) *= -1.0;
  for (int n = 0; n < 6; ++n) {
    const auto plus = jcs::cat_state(p, 1, n, dim);
    const auto minus = jcs::cat_state(p, -1, n, dim);
    CHECK_THAT(plus.norm(), WithinAbs(1.0, 1e-8));
    CHECK(std::abs(plus.dot(minus)) <= 1e-8);
    for (int sigma : {1, -1}) {
      const auto& v = sigma == 1 ? plus : minus;
      const cplx e = v.dot(0.5 * p.delta * (sz * v));
      CHECK_THAT(e.real(), WithinAbs(jcs::energy_shift(p, n, sigma).value, 1e-10));
    }
  }
  const auto p0 = model(AlgebraKind::SU2J, 1.0, 0.1, 0.0, 1.0);
  const auto c = jcs::cat_state(p0, 1, 1, 3);
  // (|+> + |->)/sqrt2 = |q=0>, so only the upper qubit component survives.
  CHECK(std::abs(c(1) - 1.0) <= 1e-15);
  CHECK(std::abs(c(4)) <= 1e-15);
}

TEST_CASE("secular demo", "[dynamics]") {
  CHECK(jcs::secular_demo(0.0, 1.0, 1.0) == std::exp(1.0));
  CHECK(jcs::secular_demo(1.3, cplx(0.2, 0.1), 0.0) == cplx(0.2, 0.1));
  CHECK(std::abs(jcs::secular_demo(2.0 * M_PI, 1.0, 1.0) - 1.0) <= 1e-15);
}

TEST_CASE("secular demo matches direct integration", "[dynamics][property]") {
  for (double omega : {-10.0, -3.0, 0.0, 0.5, 2.0 * M_PI, 10.0}) {
    for (double t : {0.5, 2.0, 5.0}) {
      const cplx c{0.7, -0.2};
      const auto f = [omega](double s, cplx a) { return std::polar(1.0, omega * s) * a; };
      const cplx num = jcs::testing::rk4_scalar(f, c, t, 20000);
      CHECK(std::abs(jcs::secular_demo(omega, c, t) - num) <= 1e-8);
    }
  }
}
