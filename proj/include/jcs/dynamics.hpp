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

#pragma once

#include <array>
#include <utility>
#include <vector>

#include "jcs/hamiltonian.hpp"
#include "jcs/linalg.hpp"

namespace jcs {

/// Interband transitions flip the cat label (n-m odd); intraband
/// transitions keep it (n-m even, nonzero).
enum class Band { Interband, Intraband };

struct LevelPair {
  int m = 0;
  int n = 1;
  Band band = Band::Interband;
};

/// Pair with the band implied by the parity of n-m.
LevelPair level_pair(int m, int n);

/// Throws ParameterError unless 0 <= m < n and the band matches the parity.
void validate(const LevelPair& pair);

/// E_{n,sigma} = (delta/2) sigma <n| e^{x(L+ - L-)} |n>.
struct EnergyShift {
  int n;
  int sigma;
  double value;
};

/// The two Rabi frequencies of a level pair. Exactly one of them is nonzero
/// by parity. `detuning` is resonance_detuning at sigma = +1 with the
/// band's partner sigma' (-sigma interband, sigma intraband).
struct RabiPair {
  double rabi = 0.0;        // Delta <n| sinh(x(L+ - L-)) |m>
  double rabi_prime = 0.0;  // Delta <n| cosh(x(L+ - L-)) |m>
  LevelPair pair;
  double detuning = 0.0;
};

/// Amplitudes (a_{m,+1}, a_{m,-1}, a_{n,+1}, a_{n,-1}).
using Amplitudes4 = std::array<cplx, 4>;
using Amplitudes2 = std::array<cplx, 2>;

struct TimeSeries {
  std::vector<double> times;
  std::vector<Amplitudes4> amplitudes;
};

double norm_squared(const Amplitudes4& a);

/// Off-diagonal displacement element <n| e^{x(L+ - L-)} |m> for n > m from
/// the Laguerre / F-function closed forms at the model's x.
double displaced_element(const ModelParams& p, int n, int m);

/// <n| e^{x(L+ - L-)} |n> from the closed forms.
double displaced_diagonal(const ModelParams& p, int n);

EnergyShift energy_shift(const ModelParams& p, int n, int sigma);

/// E_{n,sigma'} - E_{m,sigma} - (m-n) Omega; zero at exact resonance.
double resonance_detuning(const ModelParams& p, const LevelPair& pair, int sigma, int sigma_prime);

RabiPair rabi_frequencies(const ModelParams& p, const LevelPair& pair);

/// sigma' that the band pairs with sigma: -sigma (interband) or sigma.
int partner_sigma(Band band, int sigma);

/// Slots of the two active amplitudes in the (m+, m-, n+, n-) ordering:
/// interband (a_{m,sigma}, a_{n,-sigma}), intraband (a_{m,sigma}, a_{n,sigma}).
std::pair<int, int> active_slots(Band band, int sigma);

/// 2x2 RWA propagator: [[c, i sigma s], [i sigma s, c]] with angle R t/2
/// (interband) or [[c, -i sigma s], [-i sigma s, c]] with R' t/2 (intraband).
Eigen::Matrix2cd rwa_propagator(Band band, int sigma, double rabi, double t);

/// Evolves (a_{m,sigma}, a_{n,+/-sigma}) under the RWA.
Amplitudes2 rwa_evolve(const ModelParams& p, const LevelPair& pair, int sigma, double t,
                       const Amplitudes2& init);

/// RWA evolution of the full four-vector sampled at `times`; the two
/// inactive amplitudes are constant.
TimeSeries rwa_series(const ModelParams& p, const LevelPair& pair, int sigma,
                      const Amplitudes4& init, const std::vector<double>& times);

/// Step bound 0.01 / max(Omega, |R|, |R'|, Delta).
double max_full_step(const ModelParams& p, const RabiPair& rabi);

/// The coupling block A(t) of the un-approximated two-level-pair equation
///   i d/dt (a_m, a_n) = [[0, A], [A^dagger, 0]] (a_m, a_n).
Eigen::Matrix2cd coupling_block(const ModelParams& p, const RabiPair& rabi, double t);

/// Fixed-step classical RK4 integration of the equation above from t = 0 to
/// t_end. Every `sample_every`-th step is recorded (the first and last
/// always are). The step is shrunk to divide t_end evenly.
TimeSeries full_evolve(const ModelParams& p, const LevelPair& pair, const Amplitudes4& init,
                       double t_end, double dt, int sample_every = 1);

/// Coefficients (delta/2) <m| e^{lambda x (L+ - L-)} |n> for m, n <= mmax;
/// the diagonal defines H_F' and the off-diagonal H_F''.
struct HfCoefficients {
  int mmax = 0;
  RMatrix plus;   // lambda = +1
  RMatrix minus;  // lambda = -1
  double at(int lambda, int m, int n) const;
};

HfCoefficients hf_coefficients(const ModelParams& p, int mmax);

/// |{sigma, psi_n}> = (sigma |{1,n}> + |{-1,n}>) / sqrt(2).
CVector cat_state(const ModelParams& p, int sigma, int n, int dim);

/// Solution c exp((e^{i omega t} - 1)/(i omega)) of da/dt = e^{i omega t} a,
/// a(0) = c; c e^t when omega = 0.
cplx secular_demo(double omega, cplx c, double t);

}  // namespace jcs
