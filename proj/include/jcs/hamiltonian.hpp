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

#include <vector>

#include "jcs/algebra.hpp"
#include "jcs/linalg.hpp"

namespace jcs {

/// Model kind and physical constants: mode frequency omega, level
/// separation delta and coupling g. `spin` is K or J (unused for N).
struct ModelParams {
  AlgebraKind kind = AlgebraKind::HeisenbergN;
  double omega = 1.0;
  double delta = 0.1;
  double g = 0.5;
  double spin = 0.5;
};

/// Throws ParameterError unless omega > 0, delta >= 0, g >= 0, the spin is
/// valid for the kind and, for SU11K, 2g/omega < 1.
void validate(const ModelParams& p);

/// delta < g: the ordering the strong-coupling split assumes. Callers warn
/// rather than fail when this is false.
bool in_strong_coupling_regime(const ModelParams& p);

/// Dressed frequency Omega and displacement parameter x of the
/// conjugation identity omega L3 + lambda g (L+ + L-) =
/// Omega e^{-(lambda x/2)(L+ - L-)} L3' e^{(lambda x/2)(L+ - L-)}.
struct Displacement {
  double omega_dressed;
  double x;
};

Displacement displacement_params(const ModelParams& p);

/// Exact spectrum of H0 = omega 1 (x) L3 + g sigma1 (x) (L+ + L-).
struct SpectralData {
  double omega_dressed = 0.0;
  double x = 0.0;
  /// energies[n] = E_n, each two-fold degenerate over lambda = +/-1.
  std::vector<double> energies;
  /// -g^2/omega for N (already folded into energies), 0 otherwise.
  double shift = 0.0;
};

/// Closed-form E_n for n = 0..nmax: omega n - g^2/omega (N),
/// Omega (K+n) (K), Omega (-J+n) (J). For SU2J, nmax <= 2J.
SpectralData h0_spectrum(const ModelParams& p, int nmax);

/// E_n alone.
double h0_energy(const ModelParams& p, int n);

/// Representation dimension used for the model at a requested cutoff:
/// 2J+1 for SU2J, `cutoff` otherwise.
int model_dimension(const ModelParams& p, int cutoff);

/// Dense 2*dim Hermitian matrix
///   omega 1_2 (x) L3 + (delta/2) sigma3 (x) 1 + g sigma1 (x) (L+ + L-),
/// qubit index major (row = q*dim + k). For SU2J, dim is 2J+1.
CMatrix build_full_hamiltonian(const ModelParams& p, int dim);

/// Interior block used by verify_key_formula: dim - dim/4.
int key_formula_block(int dim);

/// Max-norm residual of the conjugation identity on the leading
/// dim - dim/4 block for N and K (the full 2J+1 block for J).
///
/// The exponentials are evaluated on a working space padded beyond `dim`
/// (doubling until the block is stable) so the residual measures the
/// identity rather than the cutoff. dim >= 8 for N and K; ignored for J.
double verify_key_formula(const ModelParams& p, int lambda, int dim);

/// Column n of e^{s (L+ - L-)} restricted to the leading `dim` entries,
/// evaluated on a padded working space. Throws ConvergenceError when the
/// padded evaluation does not settle.
RVector displaced_column(AlgebraKind kind, double spin, double s, int n, int dim);

/// |{lambda, n}> = |lambda> (x) e^{-(lambda x/2)(L+ - L-)} |n> at truncation
/// dim, with |lambda> = (1, lambda)/sqrt(2). Throws ConvergenceError when the
/// truncated vector has lost more than 1e-8 of its norm.
CVector dressed_state(const ModelParams& p, int lambda, int n, int dim);

void check_lambda(int lambda, const char* what);

}  // namespace jcs
