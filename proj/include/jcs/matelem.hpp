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

#include "jcs/algebra.hpp"
#include "jcs/linalg.hpp"

namespace jcs {

/// z -> kappa for the disentangled form of the coherent operator:
///   N: kappa = z,  K: sinh|z| z/|z|,  J: sin|z| z/|z|;  z = 0 -> 0.
struct KappaMap {
  AlgebraKind kind;
  cplx z;
  cplx kappa;
};

KappaMap kappa_map(AlgebraKind kind, cplx z);

/// The temporary F-function
///   F_m^{(d)}(x : 2S) = sum_j (-1)^{m-j} C_j (1 +/- x)^j x^{m-j},  n = m + d,
/// with C_j = Gamma(2K+m+n-j) / (Gamma(2K) (m-j)! (n-j)! j!) for SU11K and
/// C_j = (2J)! / ((2J-m-n+j)! (m-j)! (n-j)! j!) restricted to 2J-m-n+j >= 0
/// for SU2J (where the sign in (1 +/- x) is minus).
double f_function(int m, int d, double x, double two_spin, AlgebraKind kind);

/// <n| e^{z a^dagger - conj(z) a} |m>
cplx element_heisenberg(int n, int m, cplx z);

/// <K,n| e^{z K+ - conj(z) K-} |K,m>
cplx element_su11(double k, int n, int m, cplx z);

/// <J,n| e^{z J+ - conj(z) J-} |J,m>, 0 <= n, m <= 2J
cplx element_su2(double j, int n, int m, cplx z);

/// Dispatch on kind; `spin` is ignored for HeisenbergN.
cplx closed_form_element(AlgebraKind kind, double spin, int n, int m, cplx z);

/// Dense e^{z L+ - conj(z) L-} for a rep with tridiagonal L+.
CMatrix coherent_operator(const LadderRep& rep, cplx z);

/// Convergence margin added to the cutoff when re-checking an oracle value.
inline constexpr int kOracleRecheckMargin = 20;

/// Entry (n, m) of the truncated coherent operator at cutoff rep.dim(),
/// cross-checked against cutoff rep.dim() + 20. Throws ConvergenceError when
/// the two differ by more than `tol` (SU2J is finite and never rechecked).
cplx oracle_element(const LadderRep& rep, int n, int m, cplx z, double tol = 1e-10);

/// Leading (nmax+1) x (nmax+1) block of the coherent operator with the same
/// cutoff re-check as oracle_element, applied to the whole block.
CMatrix oracle_block(const LadderRep& rep, int nmax, cplx z, double tol = 1e-10);

}  // namespace jcs
