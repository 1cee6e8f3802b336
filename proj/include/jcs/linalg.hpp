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

#include <Eigen/Dense>
#include <complex>

namespace jcs {

using cplx = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;
using RMatrix = Eigen::MatrixXd;
using RVector = Eigen::VectorXd;

inline constexpr cplx kI{0.0, 1.0};

/// Largest entry modulus.
template <typename Derived>
double max_abs(const Eigen::MatrixBase<Derived>& m) {
  return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

/// e^G for an anti-Hermitian G, via the unitary eigendecomposition of the
/// Hermitian matrix iG. The result is unitary to working precision.
CMatrix expm_antihermitian(const CMatrix& g);

/// Leading `ncols` columns of e^{s S}, where S is the real antisymmetric
/// tridiagonal matrix with S(k+1,k) = sub(k), S(k,k+1) = -sub(k).
///
/// Uses S = D^{-1} (iT) D with D = diag(i^k) and T the symmetric tridiagonal
/// matrix with off-diagonal `sub`, so only a real tridiagonal eigenproblem
/// is solved.
RMatrix expm_antisym_tridiag(const RVector& sub, double s, Eigen::Index ncols);

/// e^{s S} v for the same S, by Taylor steps with |h| ||S|| <= 1.
RVector expv_antisym_tridiag(const RVector& sub, double s, const RVector& v);

/// e^{z T+ - conj(z) T-} where T+ has subdiagonal `sub` and T- = T+^T.
/// Reduced to the real case by the phase rotation diag(e^{ik arg z}).
CMatrix expm_ladder_generator(const RVector& sub, cplx z);

}  // namespace jcs
