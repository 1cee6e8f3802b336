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

#include "jcs/linalg.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>

namespace jcs {

namespace {

constexpr int kTaylorMaxOrder = 60;
constexpr double kTaylorTol = 1e-18;

}  // namespace

CMatrix expm_antihermitian(const CMatrix& g) {
  const CMatrix h = kI * g;
  // Symmetrise away rounding so the solver sees an exactly Hermitian input.
  const CMatrix herm = 0.5 * (h + h.adjoint());
  Eigen::SelfAdjointEigenSolver<CMatrix> es(herm);
  const RVector& w = es.eigenvalues();
  const CMatrix& v = es.eigenvectors();
  CVector phase(w.size());
  for (Eigen::Index k = 0; k < w.size(); ++k) {
    phase(k) = std::polar(1.0, -w(k));
  }
  return v * phase.asDiagonal() * v.adjoint();
}

RMatrix expm_antisym_tridiag(const RVector& sub, double s, Eigen::Index ncols) {
  const Eigen::Index dim = sub.size() + 1;
  ncols = std::min(ncols, dim);
  if (dim == 1) {
    return RMatrix::Ones(1, 1);
  }
  Eigen::SelfAdjointEigenSolver<RMatrix> es;
  es.computeFromTridiagonal(RVector::Zero(dim), sub, Eigen::ComputeEigenvectors);
  const RVector& lam = es.eigenvalues();
  const RMatrix& q = es.eigenvectors();

  // e^{isT} = Q (cos + i sin)(s Lambda) Q^T
  RVector c(dim), sn(dim);
  for (Eigen::Index l = 0; l < dim; ++l) {
    c(l) = std::cos(s * lam(l));
    sn(l) = std::sin(s * lam(l));
  }
  const RMatrix qc = q.leftCols(dim);
  const RMatrix lead = q.topRows(ncols).transpose();  // dim x ncols
  const RMatrix cos_part = qc * c.asDiagonal() * lead;
  const RMatrix sin_part = qc * sn.asDiagonal() * lead;

  // (j,k) entry of D^{-1} e^{isT} D is i^{k-j} (cos_part + i sin_part)(j,k).
  RMatrix out(dim, ncols);
  for (Eigen::Index k = 0; k < ncols; ++k) {
    for (Eigen::Index j = 0; j < dim; ++j) {
      const Eigen::Index d = ((k - j) % 4 + 4) % 4;
      switch (d) {
        case 0: out(j, k) = cos_part(j, k); break;
        case 1: out(j, k) = -sin_part(j, k); break;
        case 2: out(j, k) = -cos_part(j, k); break;
        default: out(j, k) = sin_part(j, k); break;
      }
    }
  }
  return out;
}

RVector expv_antisym_tridiag(const RVector& sub, double s, const RVector& v) {
  const Eigen::Index dim = v.size();
  double bound = 0.0;
  for (Eigen::Index k = 0; k < dim; ++k) {
    const double lo = k > 0 ? std::abs(sub(k - 1)) : 0.0;
    const double hi = k + 1 < dim ? std::abs(sub(k)) : 0.0;
    bound = std::max(bound, lo + hi);
  }
  const int steps = std::max(1, static_cast<int>(std::ceil(std::abs(s) * bound)));
  const double h = s / steps;

  const auto apply = [&](const RVector& x, RVector& y) {
    for (Eigen::Index k = 0; k < dim; ++k) {
      double acc = 0.0;
      if (k > 0) acc += sub(k - 1) * x(k - 1);
      if (k + 1 < dim) acc -= sub(k) * x(k + 1);
      y(k) = acc;
    }
  };

  RVector out = v;
  RVector term(dim), next(dim);
  for (int step = 0; step < steps; ++step) {
    term = out;
    const double scale = out.norm();
    for (int order = 1; order <= kTaylorMaxOrder; ++order) {
      apply(term, next);
      term = (h / order) * next;
      out += term;
      if (term.norm() <= kTaylorTol * scale) {
        break;
      }
    }
  }
  return out;
}

CMatrix expm_ladder_generator(const RVector& sub, cplx z) {
  const double r = std::abs(z);
  const Eigen::Index dim = sub.size() + 1;
  if (r == 0.0) {
    return CMatrix::Identity(dim, dim);
  }
  const double phi = std::arg(z);
  const RMatrix real_part = expm_antisym_tridiag(sub, r, dim);
  CMatrix out(dim, dim);
  for (Eigen::Index k = 0; k < dim; ++k) {
    for (Eigen::Index j = 0; j < dim; ++j) {
      out(j, k) = real_part(j, k) * std::polar(1.0, static_cast<double>(j - k) * phi);
    }
  }
  return out;
}

}  // namespace jcs
