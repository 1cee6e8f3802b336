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

#include "jcs/hamiltonian.hpp"

#include <cmath>
#include <string>

#include "jcs/errors.hpp"

namespace jcs {

namespace {

constexpr int kMaxPadding = 32;
constexpr double kPaddingTol = 1e-12;
constexpr double kDressedNormTol = 1e-8;

// L3 shifted as it appears inside the conjugation: N - g^2/omega^2 for N.
RVector conjugated_weights(const ModelParams& p, int dim) {
  RVector w = weight_diagonal(p.kind, p.spin, dim);
  if (p.kind == AlgebraKind::HeisenbergN) {
    w.array() -= (p.g * p.g) / (p.omega * p.omega);
  }
  return w;
}

}  // namespace

void check_lambda(int lambda, const char* what) {
  if (lambda != 1 && lambda != -1) {
    throw ParameterError(std::string(what) + " must be +1 or -1");
  }
}

void validate(const ModelParams& p) {
  if (!(p.omega > 0.0) || !std::isfinite(p.omega)) {
    throw ParameterError("omega must be positive");
  }
  if (!(p.delta >= 0.0) || !std::isfinite(p.delta)) {
    throw ParameterError("delta must be non-negative");
  }
  if (!(p.g >= 0.0) || !std::isfinite(p.g)) {
    throw ParameterError("g must be non-negative");
  }
  validate_spin(p.kind, p.spin);
  if (p.kind == AlgebraKind::SU11K && !(2.0 * p.g / p.omega < 1.0)) {
    throw ParameterError("su(1,1) model needs 2g/omega < 1 (x = atanh(2g/omega)), got 2g/omega = " +
                         std::to_string(2.0 * p.g / p.omega));
  }
}

bool in_strong_coupling_regime(const ModelParams& p) { return p.delta < p.g; }

Displacement displacement_params(const ModelParams& p) {
  validate(p);
  const double r = 2.0 * p.g / p.omega;
  switch (p.kind) {
    case AlgebraKind::HeisenbergN: return {p.omega, r};
    case AlgebraKind::SU11K: return {p.omega * std::sqrt(1.0 - r * r), std::atanh(r)};
    case AlgebraKind::SU2J: return {p.omega * std::sqrt(1.0 + r * r), std::atan(r)};
  }
  return {p.omega, r};
}

double h0_energy(const ModelParams& p, int n) {
  const Displacement d = displacement_params(p);
  switch (p.kind) {
    case AlgebraKind::HeisenbergN: return p.omega * n - p.g * p.g / p.omega;
    case AlgebraKind::SU11K: return d.omega_dressed * (p.spin + n);
    case AlgebraKind::SU2J: return d.omega_dressed * (-p.spin + n);
  }
  return 0.0;
}

SpectralData h0_spectrum(const ModelParams& p, int nmax) {
  const Displacement d = displacement_params(p);
  if (nmax < 1) {
    throw ParameterError("h0_spectrum needs nmax >= 1");
  }
  if (p.kind == AlgebraKind::SU2J && nmax > validate_spin(p.kind, p.spin)) {
    throw ParameterError("su(2) levels run only up to 2J");
  }
  SpectralData out;
  out.omega_dressed = d.omega_dressed;
  out.x = d.x;
  out.shift = p.kind == AlgebraKind::HeisenbergN ? -p.g * p.g / p.omega : 0.0;
  out.energies.reserve(nmax + 1);
  for (int n = 0; n <= nmax; ++n) {
    out.energies.push_back(h0_energy(p, n));
  }
  return out;
}

int model_dimension(const ModelParams& p, int cutoff) {
  if (p.kind == AlgebraKind::SU2J) {
    return su2_dimension(p.spin);
  }
  return cutoff;
}

CMatrix build_full_hamiltonian(const ModelParams& p, int dim) {
  validate(p);
  dim = model_dimension(p, dim);
  const LadderRep rep = build_rep(p.kind, p.spin, dim);
  const CMatrix id = CMatrix::Identity(dim, dim);
  const CMatrix coupling = rep.lp() + rep.lm();
  CMatrix h = CMatrix::Zero(2 * dim, 2 * dim);
  h.topLeftCorner(dim, dim) = p.omega * rep.l3() + 0.5 * p.delta * id;
  h.bottomRightCorner(dim, dim) = p.omega * rep.l3() - 0.5 * p.delta * id;
  h.topRightCorner(dim, dim) = p.g * coupling;
  h.bottomLeftCorner(dim, dim) = p.g * coupling;
  return h;
}

int key_formula_block(int dim) { return dim - dim / 4; }

double verify_key_formula(const ModelParams& p, int lambda, int dim) {
  check_lambda(lambda, "lambda");
  const Displacement d = displacement_params(p);
  const bool finite = p.kind == AlgebraKind::SU2J;
  if (finite) {
    dim = su2_dimension(p.spin);
  } else if (dim < 8) {
    throw ParameterError("key-formula check needs dim >= 8");
  }
  const int block = finite ? dim : key_formula_block(dim);
  const double s = 0.5 * lambda * d.x;

  // Leading `block` rows/cols of Omega e^{-sG} C e^{sG}; e^{sG} is real
  // orthogonal, so e^{-sG} = (e^{sG})^T.
  const auto rhs_block = [&](int work) {
    const RMatrix u = expm_antisym_tridiag(raising_coefficients(p.kind, p.spin, work), s, block);
    const RVector c = conjugated_weights(p, work);
    return RMatrix(d.omega_dressed * u.transpose() * c.asDiagonal() * u);
  };

  RMatrix rhs = rhs_block(dim);
  if (!finite) {
    for (int work = 2 * dim; work <= kMaxPadding * dim; work *= 2) {
      RMatrix next = rhs_block(work);
      const double change = (next - rhs).cwiseAbs().maxCoeff();
      rhs = std::move(next);
      if (change <= kPaddingTol * std::max(1.0, rhs.cwiseAbs().maxCoeff())) {
        break;
      }
    }
  }

  const RVector sub = raising_coefficients(p.kind, p.spin, dim);
  RMatrix lhs = RMatrix::Zero(block, block);
  const RVector l3 = weight_diagonal(p.kind, p.spin, dim);
  for (int k = 0; k < block; ++k) {
    lhs(k, k) = p.omega * l3(k);
    if (k + 1 < block) {
      lhs(k + 1, k) = lambda * p.g * sub(k);
      lhs(k, k + 1) = lambda * p.g * sub(k);
    }
  }
  return (lhs - rhs).cwiseAbs().maxCoeff();
}

RVector displaced_column(AlgebraKind kind, double spin, double s, int n, int dim) {
  if (n < 0 || n >= dim) {
    throw ParameterError("level index must lie below the cutoff");
  }
  const auto column = [&](int work) {
    const RVector e = RVector::Unit(work, n);
    return RVector(expv_antisym_tridiag(raising_coefficients(kind, spin, work), s, e).head(dim));
  };
  if (kind == AlgebraKind::SU2J) {
    return column(dim);
  }
  RVector v = column(2 * dim);
  for (int work = 4 * dim; work <= kMaxPadding * dim; work *= 2) {
    RVector next = column(work);
    const double change = (next - v).cwiseAbs().maxCoeff();
    v = std::move(next);
    if (change <= kPaddingTol) {
      return v;
    }
  }
  throw ConvergenceError("displaced state did not settle on the padded working space");
}

CVector dressed_state(const ModelParams& p, int lambda, int n, int dim) {
  check_lambda(lambda, "lambda");
  const Displacement d = displacement_params(p);
  dim = model_dimension(p, dim);
  const RVector field = displaced_column(p.kind, p.spin, -0.5 * lambda * d.x, n, dim);
  const double norm = field.norm();
  if (std::abs(1.0 - norm) > kDressedNormTol) {
    throw ConvergenceError("dressed state |{" + std::to_string(lambda) + "," + std::to_string(n) +
                           "}> loses " + std::to_string(1.0 - norm) + " of its norm at cutoff " +
                           std::to_string(dim));
  }
  const double h = 1.0 / std::sqrt(2.0);
  CVector out(2 * dim);
  out.head(dim) = (h * field).cast<cplx>();
  out.tail(dim) = (lambda * h * field).cast<cplx>();
  return out;
}

}  // namespace jcs
