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

#include "jcs/algebra.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <string>

#include "jcs/errors.hpp"

namespace jcs {

std::string_view to_string(AlgebraKind kind) {
  switch (kind) {
    case AlgebraKind::HeisenbergN: return "N";
    case AlgebraKind::SU11K: return "K";
    case AlgebraKind::SU2J: return "J";
  }
  return "?";
}

AlgebraKind parse_algebra_kind(std::string_view text) {
  std::string t(text);
  std::transform(t.begin(), t.end(), t.begin(), [](unsigned char c) { return std::toupper(c); });
  if (t == "N" || t == "HEISENBERGN" || t == "HEISENBERG") return AlgebraKind::HeisenbergN;
  if (t == "K" || t == "SU11K" || t == "SU11") return AlgebraKind::SU11K;
  if (t == "J" || t == "SU2J" || t == "SU2") return AlgebraKind::SU2J;
  throw ParameterError("unknown model '" + std::string(text) + "' (expected N, K or J)");
}

int validate_spin(AlgebraKind kind, double spin) {
  switch (kind) {
    case AlgebraKind::HeisenbergN:
      return 0;
    case AlgebraKind::SU11K:
      if (!(spin > 0.0) || !std::isfinite(spin)) {
        throw ParameterError("su(1,1) spin K must be a positive real, got " + std::to_string(spin));
      }
      return 0;
    case AlgebraKind::SU2J: {
      const double two_j = 2.0 * spin;
      const double rounded = std::round(two_j);
      if (!(rounded >= 1.0) || std::abs(two_j - rounded) > 1e-12) {
        throw ParameterError("su(2) spin J must be a positive half-integer, got " +
                             std::to_string(spin));
      }
      return static_cast<int>(rounded);
    }
  }
  return 0;
}

int su2_dimension(double spin) {
  return validate_spin(AlgebraKind::SU2J, spin) + 1;
}

LadderRep::LadderRep(AlgebraKind kind, double spin, CMatrix lp, CMatrix lm, CMatrix l3)
    : kind_(kind), spin_(spin), lp_(std::move(lp)), lm_(std::move(lm)), l3_(std::move(l3)) {
  if (lp_.rows() != lp_.cols() || lm_.rows() != lp_.rows() || lm_.cols() != lp_.cols() ||
      l3_.rows() != lp_.rows() || l3_.cols() != lp_.cols()) {
    throw ParameterError("ladder matrices must be square and of equal size");
  }
  if (lm_ != lp_.adjoint()) {
    throw ParameterError("lowering matrix is not the adjoint of the raising matrix");
  }
}

RVector LadderRep::raising_subdiagonal() const {
  RVector sub(std::max(dim() - 1, 0));
  for (int n = 0; n + 1 < dim(); ++n) {
    sub(n) = lp_(n + 1, n).real();
  }
  return sub;
}

RVector raising_coefficients(AlgebraKind kind, double spin, int dim) {
  RVector sub(std::max(dim - 1, 0));
  for (int n = 0; n + 1 < dim; ++n) {
    const double nn = n;
    switch (kind) {
      case AlgebraKind::HeisenbergN: sub(n) = std::sqrt(nn + 1.0); break;
      case AlgebraKind::SU11K: sub(n) = std::sqrt((nn + 1.0) * (2.0 * spin + nn)); break;
      case AlgebraKind::SU2J: sub(n) = std::sqrt((nn + 1.0) * (2.0 * spin - nn)); break;
    }
  }
  return sub;
}

RVector weight_diagonal(AlgebraKind kind, double spin, int dim) {
  RVector d(dim);
  for (int n = 0; n < dim; ++n) {
    switch (kind) {
      case AlgebraKind::HeisenbergN: d(n) = n; break;
      case AlgebraKind::SU11K: d(n) = spin + n; break;
      case AlgebraKind::SU2J: d(n) = -spin + n; break;
    }
  }
  return d;
}

LadderRep build_rep(AlgebraKind kind, double spin, int dim) {
  if (dim < 2) {
    throw ParameterError("representation dimension must be at least 2");
  }
  const int two_j = validate_spin(kind, spin);
  if (kind == AlgebraKind::SU2J && dim != two_j + 1) {
    throw ParameterError("su(2) spin J=" + std::to_string(spin) + " requires dim " +
                         std::to_string(two_j + 1) + ", got " + std::to_string(dim));
  }
  if (kind == AlgebraKind::HeisenbergN) {
    spin = 0.0;
  }
  const RVector sub = raising_coefficients(kind, spin, dim);
  CMatrix lp = CMatrix::Zero(dim, dim);
  for (int n = 0; n + 1 < dim; ++n) {
    lp(n + 1, n) = sub(n);
  }
  CMatrix lm = lp.adjoint();
  CMatrix l3 = weight_diagonal(kind, spin, dim).cast<cplx>().asDiagonal();
  return LadderRep(kind, spin, std::move(lp), std::move(lm), std::move(l3));
}

LadderRep boson_rep(int dim) {
  return build_rep(AlgebraKind::HeisenbergN, 0.0, dim);
}

double commutator_residual(const LadderRep& rep, int interior) {
  const bool exact = rep.kind() == AlgebraKind::SU2J;
  if (interior < 1 || interior > rep.dim() || (!exact && interior == rep.dim())) {
    throw ParameterError("interior block " + std::to_string(interior) +
                         " out of range for dimension " + std::to_string(rep.dim()));
  }
  const CMatrix& lp = rep.lp();
  const CMatrix& lm = rep.lm();
  const CMatrix& l3 = rep.l3();
  const int d = rep.dim();

  const CMatrix r1 = l3 * lp - lp * l3 - lp;
  const CMatrix r2 = l3 * lm - lm * l3 + lm;
  CMatrix r3 = lp * lm - lm * lp;
  switch (rep.kind()) {
    case AlgebraKind::HeisenbergN: r3 += CMatrix::Identity(d, d); break;
    case AlgebraKind::SU11K: r3 += 2.0 * l3; break;
    case AlgebraKind::SU2J: r3 -= 2.0 * l3; break;
  }
  const auto block = [interior](const CMatrix& m) {
    return max_abs(m.topLeftCorner(interior, interior));
  };
  return std::max({block(r1), block(r2), block(r3)});
}

std::pair<LadderRep, LadderRep> bosonic_su11_blocks(int dim) {
  if (dim < 4 || dim % 2 != 0) {
    throw ParameterError("bosonic su(1,1) blocks need an even Fock cutoff >= 4, got " +
                         std::to_string(dim));
  }
  const LadderRep boson = boson_rep(dim);
  const CMatrix kp = 0.5 * boson.lp() * boson.lp();
  const CMatrix km = 0.5 * boson.lm() * boson.lm();
  const CMatrix k3 = 0.5 * (boson.l3() + 0.5 * CMatrix::Identity(dim, dim));

  const int half = dim / 2;
  const auto pick = [half](const CMatrix& m, int parity) {
    CMatrix out(half, half);
    for (int i = 0; i < half; ++i) {
      for (int j = 0; j < half; ++j) {
        out(i, j) = m(2 * i + parity, 2 * j + parity);
      }
    }
    return out;
  };
  LadderRep even(AlgebraKind::SU11K, 0.25, pick(kp, 0), pick(km, 0), pick(k3, 0));
  LadderRep odd(AlgebraKind::SU11K, 0.75, pick(kp, 1), pick(km, 1), pick(k3, 1));
  return {std::move(even), std::move(odd)};
}

}  // namespace jcs
