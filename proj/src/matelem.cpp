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

#include "jcs/matelem.hpp"

#include <cmath>
#include <string>

#include "jcs/errors.hpp"
#include "jcs/special.hpp"

namespace jcs {

namespace {

// Unit phase of z^p for integer p >= 0 (1 when z = 0).
cplx phase_power(cplx z, int p) {
  const double r = std::abs(z);
  if (r == 0.0 || p == 0) {
    return 1.0;
  }
  return std::polar(1.0, p * std::arg(z));
}

// Sum over j = 0..lo of
//   (-1)^{lo-j} (2K)_{lo+hi-j} / ((lo-j)! (hi-j)! j!) * (1+x)^{j} x^{lo-j}
// scaled by exp(log_scale). The j = lo term is formed in the log domain and
// the rest by the term ratio going down in j.
double su11_series(int lo, int hi, double x, double two_k, double log_scale) {
  double term = std::exp(log_pochhammer(two_k, hi) - log_factorial(hi - lo) -
                         log_factorial(lo) + lo * std::log1p(x) + log_scale);
  const double q = x / (1.0 + x);
  CompensatedSum s;
  for (int j = lo; j >= 0; --j) {
    s.add(term);
    term *= -(j * (two_k + lo + hi - j) * q) / ((lo - j + 1.0) * (hi - j + 1.0));
  }
  return s.value();
}

// Starred su(2) sum with the (1-x)^j and prefactor powers supplied as signed
// cosine/sine values so that integer powers keep their signs:
//   sum_j (-1)^{lo-j} (2J)! / ((2J-lo-hi+j)! (lo-j)! (hi-j)! j!)
//         * c^{extra + 2j} * s^{2(lo-j)} * exp(log_scale)
double su2_series(int lo, int hi, int two_j, double c, double s, int extra, double log_scale) {
  CompensatedSum acc;
  for (int j = 0; j <= lo; ++j) {
    if (two_j - lo - hi + j < 0) {
      continue;
    }
    const double lt = log_factorial(two_j) - log_factorial(two_j - lo - hi + j) -
                      log_factorial(lo - j) - log_factorial(hi - j) - log_factorial(j) +
                      log_scale;
    const double term = std::exp(lt) * ipow(c, extra + 2 * j) * ipow(s, 2 * (lo - j));
    acc.add(((lo - j) % 2 == 0) ? term : -term);
  }
  return acc.value();
}

void check_index(int n, int m) {
  if (n < 0 || m < 0) {
    throw ParameterError("basis indices must be non-negative");
  }
}

}  // namespace

KappaMap kappa_map(AlgebraKind kind, cplx z) {
  const double r = std::abs(z);
  if (r == 0.0) {
    return {kind, z, cplx{0.0, 0.0}};
  }
  switch (kind) {
    case AlgebraKind::HeisenbergN: return {kind, z, z};
    case AlgebraKind::SU11K: return {kind, z, (std::sinh(r) / r) * z};
    case AlgebraKind::SU2J: return {kind, z, (std::sin(r) / r) * z};
  }
  return {kind, z, z};
}

double f_function(int m, int d, double x, double two_spin, AlgebraKind kind) {
  check_index(m, d);
  const int n = m + d;
  switch (kind) {
    case AlgebraKind::SU11K:
      if (!(two_spin > 0.0) || x < 0.0) {
        throw ParameterError("su(1,1) F-function needs 2K > 0 and x >= 0");
      }
      return su11_series(m, n, x, two_spin, 0.0);
    case AlgebraKind::SU2J: {
      const int two_j = validate_spin(AlgebraKind::SU2J, 0.5 * two_spin);
      if (n > two_j) {
        throw ParameterError("su(2) F-function: state index beyond 2J");
      }
      if (x < 0.0 || x > 1.0) {
        throw ParameterError("su(2) F-function needs 0 <= x <= 1");
      }
      // (1-x)^j x^{m-j} with c^2 = 1-x, s^2 = x.
      return su2_series(m, n, two_j, std::sqrt(1.0 - x), std::sqrt(x), 0, 0.0);
    }
    case AlgebraKind::HeisenbergN:
      break;
  }
  throw ParameterError("F-functions are defined for su(1,1) and su(2) only");
}

cplx element_heisenberg(int n, int m, cplx z) {
  check_index(n, m);
  const double r = std::abs(z);
  if (r == 0.0) {
    return n == m ? 1.0 : 0.0;
  }
  const int lo = std::min(n, m);
  const int hi = std::max(n, m);
  const int d = hi - lo;
  const double r2 = r * r;
  const double lag = laguerre_assoc(lo, d, r2);
  const double log_mag = -0.5 * r2 + 0.5 * (log_factorial(lo) - log_factorial(hi)) + d * std::log(r);
  // n >= m: z^{n-m};  n <= m: (-conj z)^{m-n}
  const cplx dir = n >= m ? phase_power(z, d) : phase_power(-std::conj(z), d);
  return dir * (std::exp(log_mag) * lag);
}

cplx element_su11(double k, int n, int m, cplx z) {
  check_index(n, m);
  validate_spin(AlgebraKind::SU11K, k);
  const double r = std::abs(z);
  if (r == 0.0) {
    return n == m ? 1.0 : 0.0;
  }
  const KappaMap km = kappa_map(AlgebraKind::SU11K, z);
  const double x = std::norm(km.kappa);
  const int lo = std::min(n, m);
  const int hi = std::max(n, m);
  const int d = hi - lo;
  const double two_k = 2.0 * k;
  // sqrt(n! m! / ((2K)_n (2K)_m)) |kappa|^{d} (1+x)^{-K-(n+m)/2}
  const double log_pref = 0.5 * (log_factorial(n) + log_factorial(m) - log_pochhammer(two_k, n) -
                                 log_pochhammer(two_k, m)) +
                          d * std::log(std::abs(km.kappa)) - (k + 0.5 * (n + m)) * std::log1p(x);
  const double series = su11_series(lo, hi, x, two_k, log_pref);
  const cplx dir = n >= m ? phase_power(km.kappa, d) : phase_power(-std::conj(km.kappa), d);
  return dir * series;
}

cplx element_su2(double j, int n, int m, cplx z) {
  check_index(n, m);
  const int two_j = validate_spin(AlgebraKind::SU2J, j);
  if (n > two_j || m > two_j) {
    throw ParameterError("su(2) element indices must lie in 0.." + std::to_string(two_j));
  }
  const double r = std::abs(z);
  if (r == 0.0) {
    return n == m ? 1.0 : 0.0;
  }
  const int lo = std::min(n, m);
  const int hi = std::max(n, m);
  const int d = hi - lo;
  // (1-|kappa|^2)^{J-(n+m)/2+j} = cos|z|^{2J-n-m+2j} and |kappa| = |sin|z||;
  // the signed cos/sin keep the formula valid past |z| = pi/2.
  const double c = std::cos(r);
  const double s = std::sin(r);
  // sqrt(n! m! / (2J P_n  2J P_m)), with 2J P_n = (2J)! / (2J-n)!
  const double log_pref = 0.5 * (log_factorial(n) + log_factorial(m) + log_factorial(two_j - n) +
                                 log_factorial(two_j - m) - 2.0 * log_factorial(two_j));
  // kappa^{d} = s^{d} (z/|z|)^{d}; the |s|^d magnitude goes into the series.
  const double series = su2_series(lo, hi, two_j, c, s, two_j - n - m, log_pref) * ipow(s, d);
  const cplx unit = z / r;
  const cplx dir = n >= m ? phase_power(unit, d) : phase_power(-std::conj(unit), d);
  return dir * series;
}

cplx closed_form_element(AlgebraKind kind, double spin, int n, int m, cplx z) {
  switch (kind) {
    case AlgebraKind::HeisenbergN: return element_heisenberg(n, m, z);
    case AlgebraKind::SU11K: return element_su11(spin, n, m, z);
    case AlgebraKind::SU2J: return element_su2(spin, n, m, z);
  }
  return 0.0;
}

CMatrix coherent_operator(const LadderRep& rep, cplx z) {
  return expm_ladder_generator(rep.raising_subdiagonal(), z);
}

CMatrix oracle_block(const LadderRep& rep, int nmax, cplx z, double tol) {
  if (nmax < 0 || nmax >= rep.dim()) {
    throw ParameterError("oracle block exceeds the representation dimension");
  }
  const int b = nmax + 1;
  const CMatrix base = coherent_operator(rep, z).topLeftCorner(b, b);
  if (rep.kind() == AlgebraKind::SU2J) {
    return base;
  }
  const LadderRep wider = build_rep(rep.kind(), rep.spin(), rep.dim() + kOracleRecheckMargin);
  const CMatrix check = coherent_operator(wider, z).topLeftCorner(b, b);
  const double change = max_abs(base - check);
  if (!(change <= tol)) {
    throw ConvergenceError("coherent-operator oracle not converged at cutoff " +
                           std::to_string(rep.dim()) + ": block changes by " +
                           std::to_string(change) + " at cutoff " +
                           std::to_string(wider.dim()));
  }
  return base;
}

cplx oracle_element(const LadderRep& rep, int n, int m, cplx z, double tol) {
  check_index(n, m);
  if (n >= rep.dim() || m >= rep.dim()) {
    throw ParameterError("oracle indices must be below the cutoff");
  }
  const CMatrix base = coherent_operator(rep, z);
  if (rep.kind() == AlgebraKind::SU2J) {
    return base(n, m);
  }
  const LadderRep wider = build_rep(rep.kind(), rep.spin(), rep.dim() + kOracleRecheckMargin);
  const cplx again = coherent_operator(wider, z)(n, m);
  if (!(std::abs(again - base(n, m)) <= tol)) {
    throw ConvergenceError("coherent-operator oracle not converged at cutoff " +
                           std::to_string(rep.dim()) + " for element (" + std::to_string(n) +
                           "," + std::to_string(m) + ")");
  }
  return base(n, m);
}

}  // namespace jcs
