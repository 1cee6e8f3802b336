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

#include <string_view>
#include <utility>

#include "jcs/linalg.hpp"

namespace jcs {

/// Which ladder algebra: Heisenberg (a, a^dagger, N), su(1,1) of spin K,
/// or su(2) of spin J.
enum class AlgebraKind { HeisenbergN, SU11K, SU2J };

std::string_view to_string(AlgebraKind kind);
/// Accepts "N", "K", "J" (case-insensitive) or the full enumerator names.
AlgebraKind parse_algebra_kind(std::string_view text);

/// Checks the spin parameter for `kind` and returns 2*spin rounded for SU2J.
/// Throws ParameterError for K <= 0 or non-half-integer / non-positive J.
int validate_spin(AlgebraKind kind, double spin);

/// Truncated matrix triple (L+, L-, L3) for one algebra, spin and cutoff.
///
/// Immutable after construction. L- is the exact conjugate transpose of L+,
/// L+ is real-positive on the first subdiagonal and L3 is real diagonal.
class LadderRep {
 public:
  /// Takes the three matrices verbatim. Throws ParameterError if lm is not
  /// exactly lp^dagger or the shapes disagree.
  LadderRep(AlgebraKind kind, double spin, CMatrix lp, CMatrix lm, CMatrix l3);

  AlgebraKind kind() const { return kind_; }
  double spin() const { return spin_; }
  int dim() const { return static_cast<int>(lp_.rows()); }
  const CMatrix& lp() const { return lp_; }
  const CMatrix& lm() const { return lm_; }
  const CMatrix& l3() const { return l3_; }

  /// Real subdiagonal of L+ (length dim-1).
  RVector raising_subdiagonal() const;

 private:
  AlgebraKind kind_;
  double spin_;
  CMatrix lp_;
  CMatrix lm_;
  CMatrix l3_;
};

/// Subdiagonal L+(n+1, n) for n = 0..dim-2 by the ladder actions
///   N: sqrt(n+1),  K: sqrt((n+1)(2K+n)),  J: sqrt((n+1)(2J-n)).
RVector raising_coefficients(AlgebraKind kind, double spin, int dim);

/// Diagonal of L3: n, K+n or -J+n.
RVector weight_diagonal(AlgebraKind kind, double spin, int dim);

/// Builds the hard-cutoff truncation of dimension `dim`. The raising action
/// on the top basis state is dropped. For SU2J, dim must equal 2J+1.
LadderRep build_rep(AlgebraKind kind, double spin, int dim);

/// Natural dimension 2J+1 for SU2J; throws for other kinds.
int su2_dimension(double spin);

/// Max-norm of the defining-relation defects
///   [L3,L+] - L+,  [L3,L-] + L-,  [L+,L-] - c
/// with c = -1 (N), -2 L3 (K), +2 L3 (J), over the leading interior block.
///
/// Truncation corrupts only the last row/column, so interior = dim-1 gives a
/// rounding-level result. interior may equal dim only for SU2J.
double commutator_residual(const LadderRep& rep, int interior);

/// su(1,1) from one boson: K+ = (a^dagger)^2/2, K- = a^2/2,
/// K3 = (a^dagger a + 1/2)/2 at Fock cutoff dim, split into the even-Fock
/// (spin 1/4) and odd-Fock (spin 3/4) blocks, each of dimension dim/2.
std::pair<LadderRep, LadderRep> bosonic_su11_blocks(int dim);

/// Dense Fock-space operators a^dagger, a, N at cutoff dim.
LadderRep boson_rep(int dim);

}  // namespace jcs
