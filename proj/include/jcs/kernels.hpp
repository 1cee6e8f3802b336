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

#include <span>
#include <vector>

#include "jcs/algebra.hpp"
#include "jcs/dynamics.hpp"
#include "jcs/linalg.hpp"

// Data-parallel batch kernels. Each OpenMP kernel has a `_serial` twin that
// is the reference implementation; both produce bitwise-identical output
// because every output element is computed by the same scalar code and
// reductions are done serially in input order.

namespace jcs {

/// (nmax+1)^2 closed-form elements <n| e^{z L+ - conj(z) L-} |m>.
CMatrix element_table(AlgebraKind kind, double spin, cplx z, int nmax);
CMatrix element_table_serial(AlgebraKind kind, double spin, cplx z, int nmax);

/// Rabi frequencies for many independent parameter points, in input order.
std::vector<RabiPair> rabi_sweep(std::span<const ModelParams> points, const LevelPair& pair);
std::vector<RabiPair> rabi_sweep_serial(std::span<const ModelParams> points,
                                        const LevelPair& pair);

/// Worst |closed form - oracle| over a batch of z and all n, m <= nmax.
struct OracleSweepResult {
  double max_error = 0.0;
  std::size_t worst_index = 0;
  int worst_n = 0;
  int worst_m = 0;
};

/// The oracle is evaluated with the cutoff re-check of oracle_block;
/// a ConvergenceError from any point is rethrown after the loop.
OracleSweepResult oracle_sweep(const LadderRep& rep, std::span<const cplx> zs, int nmax,
                               double tol = 1e-10);
OracleSweepResult oracle_sweep_serial(const LadderRep& rep, std::span<const cplx> zs, int nmax,
                                      double tol = 1e-10);

/// Number of OpenMP threads the kernels will use (1 without OpenMP).
int kernel_threads();

}  // namespace jcs
