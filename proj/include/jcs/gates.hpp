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

#include "jcs/dynamics.hpp"
#include "jcs/linalg.hpp"

namespace jcs {

/// The four RWA solution families and the generic controlled-unitary form.
enum class GateLabel { InterbandPlus, InterbandMinus, IntrabandPlus, IntrabandMinus, CUnitary };

std::string_view to_string(GateLabel label);
GateLabel parse_gate_label(std::string_view text);

/// 4x4 gate in the basis (a_{m,1}, a_{m,-1}, a_{n,1}, a_{n,-1}), identified
/// with the two-qubit states (|00>, |01>, |10>, |11>).
struct GateMatrix {
  Eigen::Matrix4cd entries;
  GateLabel label;
};

/// Max-norm of G^dagger G - 1.
double unitarity_defect(const Eigen::Matrix4cd& g);

/// The RWA solution matrix for one band and cat label: cos(rabi t/2) on the
/// two active diagonal slots, +/- i sin(rabi t/2) between them, 1 elsewhere.
///   InterbandPlus:  slots {0,3}, +i sin    InterbandMinus: slots {1,2}, -i sin
///   IntrabandPlus:  slots {0,2}, -i sin    IntrabandMinus: slots {1,3}, +i sin
GateMatrix band_gate(GateLabel label, double rabi, double t);

/// Embeds u as [[1,0,0,0],[0,u11,0,u12],[0,0,1,0],[0,u21,0,u22]].
/// Throws ParameterError when u is not unitary to 1e-12.
GateMatrix c_unitary(const Eigen::Matrix2cd& u);

/// Gate label for a band and cat label sigma.
GateLabel band_label(Band band, int sigma);

/// band_gate with the pair's Rabi frequency (R interband, R' intraband).
GateMatrix gate_from_dynamics(const ModelParams& p, const LevelPair& pair, int sigma, double t);

}  // namespace jcs
