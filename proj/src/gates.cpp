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

#include "jcs/gates.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <string>

#include "jcs/errors.hpp"

namespace jcs {

namespace {

constexpr double kUnitaryTol = 1e-12;

struct Family {
  int a;
  int b;
  double sign;  // off-diagonal is sign * i sin
};

Family family(GateLabel label) {
  switch (label) {
    case GateLabel::InterbandPlus: return {0, 3, 1.0};
    case GateLabel::InterbandMinus: return {1, 2, -1.0};
    case GateLabel::IntrabandPlus: return {0, 2, -1.0};
    case GateLabel::IntrabandMinus: return {1, 3, 1.0};
    case GateLabel::CUnitary: break;
  }
  throw ParameterError("band_gate needs one of the four band labels");
}

}  // namespace

std::string_view to_string(GateLabel label) {
  switch (label) {
    case GateLabel::InterbandPlus: return "InterbandPlus";
    case GateLabel::InterbandMinus: return "InterbandMinus";
    case GateLabel::IntrabandPlus: return "IntrabandPlus";
    case GateLabel::IntrabandMinus: return "IntrabandMinus";
    case GateLabel::CUnitary: return "CUnitary";
  }
  return "?";
}

GateLabel parse_gate_label(std::string_view text) {
  std::string t(text);
  std::transform(t.begin(), t.end(), t.begin(), [](unsigned char c) { return std::tolower(c); });
  if (t == "interbandplus" || t == "inter+") return GateLabel::InterbandPlus;
  if (t == "interbandminus" || t == "inter-") return GateLabel::InterbandMinus;
  if (t == "intrabandplus" || t == "intra+") return GateLabel::IntrabandPlus;
  if (t == "intrabandminus" || t == "intra-") return GateLabel::IntrabandMinus;
  if (t == "cunitary") return GateLabel::CUnitary;
  throw ParameterError("unknown gate label '" + std::string(text) + "'");
}

double unitarity_defect(const Eigen::Matrix4cd& g) {
  return max_abs(g.adjoint() * g - Eigen::Matrix4cd::Identity());
}

GateMatrix band_gate(GateLabel label, double rabi, double t) {
  const Family f = family(label);
  const double c = std::cos(0.5 * rabi * t);
  const double s = std::sin(0.5 * rabi * t);
  Eigen::Matrix4cd g = Eigen::Matrix4cd::Identity();
  g(f.a, f.a) = c;
  g(f.b, f.b) = c;
  g(f.a, f.b) = f.sign * kI * s;
  g(f.b, f.a) = f.sign * kI * s;
  return {g, label};
}

GateMatrix c_unitary(const Eigen::Matrix2cd& u) {
  const double defect = max_abs(u.adjoint() * u - Eigen::Matrix2cd::Identity());
  if (!(defect <= kUnitaryTol)) {
    throw ParameterError("controlled block is not unitary (defect " + std::to_string(defect) + ")");
  }
  Eigen::Matrix4cd g = Eigen::Matrix4cd::Identity();
  g(1, 1) = u(0, 0);
  g(1, 3) = u(0, 1);
  g(3, 1) = u(1, 0);
  g(3, 3) = u(1, 1);
  return {g, GateLabel::CUnitary};
}

GateLabel band_label(Band band, int sigma) {
  check_lambda(sigma, "sigma");
  if (band == Band::Interband) {
    return sigma == 1 ? GateLabel::InterbandPlus : GateLabel::InterbandMinus;
  }
  return sigma == 1 ? GateLabel::IntrabandPlus : GateLabel::IntrabandMinus;
}

GateMatrix gate_from_dynamics(const ModelParams& p, const LevelPair& pair, int sigma, double t) {
  const RabiPair r = rabi_frequencies(p, pair);
  const double freq = pair.band == Band::Interband ? r.rabi : r.rabi_prime;
  return band_gate(band_label(pair.band, sigma), freq, t);
}

}  // namespace jcs
