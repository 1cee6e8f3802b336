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

#include <catch_amalgamated.hpp>

#include <vector>

#include "jcs/errors.hpp"
#include "jcs/kernels.hpp"
#include "jcs/matelem.hpp"
#include "oracles.hpp"

using jcs::AlgebraKind;
using jcs::cplx;

TEST_CASE("element table matches the scalar closed forms", "[kernels]") {
  const cplx z{0.4, -0.7};
  for (auto kind : {AlgebraKind::HeisenbergN, AlgebraKind::SU11K, AlgebraKind::SU2J}) {
    const double spin = 3.0;
    const int nmax = 6;
    const auto table = jcs::element_table(kind, spin, z, nmax);
    REQUIRE(table.rows() == nmax + 1);
    for (int n = 0; n <= nmax; ++n) {
      for (int m = 0; m <= nmax; ++m) {
        CHECK(table(n, m) == jcs::closed_form_element(kind, spin, n, m, z));
      }
    }
  }
  CHECK_THROWS_AS(jcs::element_table(AlgebraKind::SU2J, 1.0, z, 3), jcs::ParameterError);
}

TEST_CASE("parallel kernels reproduce the serial reference bitwise", "[kernels]") {
  CHECK(jcs::kernel_threads() >= 1);
  const cplx z{-0.3, 0.9};
  for (auto kind : {AlgebraKind::HeisenbergN, AlgebraKind::SU11K, AlgebraKind::SU2J}) {
    CHECK(jcs::element_table(kind, 5.0, z, 10) == jcs::element_table_serial(kind, 5.0, z, 10));
  }

  std::vector<jcs::ModelParams> points;
  for (int i = 0; i < 37; ++i) {
    jcs::ModelParams p;
    p.kind = AlgebraKind::SU11K;
    p.spin = 0.25 + 0.05 * i;
    p.omega = 1.0;
    p.g = 0.01 * i;
    p.delta = 0.05;
    points.push_back(p);
  }
  const auto pair = jcs::level_pair(1, 4);
  const auto par = jcs::rabi_sweep(points, pair);
  const auto ser = jcs::rabi_sweep_serial(points, pair);
  REQUIRE(par.size() == ser.size());
  for (std::size_t i = 0; i < par.size(); ++i) {
    CHECK(par[i].rabi == ser[i].rabi);
    CHECK(par[i].detuning == ser[i].detuning);
    CHECK(par[i].rabi == jcs::rabi_frequencies(points[i], pair).rabi);
  }

  const auto rep = jcs::build_rep(AlgebraKind::HeisenbergN, 0.0, 60);
  const auto zs = jcs::testing::random_disk(16, 1.0, 77u);
  const auto a = jcs::oracle_sweep(rep, zs, 6);
  const auto b = jcs::oracle_sweep_serial(rep, zs, 6);
  CHECK(a.max_error == b.max_error);
  CHECK(a.worst_index == b.worst_index);
  CHECK(a.worst_n == b.worst_n);
  CHECK(a.worst_m == b.worst_m);
  CHECK(a.max_error <= 1e-10);
}

TEST_CASE("oracle sweep locates the worst point", "[kernels]") {
  const auto rep = jcs::build_rep(AlgebraKind::SU2J, 2.0, 5);
  const std::vector<cplx> zs{0.0, cplx(0.3, 0.2), cplx(-1.0, 0.5)};
  const auto res = jcs::oracle_sweep(rep, zs, 4);
  CHECK(res.max_error <= 1e-12);
  CHECK(res.worst_index < zs.size());
}

TEST_CASE("errors inside parallel regions propagate", "[kernels]") {
  const auto rep = jcs::build_rep(AlgebraKind::HeisenbergN, 0.0, 8);
  const std::vector<cplx> zs{0.1, 1.0, 0.2, 0.9};
  CHECK_THROWS_AS(jcs::oracle_sweep(rep, zs, 5), jcs::ConvergenceError);
  CHECK_THROWS_AS(jcs::oracle_sweep_serial(rep, zs, 5), jcs::ConvergenceError);

  std::vector<jcs::ModelParams> points(5);
  points[3].kind = AlgebraKind::SU11K;
  points[3].g = 0.9;
  CHECK_THROWS_AS(jcs::rabi_sweep(points, jcs::level_pair(0, 1)), jcs::ParameterError);
}
