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

#include <cmath>

#include "jcs/special.hpp"

using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

TEST_CASE("log_pochhammer small cases", "[special]") {
  CHECK(jcs::log_pochhammer(2.0, 0) == 0.0);
  CHECK_THAT(jcs::log_pochhammer(2.0, 3), WithinRel(std::log(24.0), 1e-15));
  CHECK_THAT(jcs::log_pochhammer(0.5, 2), WithinRel(std::log(0.75), 1e-14));
}

TEST_CASE("log_pochhammer agrees with lgamma on both branches", "[special]") {
  for (double a : {0.25, 0.5, 1.5, 3.0, 17.25}) {
    for (int n : {1, 10, 64, 65, 200}) {
      const double ref = std::lgamma(a + n) - std::lgamma(a);
      CHECK_THAT(jcs::log_pochhammer(a, n), WithinRel(ref, 1e-12));
    }
  }
}

TEST_CASE("log_factorial table and tail", "[special]") {
  CHECK(jcs::log_factorial(0) == 0.0);
  CHECK_THAT(jcs::log_factorial(5), WithinRel(std::log(120.0), 1e-15));
  CHECK_THAT(jcs::log_factorial(255), WithinRel(std::lgamma(256.0), 1e-13));
  CHECK_THAT(jcs::log_factorial(300), WithinRel(std::lgamma(301.0), 1e-15));
}

TEST_CASE("laguerre small degrees", "[special]") {
  CHECK(jcs::laguerre_assoc(0, 0, 3.7) == 1.0);
  CHECK_THAT(jcs::laguerre_assoc(1, 0, 2.0), WithinAbs(-1.0, 1e-15));
  CHECK_THAT(jcs::laguerre_assoc(2, 1, 1.0), WithinAbs(0.5, 1e-15));
}

TEST_CASE("laguerre sum and recurrence agree", "[special]") {
  for (int alpha : {0, 1, 3, 7}) {
    for (double x : {0.0, 0.3, 1.0, 4.0}) {
      for (int k = 0; k <= 20; ++k) {
        const double a = jcs::laguerre_assoc_sum(k, alpha, x);
        const double b = jcs::laguerre_assoc_recurrence(k, alpha, x);
        CHECK_THAT(a, WithinAbs(b, 1e-10 * std::max(1.0, std::abs(b))));
      }
    }
  }
}

TEST_CASE("laguerre at zero is a binomial", "[special]") {
  // L_k^{(a)}(0) = C(k+a, k)
  CHECK_THAT(jcs::laguerre_assoc(40, 2, 0.0), WithinRel(861.0, 1e-12));
  CHECK_THAT(jcs::laguerre_assoc(10, 3, 0.0), WithinRel(286.0, 1e-14));
}

TEST_CASE("ipow", "[special]") {
  CHECK(jcs::ipow(2.0, 0) == 1.0);
  CHECK(jcs::ipow(2.0, 10) == 1024.0);
  CHECK(jcs::ipow(-1.5, 3) == -3.375);
  CHECK(jcs::ipow(0.0, 0) == 1.0);
}

TEST_CASE("compensated sum recovers cancelled terms", "[special]") {
  jcs::CompensatedSum s;
  s.add(1.0);
  s.add(1e100);
  s.add(1.0);
  s.add(-1e100);
  CHECK(s.value() == 2.0);
}
