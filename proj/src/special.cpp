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

#include "jcs/special.hpp"

#include <array>
#include <cmath>

namespace jcs {

namespace {

constexpr int kLogFactorialTable = 256;
constexpr int kLaguerreSumMaxDegree = 20;

struct LogFactorials {
  std::array<double, kLogFactorialTable> v{};
  LogFactorials() {
    v[0] = 0.0;
    for (int n = 1; n < kLogFactorialTable; ++n) {
      v[n] = v[n - 1] + std::log(static_cast<double>(n));
    }
  }
};

// Built once, read-only afterwards; function-local static init is thread-safe.
const LogFactorials& log_factorials() {
  static const LogFactorials table;
  return table;
}

}  // namespace

double log_factorial(int n) {
  if (n < kLogFactorialTable) {
    return log_factorials().v[n];
  }
  return std::lgamma(static_cast<double>(n) + 1.0);
}

double log_pochhammer(double a, int n) {
  if (n <= 64) {
    CompensatedSum s;
    for (int k = 0; k < n; ++k) {
      s.add(std::log(a + k));
    }
    return s.value();
  }
  return std::lgamma(a + n) - std::lgamma(a);
}

double laguerre_assoc_sum(int k, int alpha, double x) {
  // L_k^{(a)}(x) = sum_j (-1)^j C(k+a, k-j) x^j / j!
  // term_{j+1} = -term_j (k-j) x / ((j+1)(a+j+1))
  double term = 1.0;  // C(k+a, k)
  for (int i = 1; i <= k; ++i) {
    term = term * (alpha + i) / i;
  }
  CompensatedSum s;
  for (int j = 0; j <= k; ++j) {
    s.add(term);
    term *= -(k - j) * x / ((j + 1.0) * (alpha + j + 1.0));
  }
  return s.value();
}

double laguerre_assoc_recurrence(int k, int alpha, double x) {
  double prev = 1.0;
  if (k == 0) {
    return prev;
  }
  double cur = 1.0 + alpha - x;
  for (int j = 1; j < k; ++j) {
    const double next = ((2.0 * j + 1.0 + alpha - x) * cur - (j + alpha) * prev) / (j + 1.0);
    prev = cur;
    cur = next;
  }
  return cur;
}

double laguerre_assoc(int k, int alpha, double x) {
  return k <= kLaguerreSumMaxDegree ? laguerre_assoc_sum(k, alpha, x)
                                    : laguerre_assoc_recurrence(k, alpha, x);
}

double ipow(double x, int e) {
  double r = 1.0;
  while (e > 0) {
    if (e & 1) {
      r *= x;
    }
    x *= x;
    e >>= 1;
  }
  return r;
}

}  // namespace jcs
