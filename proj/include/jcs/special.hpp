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

#include <cmath>
#include <cstdint>

namespace jcs {

/// ln n!
double log_factorial(int n);

/// ln (a)_n, with (a)_n = a(a+1)...(a+n-1) the rising factorial; a > 0.
double log_pochhammer(double a, int n);

/// Associated Laguerre polynomial L_k^{(alpha)}(x).
///
/// The alternating finite sum is used for k <= 20 and the forward three-term
/// recurrence in k above that.
double laguerre_assoc(int k, int alpha, double x);

/// Finite alternating-sum form, evaluated with compensated summation.
double laguerre_assoc_sum(int k, int alpha, double x);

/// Forward recurrence (j+1) L_{j+1} = (2j+1+alpha-x) L_j - (j+alpha) L_{j-1}.
double laguerre_assoc_recurrence(int k, int alpha, double x);

/// x^e for an integer exponent e >= 0, by repeated squaring.
double ipow(double x, int e);

/// Neumaier (improved Kahan) running sum.
class CompensatedSum {
 public:
  void add(double v) {
    const double t = sum_ + v;
    if (std::abs(sum_) >= std::abs(v)) {
      comp_ += (sum_ - t) + v;
    } else {
      comp_ += (v - t) + sum_;
    }
    sum_ = t;
  }
  double value() const { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

}  // namespace jcs
