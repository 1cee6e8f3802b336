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

#include "jcs/kernels.hpp"

#include <exception>
#include <mutex>

#include "jcs/errors.hpp"
#include "jcs/matelem.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace jcs {

namespace {

// Keeps the first exception thrown inside a parallel region.
class ExceptionSlot {
 public:
  template <typename F>
  void run(F&& f) noexcept {
    try {
      f();
    } catch (...) {
      std::lock_guard<std::mutex> lock(mutex_);
      if (!error_) error_ = std::current_exception();
    }
  }
  void rethrow() const {
    if (error_) std::rethrow_exception(error_);
  }

 private:
  std::mutex mutex_;
  std::exception_ptr error_;
};

void check_table_size(AlgebraKind kind, double spin, int nmax) {
  if (nmax < 0) {
    throw ParameterError("element table needs nmax >= 0");
  }
  if (kind == AlgebraKind::SU2J && nmax > validate_spin(kind, spin)) {
    throw ParameterError("su(2) element table limited to 2J");
  }
}

struct PointError {
  double err = 0.0;
  int n = 0;
  int m = 0;
};

PointError point_error(const LadderRep& rep, cplx z, int nmax, double tol) {
  const CMatrix oracle = oracle_block(rep, nmax, z, tol);
  PointError out;
  for (int m = 0; m <= nmax; ++m) {
    for (int n = 0; n <= nmax; ++n) {
      const double e =
          std::abs(closed_form_element(rep.kind(), rep.spin(), n, m, z) - oracle(n, m));
      if (e > out.err) out = {e, n, m};
    }
  }
  return out;
}

OracleSweepResult reduce(const std::vector<PointError>& per_point) {
  OracleSweepResult r;
  for (std::size_t i = 0; i < per_point.size(); ++i) {
    if (per_point[i].err > r.max_error) {
      r = {per_point[i].err, i, per_point[i].n, per_point[i].m};
    }
  }
  return r;
}

}  // namespace

int kernel_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

CMatrix element_table_serial(AlgebraKind kind, double spin, cplx z, int nmax) {
  check_table_size(kind, spin, nmax);
  const int b = nmax + 1;
  CMatrix out(b, b);
  for (int m = 0; m < b; ++m) {
    for (int n = 0; n < b; ++n) {
      out(n, m) = closed_form_element(kind, spin, n, m, z);
    }
  }
  return out;
}

CMatrix element_table(AlgebraKind kind, double spin, cplx z, int nmax) {
  check_table_size(kind, spin, nmax);
  const int b = nmax + 1;
  CMatrix out(b, b);
  ExceptionSlot slot;
#pragma omp parallel for schedule(dynamic)
  for (int idx = 0; idx < b * b; ++idx) {
    const int n = idx % b;
    const int m = idx / b;
    slot.run([&] { out(n, m) = closed_form_element(kind, spin, n, m, z); });
  }
  slot.rethrow();
  return out;
}

std::vector<RabiPair> rabi_sweep_serial(std::span<const ModelParams> points,
                                        const LevelPair& pair) {
  std::vector<RabiPair> out;
  out.reserve(points.size());
  for (const ModelParams& p : points) {
    out.push_back(rabi_frequencies(p, pair));
  }
  return out;
}

std::vector<RabiPair> rabi_sweep(std::span<const ModelParams> points, const LevelPair& pair) {
  std::vector<RabiPair> out(points.size());
  ExceptionSlot slot;
  const long count = static_cast<long>(points.size());
#pragma omp parallel for schedule(dynamic)
  for (long i = 0; i < count; ++i) {
    slot.run([&] { out[i] = rabi_frequencies(points[i], pair); });
  }
  slot.rethrow();
  return out;
}

OracleSweepResult oracle_sweep_serial(const LadderRep& rep, std::span<const cplx> zs, int nmax,
                                      double tol) {
  std::vector<PointError> per_point;
  per_point.reserve(zs.size());
  for (const cplx& z : zs) {
    per_point.push_back(point_error(rep, z, nmax, tol));
  }
  return reduce(per_point);
}

OracleSweepResult oracle_sweep(const LadderRep& rep, std::span<const cplx> zs, int nmax,
                               double tol) {
  std::vector<PointError> per_point(zs.size());
  ExceptionSlot slot;
  const long count = static_cast<long>(zs.size());
#pragma omp parallel for schedule(dynamic)
  for (long i = 0; i < count; ++i) {
    slot.run([&] { per_point[i] = point_error(rep, zs[i], nmax, tol); });
  }
  slot.rethrow();
  return reduce(per_point);
}

}  // namespace jcs
