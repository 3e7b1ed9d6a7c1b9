/*
 * Copyright 2026 the coulombkit authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "coulombkit/series_kernel.hpp"

#include <cassert>
#include <cstdlib>
#include <cstring>
#include <string>

namespace coulombkit::kernels {

namespace {

// Shared epilogue so the scalar and SIMD kernels report identical metadata.
// On convergence at term index k (terms = k+1) the lane's power register
// still holds rho^k; without convergence it holds rho^terms already.
inline void finish_lane(std::span<const dd> coeffs, double rho, dd sum, dd power,
                        double max_partial, int terms, bool converged, TermSum& out) {
  using namespace ddops;
  out.value = to_double(sum);
  out.max_partial = max_partial;
  out.terms = terms;
  out.converged = converged;
  const double pw = converged ? to_double(mul(power, rho)) : to_double(power);
  out.first_neglected = std::fabs(to_double(coeffs[static_cast<std::size_t>(terms)]) * pw);
}

inline void sum_one(std::span<const dd> coeffs, double rho, double rel_tol, TermSum& out) {
  using namespace ddops;
  const int kmax = static_cast<int>(coeffs.size()) - 1;
  dd sum{0.0, 0.0};
  dd power{1.0, 0.0};
  const dd rho_dd{rho, 0.0};
  double max_partial = 0.0;
  int run = 0;
  const double cut = tail_cut(rel_tol);
  for (int k = 0; k < kmax; ++k) {
    const dd term = mul(coeffs[static_cast<std::size_t>(k)], power);
    sum = add(sum, term);
    const double av = std::fabs(sum.hi);
    max_partial = std::max(max_partial, av);
    const bool small = std::fabs(term.hi) <= cut * max_partial;
    run = small ? run + 1 : 0;
    if (run >= 3) {
      finish_lane(coeffs, rho, sum, power, max_partial, k + 1, true, out);
      return;
    }
    power = mul(power, rho_dd);
  }
  finish_lane(coeffs, rho, sum, power, max_partial, kmax, false, out);
}

}  // namespace

void series_sum_scalar(std::span<const dd> coeffs, std::span<const double> rho,
                       double rel_tol, std::span<TermSum> out) {
  assert(coeffs.size() >= 2);
  assert(out.size() >= rho.size());
  for (std::size_t i = 0; i < rho.size(); ++i) sum_one(coeffs, rho[i], rel_tol, out[i]);
}

Isa active_isa() {
  static const Isa isa = [] {
    bool have_avx2 = false;
#if defined(COULOMBKIT_HAVE_AVX2_KERNEL)
    have_avx2 = __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#endif
    const char* env = std::getenv("COULOMBKIT_SIMD");
    if (env != nullptr) {
      std::string mode(env);
      if (mode == "scalar") return Isa::scalar;
      if (mode == "avx2") return have_avx2 ? Isa::avx2 : Isa::scalar;
    }
    return have_avx2 ? Isa::avx2 : Isa::scalar;
  }();
  return isa;
}

const char* isa_name(Isa isa) {
  switch (isa) {
    case Isa::avx2: return "avx2";
    case Isa::scalar: return "scalar";
  }
  return "unknown";
}

void series_sum(std::span<const dd> coeffs, std::span<const double> rho,
                double rel_tol, std::span<TermSum> out) {
#if defined(COULOMBKIT_HAVE_AVX2_KERNEL)
  if (active_isa() == Isa::avx2) {
    const std::size_t blocks = rho.size() / 4 * 4;
    if (blocks > 0)
      series_sum_avx2(coeffs, rho.subspan(0, blocks), rel_tol, out.subspan(0, blocks));
    if (blocks < rho.size())
      series_sum_scalar(coeffs, rho.subspan(blocks), rel_tol, out.subspan(blocks));
    return;
  }
#endif
  series_sum_scalar(coeffs, rho, rel_tol, out);
}

}  // namespace coulombkit::kernels
