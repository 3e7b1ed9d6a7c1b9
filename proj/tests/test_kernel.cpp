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

#include <random>
#include <vector>

#include "doctest.h"

#include "coulombkit/coulomb.hpp"
#include "coulombkit/series_kernel.hpp"

using namespace coulombkit;

namespace {

std::vector<kernels::TermSum> run_scalar(std::span<const dd> coeffs,
                                         std::span<const double> rho, double rel_tol) {
  std::vector<kernels::TermSum> out(rho.size());
  kernels::series_sum_scalar(coeffs, rho, rel_tol, out);
  return out;
}

}  // namespace

TEST_CASE("dd primitives recover products and sums exactly") {
  using namespace ddops;
  // (1+e)(1-e) = 1-e^2 with e = 2^-26: every quantity is representable, so
  // the error-free transforms must recover it exactly
  const double e = 0x1p-26;
  const dd p = two_prod(1.0 + e, 1.0 - e);
  CHECK(to_double(sub(p, from(1.0))) == -0x1p-52);

  const dd third = div(from(1.0), from(3.0));
  CHECK(to_double(mul(third, 3.0)) == 1.0);
}

TEST_CASE("series kernel: exact unit value at rho = 0 and convergence metadata") {
  const CoulombParams p(0.5, -1.3);
  const auto coeffs = detail::coefficient_table(p, 600);
  const double rho = 0.0;
  const auto out = run_scalar(coeffs, std::span<const double>(&rho, 1), 1e-16);
  CHECK(out[0].converged);
  CHECK(out[0].value == 1.0);
  CHECK(out[0].terms <= 10);
}

TEST_CASE("series kernel: non-convergence is reported, not fabricated") {
  const CoulombParams p(0.0, 0.0);
  const auto coeffs = detail::coefficient_table(p, 12);
  const double rho = 20.0;  // needs ~90 terms
  const auto out = run_scalar(coeffs, std::span<const double>(&rho, 1), 1e-16);
  CHECK(!out[0].converged);
  CHECK(out[0].terms == 12);
}

#if defined(COULOMBKIT_HAVE_AVX2_KERNEL)
TEST_CASE("series kernel: AVX2 lanes are bit-identical to the scalar reference") {
  if (!(__builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma"))) {
    MESSAGE("avx2+fma not available; skipping equivalence check");
    return;
  }
  std::mt19937 rng(20260809);
  std::uniform_real_distribution<double> rho_dist(-24.0, 24.0);
  const double Ls[] = {0.0, 0.5, 1.0, 2.5, -0.75};
  const double etas[] = {0.0, -2.0, 1.5, -0.3};
  for (double L : Ls) {
    for (double eta : etas) {
      const CoulombParams p(L, eta);
      const auto coeffs = detail::coefficient_table(p, 600);
      for (int batch = 4; batch <= 32; batch *= 2) {
        std::vector<double> rho(static_cast<std::size_t>(batch));
        for (double& r : rho) r = rho_dist(rng);
        std::vector<kernels::TermSum> simd(rho.size());
        kernels::series_sum_avx2(coeffs, rho, 1e-16, simd);
        const auto ref = run_scalar(coeffs, rho, 1e-16);
        for (std::size_t i = 0; i < rho.size(); ++i) {
          CHECK(simd[i].value == ref[i].value);
          CHECK(simd[i].terms == ref[i].terms);
          CHECK(simd[i].converged == ref[i].converged);
          CHECK(simd[i].first_neglected == ref[i].first_neglected);
          CHECK(simd[i].max_partial == ref[i].max_partial);
        }
      }
    }
  }
}
#endif

TEST_CASE("dispatched series_sum handles non-multiple-of-4 batches") {
  const CoulombParams p(1.0, -0.5);
  const auto coeffs = detail::coefficient_table(p, 600);
  std::vector<double> rho;
  for (int i = 0; i < 11; ++i) rho.push_back(0.3 + 1.7 * i);
  std::vector<kernels::TermSum> out(rho.size());
  kernels::series_sum(coeffs, rho, 1e-16, out);
  const auto ref = run_scalar(coeffs, rho, 1e-16);
  for (std::size_t i = 0; i < rho.size(); ++i) CHECK(out[i].value == ref[i].value);
}

TEST_CASE("active ISA reports a known kernel name") {
  const auto isa = kernels::active_isa();
  const std::string name = kernels::isa_name(isa);
  CHECK((name == "avx2" || name == "scalar"));
}
