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

#ifndef COULOMBKIT_SERIES_KERNEL_HPP
#define COULOMBKIT_SERIES_KERNEL_HPP

#include <span>

#include "coulombkit/dd.hpp"

namespace coulombkit::kernels {

// Result of summing sum_k coeffs[k] * rho^k for one evaluation point.
//
// The truncation rule: a lane stops after three consecutive terms whose
// magnitude is at most tail_cut(rel_tol) times the running maximum of
// |partial sum|.  A single small term is not trusted; the series alternates
// irregularly for eta != 0 and can produce accidental near-zero terms.
struct TermSum {
  double value = 0.0;           // compensated sum, rounded to double
  double first_neglected = 0.0; // |coeffs[terms] * rho^terms| estimate
  double max_partial = 0.0;     // running max of |partial sum|
  int terms = 0;                // number of terms consumed
  bool converged = false;
};

// Effective relative cut for the tail test.  The partial sums of the
// alternating series overshoot the result by a factor that reaches ~e^|rho|,
// so a cut of rel_tol * max_partial alone would leave a truncation tail far
// above the accuracy the double-double summation can deliver.  Scaling by
// half a double ulp pushes truncation to the level where further terms
// cannot move the rounded result.
inline double tail_cut(double rel_tol) {
  return rel_tol * (0.5 * 2.220446049250313e-16);
}

// Scalar reference kernel.  One independent summation per entry of `rho`.
// coeffs.size() must be >= 2; at most coeffs.size()-1 terms are consumed so
// the first neglected coefficient is always available.
void series_sum_scalar(std::span<const dd> coeffs, std::span<const double> rho,
                       double rel_tol, std::span<TermSum> out);

#if defined(__x86_64__) || defined(_M_X64)
#define COULOMBKIT_HAVE_AVX2_KERNEL 1
// AVX2+FMA variant: four lanes per block, lane-masked termination.  Performs
// the identical IEEE operation sequence per lane as the scalar kernel, so
// results are bit-equal (the equivalence tests assert exactly that).
void series_sum_avx2(std::span<const dd> coeffs, std::span<const double> rho,
                     double rel_tol, std::span<TermSum> out);
#endif

enum class Isa { scalar, avx2 };

// Kernel selected at runtime: CPUID detection, overridable with
// COULOMBKIT_SIMD=scalar|avx2|auto (unsupported requests fall back to scalar).
Isa active_isa();
const char* isa_name(Isa isa);

// Dispatching entry point used by all evaluation paths.
void series_sum(std::span<const dd> coeffs, std::span<const double> rho,
                double rel_tol, std::span<TermSum> out);

}  // namespace coulombkit::kernels

#endif
