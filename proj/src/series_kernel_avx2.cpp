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

#if defined(COULOMBKIT_HAVE_AVX2_KERNEL)

#include <immintrin.h>

#include <cassert>
#include <cmath>

namespace coulombkit::kernels {

namespace {

#if defined(__GNUC__) || defined(__clang__)
#define CK_AVX2 __attribute__((target("avx2,fma")))
#else
#define CK_AVX2
#endif

struct vdd {
  __m256d hi, lo;
};

// The operation sequences below mirror ddops:: exactly; together with
// -ffp-contract=off on the scalar kernel this keeps every lane bit-equal
// to the scalar reference.
CK_AVX2 inline __m256d vabs(__m256d x) {
  return _mm256_andnot_pd(_mm256_set1_pd(-0.0), x);
}

CK_AVX2 inline vdd two_sum(__m256d a, __m256d b) {
  __m256d s = _mm256_add_pd(a, b);
  __m256d bb = _mm256_sub_pd(s, a);
  __m256d err = _mm256_add_pd(_mm256_sub_pd(a, _mm256_sub_pd(s, bb)),
                              _mm256_sub_pd(b, bb));
  return {s, err};
}

CK_AVX2 inline vdd quick_two_sum(__m256d a, __m256d b) {
  __m256d s = _mm256_add_pd(a, b);
  __m256d err = _mm256_sub_pd(b, _mm256_sub_pd(s, a));
  return {s, err};
}

CK_AVX2 inline vdd two_prod(__m256d a, __m256d b) {
  __m256d p = _mm256_mul_pd(a, b);
  __m256d err = _mm256_fmsub_pd(a, b, p);  // fma(a, b, -p)
  return {p, err};
}

CK_AVX2 inline vdd vdd_add(vdd a, vdd b) {
  vdd s = two_sum(a.hi, b.hi);
  __m256d lo = _mm256_add_pd(s.lo, _mm256_add_pd(a.lo, b.lo));
  return quick_two_sum(s.hi, lo);
}

CK_AVX2 inline vdd vdd_mul(vdd a, vdd b) {
  vdd p = two_prod(a.hi, b.hi);
  __m256d cross = _mm256_add_pd(_mm256_mul_pd(a.hi, b.lo), _mm256_mul_pd(a.lo, b.hi));
  __m256d lo = _mm256_add_pd(p.lo, cross);
  return quick_two_sum(p.hi, lo);
}

CK_AVX2 inline __m256d blend(__m256d keep, __m256d take, __m256d mask) {
  return _mm256_blendv_pd(keep, take, mask);
}

CK_AVX2 void sum_block4(std::span<const dd> coeffs, const double* rho,
                        double rel_tol, TermSum* out) {
  using namespace ddops;
  const int kmax = static_cast<int>(coeffs.size()) - 1;
  const __m256d rho_v = _mm256_loadu_pd(rho);
  vdd rho_dd{rho_v, _mm256_setzero_pd()};
  vdd sum{_mm256_setzero_pd(), _mm256_setzero_pd()};
  vdd power{_mm256_set1_pd(1.0), _mm256_setzero_pd()};
  __m256d max_partial = _mm256_setzero_pd();
  __m256d run = _mm256_setzero_pd();
  __m256d terms = _mm256_set1_pd(static_cast<double>(kmax));
  __m256d active = _mm256_castsi256_pd(_mm256_set1_epi64x(-1));
  const __m256d tol_v = _mm256_set1_pd(tail_cut(rel_tol));
  const __m256d one = _mm256_set1_pd(1.0);
  const __m256d three = _mm256_set1_pd(3.0);

  int k = 0;
  for (; k < kmax; ++k) {
    const dd c = coeffs[static_cast<std::size_t>(k)];
    vdd cv{_mm256_set1_pd(c.hi), _mm256_set1_pd(c.lo)};
    vdd term = vdd_mul(cv, power);
    vdd nsum = vdd_add(sum, term);
    sum.hi = blend(sum.hi, nsum.hi, active);
    sum.lo = blend(sum.lo, nsum.lo, active);
    __m256d av = vabs(sum.hi);
    __m256d nmax = _mm256_max_pd(max_partial, av);
    max_partial = blend(max_partial, nmax, active);
    __m256d small = _mm256_cmp_pd(vabs(term.hi), _mm256_mul_pd(tol_v, max_partial),
                                  _CMP_LE_OQ);
    __m256d nrun = _mm256_and_pd(small, _mm256_add_pd(run, one));
    run = blend(run, nrun, active);
    __m256d newly = _mm256_and_pd(_mm256_cmp_pd(run, three, _CMP_GE_OQ), active);
    terms = blend(terms, _mm256_set1_pd(static_cast<double>(k + 1)), newly);
    active = _mm256_andnot_pd(newly, active);
    if (_mm256_movemask_pd(active) == 0) break;
    vdd npower = vdd_mul(power, rho_dd);
    power.hi = blend(power.hi, npower.hi, active);
    power.lo = blend(power.lo, npower.lo, active);
  }

  alignas(32) double sum_hi[4], sum_lo[4], pow_hi[4], pow_lo[4], maxp[4], terms_a[4];
  _mm256_store_pd(sum_hi, sum.hi);
  _mm256_store_pd(sum_lo, sum.lo);
  _mm256_store_pd(pow_hi, power.hi);
  _mm256_store_pd(pow_lo, power.lo);
  _mm256_store_pd(maxp, max_partial);
  _mm256_store_pd(terms_a, terms);
  const int still_active = _mm256_movemask_pd(active);

  for (int lane = 0; lane < 4; ++lane) {
    const int t = static_cast<int>(terms_a[lane]);
    const bool converged = (still_active & (1 << lane)) == 0;
    TermSum& o = out[lane];
    o.value = to_double(dd{sum_hi[lane], sum_lo[lane]});
    o.max_partial = maxp[lane];
    o.terms = t;
    o.converged = converged;
    const dd pw{pow_hi[lane], pow_lo[lane]};
    const double p = converged ? to_double(mul(pw, rho[lane])) : to_double(pw);
    o.first_neglected = std::fabs(to_double(coeffs[static_cast<std::size_t>(t)]) * p);
  }
}

}  // namespace

void series_sum_avx2(std::span<const dd> coeffs, std::span<const double> rho,
                     double rel_tol, std::span<TermSum> out) {
  assert(coeffs.size() >= 2);
  assert(rho.size() % 4 == 0);
  assert(out.size() >= rho.size());
  for (std::size_t i = 0; i < rho.size(); i += 4)
    sum_block4(coeffs, rho.data() + i, rel_tol, out.data() + i);
}

}  // namespace coulombkit::kernels

#endif  // COULOMBKIT_HAVE_AVX2_KERNEL
