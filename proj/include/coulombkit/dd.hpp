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

#ifndef COULOMBKIT_DD_HPP
#define COULOMBKIT_DD_HPP

#include <cmath>

namespace coulombkit {

// Double-double value: hi + lo with |lo| <= ulp(hi)/2.  The series kernels
// run entirely in this representation; the alternating Coulomb series has a
// condition number that grows like e^|rho|, which eats ~9 of the 16 double
// digits by rho = 20.  Plain compensated summation is not enough because the
// terms themselves (coefficient recurrence, power recurrence) must carry
// better-than-double accuracy.
struct dd {
  double hi = 0.0;
  double lo = 0.0;
};

namespace ddops {

// Error-free transforms.  two_prod requires a correctly rounded fma.
inline dd two_sum(double a, double b) {
  double s = a + b;
  double bb = s - a;
  double err = (a - (s - bb)) + (b - bb);
  return {s, err};
}

inline dd quick_two_sum(double a, double b) {
  // requires |a| >= |b|
  double s = a + b;
  double err = b - (s - a);
  return {s, err};
}

inline dd two_prod(double a, double b) {
  double p = a * b;
  double err = std::fma(a, b, -p);
  return {p, err};
}

inline dd add(dd a, dd b) {
  dd s = two_sum(a.hi, b.hi);
  double lo = s.lo + (a.lo + b.lo);
  return quick_two_sum(s.hi, lo);
}

inline dd add(dd a, double b) {
  dd s = two_sum(a.hi, b);
  double lo = s.lo + a.lo;
  return quick_two_sum(s.hi, lo);
}

inline dd neg(dd a) { return {-a.hi, -a.lo}; }

inline dd sub(dd a, dd b) { return add(a, neg(b)); }

inline dd mul(dd a, dd b) {
  dd p = two_prod(a.hi, b.hi);
  double lo = p.lo + (a.hi * b.lo + a.lo * b.hi);
  return quick_two_sum(p.hi, lo);
}

inline dd mul(dd a, double b) {
  dd p = two_prod(a.hi, b);
  double lo = p.lo + a.lo * b;
  return quick_two_sum(p.hi, lo);
}

inline dd div(dd a, dd b) {
  double q1 = a.hi / b.hi;
  dd r = sub(a, mul(b, q1));
  double q2 = r.hi / b.hi;
  r = sub(r, mul(b, q2));
  double q3 = r.hi / b.hi;
  dd q = quick_two_sum(q1, q2);
  return add(q, q3);
}

inline dd from(double x) { return {x, 0.0}; }

inline double to_double(dd a) { return a.hi + a.lo; }

}  // namespace ddops

}  // namespace coulombkit

#endif
