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

// Test-only oracles, independent of the library's evaluation path: closed
// trigonometric forms at eta = 0, exact rational series summation, plain
// bisection, central differences.

#ifndef COULOMBKIT_TESTS_ORACLES_HPP
#define COULOMBKIT_TESTS_ORACLES_HPP

#include <cmath>
#include <functional>

#include <boost/multiprecision/cpp_int.hpp>

namespace oracles {

// F_L(0, rho) for L = -1, 0, 1, 2 in closed trigonometric form.
inline double f_0(double r) { return std::sin(r); }
inline double f_1(double r) { return std::sin(r) / r - std::cos(r); }
inline double f_2(double r) { return (3.0 / (r * r) - 1.0) * std::sin(r) - 3.0 * std::cos(r) / r; }

// normalized counterparts Fn_L(0, rho) = F_L / (C_L rho^{L+1})
inline double fn_0(double r) { return std::sin(r) / r; }
inline double fn_1(double r) { return 3.0 * (std::sin(r) / r - std::cos(r)) / (r * r); }

inline double f1_prime(double r) {
  return (r * std::cos(r) - std::sin(r)) / (r * r) + std::sin(r);
}

// Exact-rational evaluation of Fn_L(eta, rho) for rational inputs: the
// coefficient recurrence and the partial sum carry no rounding at all.
using rational = boost::multiprecision::cpp_rational;

inline double fn_rational(const rational& L, const rational& eta, const rational& rho,
                          int terms) {
  rational a_prev2 = 1;                 // a_0
  rational a_prev1 = eta / (L + 1);     // a_1
  rational power = rho;                 // rho^1
  rational sum = a_prev2 + a_prev1 * power;
  for (int n = 2; n <= terms; ++n) {
    const rational a = (2 * eta * a_prev1 - a_prev2) / (n * (n + 2 * L + 1));
    power *= rho;
    sum += a * power;
    a_prev2 = a_prev1;
    a_prev1 = a;
  }
  return static_cast<double>(sum);
}

inline double bisect(const std::function<double(double)>& f, double a, double b,
                     double tol = 1e-14) {
  double fa = f(a);
  while (b - a > tol) {
    const double mid = 0.5 * (a + b);
    if (mid <= a || mid >= b) break;
    const double fm = f(mid);
    if ((fm > 0) == (fa > 0)) {
      a = mid;
      fa = fm;
    } else {
      b = mid;
    }
  }
  return 0.5 * (a + b);
}

inline double central_diff(const std::function<double(double)>& f, double x, double h) {
  return (f(x + h) - f(x - h)) / (2.0 * h);
}

}  // namespace oracles

#endif
