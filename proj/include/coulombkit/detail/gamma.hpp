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

#ifndef COULOMBKIT_DETAIL_GAMMA_HPP
#define COULOMBKIT_DETAIL_GAMMA_HPP

namespace coulombkit::detail {

// log |Gamma(re + i*im)| by a Lanczos approximation (g = 7, 9 coefficients,
// ~1e-13 relative on the modulus), with the reflection formula for re < 1/2.
// Poles (re a nonpositive integer while im == 0) are the caller's problem.
double log_abs_gamma(double re, double im);

// log of eta*(exp(2*pi*eta) - 1), the denominator of the integer-order
// normalization-constant product formula.  Stable for either sign of eta.
double log_eta_expm1_two_pi(double eta);

}  // namespace coulombkit::detail

#endif
