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

#include "coulombkit/detail/gamma.hpp"

#include <cmath>
#include <complex>
#include <numbers>

namespace coulombkit::detail {

namespace {

// Lanczos g = 7 coefficient set.
constexpr double kLanczosG = 7.0;
constexpr double kLanczos[9] = {
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
};

double log_abs_gamma_core(std::complex<double> z) {
  // valid for Re z >= 1/2
  const std::complex<double> zm1 = z - 1.0;
  std::complex<double> acc = kLanczos[0];
  for (int i = 1; i < 9; ++i) acc += kLanczos[i] / (zm1 + static_cast<double>(i));
  const std::complex<double> t = zm1 + kLanczosG + 0.5;
  const std::complex<double> lg =
      0.5 * std::log(2.0 * std::numbers::pi) + (zm1 + 0.5) * std::log(t) - t + std::log(acc);
  return lg.real();
}

}  // namespace

double log_abs_gamma(double re, double im) {
  if (re >= 0.5) return log_abs_gamma_core({re, im});
  // |Gamma(z)| = pi / (|sin(pi z)| |Gamma(1-z)|)
  const double pi = std::numbers::pi;
  const double s2 = std::sin(pi * re) * std::sin(pi * re) +
                    std::sinh(pi * im) * std::sinh(pi * im);
  return std::log(pi) - 0.5 * std::log(s2) - log_abs_gamma_core({1.0 - re, -im});
}

double log_eta_expm1_two_pi(double eta) {
  const double two_pi_eta = 2.0 * std::numbers::pi * eta;
  if (eta > 0.0) {
    if (two_pi_eta > 700.0) return std::log(eta) + two_pi_eta;
    return std::log(eta * std::expm1(two_pi_eta));
  }
  // eta*(e^{2 pi eta} - 1) = |eta|*(1 - e^{2 pi eta}) > 0
  return std::log(-eta) + std::log1p(-std::exp(two_pi_eta));
}

}  // namespace coulombkit::detail
