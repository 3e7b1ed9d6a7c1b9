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

#ifndef COULOMBKIT_COULOMB_HPP
#define COULOMBKIT_COULOMB_HPP

#include <span>
#include <utility>
#include <vector>

#include "coulombkit/dd.hpp"
#include "coulombkit/errors.hpp"
#include "coulombkit/params.hpp"

namespace coulombkit {

// Regular Coulomb wave evaluation from the power series
//
//   F_L(eta, rho)        = C_L(eta) rho^{L+1} Fn_L(eta, rho)
//   Fn_L(eta, rho)       = sum_{n >= 0} a_{L,n} rho^n        (normalized form)
//   a_{L,0} = 1,  a_{L,1} = eta/(L+1),
//   a_{L,n} = (2 eta a_{L,n-1} - a_{L,n-2}) / (n (n + 2L + 1)).
//
// Everything below rho_max is summed directly with double-double arithmetic;
// the alternating series loses roughly |rho|/ln(10) digits in plain doubles,
// which would be fatal well before rho = 20.

/// C_L(eta) = 2^L e^{-pi eta/2} |Gamma(L+1+i eta)| / Gamma(2L+2).
/// Integer L >= 0 uses the closed product form; other orders use the Lanczos
/// modulus.  Throws domain_error when 2L+2 is a nonpositive integer.
double normalization_constant(const CoulombParams& params);

/// a_{L,0..n_max} by the three-term recurrence.
std::vector<double> series_coefficients(const CoulombParams& params, int n_max);

/// Normalized function Fn_L(eta, rho); exact 1 at rho = 0.
EvalResult eval_normalized(const CoulombParams& params, double rho,
                           const SeriesPolicy& policy = {});

/// Batch form of eval_normalized over many rho with one coefficient table;
/// uses the SIMD kernel when available.  out.size() must match rho.size().
void eval_normalized_batch(const CoulombParams& params, std::span<const double> rho,
                           const SeriesPolicy& policy, std::span<EvalResult> out);

/// d/drho of the normalized function, computed through the order-ladder
/// relation Fn_L' = (eta/(L+1)) Fn_L - ((L+1)^2+eta^2)/((L+1)^2(2L+3)) rho Fn_{L+1},
/// which is finite at rho = 0.
EvalResult eval_normalized_derivative(const CoulombParams& params, double rho,
                                      const SeriesPolicy& policy = {});

/// F_L(eta, rho).  Requires rho > 0 unless L is an integer.
EvalResult eval_regular(const CoulombParams& params, double rho,
                        const SeriesPolicy& policy = {});

/// F_L'(eta, rho) via the normalized-derivative route (no 1/rho singularity).
EvalResult eval_derivative(const CoulombParams& params, double rho,
                           const SeriesPolicy& policy = {});

/// (B, C) with F_L = B F_{L+1} + C F_{L-1}:
///   B = L sqrt((L+1)^2+eta^2) / ((2L+1) [L(L+1)/rho + eta])
///   C = (L+1) sqrt(L^2+eta^2) / ((2L+1) [L(L+1)/rho + eta])
/// Throws singular_coefficient_error when the shared denominator vanishes
/// and domain_error at L = -1/2 or rho = 0.
std::pair<double, double> recurrence_coefficients(const CoulombParams& params, double rho);

/// w'' + [1 - 2 eta/rho - L(L+1)/rho^2] w at w = F_L, with w'' summed
/// term-by-term from the series.  `scale` is the magnitude of the largest
/// of the two cancelling summands; a correct evaluation keeps
/// |residual| at rounding-error level relative to it.
struct OdeResidual {
  double residual = 0.0;
  double scale = 0.0;
};
OdeResidual ode_residual(const CoulombParams& params, double rho,
                         const SeriesPolicy& policy = {});

/// F_L'/F_L.  Throws pole_error when |Fn_L| <= policy.rel_tol.
double log_derivative(const CoulombParams& params, double rho,
                      const SeriesPolicy& policy = {});

namespace detail {
// dd coefficient table a_{L,0..n}; shared by the kernels and the oracles.
std::vector<dd> coefficient_table(const CoulombParams& params, int n_max);
// F_L' by the alternative route (L+1) F_L' = [(L+1)^2/rho + eta] F_L
// - sqrt((L+1)^2+eta^2) F_{L+1}; singular at rho = 0.  Kept for
// cross-validation against eval_derivative.
double derivative_ladder_route(const CoulombParams& params, double rho,
                               const SeriesPolicy& policy);
}  // namespace detail

}  // namespace coulombkit

#endif
