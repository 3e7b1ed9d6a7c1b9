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

#ifndef COULOMBKIT_ZETA_HPP
#define COULOMBKIT_ZETA_HPP

#include <span>
#include <string>
#include <vector>

#include "coulombkit/coulomb.hpp"
#include "coulombkit/zeros.hpp"

namespace coulombkit::zeta {

// zeta_{s,eta}(L) = sum over positive zeros x_n^{-s} + sum over negative
// zeros y_n^{-s} of F_L(eta, .).  Rational in L; computable four ways, which
// is the whole point: the routes cross-check each other.

enum class Route { closed_form, coefficient_recurrence, quadratic_recurrence, zero_sum };

const char* route_name(Route r);

struct ZetaTable {
  CoulombParams params;
  int m_max = 0;
  Route route = Route::closed_form;
  std::vector<double> values;     // values[i] = zeta_{i+2}
  std::vector<double> est_error;  // crude per-entry bound, same indexing

  double at(int s) const;         // s in [2, m_max]
  std::string to_json() const;
  std::string to_csv() const;     // columns: s, value, route, est_error
};

/// zeta_2 = ((L+1)^2+eta^2) / ((L+1)^2 (2L+3)),
/// zeta_3 = -eta ((L+1)^2+eta^2) / ((L+1)^3 (L+2) (2L+3)).
/// Only s = 2 and s = 3 have closed forms here; requires L > -1.
double zeta_closed_form(const CoulombParams& params, int s);

/// Triangular solve of  zeta_2 a_{L+1,n} = sum_{k=0}^n a_{L,k} zeta_{n-k+2},
/// seeded with the zeta_2 closed form.
ZetaTable zeta_via_coefficients(const CoulombParams& params, int m_max);

/// Forward substitution of
///   (m+2L+3) zeta_{m+2} + (2 eta/(L+1)) zeta_{m+1} = sum_{k=2}^m zeta_k zeta_{m-k+2},
/// seeded with the zeta_2, zeta_3 closed forms.
ZetaTable zeta_via_quadratic(const CoulombParams& params, int m_max);

enum class Tail { none, integral_estimate };

struct ZeroSumResult {
  double value = 0.0;
  double tail_bound = 0.0;  // half-width of the integral bracket (or the
                            // full omitted-tail bound when Tail::none)
};

/// Direct partial sum over a zero table, optionally plus the midpoint of the
/// two integral bounds obtained by modelling unlisted zeros as the last
/// listed zero plus multiples of pi.
ZeroSumResult zeta_from_zeros(const CoulombParams& params, int s, const zeros::ZeroTable& table,
                              Tail tail);

/// Rayleigh function sigma_{2q}(nu) by the quadratic recurrence
///   (nu+q) sigma_{2q} = sum_{k=1}^{q-1} sigma_{2k} sigma_{2q-2k},
/// seeded with sigma_2(nu) = 1/(4(nu+1)).  Requires nu > -1.
double rayleigh_sigma(double nu, int q);

struct GenFuncCheck {
  double lhs = 0.0;  // F_{L+1}/(rho F_L), direct evaluation
  double rhs = 0.0;  // (L+1)/sqrt((L+1)^2+eta^2) * truncated zeta series
};

/// Both sides of the zeta generating function at one point; the caller
/// asserts closeness.  Requires 0 < rho < min(x_1, -y_1).
GenFuncCheck generating_function_check(const CoulombParams& params, double rho, int m_max,
                                       const SeriesPolicy& series = {},
                                       const zeros::BracketPolicy& bracket = {});

// Complete-monotonicity probe: forward differences on a uniform L-grid,
// requiring (-1)^k D^k f >= -tol_k with tol_k = 1e-9 max|f| (2/h)^k for
// k = 0..max_order.  A falsification probe, not a proof.
enum class CmFamily {
  zeta_m,                  // L -> zeta_m
  zeta_ratio,              // L -> zeta_m / zeta_2
  zeta_scaled,             // L -> (2L+3)^{m-1} zeta_m
  recurrence_combination,  // L -> (m+2L+3) zeta_{m+2} + 2 eta zeta_{m+1}/(L+1)
};

struct CmReport {
  bool pass = false;
  bool identically_zero = false;
  int first_bad_order = -1;
  int first_bad_index = -1;
  double worst_ratio = 0.0;  // min over k,i of (-1)^k D^k f / tol_k; pass iff >= -1
};

/// Probe a CM family on the grid L_start + i*L_step, i = 0..n_points-1.
/// Requires eta <= 0, L_start > -1, max_order <= 6.
CmReport cm_probe(CmFamily family, double eta, int m, double L_start, double L_step,
                  int n_points, int max_order);

/// Same difference test for caller-supplied values (used for the Rayleigh
/// specializations).
CmReport cm_probe_values(std::span<const double> values, double h, int max_order);

}  // namespace coulombkit::zeta

#endif
