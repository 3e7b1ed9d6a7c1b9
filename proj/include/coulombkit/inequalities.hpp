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

#ifndef COULOMBKIT_INEQUALITIES_HPP
#define COULOMBKIT_INEQUALITIES_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "coulombkit/coulomb.hpp"
#include "coulombkit/zeros.hpp"

namespace coulombkit::ineq {

// Turan expressions.  The order ladder may touch L-1 = -1, where the
// C_L rho^{L+1} parametrization degenerates; the continuation used there is
//   F_{-1}(0, rho)   = Fn_{-1}(0, rho)            (C_{-1}(0) -> 1),
//   F_{-1}(eta, rho) = sign(eta) F_0(eta, rho)    (eta != 0).

/// F_L^2 - F_{L-1} F_{L+1}.
double turan1(const CoulombParams& params, double rho, const SeriesPolicy& policy = {});

/// sqrt(L^2+eta^2)/L * F_L^2 - sqrt((L+1)^2+eta^2)/(L+1) * F_{L-1} F_{L+1}.
/// Requires L != 0.
double turan2(const CoulombParams& params, double rho, const SeriesPolicy& policy = {});

/// F_L^2 - sqrt(L^2+eta^2) sqrt((L+1)^2+eta^2)/(L(L+1)) * F_{L-1} F_{L+1}.
/// Requires L outside 1e-6 windows of 0 and -1.
double turan3(const CoulombParams& params, double rho, const SeriesPolicy& policy = {});

// Region predicates: literal transcriptions of the hypothesis branches.
// Return the 1-based branch that applies, or 0.  x1 is the first positive
// zero at order L (for turan1) or order L-1 (for turan2/turan3).
int turan1_region(const CoulombParams& params, double rho, double x1);
int turan2_region(const CoulombParams& params, double rho, double x1_of_order_Lm1);
int turan3_region(const CoulombParams& params, double rho, double x1_of_order_Lm1);

/// 1 - L(2L+1) sqrt((L+1)^2+eta^2) / ((L+1)(2L+3) sqrt(L^2+eta^2)),
/// the rho -> 0 limit of turan1/F_L^2.  Requires L >= 0 and eta <= 0;
/// throws domain_error at (L, eta) = (0, 0) where the expression is 0/0.
double sharp_turan_bound(double L, double eta);

struct PairCheck {
  double lhs = 0.0;
  double rhs = 0.0;
  double truncation_bound = 0.0;  // magnitude of the first neglected term
};

/// Both sides of the ladder identity for the Turanian
///   F_l^2 - F_{l-1} F_{l+1}  (l = L+n)
///     = -(Theta C_l / C_l) F_l^2
///       - sum_{i>=1} [B_{l+1}..B_{l+i-1} / (C_l..C_{l+i})]
///         Theta(B_{l+i-1} C_{l+i}) F_{l+i}^2,
/// truncated at `terms` ladder steps.  Throws singular_coefficient_error when
/// a recurrence coefficient hits a pole along the ladder.
PairCheck turanian_ladder_identity(const CoulombParams& params, double rho, int n, int terms,
                                   const SeriesPolicy& policy = {});

/// Theta(B_{m-1} C_m) = B_m C_{m+1} - B_{m-1} C_m at order m.
double theta_bc(double m, double eta, double rho);

/// Both sides of
///   rho^2 sqrt((L+1)^2+eta^2)/(L+1) [F_{L+1}' F_L - F_L' F_{L+1}]
///     = sum_{n>=1} (2L+2n+1) F_{L+n}^2,
/// truncated at `terms`.
PairCheck wronskian_sum_check(const CoulombParams& params, double rho, int terms,
                              const SeriesPolicy& policy = {});

/// (L+5/2) log Fn_{L+1} - (L+3/2) log Fn_L; positive iff the
/// Mitrinovic-Adamovic inequality holds at rho.  Requires eta <= 0, L > -1
/// and both normalized values positive (i.e. 0 < rho < x_{L,eta,1}).
double ma_margin(const CoulombParams& params, double rho, const SeriesPolicy& policy = {});

/// Fn_{L+1}^{1/(L+3/2)} + Fn_{L+1}/Fn_L; expected >= 2 in the MA region.
double wilker_lhs(const CoulombParams& params, double rho, const SeriesPolicy& policy = {});

struct MlCheck {
  double lhs = 0.0;         // F_{L+1}/F_L, direct evaluation
  double rhs = 0.0;         // zero expansion over the table plus tail estimate
  double tail_bound = 0.0;  // bound on the tail-estimate error
};

/// Both sides of the Mittag-Leffler expansion
///   F_{L+1}/F_L = (L+1)/sqrt((L+1)^2+eta^2)
///                 * sum_n [rho/(x_n(x_n-rho)) + rho/(y_n(y_n-rho))],
/// with unlisted zeros modelled as pi-spaced beyond the table (integral
/// midpoint, half-width reported in tail_bound).
MlCheck mittag_leffler_check(const CoulombParams& params, double rho,
                             const zeros::ZeroTable& table, const SeriesPolicy& policy = {});

// Grid scans.

struct GridSpec {
  double start = 0.0;
  double stop = 0.0;
  double step = 1.0;

  std::vector<double> expand() const;  // inclusive endpoints within half-step
};

enum class Kind { turan1, turan2, turan3, sharp_turan, ma, wilker };

Kind kind_from_name(const std::string& name);
const char* kind_name(Kind kind);

struct Sample {
  double L = 0.0, eta = 0.0, rho = 0.0;
  double margin = 0.0;  // normalized by F_L^2 (turan kinds); NaN if not evaluable
  bool in_region = false;
  int branch = 0;
};

struct InequalityReport {
  std::string name;
  double tol = 1e-12;
  std::vector<Sample> samples;
  std::size_t in_region_count = 0;
  double min_margin_in_region = 0.0;  // NaN when no sample is in region
  std::vector<std::size_t> violations;  // in-region samples with margin < -tol

  std::string to_json() const;
  std::string to_csv() const;
};

InequalityReport scan(Kind kind, const GridSpec& L_grid, const GridSpec& eta_grid,
                      const GridSpec& rho_grid, double tol = 1e-12,
                      const SeriesPolicy& series = {}, const zeros::BracketPolicy& bracket = {});

namespace detail {
// F at an order that may sit at the ladder bottom -1 (see the continuation
// note above).
double regular_at_order(double order, double eta, double rho, const SeriesPolicy& policy);
// First positive zero at an order that may be -1.
double first_zero_at_order(double order, double eta, const zeros::BracketPolicy& bracket,
                           const SeriesPolicy& series);
}  // namespace detail

}  // namespace coulombkit::ineq

#endif
