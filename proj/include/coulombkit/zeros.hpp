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

#ifndef COULOMBKIT_ZEROS_HPP
#define COULOMBKIT_ZEROS_HPP

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "coulombkit/coulomb.hpp"

namespace coulombkit::zeros {

/// Scan-and-bisect policy.  scan_step = 0 selects pi/(8 (1 + |eta|/4)):
/// zero spacing approaches pi from above, and negative eta pulls the first
/// zeros inward, so the step shrinks with |eta|.
struct BracketPolicy {
  double scan_step = 0.0;
  double refine_tol = 1e-12;  // final bracket width
  double max_scan = 25.0;

  double effective_step(double eta) const;
  void validate() const;
};

/// Ordered real zeros of the normalized function (same zeros as F_L for
/// rho > 0).  positive ascending, negative descending.
struct ZeroTable {
  CoulombParams params;
  std::vector<double> positive;
  std::vector<double> negative;
  double accuracy = 0.0;

  std::string to_json() const;
};

/// Upper bound on zeros per sign at desk scale; the series evaluation
/// window cannot support more.
inline constexpr int max_zero_count = 64;

ZeroTable positive_zeros(const CoulombParams& params, int count,
                         const BracketPolicy& bracket = {}, const SeriesPolicy& series = {});

/// Negative zeros through the parity identity y_{L,eta,n} = -x_{L,-eta,n},
/// then verified by a direct sign change of Fn_L(eta, .) at the negated
/// points.
ZeroTable negative_zeros(const CoulombParams& params, int count,
                         const BracketPolicy& bracket = {}, const SeriesPolicy& series = {});

/// Both signs in one table.
ZeroTable zero_table(const CoulombParams& params, int count,
                     const BracketPolicy& bracket = {}, const SeriesPolicy& series = {});

/// First `count` positive zeros of F_L'(eta, .), bracketed between
/// consecutive zeros of F_L (one per gap, by interlacing).  Requires
/// L > -1/2.
std::vector<double> derivative_zeros(const CoulombParams& params, int count,
                                     const BracketPolicy& bracket = {},
                                     const SeriesPolicy& series = {});

struct InterlacingReport {
  bool interlaced = false;
  // index into the merged ascending sequence of the first adjacent
  // same-source pair (or equal values); -1 when interlaced
  std::ptrdiff_t first_violation = -1;
};

/// True iff the merged sequence of a and b strictly alternates sources.
/// Both inputs must be strictly increasing.
InterlacingReport check_interlacing(std::span<const double> a, std::span<const double> b);

/// Truncated product  e^{eta rho/(L+1)} prod_n (1 - rho/z) e^{rho/z}  over
/// every zero listed in the table; converges to Fn_L(eta, rho) as the table
/// grows.  Throws domain_error at L = -1, on an empty side, or when rho
/// equals a listed zero.
double hadamard_eval(const CoulombParams& params, double rho, const ZeroTable& table);

}  // namespace coulombkit::zeros

#endif
