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

#include "coulombkit/zeros.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>

#include "json.hpp"

namespace coulombkit::zeros {

namespace {

int sign_of(double x) { return (x > 0.0) - (x < 0.0); }

double bisect(const std::function<double(double)>& f, double a, double b, double fa, double tol) {
  // fa and f(b) have opposite signs (or one endpoint is an exact zero)
  while (b - a > tol) {
    const double mid = 0.5 * (a + b);
    if (mid <= a || mid >= b) break;  // bracket at floating-point resolution
    const double fm = f(mid);
    if (fm == 0.0) return mid;
    if (sign_of(fm) == sign_of(fa)) {
      a = mid;
      fa = fm;
    } else {
      b = mid;
    }
  }
  return 0.5 * (a + b);
}

}  // namespace

double BracketPolicy::effective_step(double eta) const {
  if (scan_step > 0.0) return scan_step;
  return std::numbers::pi / (8.0 * (1.0 + std::fabs(eta) / 4.0));
}

void BracketPolicy::validate() const {
  if (scan_step < 0.0 || scan_step >= std::numbers::pi)
    throw domain_error("BracketPolicy: scan_step must lie in [0, pi)");
  if (!(refine_tol > 0.0)) throw domain_error("BracketPolicy: refine_tol must be > 0");
  if (!(max_scan > 0.0)) throw domain_error("BracketPolicy: max_scan must be > 0");
}

ZeroTable positive_zeros(const CoulombParams& params, int count, const BracketPolicy& bracket,
                         const SeriesPolicy& series) {
  bracket.validate();
  series.validate();
  if (count < 0) throw domain_error("positive_zeros: count must be >= 0");
  if (count > max_zero_count)
    throw insufficient_range_error("positive_zeros: at most " + std::to_string(max_zero_count) +
                                   " zeros per sign are supported");
  if (bracket.max_scan > series.rho_max)
    throw domain_error("positive_zeros: max_scan exceeds the series rho_max");

  ZeroTable table{params, {}, {}, bracket.refine_tol};
  if (count == 0) return table;

  const double step = bracket.effective_step(params.eta());
  const int n_grid = static_cast<int>(std::floor(bracket.max_scan / step));
  std::vector<double> grid(static_cast<std::size_t>(n_grid));
  for (int i = 0; i < n_grid; ++i) grid[static_cast<std::size_t>(i)] = step * (i + 1);
  std::vector<EvalResult> vals(grid.size());
  eval_normalized_batch(params, grid, series, vals);

  const auto fn = [&](double r) { return eval_normalized(params, r, series).value; };

  double prev_rho = 0.0;
  double prev_val = 1.0;  // Fn(eta, 0) = 1 exactly
  for (std::size_t i = 0; i < grid.size() && table.positive.size() < static_cast<std::size_t>(count); ++i) {
    const double v = vals[i].value;
    if (v == 0.0) {
      // grid point is a zero to full precision; shrink a symmetric bracket
      table.positive.push_back(grid[i]);
      prev_rho = grid[i] + bracket.refine_tol;
      prev_val = fn(prev_rho);
      continue;
    }
    if (sign_of(v) != sign_of(prev_val)) {
      table.positive.push_back(bisect(fn, prev_rho, grid[i], prev_val, bracket.refine_tol));
    }
    prev_rho = grid[i];
    prev_val = v;
  }
  if (table.positive.size() < static_cast<std::size_t>(count))
    throw insufficient_range_error(
        "positive_zeros: found " + std::to_string(table.positive.size()) + " of " +
        std::to_string(count) + " zeros before max_scan=" + std::to_string(bracket.max_scan));
  return table;
}

ZeroTable negative_zeros(const CoulombParams& params, int count, const BracketPolicy& bracket,
                         const SeriesPolicy& series) {
  const CoulombParams mirrored(params.L(), -params.eta());
  ZeroTable pos = positive_zeros(mirrored, count, bracket, series);
  ZeroTable table{params, {}, {}, bracket.refine_tol};
  table.negative.reserve(pos.positive.size());
  for (double x : pos.positive) table.negative.push_back(-x);
  // verify each parity-derived zero by a direct sign change on the negative axis
  const double delta = std::max(4.0 * bracket.refine_tol, 1e-14);
  for (double y : table.negative) {
    const double lo = eval_normalized(params, y - delta, series).value;
    const double hi = eval_normalized(params, y + delta, series).value;
    if (lo != 0.0 && hi != 0.0 && sign_of(lo) == sign_of(hi))
      throw convergence_error("negative_zeros: parity-derived zero failed direct verification");
  }
  return table;
}

ZeroTable zero_table(const CoulombParams& params, int count, const BracketPolicy& bracket,
                     const SeriesPolicy& series) {
  ZeroTable table = positive_zeros(params, count, bracket, series);
  table.negative = negative_zeros(params, count, bracket, series).negative;
  return table;
}

std::vector<double> derivative_zeros(const CoulombParams& params, int count,
                                     const BracketPolicy& bracket, const SeriesPolicy& series) {
  if (params.L() <= -0.5)
    throw domain_error("derivative_zeros: requires L > -1/2");
  if (count < 0) throw domain_error("derivative_zeros: count must be >= 0");
  std::vector<double> out;
  if (count == 0) return out;

  // zeros of F' = zeros of (L+1) Fn + rho Fn'; exactly one sits in each gap
  // between consecutive zeros of F (with the origin as the left edge of the
  // first gap).
  const ZeroTable fz = positive_zeros(params, count, bracket, series);
  const double lp1 = params.L() + 1.0;
  const auto h = [&](double r) {
    if (r == 0.0) return lp1;
    return lp1 * eval_normalized(params, r, series).value +
           r * eval_normalized_derivative(params, r, series).value;
  };
  double a = 0.0;
  double fa = lp1;
  out.reserve(static_cast<std::size_t>(count));
  for (int k = 0; k < count; ++k) {
    const double b = fz.positive[static_cast<std::size_t>(k)];
    const double fb = h(b);
    if (fb == 0.0 || sign_of(fb) != sign_of(fa)) {
      out.push_back(bisect(h, a, b, fa, bracket.refine_tol));
    } else {
      throw convergence_error("derivative_zeros: no sign change of F' between zeros of F");
    }
    a = b;
    fa = fb;
  }
  return out;
}

InterlacingReport check_interlacing(std::span<const double> a, std::span<const double> b) {
  for (std::size_t i = 1; i < a.size(); ++i)
    if (!(a[i] > a[i - 1])) throw domain_error("check_interlacing: a must be strictly increasing");
  for (std::size_t i = 1; i < b.size(); ++i)
    if (!(b[i] > b[i - 1])) throw domain_error("check_interlacing: b must be strictly increasing");

  InterlacingReport report;
  std::size_t ia = 0, ib = 0;
  int last_source = 0;  // 0 none, 1 from a, 2 from b
  std::ptrdiff_t merged_index = 0;
  while (ia < a.size() || ib < b.size()) {
    int source;
    if (ia < a.size() && ib < b.size() && a[ia] == b[ib]) {
      report.first_violation = merged_index;  // coincident entries cannot interlace
      return report;
    }
    if (ib >= b.size() || (ia < a.size() && a[ia] < b[ib])) {
      source = 1;
      ++ia;
    } else {
      source = 2;
      ++ib;
    }
    if (source == last_source) {
      report.first_violation = merged_index;
      return report;
    }
    last_source = source;
    ++merged_index;
  }
  report.interlaced = true;
  return report;
}

double hadamard_eval(const CoulombParams& params, double rho, const ZeroTable& table) {
  const double lp1 = params.L() + 1.0;
  if (std::fabs(lp1) < 1e-8) throw domain_error("hadamard_eval: L = -1 is excluded");
  if (table.positive.empty() || table.negative.empty())
    throw domain_error("hadamard_eval: table must contain zeros of both signs");
  double prod = 1.0;
  double exponent = params.eta() * rho / lp1;
  const auto accumulate = [&](double z) {
    if (rho == z) throw domain_error("hadamard_eval: rho coincides with a listed zero");
    prod *= 1.0 - rho / z;
    exponent += rho / z;
  };
  for (double z : table.positive) accumulate(z);
  for (double z : table.negative) accumulate(z);
  return prod * std::exp(exponent);
}

std::string ZeroTable::to_json() const {
  nlohmann::json j;
  j["L"] = params.L();
  j["eta"] = params.eta();
  j["positive"] = positive;
  j["negative"] = negative;
  j["accuracy"] = accuracy;
  return j.dump();
}

}  // namespace coulombkit::zeros
