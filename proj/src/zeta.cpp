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

#include "coulombkit/zeta.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>

#include "json.hpp"

namespace coulombkit::zeta {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

void require_L_above_minus_one(const CoulombParams& params, const char* who) {
  if (!(params.L() > -1.0))
    throw domain_error(std::string(who) + ": requires L > -1");
}

void require_m_max(int m_max, const char* who) {
  if (m_max < 2) throw domain_error(std::string(who) + ": m_max must be >= 2");
}

}  // namespace

const char* route_name(Route r) {
  switch (r) {
    case Route::closed_form: return "closed_form";
    case Route::coefficient_recurrence: return "coefficient_recurrence";
    case Route::quadratic_recurrence: return "quadratic_recurrence";
    case Route::zero_sum: return "zero_sum";
  }
  return "unknown";
}

double ZetaTable::at(int s) const {
  if (s < 2 || s > m_max) throw domain_error("ZetaTable::at: s out of range");
  return values[static_cast<std::size_t>(s - 2)];
}

std::string ZetaTable::to_json() const {
  nlohmann::json j;
  j["L"] = params.L();
  j["eta"] = params.eta();
  j["route"] = route_name(route);
  nlohmann::json entries = nlohmann::json::array();
  for (int s = 2; s <= m_max; ++s) {
    nlohmann::json e;
    e["s"] = s;
    e["value"] = values[static_cast<std::size_t>(s - 2)];
    e["est_error"] = est_error[static_cast<std::size_t>(s - 2)];
    entries.push_back(e);
  }
  j["values"] = entries;
  return j.dump();
}

std::string ZetaTable::to_csv() const {
  std::string out = "s,value,route,est_error\n";
  char buf[128];
  for (int s = 2; s <= m_max; ++s) {
    std::snprintf(buf, sizeof(buf), "%d,%.17g,%s,%.17g\n", s,
                  values[static_cast<std::size_t>(s - 2)], route_name(route),
                  est_error[static_cast<std::size_t>(s - 2)]);
    out += buf;
  }
  return out;
}

double zeta_closed_form(const CoulombParams& params, int s) {
  require_L_above_minus_one(params, "zeta_closed_form");
  const double L = params.L();
  const double eta = params.eta();
  const double lp1 = L + 1.0;
  const double r = lp1 * lp1 + eta * eta;
  switch (s) {
    case 2:
      return r / (lp1 * lp1 * (2.0 * L + 3.0));
    case 3:
      // + 0.0 normalizes the -0.0 produced at eta = 0
      return -eta * r / (lp1 * lp1 * lp1 * (L + 2.0) * (2.0 * L + 3.0)) + 0.0;
    default:
      throw domain_error("zeta_closed_form: closed forms exist for s in {2, 3} only");
  }
}

ZetaTable zeta_via_coefficients(const CoulombParams& params, int m_max) {
  require_L_above_minus_one(params, "zeta_via_coefficients");
  require_m_max(m_max, "zeta_via_coefficients");
  const auto aL = series_coefficients(params, m_max - 2);
  const auto aL1 = series_coefficients(CoulombParams(params.L() + 1.0, params.eta()), m_max - 2);
  ZetaTable t{params, m_max, Route::coefficient_recurrence, {}, {}};
  t.values.resize(static_cast<std::size_t>(m_max - 1));
  const double z2 = zeta_closed_form(params, 2);
  t.values[0] = z2;
  for (int n = 1; n <= m_max - 2; ++n) {
    double acc = z2 * aL1[static_cast<std::size_t>(n)];
    for (int k = 1; k <= n; ++k)
      acc -= aL[static_cast<std::size_t>(k)] * t.values[static_cast<std::size_t>(n - k)];
    t.values[static_cast<std::size_t>(n)] = acc;
  }
  t.est_error.resize(t.values.size());
  for (std::size_t i = 0; i < t.values.size(); ++i)
    t.est_error[i] = 8.0 * kEps * (static_cast<double>(i) + 2.0) * std::fabs(t.values[i]);
  return t;
}

ZetaTable zeta_via_quadratic(const CoulombParams& params, int m_max) {
  require_L_above_minus_one(params, "zeta_via_quadratic");
  require_m_max(m_max, "zeta_via_quadratic");
  const double L = params.L();
  const double eta = params.eta();
  ZetaTable t{params, m_max, Route::quadratic_recurrence, {}, {}};
  t.values.resize(static_cast<std::size_t>(m_max - 1));
  t.values[0] = zeta_closed_form(params, 2);
  if (m_max >= 3) t.values[1] = zeta_closed_form(params, 3);
  for (int m = 2; m + 2 <= m_max; ++m) {
    const double denom = m + 2.0 * L + 3.0;
    if (std::fabs(denom) < 1e-12)
      throw domain_error("zeta_via_quadratic: m + 2L + 3 vanishes");
    double conv = 0.0;
    for (int k = 2; k <= m; ++k)
      conv += t.values[static_cast<std::size_t>(k - 2)] * t.values[static_cast<std::size_t>(m - k)];
    t.values[static_cast<std::size_t>(m)] =
        (conv - (2.0 * eta / (L + 1.0)) * t.values[static_cast<std::size_t>(m - 1)]) / denom;
  }
  t.est_error.resize(t.values.size());
  for (std::size_t i = 0; i < t.values.size(); ++i)
    t.est_error[i] = 8.0 * kEps * (static_cast<double>(i) + 2.0) * std::fabs(t.values[i]);
  return t;
}

ZeroSumResult zeta_from_zeros(const CoulombParams& params, int s, const zeros::ZeroTable& table,
                              Tail tail) {
  (void)params;
  if (s < 2) throw domain_error("zeta_from_zeros: s must be >= 2");
  if (table.positive.empty() && table.negative.empty())
    throw domain_error("zeta_from_zeros: table is empty");

  // smallest contributions first
  const auto side_sum = [s](const std::vector<double>& zs) {
    double acc = 0.0;
    for (auto it = zs.rbegin(); it != zs.rend(); ++it) acc += std::pow(*it, -s);
    return acc;
  };
  ZeroSumResult r;
  r.value = side_sum(table.positive) + side_sum(table.negative);

  // integral bracket for sum_{k>=1} (z_N + k pi)^{-s}
  const auto tail_bracket = [s](double z_last) {
    const double upper = std::pow(z_last, 1.0 - s) / (std::numbers::pi * (s - 1.0));
    const double lower = std::pow(z_last + std::numbers::pi, 1.0 - s) / (std::numbers::pi * (s - 1.0));
    return std::pair<double, double>{lower, upper};
  };
  const double sign_neg = (s % 2 == 0) ? 1.0 : -1.0;
  if (tail == Tail::integral_estimate) {
    if (!table.positive.empty()) {
      const auto [lo, up] = tail_bracket(table.positive.back());
      r.value += 0.5 * (lo + up);
      r.tail_bound += 0.5 * (up - lo);
    }
    if (!table.negative.empty()) {
      const auto [lo, up] = tail_bracket(-table.negative.back());
      r.value += sign_neg * 0.5 * (lo + up);
      r.tail_bound += 0.5 * (up - lo);
    }
  } else {
    // no estimate added; report the full omitted tail as the bound
    if (!table.positive.empty()) r.tail_bound += tail_bracket(table.positive.back()).second;
    if (!table.negative.empty()) r.tail_bound += tail_bracket(-table.negative.back()).second;
  }
  return r;
}

double rayleigh_sigma(double nu, int q) {
  if (!(nu > -1.0)) throw domain_error("rayleigh_sigma: requires nu > -1");
  if (q < 1) throw domain_error("rayleigh_sigma: q must be >= 1");
  std::vector<double> sigma(static_cast<std::size_t>(q) + 1, 0.0);
  sigma[1] = 1.0 / (4.0 * (nu + 1.0));
  for (int p = 2; p <= q; ++p) {
    double acc = 0.0;
    for (int k = 1; k <= p - 1; ++k)
      acc += sigma[static_cast<std::size_t>(k)] * sigma[static_cast<std::size_t>(p - k)];
    sigma[static_cast<std::size_t>(p)] = acc / (nu + p);
  }
  return sigma[static_cast<std::size_t>(q)];
}

GenFuncCheck generating_function_check(const CoulombParams& params, double rho, int m_max,
                                       const SeriesPolicy& series,
                                       const zeros::BracketPolicy& bracket) {
  require_m_max(m_max, "generating_function_check");
  const double x1 = zeros::positive_zeros(params, 1, bracket, series).positive.front();
  const double y1 = zeros::negative_zeros(params, 1, bracket, series).negative.front();
  if (!(rho > 0.0 && rho < std::min(x1, -y1)))
    throw domain_error("generating_function_check: need 0 < rho < min(x_1, -y_1)");
  const EvalResult fl = eval_normalized(params, rho, series);
  if (std::fabs(fl.value) <= series.rel_tol)
    throw pole_error("generating_function_check: rho is a zero of F_L");

  GenFuncCheck out;
  const double fL = eval_regular(params, rho, series).value;
  const double fL1 = eval_regular(CoulombParams(params.L() + 1.0, params.eta()), rho, series).value;
  out.lhs = fL1 / (rho * fL);

  const ZetaTable zt = zeta_via_quadratic(params, m_max);
  double acc = 0.0;
  for (int m = m_max - 2; m >= 0; --m)
    acc = acc * rho + zt.values[static_cast<std::size_t>(m)];
  const double lp1 = params.L() + 1.0;
  out.rhs = lp1 / std::sqrt(lp1 * lp1 + params.eta() * params.eta()) * acc;
  return out;
}

CmReport cm_probe_values(std::span<const double> values, double h, int max_order) {
  if (max_order < 0 || max_order > 6)
    throw domain_error("cm_probe: max_order must lie in [0, 6]");
  if (static_cast<int>(values.size()) < max_order + 1)
    throw domain_error("cm_probe: grid too short for requested order");
  if (!(h > 0.0)) throw domain_error("cm_probe: grid spacing must be > 0");

  CmReport report;
  double max_abs = 0.0;
  for (double v : values) max_abs = std::max(max_abs, std::fabs(v));
  if (max_abs == 0.0) {
    report.pass = true;
    report.identically_zero = true;
    return report;
  }
  std::vector<double> diff(values.begin(), values.end());
  report.pass = true;
  report.worst_ratio = std::numeric_limits<double>::infinity();
  const double amplify = 2.0 / h;
  double tol = 1e-9 * max_abs;
  for (int k = 0; k <= max_order; ++k) {
    const double parity = (k % 2 == 0) ? 1.0 : -1.0;
    for (std::size_t i = 0; i < diff.size(); ++i) {
      const double signed_val = parity * diff[i];
      const double ratio = signed_val / tol;
      if (ratio < report.worst_ratio) report.worst_ratio = ratio;
      if (signed_val < -tol && report.pass) {
        report.pass = false;
        report.first_bad_order = k;
        report.first_bad_index = static_cast<int>(i);
      }
    }
    for (std::size_t i = 0; i + 1 < diff.size(); ++i) diff[i] = diff[i + 1] - diff[i];
    diff.pop_back();
    tol *= amplify;
  }
  return report;
}

CmReport cm_probe(CmFamily family, double eta, int m, double L_start, double L_step, int n_points,
                  int max_order) {
  if (eta > 0.0) throw domain_error("cm_probe: requires eta <= 0");
  if (m < 2) throw domain_error("cm_probe: m must be >= 2");
  if (n_points < 2) throw domain_error("cm_probe: need at least 2 grid points");
  if (!(L_start > -1.0)) throw domain_error("cm_probe: grid must lie in (-1, inf)");

  std::vector<double> f(static_cast<std::size_t>(n_points));
  for (int i = 0; i < n_points; ++i) {
    const double L = L_start + L_step * i;
    const ZetaTable t = zeta_via_quadratic(CoulombParams(L, eta), m + 2);
    double v = 0.0;
    switch (family) {
      case CmFamily::zeta_m: v = t.at(m); break;
      case CmFamily::zeta_ratio: v = t.at(m) / t.at(2); break;
      case CmFamily::zeta_scaled: v = std::pow(2.0 * L + 3.0, m - 1) * t.at(m); break;
      case CmFamily::recurrence_combination:
        v = (m + 2.0 * L + 3.0) * t.at(m + 2) + 2.0 * eta * t.at(m + 1) / (L + 1.0);
        break;
    }
    f[static_cast<std::size_t>(i)] = v;
  }
  return cm_probe_values(f, L_step, max_order);
}

}  // namespace coulombkit::zeta
