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

#include "coulombkit/inequalities.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>

#include "json.hpp"

#include "coulombkit/detail/parallel.hpp"

namespace coulombkit::ineq {

namespace {

constexpr double kNan = std::numeric_limits<double>::quiet_NaN();

double sq(double x) { return x * x; }

}  // namespace

namespace detail {

double regular_at_order(double order, double eta, double rho, const SeriesPolicy& policy) {
  if (std::fabs(order + 1.0) < 1e-8) {
    if (eta == 0.0) {
      // C_{-1}(0) -> 1 and rho^{L+1} -> 1
      return eval_normalized(CoulombParams(-1.0, 0.0), rho, policy).value;
    }
    const double f0 = eval_regular(CoulombParams(0.0, eta), rho, policy).value;
    return eta > 0.0 ? f0 : -f0;
  }
  return eval_regular(CoulombParams(order, eta), rho, policy).value;
}

double first_zero_at_order(double order, double eta, const zeros::BracketPolicy& bracket,
                           const SeriesPolicy& series) {
  double use_order = order;
  double use_eta = eta;
  if (std::fabs(order + 1.0) < 1e-8 && eta != 0.0) {
    // F_{-1} = sign(eta) F_0 shares the zeros of F_0
    use_order = 0.0;
  }
  return zeros::positive_zeros(CoulombParams(use_order, use_eta), 1, bracket, series)
      .positive.front();
}

}  // namespace detail

double turan1(const CoulombParams& params, double rho, const SeriesPolicy& policy) {
  const double L = params.L();
  const double eta = params.eta();
  const double fl = eval_regular(params, rho, policy).value;
  const double flm = detail::regular_at_order(L - 1.0, eta, rho, policy);
  const double flp = eval_regular(CoulombParams(L + 1.0, eta), rho, policy).value;
  return fl * fl - flm * flp;
}

double turan2(const CoulombParams& params, double rho, const SeriesPolicy& policy) {
  const double L = params.L();
  const double eta = params.eta();
  if (std::fabs(L) < 1e-12) throw domain_error("turan2: weight 1/L is singular at L = 0");
  const double fl = eval_regular(params, rho, policy).value;
  const double flm = detail::regular_at_order(L - 1.0, eta, rho, policy);
  const double flp = eval_regular(CoulombParams(L + 1.0, eta), rho, policy).value;
  return std::sqrt(L * L + eta * eta) / L * fl * fl -
         std::sqrt(sq(L + 1.0) + eta * eta) / (L + 1.0) * flm * flp;
}

double turan3(const CoulombParams& params, double rho, const SeriesPolicy& policy) {
  const double L = params.L();
  const double eta = params.eta();
  if (std::fabs(L) < 1e-6 || std::fabs(L + 1.0) < 1e-6)
    throw domain_error("turan3: L within 1e-6 of {0, -1} is out of domain");
  const double fl = eval_regular(params, rho, policy).value;
  const double flm = detail::regular_at_order(L - 1.0, eta, rho, policy);
  const double flp = eval_regular(CoulombParams(L + 1.0, eta), rho, policy).value;
  return fl * fl - std::sqrt(L * L + eta * eta) * std::sqrt(sq(L + 1.0) + eta * eta) /
                       (L * (L + 1.0)) * flm * flp;
}

int turan1_region(const CoulombParams& params, double rho, double x1) {
  const double L = params.L();
  const double eta = params.eta();
  if (L > 0.0 && eta > 0.0 && rho > 0.0 && rho < L * (L + 1.0) / eta && rho < x1) return 1;
  if (L > -1.5 && L < -1.0 && eta > 0.0 && rho > 0.0 && rho < L * (L + 1.0) / eta && rho < x1)
    return 2;
  if (eta <= 0.0 && L >= 0.0 && rho > 0.0 && rho < x1) return 3;
  return 0;
}

int turan2_region(const CoulombParams& params, double rho, double x1m) {
  const double L = params.L();
  const double eta = params.eta();
  const bool window = eta != 0.0 && rho >= L * (L + 1.0) / eta && rho < x1m && rho > 0.0;
  if (L > 0.0 && eta > 0.0 && window) return 1;
  if (L > -1.5 && L < -1.0 && eta > 0.0 && window) return 2;
  if (L > -1.0 && L < 0.0 && eta < 0.0 && window) return 3;
  return 0;
}

int turan3_region(const CoulombParams& params, double rho, double x1m) {
  const double L = params.L();
  const double eta = params.eta();
  if (std::fabs(L) < 1e-6 || std::fabs(L + 1.0) < 1e-6) return 0;
  if (!(L > -1.0)) return 0;
  if (!(rho > 0.0 && rho < x1m)) return 0;
  if (!(rho * rho <= (L * L * L + 1.0) / (L * L + eta * eta))) return 0;
  if (!(eta / (L * (L + 1.0)) - 1.0 / rho > 0.0)) return 0;
  return 1;
}

double sharp_turan_bound(double L, double eta) {
  if (!(L >= 0.0)) throw domain_error("sharp_turan_bound: requires L >= 0");
  if (!(eta <= 0.0)) throw domain_error("sharp_turan_bound: requires eta <= 0");
  if (L == 0.0 && eta == 0.0)
    throw domain_error("sharp_turan_bound: 0/0 at (L, eta) = (0, 0); the eta = 0 "
                       "family limit is 2/(2L+3)");
  return 1.0 - L * (2.0 * L + 1.0) * std::sqrt(sq(L + 1.0) + eta * eta) /
                   ((L + 1.0) * (2.0 * L + 3.0) * std::sqrt(L * L + eta * eta));
}

namespace {

// B and C at order m for the ladder identity; poles propagate as
// singular_coefficient_error from recurrence_coefficients.
std::pair<double, double> ladder_bc(double m, double eta, double rho) {
  return recurrence_coefficients(CoulombParams(m, eta), rho);
}

}  // namespace

double theta_bc(double m, double eta, double rho) {
  const auto bc_m = ladder_bc(m, eta, rho);
  const auto bc_m1 = ladder_bc(m + 1.0, eta, rho);
  const double b_prev = ladder_bc(m - 1.0, eta, rho).first;
  return bc_m.first * bc_m1.second - b_prev * bc_m.second;
}

PairCheck turanian_ladder_identity(const CoulombParams& params, double rho, int n, int terms,
                                   const SeriesPolicy& policy) {
  if (n < 0) throw domain_error("turanian_ladder_identity: n must be >= 0");
  if (terms < 1) throw domain_error("turanian_ladder_identity: terms must be >= 1");
  if (!(rho > 0.0)) throw domain_error("turanian_ladder_identity: rho must be > 0");
  const double eta = params.eta();
  const double l = params.L() + n;

  const auto f_at = [&](double order) { return detail::regular_at_order(order, eta, rho, policy); };

  PairCheck out;
  const double fl = f_at(l);
  out.lhs = fl * fl - f_at(l - 1.0) * f_at(l + 1.0);

  const auto c_l = ladder_bc(l, eta, rho).second;
  const auto c_l1 = ladder_bc(l + 1.0, eta, rho).second;
  if (c_l == 0.0) throw singular_coefficient_error("turanian_ladder_identity: C vanishes");
  out.rhs = -(c_l1 - c_l) / c_l * fl * fl;

  // ratio_i = prod_{j=1}^{i-1} B_{l+j} / prod_{j=0}^{i} C_{l+j}
  double ratio = 1.0 / (c_l * c_l1);
  for (int i = 1; i <= terms; ++i) {
    const double m = l + i;
    const double fm = f_at(m);
    out.rhs -= ratio * theta_bc(m, eta, rho) * fm * fm;
    const auto bc_next = ladder_bc(m + 1.0, eta, rho);
    if (bc_next.second == 0.0)
      throw singular_coefficient_error("turanian_ladder_identity: C vanishes along the ladder");
    ratio *= ladder_bc(m, eta, rho).first / bc_next.second;
  }
  {
    const double m = l + terms + 1.0;
    const double fm = f_at(m);
    out.truncation_bound = std::fabs(ratio * theta_bc(m, eta, rho) * fm * fm);
  }
  return out;
}

PairCheck wronskian_sum_check(const CoulombParams& params, double rho, int terms,
                              const SeriesPolicy& policy) {
  if (!(rho > 0.0)) throw domain_error("wronskian_sum_check: rho must be > 0");
  if (terms < 1) throw domain_error("wronskian_sum_check: terms must be >= 1");
  const double L = params.L();
  const double eta = params.eta();
  const CoulombParams upper(L + 1.0, eta);
  const double fl = eval_regular(params, rho, policy).value;
  const double flp = eval_regular(upper, rho, policy).value;
  const double dfl = eval_derivative(params, rho, policy).value;
  const double dflp = eval_derivative(upper, rho, policy).value;

  PairCheck out;
  out.lhs = rho * rho * std::sqrt(sq(L + 1.0) + eta * eta) / (L + 1.0) *
            (dflp * fl - dfl * flp);
  out.rhs = 0.0;
  for (int n = 1; n <= terms; ++n) {
    const double fn = eval_regular(CoulombParams(L + n, eta), rho, policy).value;
    out.rhs += (2.0 * L + 2.0 * n + 1.0) * fn * fn;
  }
  const double fnext = eval_regular(CoulombParams(L + terms + 1.0, eta), rho, policy).value;
  out.truncation_bound = (2.0 * L + 2.0 * (terms + 1.0) + 1.0) * fnext * fnext;
  return out;
}

namespace {

std::pair<double, double> positive_normalized_pair(const CoulombParams& params, double rho,
                                                   const SeriesPolicy& policy) {
  if (!(params.eta() <= 0.0)) throw domain_error("log-based inequality: requires eta <= 0");
  if (!(params.L() > -1.0)) throw domain_error("log-based inequality: requires L > -1");
  if (!(rho > 0.0)) throw domain_error("log-based inequality: requires rho > 0");
  const double fl = eval_normalized(params, rho, policy).value;
  const double flp =
      eval_normalized(CoulombParams(params.L() + 1.0, params.eta()), rho, policy).value;
  if (!(fl > 0.0) || !(flp > 0.0))
    throw domain_error("log-based inequality: normalized value not positive; rho is outside "
                       "(0, x_1)");
  return {fl, flp};
}

}  // namespace

double ma_margin(const CoulombParams& params, double rho, const SeriesPolicy& policy) {
  const auto [fl, flp] = positive_normalized_pair(params, rho, policy);
  const double L = params.L();
  return (L + 2.5) * std::log(flp) - (L + 1.5) * std::log(fl);
}

double wilker_lhs(const CoulombParams& params, double rho, const SeriesPolicy& policy) {
  const auto [fl, flp] = positive_normalized_pair(params, rho, policy);
  const double L = params.L();
  return std::pow(flp, 1.0 / (L + 1.5)) + flp / fl;
}

MlCheck mittag_leffler_check(const CoulombParams& params, double rho,
                             const zeros::ZeroTable& table, const SeriesPolicy& policy) {
  if (table.positive.empty() || table.negative.empty())
    throw domain_error("mittag_leffler_check: table must contain zeros of both signs");
  const double L = params.L();
  const double eta = params.eta();
  const double lp1 = L + 1.0;

  const EvalResult fn_l = eval_normalized(params, rho, policy);
  if (std::fabs(fn_l.value) <= policy.rel_tol)
    throw pole_error("mittag_leffler_check: rho is a zero of F_L");
  const EvalResult fn_lp = eval_normalized(CoulombParams(L + 1.0, eta), rho, policy);

  MlCheck out;
  // F_{L+1}/F_L through the normalized ratio; C_{L+1}/C_L has the closed form
  // sqrt((L+1)^2+eta^2) / ((L+1)(2L+3)).
  const double weight = std::sqrt(lp1 * lp1 + eta * eta);
  out.lhs = weight / (lp1 * (2.0 * L + 3.0)) * rho * fn_lp.value / fn_l.value;

  const double x_last = table.positive.back();
  const double y_last_abs = -table.negative.back();
  if (!(x_last > std::fabs(rho) && y_last_abs > std::fabs(rho)))
    throw domain_error("mittag_leffler_check: table too short for the tail model at this rho");

  double acc = 0.0;
  for (auto it = table.positive.rbegin(); it != table.positive.rend(); ++it) {
    const double x = *it;
    if (x == rho) throw pole_error("mittag_leffler_check: rho coincides with a listed zero");
    acc += rho / (x * (x - rho));
  }
  for (auto it = table.negative.rbegin(); it != table.negative.rend(); ++it) {
    const double y = *it;
    if (y == rho) throw pole_error("mittag_leffler_check: rho coincides with a listed zero");
    acc += rho / (y * (y - rho));
  }

  // pi-spaced tail model, integral midpoint per side
  const double pi = std::numbers::pi;
  const double up_x = std::log(x_last / (x_last - rho)) / pi;
  const double lo_x = std::log((x_last + pi) / (x_last + pi - rho)) / pi;
  const double up_y = std::log((y_last_abs + rho) / y_last_abs) / pi;
  const double lo_y = std::log((y_last_abs + pi + rho) / (y_last_abs + pi)) / pi;
  acc += 0.5 * (up_x + lo_x) + 0.5 * (up_y + lo_y);
  // full bracket widths: twice the midpoint half-width, absorbing the
  // pi-spacing model error as well
  out.tail_bound = std::fabs(up_x - lo_x) + std::fabs(up_y - lo_y);

  out.rhs = lp1 / weight * acc;
  return out;
}

std::vector<double> GridSpec::expand() const {
  std::vector<double> out;
  if (!(step > 0.0)) throw domain_error("GridSpec: step must be > 0");
  const double limit = stop + 0.5 * step;
  for (int i = 0;; ++i) {
    const double v = start + step * i;
    if (v > limit) break;
    out.push_back(v);
    if (i > 1000000) throw domain_error("GridSpec: too many grid points");
  }
  return out;
}

Kind kind_from_name(const std::string& name) {
  if (name == "turan1") return Kind::turan1;
  if (name == "turan2") return Kind::turan2;
  if (name == "turan3") return Kind::turan3;
  if (name == "sharp-turan" || name == "sharp_turan") return Kind::sharp_turan;
  if (name == "ma") return Kind::ma;
  if (name == "wilker") return Kind::wilker;
  throw domain_error("unknown inequality name: " + name);
}

const char* kind_name(Kind kind) {
  switch (kind) {
    case Kind::turan1: return "turan1";
    case Kind::turan2: return "turan2";
    case Kind::turan3: return "turan3";
    case Kind::sharp_turan: return "sharp-turan";
    case Kind::ma: return "ma";
    case Kind::wilker: return "wilker";
  }
  return "unknown";
}

InequalityReport scan(Kind kind, const GridSpec& L_grid, const GridSpec& eta_grid,
                      const GridSpec& rho_grid, double tol, const SeriesPolicy& series,
                      const zeros::BracketPolicy& bracket) {
  InequalityReport report;
  report.name = kind_name(kind);
  report.tol = tol;
  const auto Ls = L_grid.expand();
  const auto etas = eta_grid.expand();
  const auto rhos = rho_grid.expand();

  report.samples.resize(Ls.size() * etas.size() * rhos.size());
  // one task per (L, eta) pair; each writes its own sample slice, so the
  // assembled report is deterministic under any thread count
  coulombkit::detail::parallel_for(Ls.size() * etas.size(), [&](std::size_t pair_idx) {
    const double L = Ls[pair_idx / etas.size()];
    const double eta = etas[pair_idx % etas.size()];
    {
      // first-zero computation once per (L, eta); NaN when not available
      double x1 = kNan;
      try {
        const double order = (kind == Kind::turan2 || kind == Kind::turan3) ? L - 1.0 : L;
        x1 = detail::first_zero_at_order(order, eta, bracket, series);
      } catch (const std::exception&) {
      }
      for (std::size_t ri = 0; ri < rhos.size(); ++ri) {
        const double rho = rhos[ri];
        Sample s;
        s.L = L;
        s.eta = eta;
        s.rho = rho;
        s.margin = kNan;
        try {
          const CoulombParams params(L, eta);
          switch (kind) {
            case Kind::turan1: {
              const double f = eval_regular(params, rho, series).value;
              s.margin = turan1(params, rho, series) / (f * f);
              s.branch = turan1_region(params, rho, x1);
              s.in_region = s.branch != 0;
              break;
            }
            case Kind::turan2: {
              const double f = eval_regular(params, rho, series).value;
              s.margin = turan2(params, rho, series) / (f * f);
              s.branch = turan2_region(params, rho, x1);
              s.in_region = s.branch != 0;
              break;
            }
            case Kind::turan3: {
              const double f = eval_regular(params, rho, series).value;
              s.margin = turan3(params, rho, series) / (f * f);
              s.branch = turan3_region(params, rho, x1);
              s.in_region = s.branch != 0;
              break;
            }
            case Kind::sharp_turan: {
              const double f = eval_regular(params, rho, series).value;
              const double bound = sharp_turan_bound(L, eta);
              s.margin = (turan1(params, rho, series) - bound * f * f) / (f * f);
              s.in_region = rho > 0.0;
              s.branch = s.in_region ? 1 : 0;
              break;
            }
            case Kind::ma: {
              s.margin = ma_margin(params, rho, series);
              s.in_region = true;
              s.branch = 1;
              break;
            }
            case Kind::wilker: {
              s.margin = wilker_lhs(params, rho, series) - 2.0;
              s.in_region = true;
              s.branch = 1;
              break;
            }
          }
        } catch (const std::exception&) {
          s.in_region = false;
          s.branch = 0;
        }
        report.samples[pair_idx * rhos.size() + ri] = s;
      }
    }
  });

  report.min_margin_in_region = kNan;
  for (std::size_t i = 0; i < report.samples.size(); ++i) {
    const Sample& s = report.samples[i];
    if (!s.in_region || std::isnan(s.margin)) continue;
    ++report.in_region_count;
    if (std::isnan(report.min_margin_in_region) || s.margin < report.min_margin_in_region)
      report.min_margin_in_region = s.margin;
    if (s.margin < -tol) report.violations.push_back(i);
  }
  return report;
}

std::string InequalityReport::to_json() const {
  nlohmann::json j;
  j["name"] = name;
  j["tol"] = tol;
  j["in_region_count"] = in_region_count;
  j["min_margin_in_region"] = min_margin_in_region;
  j["violations"] = violations;
  nlohmann::json arr = nlohmann::json::array();
  for (const Sample& s : samples) {
    nlohmann::json e;
    e["L"] = s.L;
    e["eta"] = s.eta;
    e["rho"] = s.rho;
    e["margin"] = s.margin;
    e["in_region"] = s.in_region;
    e["branch"] = s.branch;
    arr.push_back(e);
  }
  j["samples"] = arr;
  return j.dump();
}

std::string InequalityReport::to_csv() const {
  std::string out = "L,eta,rho,margin,in_region,branch\n";
  char buf[160];
  for (const Sample& s : samples) {
    std::snprintf(buf, sizeof(buf), "%.17g,%.17g,%.17g,%.17g,%d,%d\n", s.L, s.eta, s.rho, s.margin,
                  s.in_region ? 1 : 0, s.branch);
    out += buf;
  }
  return out;
}

}  // namespace coulombkit::ineq
