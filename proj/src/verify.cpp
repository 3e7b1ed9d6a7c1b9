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

#include "coulombkit/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <functional>
#include <numbers>
#include <ostream>

#include "coulombkit/coulomb.hpp"
#include "coulombkit/inequalities.hpp"
#include "coulombkit/zeros.hpp"
#include "coulombkit/zeta.hpp"

namespace coulombkit::verify {

namespace {

constexpr double kPi = std::numbers::pi;

std::string fmt(const char* f, ...) {
  char buf[512];
  va_list args;
  va_start(args, f);
  std::vsnprintf(buf, sizeof(buf), f, args);
  va_end(args);
  return std::string(buf);
}

struct Check {
  bool pass = true;
  std::vector<std::string> detail;

  void require(bool ok, std::string line) {
    pass = pass && ok;
    detail.push_back((ok ? "ok   " : "FAIL ") + std::move(line));
  }
  void note(std::string line) { detail.push_back("     " + std::move(line)); }
};

// --- synthetic zero tables from independent closed forms -------------------

// Zeros of Fn_0(0, .) = sin(rho)/rho are exactly n*pi.
zeros::ZeroTable sinc_zero_table(int n) {
  zeros::ZeroTable t{CoulombParams(0.0, 0.0), {}, {}, 0.0};
  for (int k = 1; k <= n; ++k) t.positive.push_back(kPi * k);
  for (int k = 1; k <= n; ++k) t.negative.push_back(-kPi * k);
  return t;
}

// Zeros of F_1(0, .) = sin(rho)/rho - cos(rho): roots of tan x = x,
// bisected on sin x - x cos x over [k pi, (k + 1/2) pi].
double tanx_root(int k) {
  const auto f = [](double x) { return std::sin(x) - x * std::cos(x); };
  double a = kPi * k, b = kPi * (k + 0.5);
  double fa = f(a);
  for (int it = 0; it < 200 && b - a > 1e-15 * b; ++it) {
    const double mid = 0.5 * (a + b);
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

zeros::ZeroTable tanx_zero_table(int n) {
  zeros::ZeroTable t{CoulombParams(1.0, 0.0), {}, {}, 0.0};
  for (int k = 1; k <= n; ++k) t.positive.push_back(tanx_root(k));
  for (int k = 1; k <= n; ++k) t.negative.push_back(-t.positive[static_cast<std::size_t>(k - 1)]);
  return t;
}

// First `count` positive zeros of Fn' (the same zeros as rho F' - (L+1) F),
// bracketed against the zeros of F.
std::vector<double> normalized_derivative_zeros(const CoulombParams& params, int count,
                                                const zeros::BracketPolicy& bracket,
                                                const SeriesPolicy& series) {
  const auto fz = zeros::positive_zeros(params, count + 1, bracket, series);
  const auto g = [&](double r) { return eval_normalized_derivative(params, r, series).value; };
  std::vector<double> out;
  double a = std::min(1e-4, fz.positive.front() / 1000.0);
  double ga = g(a);
  for (int k = 0; k <= count && static_cast<int>(out.size()) < count; ++k) {
    const double b = fz.positive[static_cast<std::size_t>(k)];
    const double gb = g(b);
    if ((gb > 0) != (ga > 0)) {
      double lo = a, hi = b, glo = ga;
      while (hi - lo > bracket.refine_tol) {
        const double mid = 0.5 * (lo + hi);
        const double gm = g(mid);
        if ((gm > 0) == (glo > 0)) {
          lo = mid;
          glo = gm;
        } else {
          hi = mid;
        }
      }
      out.push_back(0.5 * (lo + hi));
    }
    a = b;
    ga = gb;
  }
  return out;
}

// --- criteria ---------------------------------------------------------------

Check criterion_trig_reduction() {
  Check c;
  std::vector<double> rho;
  for (int i = 1; i <= 200; ++i) rho.push_back(0.1 * i);
  SeriesPolicy policy;
  std::vector<EvalResult> f0(rho.size()), f1(rho.size());
  eval_normalized_batch(CoulombParams(0.0, 0.0), rho, policy, f0);
  eval_normalized_batch(CoulombParams(1.0, 0.0), rho, policy, f1);
  double worst0 = 0.0, worst1 = 0.0;
  for (std::size_t i = 0; i < rho.size(); ++i) {
    const double r = rho[i];
    worst0 = std::max(worst0, std::fabs(f0[i].value - std::sin(r) / r));
    worst1 = std::max(worst1, std::fabs(f1[i].value - 3.0 * (std::sin(r) / r - std::cos(r)) / (r * r)));
  }
  c.require(worst0 <= 1e-12, fmt("max |Fn_0(0,rho) - sin(rho)/rho| = %.3e <= 1e-12", worst0));
  c.require(worst1 <= 1e-11, fmt("max |Fn_1(0,rho) - 3(sinc - cos)/rho^2| = %.3e <= 1e-11", worst1));
  return c;
}

Check criterion_zeros() {
  Check c;
  SeriesPolicy series;
  series.rho_max = 34.0;
  zeros::BracketPolicy bracket;
  bracket.max_scan = 33.0;
  const auto t = zeros::positive_zeros(CoulombParams(0.0, 0.0), 10, bracket, series);
  double worst = 0.0;
  for (int n = 1; n <= 10; ++n)
    worst = std::max(worst, std::fabs(t.positive[static_cast<std::size_t>(n - 1)] - n * kPi));
  c.require(worst <= 1e-10, fmt("max |x_{0,0,n} - n pi| (n<=10) = %.3e <= 1e-10", worst));

  const double oracle = tanx_root(1);
  const auto t1 = zeros::positive_zeros(CoulombParams(1.0, 0.0), 1, {}, {});
  c.require(std::fabs(t1.positive.front() - oracle) <= 1e-8,
            fmt("x_{1,0,1} = %.10f vs tan x = x bisection %.10f (diff %.2e <= 1e-8)",
                t1.positive.front(), oracle, std::fabs(t1.positive.front() - oracle)));
  return c;
}

Check criterion_zeta_routes() {
  Check c;
  const CoulombParams p00(0.0, 0.0);
  const auto conv = zeta::zeta_via_coefficients(p00, 4);
  const auto quad = zeta::zeta_via_quadratic(p00, 4);
  c.require(std::fabs(conv.at(2) - 1.0 / 3.0) <= 1e-14 && std::fabs(quad.at(2) - 1.0 / 3.0) <= 1e-14,
            fmt("zeta_2(0,0): conv %.17g quad %.17g vs 1/3", conv.at(2), quad.at(2)));
  c.require(std::fabs(conv.at(4) - 1.0 / 45.0) <= 1e-14 && std::fabs(quad.at(4) - 1.0 / 45.0) <= 1e-14,
            fmt("zeta_4(0,0): conv %.17g quad %.17g vs 1/45", conv.at(4), quad.at(4)));

  const auto table = sinc_zero_table(1000);
  const auto s2 = zeta::zeta_from_zeros(p00, 2, table, zeta::Tail::integral_estimate);
  c.require(std::fabs(s2.value - 1.0 / 3.0) <= 1e-6,
            fmt("zero-sum s=2 (1000 zeros + tail): %.12g vs 1/3 (diff %.2e <= 1e-6)", s2.value,
                std::fabs(s2.value - 1.0 / 3.0)));
  const auto s4 = zeta::zeta_from_zeros(p00, 4, table, zeta::Tail::integral_estimate);
  c.require(std::fabs(s4.value - 1.0 / 45.0) <= 1e-10,
            fmt("zero-sum s=4 (1000 zeros + tail): diff %.2e <= 1e-10",
                std::fabs(s4.value - 1.0 / 45.0)));

  c.require(std::fabs(zeta::rayleigh_sigma(0.5, 1) - 1.0 / 6.0) <= 1e-14,
            fmt("sigma_2(1/2) = %.17g vs 1/6", zeta::rayleigh_sigma(0.5, 1)));
  c.require(std::fabs(zeta::rayleigh_sigma(0.5, 2) - 1.0 / 90.0) <= 1e-14,
            fmt("sigma_4(1/2) = %.17g vs 1/90", zeta::rayleigh_sigma(0.5, 2)));
  return c;
}

Check criterion_sharp_turan() {
  Check c;
  SeriesPolicy series;

  {
    const CoulombParams p(1.0, 0.0);
    const double f = eval_regular(p, 1e-3, series).value;
    const double ratio = ineq::turan1(p, 1e-3, series) / (f * f);
    c.require(std::fabs(ratio - 0.4) <= 1e-5,
              fmt("turan1/F^2 at (1,0,1e-3) = %.8f vs 2/5 (diff %.2e <= 1e-5)", ratio,
                  std::fabs(ratio - 0.4)));
  }

  const double Ls[] = {0.0, 1.0, 2.0, 3.5};
  const double etas[] = {-2.0, -1.0, -0.5, 0.0};
  int violations = 0, tested = 0;
  double worst = 0.0, worst_L = 0.0, worst_eta = 0.0, worst_rho = 0.0;
  for (double L : Ls) {
    for (double eta : etas) {
      // (0,0) is 0/0 in the bound formula; the eta = 0 family limit is
      // 2/(2L+3)
      const double bound = (L == 0.0 && eta == 0.0) ? 2.0 / 3.0 : ineq::sharp_turan_bound(L, eta);
      const CoulombParams p(L, eta);
      for (int i = 1; i <= 120; ++i) {
        const double rho = 0.1 * i;
        const double f = eval_regular(p, rho, series).value;
        const double margin = (ineq::turan1(p, rho, series) - bound * f * f) / (f * f);
        ++tested;
        if (margin < worst) {
          worst = margin;
          worst_L = L;
          worst_eta = eta;
          worst_rho = rho;
        }
        if (margin < -1e-12) ++violations;
      }
    }
  }
  c.require(violations == 0,
            fmt("grid margin >= -1e-12 on %d samples: %d violations, worst %.4g at "
                "(L=%g, eta=%g, rho=%g)",
                tested, violations, worst, worst_L, worst_eta, worst_rho));
  if (violations > 0)
    c.note("the sharp bound with the rho < x_1 restriction removed fails numerically for "
           "eta < 0 once rho crosses the C-ratio pole at rho = (L+1)(L+2)/|eta|");
  return c;
}

Check criterion_ladder_identities() {
  Check c;
  SeriesPolicy series;
  struct Pt {
    double L, eta, rho;
    int n;
  };
  const Pt pts[20] = {
      {1.0, 0.0, 1.0, 0},    {1.0, 0.0, 1.5, 1},   {1.5, 0.0, 0.8, 0},  {2.0, 0.0, 1.2, 0},
      {3.0, 0.0, 1.8, 1},    {1.0, -0.5, 0.9, 0},  {1.5, -0.5, 1.3, 0}, {2.0, -0.5, 1.7, 1},
      {2.5, -0.5, 0.6, 0},   {0.5, -0.5, 0.8, 1},  {1.0, -1.0, 0.7, 0}, {1.5, -1.0, 1.3, 0},
      {2.0, -1.0, 1.1, 1},   {3.0, -1.0, 1.6, 0},  {2.5, -1.0, 0.9, 0}, {1.0, -2.0, 0.5, 0},
      {2.0, -2.0, 1.8, 0},   {1.5, -2.0, 0.7, 1},  {0.5, -1.0, 1.0, 1}, {3.5, -1.5, 1.4, 0},
  };
  double worst_rel = 0.0;
  for (const Pt& pt : pts) {
    const auto pc = ineq::turanian_ladder_identity(CoulombParams(pt.L, pt.eta), pt.rho, pt.n, 40,
                                                   series);
    worst_rel = std::max(worst_rel, std::fabs(pc.lhs - pc.rhs) / std::fabs(pc.lhs));
  }
  c.require(worst_rel <= 1e-8,
            fmt("ladder identity, 20 points, 40 terms: worst rel diff %.3e <= 1e-8", worst_rel));

  double worst_w = 0.0;
  for (const Pt& pt : pts) {
    const auto pc = ineq::wronskian_sum_check(CoulombParams(pt.L, pt.eta), pt.rho, 40, series);
    worst_w = std::max(worst_w, std::fabs(pc.lhs - pc.rhs) / std::fabs(pc.lhs));
  }
  c.require(worst_w <= 1e-8,
            fmt("Wronskian sum identity, 20 points, 40 terms: worst rel diff %.3e <= 1e-8",
                worst_w));

  // Theta-sign sweep over L in [0,5], eta in [-3,0], rho in (0,10], i in 1..20
  int viol = 0, tested = 0, skipped = 0;
  double worst_theta = -1.0;
  double wL = 0, weta = 0, wrho = 0;
  int wi = 0;
  for (double L = 0.0; L <= 5.0; L += 0.5) {
    for (double eta = -3.0; eta <= 0.0; eta += 0.25) {
      for (double rho = 0.5; rho <= 10.0; rho += 0.5) {
        for (int i = 1; i <= 20; ++i) {
          const double m = L + i;
          bool near_pole = false;
          for (double ord : {m - 1.0, m, m + 1.0}) {
            const double d = ord * (ord + 1.0) / rho + eta;
            if (std::fabs(d) < 1e-8 * std::max(1.0, ord * (ord + 1.0) / rho)) near_pole = true;
          }
          if (near_pole) {
            ++skipped;
            continue;
          }
          const double th = ineq::theta_bc(m, eta, rho);
          ++tested;
          if (th > worst_theta) {
            worst_theta = th;
            wL = L;
            weta = eta;
            wrho = rho;
            wi = i;
          }
          if (th > 1e-14) ++viol;
        }
      }
    }
  }
  c.require(viol == 0,
            fmt("Theta(B_{L+i-1} C_{L+i}) <= 1e-14: %d violations of %d (skipped %d near poles), "
                "worst %.4g at (L=%g, eta=%g, rho=%g, i=%d)",
                viol, tested, skipped, worst_theta, wL, weta, wrho, wi));
  if (viol > 0)
    c.note("the Theta-sign inequality fails for eta < 0 wherever the two denominator factors "
           "differ in sign, e.g. Theta(B_1 C_2) > 0 for L=0, i=1, 0 < rho < 2/|eta|");
  return c;
}

Check criterion_ml_and_gf() {
  Check c;
  SeriesPolicy series;
  const auto t0 = sinc_zero_table(200);
  const auto t1 = tanx_zero_table(200);
  double worst_diff = 0.0, worst_excess = -1.0;
  const double rhos[] = {0.4, 0.9, 1.3, 1.9, 2.5};
  for (int which = 0; which < 2; ++which) {
    const CoulombParams p(which == 0 ? 0.0 : 1.0, 0.0);
    const auto& table = which == 0 ? t0 : t1;
    for (double rho : rhos) {
      const auto ml = ineq::mittag_leffler_check(p, rho, table, series);
      const double diff = std::fabs(ml.lhs - ml.rhs);
      worst_diff = std::max(worst_diff, diff);
      worst_excess = std::max(worst_excess, diff - ml.tail_bound);
    }
  }
  c.require(worst_excess <= 0.0 && worst_diff <= 1e-5,
            fmt("Mittag-Leffler (10 points, 200 zeros/sign): worst |lhs-rhs| %.3e <= 1e-5, "
                "within reported tail bound (max excess %.3e)",
                worst_diff, worst_excess));

  struct GfPt {
    double L, eta, rho;
  };
  const GfPt pts[5] = {{0, 0, 1.0}, {1, 0, 1.2}, {0, -1, 0.6}, {2, -0.5, 1.5}, {1, 1, 1.5}};
  double worst_gf = 0.0;
  for (const GfPt& pt : pts) {
    const auto gf = zeta::generating_function_check(CoulombParams(pt.L, pt.eta), pt.rho, 30,
                                                    series, {});
    worst_gf = std::max(worst_gf, std::fabs(gf.lhs - gf.rhs));
  }
  c.require(worst_gf <= 1e-6,
            fmt("generating function (5 points, m_max=30): worst |lhs-rhs| %.3e <= 1e-6",
                worst_gf));
  return c;
}

Check criterion_ma_wilker() {
  Check c;
  SeriesPolicy series;
  double worst_ma = 1.0, worst_wil = 1.0;
  for (double L : {0.0, 0.5, 1.0, 2.0}) {
    for (double eta : {-2.0, -1.0, 0.0}) {
      const CoulombParams p(L, eta);
      const double x1 = zeros::positive_zeros(p, 1, {}, series).positive.front();
      for (int j = 1; j <= 50; ++j) {
        const double rho = x1 * j / 51.0;
        worst_ma = std::min(worst_ma, ineq::ma_margin(p, rho, series));
        worst_wil = std::min(worst_wil, ineq::wilker_lhs(p, rho, series) - 2.0);
      }
    }
  }
  c.require(worst_ma >= -1e-12, fmt("MA margin >= -1e-12 (worst %.3e)", worst_ma));
  c.require(worst_wil >= -1e-12, fmt("Wilker lhs - 2 >= -1e-12 (worst %.3e)", worst_wil));
  return c;
}

Check criterion_cm() {
  Check c;
  using zeta::CmFamily;
  const CmFamily fams[] = {CmFamily::zeta_m, CmFamily::zeta_ratio, CmFamily::zeta_scaled,
                           CmFamily::recurrence_combination};
  const char* fam_names[] = {"zeta_m", "zeta_m/zeta_2", "(2L+3)^{m-1} zeta_m",
                             "(m+2L+3) zeta_{m+2} + 2 eta zeta_{m+1}/(L+1)"};
  int failures = 0;
  for (int fi = 0; fi < 4; ++fi) {
    for (double eta : {0.0, -1.0, -2.0}) {
      for (int m = 2; m <= 6; ++m) {
        const auto rep = zeta::cm_probe(fams[fi], eta, m, -0.9, 0.1, 110, 4);
        if (!rep.pass) {
          ++failures;
          c.require(false, fmt("%s, m=%d, eta=%g: sign violation at difference order %d "
                               "(grid index %d, worst ratio %.3g)",
                               fam_names[fi], m, eta, rep.first_bad_order, rep.first_bad_index,
                               rep.worst_ratio));
        }
      }
    }
  }
  c.require(failures == 0, fmt("cm_probe through order 4 for 4 families x m=2..6 x eta in "
                               "{0,-1,-2}: %d failing probes of 60",
                               failures));
  if (failures > 0)
    c.note("(2L+3)^{m-1} zeta_m is not completely monotonic for even m >= 4 at eta = 0: "
           "(2L+3)^3 zeta_4 = (2L+3)/(2L+5) is strictly increasing");
  return c;
}

Check criterion_interlacing() {
  Check c;
  SeriesPolicy series;
  series.rho_max = 40.0;
  zeros::BracketPolicy bracket;
  bracket.max_scan = 31.0;
  struct Pair {
    double L, eta;
  };
  for (const Pair pr : {Pair{0, 0}, Pair{1, 0}, Pair{0.5, -1}, Pair{2, -2}, Pair{1, 1}}) {
    const CoulombParams p(pr.L, pr.eta);
    const auto fz = zeros::positive_zeros(p, 6, bracket, series);
    const auto dz = zeros::derivative_zeros(p, 6, bracket, series);
    const auto r1 = zeros::check_interlacing(fz.positive, dz);
    c.require(r1.interlaced, fmt("(L=%g, eta=%g): F vs F' zeros interlace", pr.L, pr.eta));
    const auto sz = normalized_derivative_zeros(p, 6, bracket, series);
    const auto r2 = zeros::check_interlacing(fz.positive, sz);
    c.require(r2.interlaced,
              fmt("(L=%g, eta=%g): F vs (rho F' - (L+1) F) zeros interlace", pr.L, pr.eta));
  }
  return c;
}

Check criterion_invariants() {
  Check c;
  SeriesPolicy series;

  {  // parity of coefficients and of the normalized function
    bool coeff_ok = true;
    double worst = 0.0;
    for (double L : {0.0, 0.7, 2.0}) {
      for (double eta : {0.5, 1.5, 2.5}) {
        const auto ap = series_coefficients(CoulombParams(L, eta), 40);
        const auto am = series_coefficients(CoulombParams(L, -eta), 40);
        for (std::size_t n = 0; n < ap.size(); ++n) {
          const double flip = (n % 2 == 0) ? am[n] : -am[n];
          if (flip != ap[n]) coeff_ok = false;
        }
        for (double rho : {0.5, 2.0, 7.5}) {
          const double a = eval_normalized(CoulombParams(L, eta), -rho, series).value;
          const double b = eval_normalized(CoulombParams(L, -eta), rho, series).value;
          worst = std::max(worst, std::fabs(a - b));
        }
      }
    }
    c.require(coeff_ok, "coefficient parity a_{L,n}(-eta) = (-1)^n a_{L,n}(eta) exact");
    c.require(worst <= 1e-13, fmt("Fn_L(eta,-rho) = Fn_L(-eta,rho): worst diff %.3e", worst));
  }

  {  // three-term recurrence residual
    double worst = 0.0;
    int tested = 0;
    for (double L : {0.3, 1.0, 2.5}) {
      for (double eta : {-1.5, 0.0, 1.0}) {
        const CoulombParams p(L, eta);
        for (double rho : {0.5, 0.9, 2.2, 4.1, 7.3}) {
          const double d = L * (L + 1.0) / rho + eta;
          if (std::fabs(d) < 0.05 * std::max(1.0, L * (L + 1.0) / rho)) continue;
          const auto [b, cc] = recurrence_coefficients(p, rho);
          const double fl = eval_regular(p, rho, series).value;
          const double flp = eval_regular(CoulombParams(L + 1.0, eta), rho, series).value;
          const double flm = ineq::detail::regular_at_order(L - 1.0, eta, rho, series);
          const double scale = std::max({std::fabs(fl), std::fabs(flp), std::fabs(flm)});
          worst = std::max(worst, std::fabs(fl - b * flp - cc * flm) / scale);
          ++tested;
        }
      }
    }
    c.require(worst <= 1e-10, fmt("three-term recurrence: worst scaled residual %.3e on %d "
                                  "points <= 1e-10",
                                  worst, tested));
  }

  {  // ODE residual
    double worst = 0.0;
    for (double L : {0.0, 0.5, 1.0, 3.0}) {
      for (double eta : {-2.0, 0.0, 1.5}) {
        const CoulombParams p(L, eta);
        for (double rho : {0.3, 1.0, 3.7, 9.2, 18.0}) {
          const auto r = ode_residual(p, rho, series);
          worst = std::max(worst, std::fabs(r.residual) / r.scale);
        }
      }
    }
    c.require(worst <= 1e-10, fmt("ODE residual <= 1e-10 x max summand (worst %.3e)", worst));
  }

  {  // derivative route agreement
    double worst = 0.0;
    for (double L : {0.0, 0.5, 1.0, 2.5}) {
      for (double eta : {-1.0, 0.0, 2.0}) {
        const CoulombParams p(L, eta);
        for (double rho : {0.4, 1.3, 3.1, 8.8}) {
          const double d1 = eval_derivative(p, rho, series).value;
          const double d2 = detail::derivative_ladder_route(p, rho, series);
          const double fl = eval_regular(p, rho, series).value;
          const double flp = eval_regular(CoulombParams(L + 1.0, eta), rho, series).value;
          const double lp1 = L + 1.0;
          const double scale = std::fabs(d1) + std::fabs((lp1 / rho + eta / lp1) * fl) +
                               std::fabs(std::sqrt(lp1 * lp1 + eta * eta) / lp1 * flp);
          worst = std::max(worst, std::fabs(d1 - d2) / scale);
        }
      }
    }
    c.require(worst <= 1e-10, fmt("dual-route derivative agreement: worst %.3e <= 1e-10", worst));
  }

  {  // Hadamard product convergence at (0,0), rho = pi/2
    const CoulombParams p(0.0, 0.0);
    const double rho = kPi / 2.0;
    const double ref = eval_normalized(p, rho, series).value;
    double prev = 1e300;
    bool monotone = true;
    for (int n : {8, 16, 32, 64, 128, 256, 512}) {
      const double err = std::fabs(zeros::hadamard_eval(p, rho, sinc_zero_table(n)) - ref);
      if (err > prev + 1e-14) monotone = false;
      prev = err;
    }
    c.require(monotone, "Hadamard product error non-increasing in table size");
    c.require(prev <= 1e-3, fmt("Hadamard product with 512 zeros/sign: |err| %.3e <= 1e-3", prev));
  }
  return c;
}

struct Spec {
  int id;
  const char* name;
  double budget_s;
  std::function<Check()> fn;
};

const Spec& criterion_spec(int id) {
  static const std::vector<Spec> specs = {
      {1, "trig-reduction", 1.0, criterion_trig_reduction},
      {2, "zeros", 1.0, criterion_zeros},
      {3, "zeta-routes", 5.0, criterion_zeta_routes},
      {4, "sharp-turan", 10.0, criterion_sharp_turan},
      {5, "ladder-identities", 5.0, criterion_ladder_identities},
      {6, "mittag-leffler-gf", 10.0, criterion_ml_and_gf},
      {7, "ma-wilker", 5.0, criterion_ma_wilker},
      {8, "complete-monotonicity", 10.0, criterion_cm},
      {9, "interlacing", 5.0, criterion_interlacing},
      {10, "invariant-suite", 10.0, criterion_invariants},
  };
  if (id < 1 || id > criterion_count) throw domain_error("verify: criterion id out of range");
  return specs[static_cast<std::size_t>(id - 1)];
}

}  // namespace

CriterionResult run_criterion(int id) {
  const Spec& spec = criterion_spec(id);
  CriterionResult result;
  result.id = spec.id;
  result.name = spec.name;
  result.budget_s = spec.budget_s;
  const auto start = std::chrono::steady_clock::now();
  Check c = spec.fn();
  result.elapsed_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (result.elapsed_s >= spec.budget_s) {
    c.pass = false;
    c.detail.push_back(fmt("FAIL runtime %.2fs exceeds the %.0fs budget", result.elapsed_s,
                           spec.budget_s));
  }
  result.pass = c.pass;
  result.detail = std::move(c.detail);
  return result;
}

int run(std::ostream& out, const std::vector<int>& ids, bool print_detail) {
  std::vector<int> todo = ids;
  if (todo.empty())
    for (int i = 1; i <= criterion_count; ++i) todo.push_back(i);
  int failures = 0;
  for (int id : todo) {
    const CriterionResult r = run_criterion(id);
    out << fmt("[%2d] %s  %-22s (%.2fs / %.0fs budget)", r.id, r.pass ? "PASS" : "FAIL",
               r.name.c_str(), r.elapsed_s, r.budget_s)
        << "\n";
    if (print_detail)
      for (const std::string& line : r.detail) out << "      " << line << "\n";
    if (!r.pass) ++failures;
  }
  return failures;
}

}  // namespace coulombkit::verify
