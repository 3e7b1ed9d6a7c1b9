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

#include <cmath>
#include <numbers>

#include "doctest.h"
#include "oracles.hpp"

#include "coulombkit/inequalities.hpp"

using namespace coulombkit;
namespace num = std::numbers;

namespace {

zeros::ZeroTable sinc_table(int n) {
  zeros::ZeroTable t{CoulombParams(0.0, 0.0), {}, {}, 0.0};
  for (int k = 1; k <= n; ++k) {
    t.positive.push_back(num::pi * k);
    t.negative.push_back(-num::pi * k);
  }
  return t;
}

}  // namespace

TEST_CASE("turan1 against the closed trig form 1 - sin(2 rho)/(2 rho)") {
  for (double r : {0.3, 0.9, num::pi / 2.0, 2.5}) {
    const double expect = 1.0 - std::sin(2.0 * r) / (2.0 * r);
    CHECK(ineq::turan1(CoulombParams(0.0, 0.0), r) == doctest::Approx(expect).epsilon(1e-13));
  }
  CHECK(ineq::turan1(CoulombParams(0.0, 0.0), num::pi / 2.0) ==
        doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("order -1 continuation") {
  for (double r : {0.5, 2.0}) {
    CHECK(ineq::detail::regular_at_order(-1.0, 0.0, r, {}) ==
          doctest::Approx(std::cos(r)).epsilon(1e-14));
    const double f0 = eval_regular(CoulombParams(0.0, -1.0), r).value;
    CHECK(ineq::detail::regular_at_order(-1.0, -1.0, r, {}) == -f0);
  }
}

TEST_CASE("sharp Turan bound values") {
  CHECK(ineq::sharp_turan_bound(1.0, 0.0) == doctest::Approx(0.4).epsilon(1e-15));
  CHECK(ineq::sharp_turan_bound(0.0, -1.0) == 1.0);
  CHECK(ineq::sharp_turan_bound(2.0, 0.0) == doctest::Approx(2.0 / 7.0).epsilon(1e-15));
  for (double L : {1.0, 2.0, 3.5})
    CHECK(ineq::sharp_turan_bound(L, 0.0) ==
          doctest::Approx(2.0 / (2.0 * L + 3.0)).epsilon(1e-15));
  CHECK_THROWS_AS(ineq::sharp_turan_bound(0.0, 0.0), domain_error);
  CHECK_THROWS_AS(ineq::sharp_turan_bound(-0.5, 0.0), domain_error);
  CHECK_THROWS_AS(ineq::sharp_turan_bound(1.0, 0.5), domain_error);

  // rho -> 0 ratio reproduces the bound
  const CoulombParams p(1.0, 0.0);
  const double f = eval_regular(p, 1e-3).value;
  CHECK(ineq::turan1(p, 1e-3) / (f * f) == doctest::Approx(0.4).epsilon(1e-5));
}

TEST_CASE("turan2 and turan3 with their regions") {
  const double expect2 = oracles::f_1(1.0) * oracles::f_1(1.0) - oracles::f_0(1.0) * oracles::f_2(1.0);
  CHECK(ineq::turan2(CoulombParams(1.0, 0.0), 1.0) == doctest::Approx(expect2).epsilon(1e-13));
  CHECK_THROWS_AS(ineq::turan2(CoulombParams(0.0, 1.0), 1.0), domain_error);
  CHECK(ineq::turan2_region(CoulombParams(1.0, 1.0), 1.5, 10.0) == 0);  // L(L+1)/eta = 2 > 1.5
  CHECK(ineq::turan2_region(CoulombParams(1.0, 1.0), 2.5, 10.0) == 1);

  // the weighted Turanian is nonnegative on its stated region
  const CoulombParams p2(1.0, 1.0);
  for (double r : {2.0, 3.0, 4.0}) {
    REQUIRE(ineq::turan2_region(p2, r, 5.814115616) > 0);
    CHECK(ineq::turan2(p2, r) >= 0.0);
  }

  const double expect3 =
      oracles::f_1(0.5) * oracles::f_1(0.5) - oracles::f_0(0.5) * oracles::f_2(0.5);
  CHECK(ineq::turan3(CoulombParams(1.0, 0.0), 0.5) == doctest::Approx(expect3).epsilon(1e-13));
  CHECK_THROWS_AS(ineq::turan3(CoulombParams(1e-8, 0.5), 1.0), domain_error);
  CHECK(ineq::turan3_region(CoulombParams(1.0, 0.0), 0.5, 10.0) == 0);
  CHECK(ineq::turan3_region(CoulombParams(1.0, 3.0), 1.0, 10.0) == 0);  // rho^2 > 0.2
  // The stated turan3 region admits points where 3Delta < 0: the condition
  // rho^2 <= (L^3+1)/(L^2+eta^2) does not imply f >= -1 (that needs
  // rho^2 <= L^3/eta^2).  At (0.5, 3, 0.3): f = -31.4 and 3Delta/F^2 = -3.37,
  // confirmed to 40 digits externally.  The predicate stays a literal
  // transcription; this records the behavior.
  const CoulombParams p3(0.5, 3.0);
  REQUIRE(ineq::turan3_region(p3, 0.3, 10.0) == 1);
  CHECK(ineq::turan3(p3, 0.3) < 0.0);
  const double f3 = eval_regular(p3, 0.3).value;
  CHECK(ineq::turan3(p3, 0.3) / (f3 * f3) == doctest::Approx(-3.372747914).epsilon(1e-8));
}

TEST_CASE("turan1 region branches") {
  CHECK(ineq::turan1_region(CoulombParams(0.0, -1.0), 0.5, 1.0) == 3);
  CHECK(ineq::turan1_region(CoulombParams(0.0, -1.0), 1.5, 1.0) == 0);
  CHECK(ineq::turan1_region(CoulombParams(1.0, 1.0), 0.5, 5.0) == 1);
  CHECK(ineq::turan1_region(CoulombParams(1.0, 1.0), 2.5, 5.0) == 0);  // rho > L(L+1)/eta
  CHECK(ineq::turan1_region(CoulombParams(-1.2, 1.0), 0.1, 5.0) == 2);
}

TEST_CASE("turan1 nonnegative on the repulsive branch samples") {
  // (L, eta) = (1, 1) and (2, 0.5) with rho < min(L(L+1)/eta, x_{L,eta,1})
  for (auto [L, eta, rho_max_region] :
       {std::tuple{1.0, 1.0, 2.0}, std::tuple{2.0, 0.5, 6.0}}) {
    const CoulombParams p(L, eta);
    const double x1 = zeros::positive_zeros(p, 1).positive.front();
    for (int i = 1; i <= 8; ++i) {
      const double rho = std::min(rho_max_region, x1) * i / 9.0;
      REQUIRE(ineq::turan1_region(p, rho, x1) == 1);
      const double f = eval_regular(p, rho).value;
      CHECK(ineq::turan1(p, rho) / (f * f) >= -1e-12);
    }
  }
}

TEST_CASE("ladder identity for the Turanian") {
  const auto pc = ineq::turanian_ladder_identity(CoulombParams(1.0, 0.0), 1.0, 0, 30);
  const double trig = oracles::f_1(1.0) * oracles::f_1(1.0) - oracles::f_0(1.0) * oracles::f_2(1.0);
  CHECK(pc.lhs == doctest::Approx(trig).epsilon(1e-13));
  CHECK(std::fabs(pc.lhs - pc.rhs) <= 1e-10 * std::fabs(pc.lhs));
  CHECK(pc.truncation_bound <= 1e-20);

  const auto pc2 = ineq::turanian_ladder_identity(CoulombParams(1.5, -1.0), 1.3, 0, 40);
  CHECK(std::fabs(pc2.lhs - pc2.rhs) <= 1e-10 * std::fabs(pc2.lhs));

  // a coefficient pole on the ladder: L(L+1)/rho + eta = 0 at m = 1
  CHECK_THROWS_AS(ineq::turanian_ladder_identity(CoulombParams(1.0, -1.0), 2.0, 0, 10),
                  singular_coefficient_error);
}

TEST_CASE("Theta products: nonpositive at eta = 0, sign flip for eta < 0") {
  for (double m : {1.0, 2.0, 5.0}) {
    for (double r : {0.5, 3.0}) {
      const double expect =
          r * r *
          (1.0 / ((2.0 * m + 1.0) * (2.0 * m + 3.0)) - 1.0 / ((2.0 * m - 1.0) * (2.0 * m + 1.0)));
      CHECK(ineq::theta_bc(m, 0.0, r) == doctest::Approx(expect).epsilon(1e-14));
      CHECK(ineq::theta_bc(m, 0.0, r) < 0.0);
    }
  }
  // B_0 = 0 for eta != 0, so Theta(B_0 C_1) = B_1 C_2 > 0 below the poles:
  // the printed sign claim genuinely fails for eta < 0
  const double eta = -0.5, rho = 1.0;
  const double b1c2 = (4.0 + eta * eta) / (5.0 * (2.0 / rho + eta) * (6.0 / rho + eta));
  CHECK(ineq::theta_bc(1.0, eta, rho) == doctest::Approx(b1c2).epsilon(1e-14));
  CHECK(ineq::theta_bc(1.0, eta, rho) > 0.0);
}

TEST_CASE("Wronskian sum identity") {
  const auto pc = ineq::wronskian_sum_check(CoulombParams(0.0, 0.0), 1.0, 40);
  const double trig = 1.0 - std::sin(1.0) * std::sin(1.0);  // rho^2 - sin^2(rho) at rho = 1
  CHECK(pc.lhs == doctest::Approx(trig).epsilon(1e-12));
  CHECK(std::fabs(pc.lhs - pc.rhs) <= 1e-10 * std::fabs(pc.lhs));

  const auto pc2 = ineq::wronskian_sum_check(CoulombParams(1.0, -1.0), 2.0, 40);
  CHECK(std::fabs(pc2.lhs - pc2.rhs) <= 1e-8 * std::fabs(pc2.lhs));

  const auto tiny = ineq::wronskian_sum_check(CoulombParams(0.5, -0.5), 1e-3, 20);
  CHECK(std::fabs(tiny.lhs) <= 1e-9);
  CHECK(std::fabs(tiny.rhs) <= 1e-9);
}

TEST_CASE("Mitrinovic-Adamovic and Wilker margins") {
  CHECK(ineq::ma_margin(CoulombParams(0.0, 0.0), 1.0) ==
        doctest::Approx(0.0052244009556842886).epsilon(1e-12));
  CHECK(ineq::wilker_lhs(CoulombParams(0.0, 0.0), 1.0) ==
        doctest::Approx(2.0083112396807917).epsilon(1e-13));
  CHECK(ineq::wilker_lhs(CoulombParams(1.0, -1.0), 0.5) >= 2.0 - 1e-12);
  CHECK(std::fabs(ineq::ma_margin(CoulombParams(0.0, 0.0), 1e-4)) <= 1e-6);
  CHECK(ineq::wilker_lhs(CoulombParams(0.0, 0.0), 1e-4) == doctest::Approx(2.0).epsilon(1e-7));
  CHECK_THROWS_AS(ineq::ma_margin(CoulombParams(0.0, 0.0), 3.2), domain_error);
  CHECK_THROWS_AS(ineq::ma_margin(CoulombParams(0.0, 1.0), 0.5), domain_error);

  // Wilker follows from MA + AM-GM: no sampled point may pass MA and fail Wilker
  for (double L : {0.0, 0.7, 1.5}) {
    for (double r : {0.2, 0.8, 1.3}) {
      const CoulombParams p(L, -1.0);
      if (ineq::ma_margin(p, r) >= 0.0) CHECK(ineq::wilker_lhs(p, r) >= 2.0 - 1e-12);
    }
  }
}

TEST_CASE("Mittag-Leffler expansion against the zero table") {
  const auto table = sinc_table(200);
  const CoulombParams p(0.0, 0.0);
  const auto ml = ineq::mittag_leffler_check(p, 1.0, table);
  CHECK(ml.lhs == doctest::Approx(0.3579073840656693).epsilon(1e-13));
  CHECK(std::fabs(ml.lhs - ml.rhs) <= ml.tail_bound);
  CHECK(std::fabs(ml.lhs - ml.rhs) <= 1e-5);

  CHECK_THROWS_AS(ineq::mittag_leffler_check(p, num::pi, table), pole_error);

  // rho -> 0: both sides vanish; lhs/rho approaches C_{L+1}/C_L = 1/3
  const auto small = ineq::mittag_leffler_check(p, 1e-6, table);
  CHECK(std::fabs(small.lhs) <= 1e-6);
  CHECK(small.lhs / 1e-6 == doctest::Approx(1.0 / 3.0).epsilon(1e-6));
  CHECK(std::fabs(small.lhs - small.rhs) <= small.tail_bound);
}

TEST_CASE("coefficient-ratio complement: increasing below the pole only") {
  // 1 - C_{L+1}/C_L for eta < 0 increases on (0, pole) but drops across the
  // pole at rho = (L+1)(L+2)/|eta|; the full-range monotonicity claim fails.
  const auto complement = [](double L, double eta, double rho) {
    const double c_l = recurrence_coefficients(CoulombParams(L, eta), rho).second;
    const double c_l1 = recurrence_coefficients(CoulombParams(L + 1.0, eta), rho).second;
    return 1.0 - c_l1 / c_l;
  };
  for (auto [L, eta] : {std::pair{0.0, -1.0}, std::pair{1.0, -0.5}}) {
    const double pole = (L + 1.0) * (L + 2.0) / -eta;
    double prev = complement(L, eta, pole * 0.05);
    for (int i = 1; i <= 9; ++i) {
      const double cur = complement(L, eta, pole * 0.05 + (pole * 0.90) * i / 10.0);
      CHECK(cur >= prev);
      prev = cur;
    }
    CHECK(complement(L, eta, pole * 1.05) < complement(L, eta, pole * 0.95));
  }
  // eta = 0: the complement is constant in rho
  CHECK(complement(1.0, 0.0, 0.5) == doctest::Approx(complement(1.0, 0.0, 7.0)).epsilon(1e-15));
}

TEST_CASE("inequality grid scan report") {
  ineq::GridSpec Lg{0.0, 2.0, 1.0}, eg{-1.0, 0.0, 1.0}, rg{0.5, 3.0, 0.5};
  CHECK(Lg.expand().size() == 3);
  CHECK(rg.expand().size() == 6);
  ineq::GridSpec fine{0.1, 12.0, 0.1};
  CHECK(fine.expand().size() == 120);

  const auto report = ineq::scan(ineq::Kind::turan1, Lg, eg, rg);
  CHECK(report.samples.size() == 3 * 2 * 6);
  CHECK(report.in_region_count > 0);
  // turan1 is nonnegative on its regions: no violations on this grid
  CHECK(report.violations.empty());
  std::size_t in_region = 0;
  for (const auto& s : report.samples)
    if (s.in_region && !std::isnan(s.margin)) {
      ++in_region;
      CHECK(s.margin >= -report.tol);
    }
  CHECK(in_region == report.in_region_count);

  const auto json_text = report.to_json();
  CHECK(json_text.find("\"name\":\"turan1\"") != std::string::npos);
  const auto csv_text = report.to_csv();
  CHECK(csv_text.rfind("L,eta,rho,margin,in_region,branch\n", 0) == 0);

  CHECK(ineq::kind_from_name("sharp-turan") == ineq::Kind::sharp_turan);
  CHECK_THROWS_AS(ineq::kind_from_name("nope"), domain_error);
}

TEST_CASE("scan lists exactly the in-region samples below -tol") {
  // the sharp bound fails for eta < 0 past the first zero, so this grid has
  // genuine violations to record
  const auto report = ineq::scan(ineq::Kind::sharp_turan, ineq::GridSpec{0.0, 0.0, 1.0},
                                 ineq::GridSpec{-1.0, -1.0, 1.0}, ineq::GridSpec{3.0, 8.0, 0.5});
  CHECK(!report.violations.empty());
  std::vector<std::size_t> expect;
  for (std::size_t i = 0; i < report.samples.size(); ++i) {
    const auto& s = report.samples[i];
    if (s.in_region && !std::isnan(s.margin) && s.margin < -report.tol) expect.push_back(i);
  }
  CHECK(report.violations == expect);
}
