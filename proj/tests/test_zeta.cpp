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
#include <vector>

#include "doctest.h"
#include "oracles.hpp"

#include "coulombkit/zeta.hpp"

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

TEST_CASE("closed forms for zeta_2 and zeta_3") {
  CHECK(zeta::zeta_closed_form(CoulombParams(0.0, 0.0), 2) == 1.0 / 3.0);
  CHECK(zeta::zeta_closed_form(CoulombParams(0.0, 0.0), 3) == 0.0);
  CHECK(!std::signbit(zeta::zeta_closed_form(CoulombParams(0.0, 0.0), 3)));
  CHECK(zeta::zeta_closed_form(CoulombParams(0.0, -1.0), 3) ==
        doctest::Approx(1.0 / 3.0).epsilon(1e-16));
  CHECK_THROWS_AS(zeta::zeta_closed_form(CoulombParams(0.0, 0.0), 4), domain_error);
  CHECK_THROWS_AS(zeta::zeta_closed_form(CoulombParams(-1.2, 1.0), 2), domain_error);
}

TEST_CASE("zeta tables from the coefficient convolution") {
  const auto t = zeta::zeta_via_coefficients(CoulombParams(0.0, 0.0), 4);
  CHECK(t.at(2) == doctest::Approx(1.0 / 3.0).epsilon(1e-15));
  CHECK(std::fabs(t.at(3)) <= 1e-17);
  CHECK(t.at(4) == doctest::Approx(1.0 / 45.0).epsilon(1e-14));

  const auto tm = zeta::zeta_via_coefficients(CoulombParams(0.0, -1.0), 3);
  CHECK(tm.at(2) == doctest::Approx(2.0 / 3.0).epsilon(1e-15));
  CHECK(tm.at(3) == doctest::Approx(1.0 / 3.0).epsilon(1e-15));

  const auto t1 = zeta::zeta_via_coefficients(CoulombParams(1.0, 0.0), 4);
  CHECK(t1.at(2) == doctest::Approx(0.2).epsilon(1e-15));
  CHECK(std::fabs(t1.at(3)) <= 1e-17);
  CHECK(t1.at(4) == doctest::Approx(1.0 / 175.0).epsilon(1e-14));

  CHECK_THROWS_AS(zeta::zeta_via_coefficients(CoulombParams(0.0, 0.0), 1), domain_error);
}

TEST_CASE("quadratic recurrence agrees with the convolution route") {
  for (double L : {0.0, 1.0, 0.3, 2.5, -0.5}) {
    for (double eta : {0.0, -1.0, -2.0, 1.5}) {
      const CoulombParams p(L, eta);
      const auto qa = zeta::zeta_via_quadratic(p, 10);
      const auto cv = zeta::zeta_via_coefficients(p, 10);
      for (int s = 2; s <= 10; ++s) {
        const double scale = std::max(std::fabs(qa.at(s)), 1e-300);
        CHECK(std::fabs(qa.at(s) - cv.at(s)) / scale <= 1e-13);
      }
    }
  }
  // eta = 0 kills every odd zeta exactly
  const auto t = zeta::zeta_via_quadratic(CoulombParams(0.7, 0.0), 9);
  CHECK(t.at(3) == 0.0);
  CHECK(t.at(5) == 0.0);
  CHECK(t.at(7) == 0.0);
  CHECK(t.at(9) == 0.0);
}

TEST_CASE("continuity smoke test in L") {
  const auto a = zeta::zeta_via_quadratic(CoulombParams(0.5, -1.0), 6);
  const auto b = zeta::zeta_via_quadratic(CoulombParams(0.5 + 1e-7, -1.0), 6);
  for (int s = 2; s <= 6; ++s)
    CHECK(std::fabs(a.at(s) - b.at(s)) <= 1e-5 * std::fabs(a.at(s)));
}

TEST_CASE("zero sums with and without the integral tail") {
  const CoulombParams p(0.0, 0.0);
  const auto big = sinc_table(10000);
  const auto s2 = zeta::zeta_from_zeros(p, 2, big, zeta::Tail::integral_estimate);
  CHECK(std::fabs(s2.value - 1.0 / 3.0) <= 1e-7);

  const auto s4 = zeta::zeta_from_zeros(p, 4, sinc_table(100), zeta::Tail::none);
  CHECK(std::fabs(s4.value - 1.0 / 45.0) <= 1e-8);
  CHECK(std::fabs(s4.value - 1.0 / 45.0) <= s4.tail_bound);

  const auto s3 = zeta::zeta_from_zeros(p, 3, sinc_table(500), zeta::Tail::integral_estimate);
  CHECK(std::fabs(s3.value) <= s3.tail_bound + 1e-16);

  CHECK_THROWS_AS(zeta::zeta_from_zeros(p, 1, big, zeta::Tail::none), domain_error);
  zeros::ZeroTable empty{p, {}, {}, 0.0};
  CHECK_THROWS_AS(zeta::zeta_from_zeros(p, 2, empty, zeta::Tail::none), domain_error);
}

TEST_CASE("Rayleigh function values and recurrence reduction") {
  CHECK(zeta::rayleigh_sigma(0.5, 1) == doctest::Approx(1.0 / 6.0).epsilon(1e-15));
  CHECK(zeta::rayleigh_sigma(0.5, 2) == doctest::Approx(1.0 / 90.0).epsilon(1e-15));
  for (double nu : {0.0, 1.0, 1.5}) {
    CHECK(zeta::rayleigh_sigma(nu, 2) ==
          doctest::Approx(1.0 / (16.0 * (nu + 1.0) * (nu + 1.0) * (nu + 2.0))).epsilon(1e-15));
  }
  CHECK_THROWS_AS(zeta::rayleigh_sigma(-1.0, 1), domain_error);
  CHECK_THROWS_AS(zeta::rayleigh_sigma(0.5, 0), domain_error);

  // at eta = 0 the even-index zetas reduce to Rayleigh sums of order L + 1/2
  for (double L : {0.0, 0.5, 1.3}) {
    const auto t = zeta::zeta_via_quadratic(CoulombParams(L, 0.0), 10);
    for (int q = 1; q <= 5; ++q) {
      const double sigma = zeta::rayleigh_sigma(L + 0.5, q);
      CHECK(t.at(2 * q) == doctest::Approx(2.0 * sigma).epsilon(1e-14));
    }
  }
}

TEST_CASE("generating function check") {
  const auto gf = zeta::generating_function_check(CoulombParams(0.0, 0.0), 1.0, 20);
  const double trig = oracles::f_1(1.0) / oracles::f_0(1.0);
  CHECK(gf.lhs == doctest::Approx(trig).epsilon(1e-13));
  CHECK(gf.lhs == doctest::Approx(0.3579073840656693).epsilon(1e-13));
  CHECK(std::fabs(gf.lhs - gf.rhs) <= 1e-8);

  const auto gfm = zeta::generating_function_check(CoulombParams(0.0, -1.0), 0.5, 24);
  CHECK(std::fabs(gfm.lhs - gfm.rhs) <= 1e-6);

  // rho -> 0 limit of F_{L+1}/(rho F_L) is sqrt((L+1)^2+eta^2)/((L+1)(2L+3))
  const auto tiny = zeta::generating_function_check(CoulombParams(1.0, -1.0), 1e-5, 6);
  CHECK(tiny.lhs == doctest::Approx(std::sqrt(5.0) / 10.0).epsilon(1e-6));

  CHECK_THROWS_AS(zeta::generating_function_check(CoulombParams(0.0, 0.0), 4.0, 10),
                  domain_error);
}

TEST_CASE("generating function truncation bound (rho below half the first zero)") {
  const CoulombParams p(1.0, -1.0);
  const double x1 = zeros::positive_zeros(p, 1).positive.front();
  const double rho = 0.4 * x1;
  const int m_max = 12;
  const auto gf = zeta::generating_function_check(p, rho, m_max);
  const auto t = zeta::zeta_via_quadratic(p, m_max + 1);
  // geometric envelope on the omitted terms, first omitted = zeta_{m_max+1} rho^{m_max-1}
  const double lp1 = p.L() + 1.0;
  const double weight = lp1 / std::sqrt(lp1 * lp1 + p.eta() * p.eta());
  const double bound =
      weight * std::fabs(t.at(m_max + 1)) * std::pow(rho, m_max - 1) / (1.0 - rho / x1);
  CHECK(std::fabs(gf.lhs - gf.rhs) <= 2.0 * bound + 1e-14);
}

TEST_CASE("complete monotonicity probes") {
  // zeta_3/zeta_2 = -eta/((L+1)(L+2)), compared directly and probed
  const auto t = zeta::zeta_via_quadratic(CoulombParams(0.5, -1.0), 4);
  CHECK(t.at(3) / t.at(2) == doctest::Approx(1.0 / (1.5 * 2.5)).epsilon(1e-14));
  CHECK(zeta::cm_probe(zeta::CmFamily::zeta_ratio, -1.0, 3, -0.5, 0.1, 80, 4).pass);

  const auto zero_rep = zeta::cm_probe(zeta::CmFamily::zeta_m, 0.0, 3, -0.5, 0.1, 50, 4);
  CHECK(zero_rep.pass);
  CHECK(zero_rep.identically_zero);

  CHECK(zeta::cm_probe(zeta::CmFamily::zeta_ratio, -1.0, 4, -0.5, 0.25, 43, 4).pass);
  CHECK(zeta::cm_probe(zeta::CmFamily::recurrence_combination, -2.0, 4, -0.9, 0.1, 110, 4).pass);

  // documented counterexample: (2L+3)^3 zeta_4 = (2L+3)/(2L+5) at eta = 0 is
  // increasing, so this family is not completely monotonic
  const auto bad = zeta::cm_probe(zeta::CmFamily::zeta_scaled, 0.0, 4, -0.9, 0.1, 110, 4);
  CHECK(!bad.pass);
  CHECK(bad.first_bad_order == 1);

  CHECK_THROWS_AS(zeta::cm_probe(zeta::CmFamily::zeta_m, 0.5, 2, 0.0, 0.1, 20, 4), domain_error);
  CHECK_THROWS_AS(zeta::cm_probe(zeta::CmFamily::zeta_m, 0.0, 2, 0.0, 0.1, 20, 7), domain_error);

  // Rayleigh specializations: sigma_{2q} and (nu+1)^q sigma_{2q} on a nu-grid
  for (int q : {1, 2, 3}) {
    std::vector<double> plain, weighted;
    const double h = 0.1;
    for (int i = 0; i < 100; ++i) {
      const double nu = -0.45 + h * i;
      const double s = zeta::rayleigh_sigma(nu, q);
      plain.push_back(s);
      weighted.push_back(std::pow(nu + 1.0, q) * s);
    }
    CHECK(zeta::cm_probe_values(plain, h, 4).pass);
    CHECK(zeta::cm_probe_values(weighted, h, 4).pass);
  }
}

TEST_CASE("zeta table serialization") {
  const auto t = zeta::zeta_via_quadratic(CoulombParams(0.0, 0.0), 4);
  const std::string csv = t.to_csv();
  CHECK(csv.find("s,value,route,est_error\n") == 0);
  CHECK(csv.find("quadratic_recurrence") != std::string::npos);
  CHECK_THROWS_AS(t.at(11), domain_error);
  CHECK_THROWS_AS(t.at(1), domain_error);
}
