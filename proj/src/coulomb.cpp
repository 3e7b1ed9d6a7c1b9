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

#include "coulombkit/coulomb.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "coulombkit/detail/gamma.hpp"
#include "coulombkit/series_kernel.hpp"

namespace coulombkit {

namespace {

constexpr double kOrderWindow = 1e-8;       // exclusion window around L = -1, -3/2
constexpr double kDenomWindow = 1e-12;      // recurrence-denominator window
constexpr double kEps = std::numeric_limits<double>::epsilon();

bool is_integer(double x) { return x == std::floor(x); }

EvalResult result_from(const kernels::TermSum& ts, int terms_cap) {
  EvalResult r;
  r.value = ts.value;
  r.terms_used = std::min(ts.terms, terms_cap);
  r.est_abs_error = ts.first_neglected + kEps * ts.terms * ts.max_partial;
  return r;
}

}  // namespace

CoulombParams::CoulombParams(double L, double eta) : L_(L), eta_(eta) {
  if (!std::isfinite(L) || !std::isfinite(eta))
    throw domain_error("CoulombParams: L and eta must be finite");
  if (L <= -1.5 + kOrderWindow)
    throw domain_error("CoulombParams: require L > -3/2 (got L=" + std::to_string(L) + ")");
  if (eta != 0.0 && std::fabs(L + 1.0) < kOrderWindow)
    throw domain_error("CoulombParams: L = -1 excluded for eta != 0");
}

void SeriesPolicy::validate() const {
  if (!(rel_tol > 0.0)) throw domain_error("SeriesPolicy: rel_tol must be > 0");
  if (max_terms < 10) throw domain_error("SeriesPolicy: max_terms must be >= 10");
  if (!(rho_max > 0.0)) throw domain_error("SeriesPolicy: rho_max must be > 0");
}

namespace detail {

std::vector<dd> coefficient_table(const CoulombParams& params, int n_max) {
  using namespace ddops;
  if (n_max < 0) throw domain_error("coefficient_table: n_max must be >= 0");
  const double L = params.L();
  const double eta = params.eta();
  std::vector<dd> a;
  a.reserve(static_cast<std::size_t>(n_max) + 1);
  a.push_back(from(1.0));
  if (n_max == 0) return a;
  // a_1 = eta/(L+1); at the (eta = 0, L = -1) limit point the value is 0.
  if (std::fabs(L + 1.0) < kOrderWindow) {
    a.push_back(from(0.0));
  } else {
    a.push_back(div(from(eta), from(L + 1.0)));
  }
  const dd two_L_plus_1 = two_sum(2.0 * L, 1.0);
  const double two_eta = 2.0 * eta;
  for (int n = 2; n <= n_max; ++n) {
    const dd shifted = add(two_L_plus_1, static_cast<double>(n));  // n + 2L + 1
    if (std::fabs(to_double(shifted)) < kDenomWindow)
      throw domain_error("series coefficients: n + 2L + 1 vanishes at n=" + std::to_string(n));
    const dd denom = mul(shifted, static_cast<double>(n));
    const dd num = sub(mul(a[static_cast<std::size_t>(n) - 1], two_eta),
                       a[static_cast<std::size_t>(n) - 2]);
    a.push_back(div(num, denom));
  }
  return a;
}

}  // namespace detail

double normalization_constant(const CoulombParams& params) {
  const double L = params.L();
  const double eta = params.eta();
  const double g2 = 2.0 * L + 2.0;
  if (std::fabs(g2 - std::round(g2)) < kDenomWindow && std::round(g2) <= 0.0)
    throw domain_error("normalization_constant: Gamma(2L+2) pole at L=" + std::to_string(L));

  if (is_integer(L) && L >= 0.0) {
    const int Li = static_cast<int>(L);
    if (eta == 0.0) {
      // 2^L L! / (2L+1)!
      return std::exp(L * std::numbers::ln2 + std::lgamma(L + 1.0) - std::lgamma(2.0 * L + 2.0));
    }
    // 2^L/(2L+1)! * sqrt(2 pi prod_{k=0}^{L}(k^2+eta^2) / (eta (e^{2 pi eta}-1)))
    double log_prod = 0.0;
    for (int k = 0; k <= Li; ++k) log_prod += std::log(k * k + eta * eta);
    const double log_c = L * std::numbers::ln2 - std::lgamma(2.0 * L + 2.0) +
                         0.5 * (std::log(2.0 * std::numbers::pi) + log_prod -
                                detail::log_eta_expm1_two_pi(eta));
    return std::exp(log_c);
  }

  const double log_abs_num = (eta == 0.0) ? std::lgamma(L + 1.0)
                                          : detail::log_abs_gamma(L + 1.0, eta);
  const double log_c = L * std::numbers::ln2 - 0.5 * std::numbers::pi * eta + log_abs_num -
                       std::lgamma(g2);
  // Gamma(2L+2) < 0 exactly when 2L+2 is in (-1, 0), the only negative
  // bucket reachable under L > -3/2.
  const double sign = (g2 < 0.0) ? -1.0 : 1.0;
  return sign * std::exp(log_c);
}

std::vector<double> series_coefficients(const CoulombParams& params, int n_max) {
  const auto table = detail::coefficient_table(params, n_max);
  std::vector<double> out(table.size());
  for (std::size_t i = 0; i < table.size(); ++i) out[i] = ddops::to_double(table[i]);
  return out;
}

EvalResult eval_normalized(const CoulombParams& params, double rho, const SeriesPolicy& policy) {
  EvalResult out;
  eval_normalized_batch(params, std::span<const double>(&rho, 1), policy,
                        std::span<EvalResult>(&out, 1));
  return out;
}

void eval_normalized_batch(const CoulombParams& params, std::span<const double> rho,
                           const SeriesPolicy& policy, std::span<EvalResult> out) {
  policy.validate();
  if (out.size() != rho.size())
    throw domain_error("eval_normalized_batch: output size mismatch");
  for (double r : rho) {
    if (!(std::fabs(r) <= policy.rho_max))
      throw domain_error("eval_normalized: |rho| exceeds rho_max (rho=" + std::to_string(r) + ")");
  }
  const auto coeffs = detail::coefficient_table(params, policy.max_terms);
  std::vector<kernels::TermSum> sums(rho.size());
  kernels::series_sum(coeffs, rho, policy.rel_tol, sums);
  for (std::size_t i = 0; i < rho.size(); ++i) {
    if (!sums[i].converged)
      throw convergence_error("eval_normalized: series did not meet the tail criterion in " +
                              std::to_string(policy.max_terms) + " terms at rho=" +
                              std::to_string(rho[i]));
    out[i] = result_from(sums[i], policy.max_terms);
  }
}

EvalResult eval_normalized_derivative(const CoulombParams& params, double rho,
                                      const SeriesPolicy& policy) {
  const double L = params.L();
  const double eta = params.eta();
  const double lp1 = L + 1.0;
  if (std::fabs(lp1) < kOrderWindow)
    throw domain_error("eval_normalized_derivative: L = -1 not supported");
  const EvalResult fl = eval_normalized(params, rho, policy);
  const EvalResult flp1 = eval_normalized(CoulombParams(L + 1.0, eta), rho, policy);
  const double q = (lp1 * lp1 + eta * eta) / (lp1 * lp1 * (2.0 * L + 3.0));
  EvalResult r;
  r.value = (eta / lp1) * fl.value - q * rho * flp1.value;
  r.terms_used = std::max(fl.terms_used, flp1.terms_used);
  r.est_abs_error = std::fabs(eta / lp1) * fl.est_abs_error +
                    std::fabs(q * rho) * flp1.est_abs_error + 2.0 * kEps * std::fabs(r.value);
  return r;
}

namespace {

void require_power_domain(const CoulombParams& params, double rho, const char* who) {
  if (!is_integer(params.L()) && rho <= 0.0)
    throw domain_error(std::string(who) + ": rho must be > 0 for non-integer L");
}

}  // namespace

EvalResult eval_regular(const CoulombParams& params, double rho, const SeriesPolicy& policy) {
  require_power_domain(params, rho, "eval_regular");
  const EvalResult fn = eval_normalized(params, rho, policy);
  const double c = normalization_constant(params);
  const double p = std::pow(rho, params.L() + 1.0);
  EvalResult r;
  r.value = c * p * fn.value;
  r.terms_used = fn.terms_used;
  r.est_abs_error = std::fabs(c * p) * fn.est_abs_error + 2.0 * kEps * std::fabs(r.value);
  return r;
}

EvalResult eval_derivative(const CoulombParams& params, double rho, const SeriesPolicy& policy) {
  require_power_domain(params, rho, "eval_derivative");
  const double L = params.L();
  if (rho == 0.0 && L < 0.0)
    throw domain_error("eval_derivative: rho = 0 is singular for L < 0");
  const EvalResult fn = eval_normalized(params, rho, policy);
  const EvalResult fnd = eval_normalized_derivative(params, rho, policy);
  const double c = normalization_constant(params);
  const double p = std::pow(rho, L);
  EvalResult r;
  r.value = c * p * ((L + 1.0) * fn.value + rho * fnd.value);
  r.terms_used = std::max(fn.terms_used, fnd.terms_used);
  r.est_abs_error = std::fabs(c * p) * ((std::fabs(L) + 1.0) * fn.est_abs_error +
                                        std::fabs(rho) * fnd.est_abs_error) +
                    2.0 * kEps * std::fabs(r.value);
  return r;
}

std::pair<double, double> recurrence_coefficients(const CoulombParams& params, double rho) {
  const double L = params.L();
  const double eta = params.eta();
  if (rho == 0.0) throw domain_error("recurrence_coefficients: rho must be nonzero");
  if (std::fabs(2.0 * L + 1.0) < kDenomWindow)
    throw domain_error("recurrence_coefficients: L = -1/2 is singular");
  if (eta == 0.0) {
    // the general expressions reduce exactly to rho/(2L+1), which also
    // defines the L -> 0 limit where they become 0/0
    const double v = rho / (2.0 * L + 1.0);
    return {v, v};
  }
  const double d = L * (L + 1.0) / rho + eta;
  const double scale = std::max({1.0, std::fabs(L * (L + 1.0) / rho), std::fabs(eta)});
  if (std::fabs(d) <= kDenomWindow * scale)
    throw singular_coefficient_error("recurrence_coefficients: L(L+1)/rho + eta vanishes");
  const double denom = (2.0 * L + 1.0) * d;
  const double b = L * std::sqrt((L + 1.0) * (L + 1.0) + eta * eta) / denom;
  const double c = (L + 1.0) * std::sqrt(L * L + eta * eta) / denom;
  return {b, c};
}

OdeResidual ode_residual(const CoulombParams& params, double rho, const SeriesPolicy& policy) {
  policy.validate();
  if (!(rho > 0.0)) throw domain_error("ode_residual: rho must be > 0");
  if (!(rho <= policy.rho_max)) throw domain_error("ode_residual: rho exceeds rho_max");
  using namespace ddops;
  const double L = params.L();
  const double eta = params.eta();
  const auto a = detail::coefficient_table(params, policy.max_terms);
  // Coefficients of the term-by-term second derivative of rho^{L+1} Fn:
  // c_n = a_n (n+L+1)(n+L), so that F'' = C rho^{L-1} sum c_n rho^n.
  std::vector<dd> c(a.size());
  for (std::size_t n = 0; n < a.size(); ++n) {
    const dd f1 = add(two_sum(static_cast<double>(n), L), 1.0);  // n + L + 1
    const dd f2 = two_sum(static_cast<double>(n), L);            // n + L
    c[n] = mul(a[n], mul(f1, f2));
  }
  kernels::TermSum s0{}, s2{};
  {
    std::vector<kernels::TermSum> tmp(1);
    kernels::series_sum(a, std::span<const double>(&rho, 1), policy.rel_tol, tmp);
    s0 = tmp[0];
    kernels::series_sum(c, std::span<const double>(&rho, 1), policy.rel_tol, tmp);
    s2 = tmp[0];
  }
  if (!s0.converged || !s2.converged)
    throw convergence_error("ode_residual: series did not converge");
  const double w = rho * rho - 2.0 * eta * rho - L * (L + 1.0);
  const double cnorm = normalization_constant(params);
  const double pref = cnorm * std::pow(rho, L - 1.0);
  OdeResidual r;
  r.residual = pref * (s2.value + w * s0.value);
  r.scale = std::fabs(pref) * std::max(std::fabs(s2.value), std::fabs(w * s0.value));
  return r;
}

double log_derivative(const CoulombParams& params, double rho, const SeriesPolicy& policy) {
  if (!(rho > 0.0)) throw domain_error("log_derivative: rho must be > 0");
  const EvalResult fn = eval_normalized(params, rho, policy);
  if (std::fabs(fn.value) <= policy.rel_tol)
    throw pole_error("log_derivative: rho is too close to a zero of F_L");
  const EvalResult f = eval_regular(params, rho, policy);
  const EvalResult fd = eval_derivative(params, rho, policy);
  return fd.value / f.value;
}

namespace detail {

double derivative_ladder_route(const CoulombParams& params, double rho,
                               const SeriesPolicy& policy) {
  if (!(rho > 0.0)) throw domain_error("derivative_ladder_route: rho must be > 0");
  const double L = params.L();
  const double eta = params.eta();
  const double lp1 = L + 1.0;
  const double fl = eval_regular(params, rho, policy).value;
  const double flp1 = eval_regular(CoulombParams(L + 1.0, eta), rho, policy).value;
  return (lp1 / rho + eta / lp1) * fl - (std::sqrt(lp1 * lp1 + eta * eta) / lp1) * flp1;
}

}  // namespace detail

}  // namespace coulombkit
