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

#include <cstdio>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "coulombkit/coulomb.hpp"
#include "coulombkit/inequalities.hpp"
#include "coulombkit/series_kernel.hpp"
#include "coulombkit/verify.hpp"
#include "coulombkit/zeros.hpp"
#include "coulombkit/zeta.hpp"

namespace {

// exit codes: 0 ok, 1 verification failure, 2 usage, 3 domain error
constexpr int kExitVerifyFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitDomain = 3;

std::string g17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

coulombkit::ineq::GridSpec parse_grid(const std::string& text) {
  coulombkit::ineq::GridSpec g;
  if (std::sscanf(text.c_str(), "%lf:%lf:%lf", &g.start, &g.stop, &g.step) != 3)
    throw CLI::ValidationError("grid", "expected start:stop:step, got '" + text + "'");
  return g;
}

struct CommonOpts {
  double L = 0.0;
  double eta = 0.0;
  std::string format = "text";
  coulombkit::SeriesPolicy series;
};

void add_common(CLI::App* cmd, CommonOpts& o, bool with_params = true) {
  if (with_params) {
    cmd->add_option("--L", o.L, "order L")->required();
    cmd->add_option("--eta", o.eta, "Sommerfeld parameter")->required();
  }
  cmd->add_option("--format", o.format, "output format")
      ->check(CLI::IsMember({"text", "json", "csv"}))
      ->capture_default_str();
  cmd->add_option("--rel-tol", o.series.rel_tol, "series tail tolerance")->capture_default_str();
  cmd->add_option("--max-terms", o.series.max_terms, "series term cap")->capture_default_str();
  cmd->add_option("--rho-max", o.series.rho_max, "series evaluation window")->capture_default_str();
}

int cmd_eval(const CommonOpts& o, double rho) {
  const coulombkit::CoulombParams params(o.L, o.eta);
  const auto fn = coulombkit::eval_normalized(params, rho, o.series);
  const auto f = coulombkit::eval_regular(params, rho, o.series);
  const auto fd = coulombkit::eval_derivative(params, rho, o.series);
  const auto ode = coulombkit::ode_residual(params, rho, o.series);
  if (o.format == "json") {
    nlohmann::json j;
    j["L"] = o.L;
    j["eta"] = o.eta;
    j["rho"] = rho;
    j["F"] = f.value;
    j["F_normalized"] = fn.value;
    j["F_prime"] = fd.value;
    j["ode_residual"] = ode.residual;
    j["est_abs_error"] = f.est_abs_error;
    j["terms_used"] = fn.terms_used;
    std::cout << j.dump() << "\n";
  } else if (o.format == "csv") {
    std::cout << "quantity,value,est_abs_error\n";
    std::cout << "F," << g17(f.value) << "," << g17(f.est_abs_error) << "\n";
    std::cout << "F_normalized," << g17(fn.value) << "," << g17(fn.est_abs_error) << "\n";
    std::cout << "F_prime," << g17(fd.value) << "," << g17(fd.est_abs_error) << "\n";
    std::cout << "ode_residual," << g17(ode.residual) << "," << g17(ode.scale) << "\n";
  } else {
    std::printf("F_L(eta,rho)     = %.16g   (est err %.3g, %d terms)\n", f.value,
                f.est_abs_error, f.terms_used);
    std::printf("Fn_L(eta,rho)    = %.16g   (est err %.3g)\n", fn.value, fn.est_abs_error);
    std::printf("F_L'(eta,rho)    = %.16g   (est err %.3g)\n", fd.value, fd.est_abs_error);
    std::printf("ODE residual     = %.3g   (scale %.3g)\n", ode.residual, ode.scale);
  }
  return 0;
}

int cmd_zeros(const CommonOpts& o, int count, coulombkit::zeros::BracketPolicy bracket) {
  const coulombkit::CoulombParams params(o.L, o.eta);
  const auto table = coulombkit::zeros::zero_table(params, count, bracket, o.series);
  if (o.format == "json") {
    std::cout << table.to_json() << "\n";
  } else if (o.format == "csv") {
    std::cout << "n,positive,negative\n";
    for (std::size_t i = 0; i < table.positive.size(); ++i)
      std::cout << (i + 1) << "," << g17(table.positive[i]) << "," << g17(table.negative[i])
                << "\n";
  } else {
    for (std::size_t i = 0; i < table.positive.size(); ++i)
      std::printf("x_%-3zu = %.15g    y_%-3zu = %.15g\n", i + 1, table.positive[i], i + 1,
                  table.negative[i]);
    std::printf("accuracy = %.3g\n", table.accuracy);
  }
  return 0;
}

int cmd_zeta(const CommonOpts& o, int m_max, const std::string& route, int zero_count) {
  using namespace coulombkit;
  const CoulombParams params(o.L, o.eta);
  zeta::ZetaTable table{params, m_max, zeta::Route::closed_form, {}, {}};
  if (route == "coefficients") {
    table = zeta::zeta_via_coefficients(params, m_max);
  } else if (route == "quadratic") {
    table = zeta::zeta_via_quadratic(params, m_max);
  } else if (route == "zero-sum") {
    zeros::BracketPolicy bracket;
    bracket.max_scan = o.series.rho_max;
    const auto zt = zeros::zero_table(params, zero_count, bracket, o.series);
    table.route = zeta::Route::zero_sum;
    for (int s = 2; s <= m_max; ++s) {
      const auto zs = zeta::zeta_from_zeros(params, s, zt, zeta::Tail::integral_estimate);
      table.values.push_back(zs.value);
      table.est_error.push_back(zs.tail_bound);
    }
  } else {  // closed
    table.route = zeta::Route::closed_form;
    for (int s = 2; s <= m_max && s <= 3; ++s) {
      table.values.push_back(zeta::zeta_closed_form(params, s));
      table.est_error.push_back(0.0);
    }
    table.m_max = std::min(m_max, 3);
  }
  if (o.format == "json") {
    std::cout << table.to_json() << "\n";
  } else if (o.format == "csv") {
    std::cout << table.to_csv();
  } else {
    for (int s = 2; s <= table.m_max; ++s)
      std::printf("zeta_%-2d = %.16g   [%s, est err %.3g]\n", s, table.at(s),
                  zeta::route_name(table.route), table.est_error[static_cast<std::size_t>(s - 2)]);
  }
  return 0;
}

int cmd_scan(const CommonOpts& o, const std::string& name, const std::string& lg,
             const std::string& eg, const std::string& rg, double tol) {
  using namespace coulombkit::ineq;
  const Kind kind = kind_from_name(name);
  const auto report = coulombkit::ineq::scan(kind, parse_grid(lg), parse_grid(eg), parse_grid(rg),
                                             tol, o.series, {});
  if (o.format == "json") {
    std::cout << report.to_json() << "\n";
  } else if (o.format == "csv") {
    std::cout << report.to_csv();
  } else {
    std::printf("inequality %s: %zu samples, %zu in region, min in-region margin %.6g, "
                "%zu violations\n",
                report.name.c_str(), report.samples.size(), report.in_region_count,
                report.min_margin_in_region, report.violations.size());
    for (std::size_t idx : report.violations) {
      const Sample& s = report.samples[idx];
      std::printf("  violation at L=%g eta=%g rho=%g: margin %.6g (branch %d)\n", s.L, s.eta,
                  s.rho, s.margin, s.branch);
    }
  }
  return report.violations.empty() ? 0 : kExitVerifyFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"coulombkit: regular Coulomb wave functions, their zeros, zeta functions, "
               "and numerical verification of the identities and inequalities they satisfy"};
  app.require_subcommand(1);

  CommonOpts eval_opts;
  double eval_rho = 1.0;
  auto* eval_cmd = app.add_subcommand("eval", "evaluate F, Fn, F' and the ODE residual");
  add_common(eval_cmd, eval_opts);
  eval_cmd->add_option("--rho", eval_rho, "evaluation point")->required();

  CommonOpts zero_opts;
  int zero_count = 5;
  coulombkit::zeros::BracketPolicy zero_bracket;
  auto* zeros_cmd = app.add_subcommand("zeros", "locate real zeros of F_L");
  add_common(zeros_cmd, zero_opts);
  zeros_cmd->add_option("--count", zero_count, "zeros per sign")->capture_default_str();
  zeros_cmd->add_option("--refine-tol", zero_bracket.refine_tol, "bisection bracket width")
      ->capture_default_str();
  auto* max_scan_opt = zeros_cmd->add_option("--max-scan", zero_bracket.max_scan,
                                             "scan window (default: rho-max)");
  zeros_cmd->add_option("--scan-step", zero_bracket.scan_step, "scan step (0 = auto)")
      ->capture_default_str();

  CommonOpts zeta_opts;
  int m_max = 6;
  int zeta_zero_count = 6;
  std::string zeta_route = "quadratic";
  auto* zeta_cmd = app.add_subcommand("zeta", "Coulomb zeta function table");
  add_common(zeta_cmd, zeta_opts);
  zeta_cmd->add_option("--mmax", m_max, "largest exponent s")->capture_default_str();
  zeta_cmd->add_option("--route", zeta_route, "computation route")
      ->check(CLI::IsMember({"closed", "coefficients", "quadratic", "zero-sum"}))
      ->capture_default_str();
  zeta_cmd->add_option("--count", zeta_zero_count, "zeros per sign for --route zero-sum")
      ->capture_default_str();

  CommonOpts scan_opts;
  std::string scan_name, scan_L, scan_eta, scan_rho;
  double scan_tol = 1e-12;
  auto* scan_cmd = app.add_subcommand("scan", "scan an inequality over a parameter grid");
  add_common(scan_cmd, scan_opts, /*with_params=*/false);
  scan_cmd->add_option("--inequality", scan_name, "turan1|turan2|turan3|sharp-turan|ma|wilker")
      ->required();
  scan_cmd->add_option("--L-grid", scan_L, "start:stop:step")->required();
  scan_cmd->add_option("--eta-grid", scan_eta, "start:stop:step")->required();
  scan_cmd->add_option("--rho-grid", scan_rho, "start:stop:step")->required();
  scan_cmd->add_option("--tol", scan_tol, "violation tolerance")->capture_default_str();

  std::vector<int> verify_ids;
  bool verify_quiet = false;
  auto* verify_cmd = app.add_subcommand("verify", "run the full verification suite");
  verify_cmd->add_option("--criterion", verify_ids, "criterion ids (default: all)");
  verify_cmd->add_flag("--summary-only", verify_quiet, "omit per-check detail lines");

  auto* isa_cmd = app.add_subcommand("isa", "report the active series kernel");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (eval_cmd->parsed()) return cmd_eval(eval_opts, eval_rho);
    if (zeros_cmd->parsed()) {
      if (max_scan_opt->count() == 0) zero_bracket.max_scan = zero_opts.series.rho_max;
      return cmd_zeros(zero_opts, zero_count, zero_bracket);
    }
    if (zeta_cmd->parsed()) return cmd_zeta(zeta_opts, m_max, zeta_route, zeta_zero_count);
    if (scan_cmd->parsed())
      return cmd_scan(scan_opts, scan_name, scan_L, scan_eta, scan_rho, scan_tol);
    if (isa_cmd->parsed()) {
      std::cout << coulombkit::kernels::isa_name(coulombkit::kernels::active_isa()) << "\n";
      return 0;
    }
    if (verify_cmd->parsed()) {
      const int failures = coulombkit::verify::run(std::cout, verify_ids, !verify_quiet);
      return failures == 0 ? 0 : kExitVerifyFail;
    }
  } catch (const coulombkit::domain_error& e) {
    std::cerr << "domain error: " << e.what() << "\n";
    return kExitDomain;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDomain;
  }
  return kExitUsage;
}
