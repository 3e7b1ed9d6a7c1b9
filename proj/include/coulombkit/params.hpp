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

#ifndef COULOMBKIT_PARAMS_HPP
#define COULOMBKIT_PARAMS_HPP

namespace coulombkit {

/// Order L and Sommerfeld parameter eta.  Construction enforces L > -3/2
/// (with a 1e-8 exclusion window) and L != -1 when eta != 0; arithmetic in
/// those windows is near-singular and meaningless.
class CoulombParams {
public:
  CoulombParams(double L, double eta);

  double L() const { return L_; }
  double eta() const { return eta_; }

private:
  double L_;
  double eta_;
};

/// Truncation policy for the power-series evaluation path.
struct SeriesPolicy {
  double rel_tol = 1e-16;  // tail terms below rel_tol * max |partial sum| are negligible
  int max_terms = 600;
  double rho_max = 25.0;   // largest |rho| accepted for direct series evaluation

  void validate() const;   // throws domain_error on rel_tol <= 0, max_terms < 10, rho_max <= 0
};

struct EvalResult {
  double value = 0.0;
  int terms_used = 0;
  double est_abs_error = 0.0;
};

}  // namespace coulombkit

#endif
