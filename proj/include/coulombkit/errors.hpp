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

#ifndef COULOMBKIT_ERRORS_HPP
#define COULOMBKIT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace coulombkit {

/// Input outside the mathematical domain of an operation.
class domain_error : public std::domain_error {
public:
  explicit domain_error(const std::string& what) : std::domain_error(what) {}
};

/// Series truncation criterion not met within the term budget.
class convergence_error : public std::runtime_error {
public:
  explicit convergence_error(const std::string& what) : std::runtime_error(what) {}
};

/// Evaluation point too close to a zero of the denominator function.
class pole_error : public std::runtime_error {
public:
  explicit pole_error(const std::string& what) : std::runtime_error(what) {}
};

/// Scan window exhausted before the requested number of zeros was found.
class insufficient_range_error : public std::runtime_error {
public:
  explicit insufficient_range_error(const std::string& what) : std::runtime_error(what) {}
};

/// A recurrence coefficient hit a pole or a zero along a ladder.
class singular_coefficient_error : public std::runtime_error {
public:
  explicit singular_coefficient_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace coulombkit

#endif
