/*
 * Copyright 2026 The Metriclass Authors.
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef METRICLASS_ERRORS_H_
#define METRICLASS_ERRORS_H_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace metriclass {

// A measure formula hit a zero denominator (or an equivalent gap in its
// definition) on a particular input. Classification excludes such points.
class UndefinedValue : public std::domain_error {
 public:
  UndefinedValue(std::string measure, std::string input, std::string reason)
      : std::domain_error(measure + " is undefined on " + input + ": " +
                          reason),
        measure_(std::move(measure)),
        input_(std::move(input)),
        reason_(std::move(reason)) {}

  const std::string& measure() const { return measure_; }
  const std::string& input() const { return input_; }
  const std::string& reason() const { return reason_; }

 private:
  std::string measure_;
  std::string input_;
  std::string reason_;
};

// An input violates a core-model invariant (e.g. more relevant items in a
// ranking than the universe holds).
class ConstraintViolation : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Invalid or missing measure parameter (p, b, utility weights, cutoff).
class ParameterError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Numeric backends mixed without a declared tolerance, or a similar misuse.
class ConfigurationError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Enumeration refused because the projected domain exceeds the cap.
class DomainTooLarge : public std::length_error {
 public:
  DomainTooLarge(unsigned long long cardinality, unsigned long long cap)
      : std::length_error("domain has " + std::to_string(cardinality) +
                          " elements, cap is " + std::to_string(cap)),
        cardinality_(cardinality) {}

  unsigned long long cardinality() const { return cardinality_; }

 private:
  unsigned long long cardinality_;
};

// Text input (qrels, run, domain spec, measure id) failed to parse.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t line = 0,
             std::size_t column = 0)
      : std::runtime_error(line == 0 ? message
                                     : "line " + std::to_string(line) +
                                           ", column " +
                                           std::to_string(column) + ": " +
                                           message),
        line_(line),
        column_(column) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace metriclass

#endif  // METRICLASS_ERRORS_H_
