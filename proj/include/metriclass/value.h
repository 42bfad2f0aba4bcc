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

#ifndef METRICLASS_VALUE_H_
#define METRICLASS_VALUE_H_

#include <string>
#include <variant>

#include "metriclass/rational.h"

namespace metriclass {

enum class Backend { kExactRational, kApproxReal };

inline constexpr long double kDefaultEpsilon = 1e-9L;

std::string backend_name(Backend backend);

// The value a measure attains on a domain element. Rational-valued formulas
// produce exact values so that equality and equispacing are decided exactly;
// log-bearing formulas produce an approximate real carrying the tolerance used
// for every equality test it takes part in.
class Value {
 public:
  Value() : repr_(Rational(0)) {}
  Value(Rational exact) : repr_(exact) {}  // NOLINT: implicit

  static Value approx(long double x, long double epsilon = kDefaultEpsilon) {
    return Value(Approx{x, epsilon});
  }

  bool is_exact() const { return std::holds_alternative<Rational>(repr_); }
  Backend backend() const {
    return is_exact() ? Backend::kExactRational : Backend::kApproxReal;
  }

  // Precondition: is_exact().
  const Rational& exact() const { return std::get<Rational>(repr_); }

  long double real() const;

  // 0 for exact values.
  long double epsilon() const;

  // "1/4" for exact values, shortest round-trip decimal for approximate ones.
  std::string to_string() const;

  // "1/4 (0.250)" for exact, "1.000" for approximate values.
  std::string to_display() const;

  // Structural identity (same backend, same representation); not the
  // tolerance-aware comparison used by classification, see value_eq.
  friend bool operator==(const Value& a, const Value& b);

 private:
  struct Approx {
    long double x;
    long double epsilon;
  };
  explicit Value(Approx a) : repr_(a) {}

  std::variant<Rational, Approx> repr_;
};

// Exact comparison for two rationals; |a - b| <= epsilon when an approximate
// value is involved (the larger declared epsilon wins). Throws
// ConfigurationError when an approximate operand has no declared epsilon.
bool value_eq(const Value& a, const Value& b);

// -1, 0 or +1 under value_eq semantics for the 0 case.
int value_compare(const Value& a, const Value& b);

inline bool value_less(const Value& a, const Value& b) {
  return value_compare(a, b) < 0;
}

Value operator+(const Value& a, const Value& b);
Value operator-(const Value& a, const Value& b);
Value abs(const Value& v);

}  // namespace metriclass

#endif  // METRICLASS_VALUE_H_
