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

#include "metriclass/value.h"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "metriclass/errors.h"

namespace metriclass {
namespace {

std::string fixed3(long double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.3Lf", x);
  std::string s = buf;
  if (s == "-0.000") s = "0.000";
  return s;
}

long double shared_epsilon(const Value& a, const Value& b) {
  long double eps = std::max(a.epsilon(), b.epsilon());
  if (eps <= 0) {
    throw ConfigurationError(
        "approximate value compared without a declared epsilon");
  }
  return eps;
}

}  // namespace

std::string backend_name(Backend backend) {
  return backend == Backend::kExactRational ? "exact-rational" : "approx-real";
}

long double Value::real() const {
  if (is_exact()) return exact().to_long_double();
  return std::get<Approx>(repr_).x;
}

long double Value::epsilon() const {
  if (is_exact()) return 0;
  return std::get<Approx>(repr_).epsilon;
}

std::string Value::to_string() const {
  if (is_exact()) return exact().to_string();
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17Lg", real());
  return buf;
}

std::string Value::to_display() const {
  if (is_exact()) return exact().to_string() + " (" + fixed3(real()) + ")";
  return fixed3(real());
}

bool operator==(const Value& a, const Value& b) {
  if (a.is_exact() != b.is_exact()) return false;
  if (a.is_exact()) return a.exact() == b.exact();
  return a.real() == b.real() && a.epsilon() == b.epsilon();
}

bool value_eq(const Value& a, const Value& b) {
  if (a.is_exact() && b.is_exact()) return a.exact() == b.exact();
  long double eps = shared_epsilon(a, b);
  return std::fabs(a.real() - b.real()) <= eps;
}

int value_compare(const Value& a, const Value& b) {
  if (a.is_exact() && b.is_exact()) {
    auto c = a.exact() <=> b.exact();
    return c < 0 ? -1 : (c > 0 ? 1 : 0);
  }
  if (value_eq(a, b)) return 0;
  return a.real() < b.real() ? -1 : 1;
}

Value operator+(const Value& a, const Value& b) {
  if (a.is_exact() && b.is_exact()) return Value(a.exact() + b.exact());
  return Value::approx(a.real() + b.real(), std::max(a.epsilon(), b.epsilon()));
}

Value operator-(const Value& a, const Value& b) {
  if (a.is_exact() && b.is_exact()) return Value(a.exact() - b.exact());
  return Value::approx(a.real() - b.real(), std::max(a.epsilon(), b.epsilon()));
}

Value abs(const Value& v) {
  if (v.is_exact()) return Value(abs(v.exact()));
  return Value::approx(std::fabs(v.real()), v.epsilon());
}

}  // namespace metriclass
