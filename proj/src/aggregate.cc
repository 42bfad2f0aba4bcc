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

#include "metriclass/aggregate.h"

#include <cmath>
#include <optional>
#include <stdexcept>

#include "metriclass/errors.h"

namespace metriclass {
namespace {

// Exact k-th root of a non-negative integer, if there is one.
std::optional<std::int64_t> integer_root(std::int64_t x, int k) {
  if (x < 0) return std::nullopt;
  auto guess = static_cast<std::int64_t>(
      std::llround(std::pow(static_cast<long double>(x), 1.0L / k)));
  for (std::int64_t c = std::max<std::int64_t>(0, guess - 1); c <= guess + 1; ++c) {
    __int128 p = 1;
    for (int i = 0; i < k && p <= x; ++i) p *= c;
    if (p == x) return c;
  }
  return std::nullopt;
}

}  // namespace

AggregateSpec AggregateSpec::parse(std::string_view name) {
  AggregateSpec spec;
  if (name == "map" || name == "mean") {
    spec.kind = AggregateKind::kMap;
  } else if (name == "gmap" || name == "gmean") {
    spec.kind = AggregateKind::kGmap;
  } else if (name == "err" || name == "err-mean") {
    spec.kind = AggregateKind::kErrMean;
  } else if (name == "manxcg" || name == "manxcg-mean") {
    spec.kind = AggregateKind::kManxcgMean;
  } else {
    throw ParseError("unknown aggregate '" + std::string(name) + "'");
  }
  return spec;
}

std::string AggregateSpec::name() const {
  switch (kind) {
    case AggregateKind::kMap: return "map";
    case AggregateKind::kGmap: return "gmap";
    case AggregateKind::kErrMean: return "err-mean";
    case AggregateKind::kManxcgMean: return "manxcg-mean";
  }
  return "?";
}

std::string permissibility_warning() {
  return "warning: this is a mean of per-query values of an ordinal-scale "
         "measure; means are not permissible statistics on an ordinal scale "
         "(only order-based statistics are)";
}

AggregateResult aggregate(std::span<const Value> values, const AggregateSpec& spec) {
  if (values.empty()) throw std::invalid_argument("aggregate of an empty list");
  AggregateResult result;
  result.warning = permissibility_warning();
  result.permissibility_flag = spec.permissibility_flag;

  bool all_exact = true;
  long double eps = 0;
  for (const Value& v : values) {
    all_exact = all_exact && v.is_exact();
    eps = std::max(eps, v.epsilon());
  }
  if (eps == 0) eps = kDefaultEpsilon;
  const auto q = static_cast<std::int64_t>(values.size());

  if (spec.kind != AggregateKind::kGmap) {
    if (all_exact) {
      Rational sum;
      for (const Value& v : values) sum += v.exact();
      result.value = sum / Rational(q);
    } else {
      long double sum = 0;
      for (const Value& v : values) sum += v.real();
      result.value = Value::approx(sum / q, eps);
    }
    return result;
  }

  for (const Value& v : values) {
    if (!(v.real() > 0)) {
      throw UndefinedValue("gmap", v.to_string(), "geometric mean needs strictly positive values");
    }
  }
  if (all_exact) {
    try {
      Rational product(1);
      for (const Value& v : values) product *= v.exact();
      auto num = integer_root(product.numerator(), static_cast<int>(q));
      auto den = integer_root(product.denominator(), static_cast<int>(q));
      if (num && den) {
        result.value = Rational(*num, *den);
        return result;
      }
    } catch (const std::overflow_error&) {
      // fall through to the approximate route
    }
  }
  long double log_sum = 0;
  for (const Value& v : values) log_sum += std::log(v.real());
  result.value = Value::approx(std::exp(log_sum / q), eps);
  return result;
}

}  // namespace metriclass
