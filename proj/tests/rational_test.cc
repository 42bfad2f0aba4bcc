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

#include "metriclass/rational.h"

#include <cstdint>
#include <limits>
#include <numeric>
#include <random>
#include <stdexcept>

#include "gtest/gtest.h"
#include "metriclass/errors.h"
#include "metriclass/value.h"

namespace metriclass {
namespace {

TEST(Rational, CanonicalForm) {
  Rational r(6, -8);
  EXPECT_EQ(r.numerator(), -3);
  EXPECT_EQ(r.denominator(), 4);
  EXPECT_EQ(Rational(0, 7), Rational(0));
  EXPECT_EQ(Rational(0, 7).denominator(), 1);
  EXPECT_THROW(Rational(1, 0), std::domain_error);
}

TEST(Rational, ToString) {
  EXPECT_EQ(Rational(3, 4).to_string(), "3/4");
  EXPECT_EQ(Rational(-2).to_string(), "-2");
  EXPECT_EQ(Rational(0).to_string(), "0");
}

TEST(Rational, Parse) {
  EXPECT_EQ(Rational::parse("1/2"), Rational(1, 2));
  EXPECT_EQ(Rational::parse("-6/4"), Rational(-3, 2));
  EXPECT_EQ(Rational::parse("5"), Rational(5));
  EXPECT_EQ(Rational::parse("0.25"), Rational(1, 4));
  EXPECT_EQ(Rational::parse("-1.5"), Rational(-3, 2));
  EXPECT_THROW(Rational::parse("1/0"), ParseError);
  EXPECT_THROW(Rational::parse("abc"), ParseError);
  EXPECT_THROW(Rational::parse("1."), ParseError);
  EXPECT_THROW(Rational::parse(""), ParseError);
}

TEST(Rational, Arithmetic) {
  EXPECT_EQ(Rational(1, 2) + Rational(1, 3), Rational(5, 6));
  EXPECT_EQ(Rational(1, 2) - Rational(1, 3), Rational(1, 6));
  EXPECT_EQ(Rational(2, 3) * Rational(9, 4), Rational(3, 2));
  EXPECT_EQ(Rational(2, 3) / Rational(4, 9), Rational(3, 2));
  EXPECT_EQ(-Rational(2, 3), Rational(-2, 3));
  EXPECT_THROW(Rational(1) / Rational(0), std::domain_error);
  EXPECT_EQ(pow(Rational(1, 2), 4), Rational(1, 16));
  EXPECT_EQ(pow(Rational(2, 3), -2), Rational(9, 4));
  EXPECT_EQ(pow(Rational(5), 0), Rational(1));
  EXPECT_EQ(abs(Rational(-7, 3)), Rational(7, 3));
}

TEST(Rational, Ordering) {
  EXPECT_LT(Rational(1, 3), Rational(1, 2));
  EXPECT_GT(Rational(-1, 3), Rational(-1, 2));
  EXPECT_EQ(Rational(2, 4) <=> Rational(1, 2), std::strong_ordering::equal);
  const std::int64_t big = std::numeric_limits<std::int64_t>::max();
  // Cross products near the int64 limit compare without overflow.
  EXPECT_GT(Rational(big - 1, big), Rational(big - 2, big - 1));
}

TEST(Rational, OverflowIsReportedNotWrapped) {
  const std::int64_t big = std::numeric_limits<std::int64_t>::max();
  EXPECT_THROW(Rational(big) + Rational(1), std::overflow_error);
  EXPECT_THROW(Rational(big) * Rational(2), std::overflow_error);
  EXPECT_THROW(Rational(1, big) + Rational(1, big - 1), std::overflow_error);
  // Cross reduction keeps in-range products exact.
  EXPECT_EQ(Rational(big, 3) * Rational(3, big), Rational(1));
}

// Field axioms on random small rationals, checked against a fraction
// computed independently with plain 128-bit integers.
TEST(Rational, RandomArithmeticMatchesWideIntegers) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<std::int64_t> num(-1000, 1000);
  std::uniform_int_distribution<std::int64_t> den(1, 1000);
  auto same = [](const Rational& r, __int128 n, __int128 d) {
    return static_cast<__int128>(r.numerator()) * d == n * static_cast<__int128>(r.denominator());
  };
  for (int i = 0; i < 2000; ++i) {
    const std::int64_t a = num(rng), b = den(rng), c = num(rng), d = den(rng);
    const Rational x(a, b), y(c, d);
    EXPECT_TRUE(same(x + y, static_cast<__int128>(a) * d + static_cast<__int128>(c) * b,
                     static_cast<__int128>(b) * d));
    EXPECT_TRUE(same(x - y, static_cast<__int128>(a) * d - static_cast<__int128>(c) * b,
                     static_cast<__int128>(b) * d));
    EXPECT_TRUE(same(x * y, static_cast<__int128>(a) * c, static_cast<__int128>(b) * d));
    EXPECT_EQ(x + y, y + x);
    EXPECT_EQ((x + y) - y, x);
    if (!y.is_zero()) EXPECT_EQ((x / y) * y, x);
    EXPECT_EQ(std::gcd(x.numerator(), x.denominator()), x.numerator() == 0 ? x.denominator() : 1);
    EXPECT_GT(x.denominator(), 0);
  }
}

TEST(Value, ExactEqualityIsExact) {
  EXPECT_TRUE(value_eq(Rational(1, 3), Rational(2, 6)));
  EXPECT_FALSE(value_eq(Rational(1, 3), Rational(333333333, 1000000000)));
}

TEST(Value, ApproxEqualityUsesEpsilon) {
  const Value a = Value::approx(1.0L);
  EXPECT_TRUE(value_eq(a, Value::approx(1.0L + 5e-10L)));
  EXPECT_FALSE(value_eq(a, Value::approx(1.0L + 5e-9L)));
  EXPECT_TRUE(value_eq(a, Rational(1)));
  EXPECT_TRUE(value_eq(Value::approx(1.0L, 1e-3L), Value::approx(1.0005L)));
  EXPECT_EQ(value_compare(a, Value::approx(2.0L)), -1);
  EXPECT_EQ(value_compare(Value::approx(2.0L), a), 1);
  EXPECT_EQ(value_compare(a, Value::approx(1.0L)), 0);
}

TEST(Value, ApproxWithoutToleranceIsAConfigurationError) {
  EXPECT_THROW(value_eq(Value::approx(1.0L, 0), Rational(1)), ConfigurationError);
}

TEST(Value, Display) {
  EXPECT_EQ(Value(Rational(1, 4)).to_display(), "1/4 (0.250)");
  EXPECT_EQ(Value(Rational(2, 5)).to_display(), "2/5 (0.400)");
  EXPECT_EQ(Value(Rational(1)).to_display(), "1 (1.000)");
  EXPECT_EQ(Value::approx(1.0L).to_display(), "1.000");
  EXPECT_EQ(Value(Rational(1, 4)).to_string(), "1/4");
}

TEST(Value, ArithmeticKeepsBackend) {
  const Value exact = Value(Rational(1, 2)) - Value(Rational(1, 3));
  EXPECT_TRUE(exact.is_exact());
  EXPECT_EQ(exact.exact(), Rational(1, 6));
  const Value mixed = Value(Rational(1, 2)) + Value::approx(0.25L);
  EXPECT_FALSE(mixed.is_exact());
  EXPECT_NEAR(static_cast<double>(mixed.real()), 0.75, 1e-15);
  EXPECT_EQ(abs(Value(Rational(-1, 2))).exact(), Rational(1, 2));
  EXPECT_EQ(backend_name(Backend::kExactRational), "exact-rational");
  EXPECT_EQ(backend_name(Backend::kApproxReal), "approx-real");
}

}  // namespace
}  // namespace metriclass
