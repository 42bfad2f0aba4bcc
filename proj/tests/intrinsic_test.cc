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

#include "metriclass/intrinsic.h"

#include <cstdint>
#include <string>
#include <vector>

#include "gtest/gtest.h"
#include "metriclass/errors.h"

namespace metriclass {
namespace {

// A domain whose elements are placeholders carrying the given values.
OrderedDomain FromValues(const std::vector<Value>& values) {
  std::vector<OrderedDomain::Entry> entries;
  for (std::size_t i = 0; i < values.size(); ++i) {
    entries.push_back({ContingencyTable{static_cast<std::int64_t>(i), 0, 0, 0}, values[i], i});
  }
  return OrderedDomain(std::move(entries));
}

std::vector<Value> Rationals(std::initializer_list<std::int64_t> nums, std::int64_t den = 1) {
  std::vector<Value> out;
  for (auto n : nums) out.push_back(Rational(n, den));
  return out;
}

std::size_t PositionOf(const OrderedDomain& ordered, const std::string& text) {
  for (std::size_t i = 0; i < ordered.size(); ++i) {
    if (to_string(ordered.elements()[i].element) == text) return i;
  }
  ADD_FAILURE() << "no element " << text;
  return 0;
}

TEST(OrderedDomain, GroupsEqualValuesAndSortsClasses) {
  OrderedDomain d = FromValues(Rationals({2, 0, 1, 4, 1, 1}));
  ASSERT_EQ(d.classes().size(), 4u);
  EXPECT_EQ(d.classes()[0].value.exact(), Rational(0));
  EXPECT_EQ(d.classes()[1].members, (std::vector<std::size_t>{2, 4, 5}));
  EXPECT_EQ(d.classes()[3].value.exact(), Rational(4));
  EXPECT_EQ(d.class_of(0), 2u);
  EXPECT_TRUE(d.precedes(1, 0));
  EXPECT_TRUE(d.precedes(2, 4));
  EXPECT_FALSE(d.precedes(3, 0));
  EXPECT_EQ(d.backend(), Backend::kExactRational);
  EXPECT_THROW(FromValues({}), std::invalid_argument);
}

TEST(OrderedDomain, ApproxValuesGroupWithinEpsilon) {
  OrderedDomain d = FromValues({Value::approx(1.0L), Value::approx(1.0L + 1e-12L),
                                Value::approx(0.5L)});
  EXPECT_EQ(d.classes().size(), 2u);
  EXPECT_EQ(d.backend(), Backend::kApproxReal);
  EXPECT_EQ(d.epsilon(), kDefaultEpsilon);
}

TEST(InducedOrder, PrecisionAtFourHasFiveClasses) {
  OrderedDomain d = induced_order(Measure::parse("prec@4"), DomainSpec::parse("binary:L=4"));
  ASSERT_EQ(d.classes().size(), 5u);
  std::vector<std::size_t> sizes;
  for (const auto& c : d.classes()) sizes.push_back(c.members.size());
  EXPECT_EQ(sizes, (std::vector<std::size_t>{1, 4, 6, 4, 1}));
}

TEST(InducedOrder, UndefinedPointsAreExcludedAndRecorded) {
  OrderedDomain d = induced_order(Measure::parse("precision"),
                                  DomainSpec::parse("contingency:N=15,R=5"));
  EXPECT_EQ(d.size(), 65u);
  EXPECT_EQ(d.excluded_count(), 1u);
  ASSERT_EQ(d.excluded().size(), 1u);
  EXPECT_EQ(d.excluded()[0].index, 0u);
  EXPECT_EQ(d.excluded()[0].element, "tp=0,fp=0,fn=5,tn=10");
  EXPECT_THROW(induced_order(Measure::parse("ap"), DomainSpec::parse("binary:L=3,R=0")),
               UndefinedValue);
}

TEST(Distance, AbsoluteDifference) {
  const Measure prec = Measure::parse("prec@4");
  const DomainElement x = RankedOutput{Ranking::binary({1, 0, 0, 0}), Universe{4, 4, {}}};
  const DomainElement y = RankedOutput{Ranking::binary({1, 1, 0, 0}), Universe{4, 4, {}}};
  EXPECT_EQ(distance(prec, x, y).exact(), Rational(1, 4));
  EXPECT_EQ(distance(prec, y, x).exact(), Rational(1, 4));
  EXPECT_EQ(distance(prec, x, x).exact(), Rational(0));
}

TEST(IntervalSpan, CountsElementsOfEveryClassBetween) {
  OrderedDomain d = induced_order(Measure::parse("prec@4"), DomainSpec::parse("binary:L=4"));
  const std::size_t one = PositionOf(d, "⟨1,0,0,0⟩");
  const std::size_t two = PositionOf(d, "⟨1,1,0,0⟩");
  EXPECT_EQ(interval_span(d, one, two), 10u);
  EXPECT_EQ(interval_span(d, one, one), 4u);
  EXPECT_EQ(interval_span(d, PositionOf(d, "⟨0,0,0,0⟩"), PositionOf(d, "⟨1,1,1,1⟩")), 16u);
  EXPECT_THROW(interval_span(d, two, one), std::invalid_argument);
}

TEST(Hasse, ChainWeightsAreGapsBetweenClasses) {
  HasseDiagram h = build_hasse(FromValues(Rationals({0, 1, 1, 1, 2, 4})));
  ASSERT_EQ(h.node_count(), 4u);
  ASSERT_EQ(h.edge_count(), 3u);
  EXPECT_EQ(h.edge_weights[0].exact(), Rational(1));
  EXPECT_EQ(h.edge_weights[1].exact(), Rational(1));
  EXPECT_EQ(h.edge_weights[2].exact(), Rational(2));
  EXPECT_EQ(h.node_members[1].size(), 3u);
}

// Shortest paths in the chain reproduce |f(x) - f(y)| for every pair.
TEST(Hasse, ShortestPathEqualsValueDistance) {
  for (const char* id : {"ap", "msr", "rr", "dcg?b=2", "rbp?p=1/3"}) {
    OrderedDomain d = induced_order(Measure::parse(id), DomainSpec::parse("binary:L=5"));
    HasseDiagram h = build_hasse(d);
    for (std::size_t i = 0; i < h.node_count(); ++i) {
      const std::vector<Value> paths = h.shortest_paths_from(i);
      for (std::size_t j = 0; j < h.node_count(); ++j) {
        EXPECT_TRUE(value_eq(paths[j], abs(h.node_values[j] - h.node_values[i]))) << id;
      }
    }
  }
}

TEST(CheckInjective, WitnessIsTheEarliestCollision) {
  OrderedDomain d = induced_order(Measure::parse("prec@4"), DomainSpec::parse("binary:L=4"));
  InjectivityResult r = check_injective(d);
  EXPECT_FALSE(r.injective);
  ASSERT_TRUE(r.witness);
  EXPECT_EQ(to_string(d.elements()[(*r.witness)[0]].element), "⟨1,0,0,0⟩");
  EXPECT_EQ(to_string(d.elements()[(*r.witness)[1]].element), "⟨0,1,0,0⟩");
  EXPECT_TRUE(check_injective(FromValues(Rationals({3, 1, 2}))).injective);
}

TEST(CheckEquispaced, GapTripleAndDegenerateCases) {
  EquispacingResult even = check_equispaced(FromValues(Rationals({0, 2, 1, 3}, 5)));
  EXPECT_TRUE(even.equispaced);
  ASSERT_TRUE(even.gap);
  EXPECT_EQ(even.gap->exact(), Rational(1, 5));
  EquispacingResult uneven = check_equispaced(FromValues(Rationals({0, 1, 3})));
  EXPECT_FALSE(uneven.equispaced);
  ASSERT_TRUE(uneven.triple);
  EXPECT_EQ(*uneven.triple, (std::array<std::size_t, 3>{0, 1, 2}));
  EquispacingResult single = check_equispaced(FromValues(Rationals({7, 7})));
  EXPECT_TRUE(single.degenerate);
}

TEST(Oracle, AgreesWithStructuralChecks) {
  EXPECT_EQ(interval_scale_oracle(FromValues(Rationals({0, 1, 2, 3}))), OracleStatus::kHolds);
  EXPECT_EQ(interval_scale_oracle(FromValues(Rationals({0, 1, 3}))), OracleStatus::kFails);
  EXPECT_EQ(interval_scale_oracle(FromValues(Rationals({0, 1, 1, 2}))), OracleStatus::kFails);
  EXPECT_EQ(interval_scale_oracle(FromValues(Rationals({0, 1, 3})), 1), OracleStatus::kSkipped);
  EXPECT_EQ(oracle_status_name(OracleStatus::kSkipped), "skipped");
}

TEST(PseudometricCheck, HoldsForValueDistances) {
  OrderedDomain d = induced_order(Measure::parse("ap"), DomainSpec::parse("binary:L=4"));
  PseudometricReport r = pseudometric_check(d);
  EXPECT_EQ(r.triples_checked, 16u * 16u * 16u);
  EXPECT_EQ(r.violations, 0u);
  EXPECT_TRUE(r.first_violation.empty());
  PseudometricReport sampled = pseudometric_check(d, 1000);
  EXPECT_EQ(sampled.triples_checked, 1000u);
  EXPECT_EQ(sampled.violations, 0u);
}

TEST(Category, NamesRoundTrip) {
  for (Category c : {Category::kOrdinalPseudometric, Category::kOrdinalMetric,
                     Category::kIntervalMetric}) {
    EXPECT_EQ(parse_category(category_name(c)), c);
  }
  EXPECT_FALSE(parse_category("ratio"));
}

TEST(Classify, PrecisionAtFour) {
  Verdict v = classify(Measure::parse("prec@4"), DomainSpec::parse("binary:L=4"));
  EXPECT_EQ(v.category, Category::kOrdinalPseudometric);
  EXPECT_EQ(v.witness_summary(), "collision ⟨1,0,0,0⟩ = ⟨0,1,0,0⟩ = 1/4");
  EXPECT_EQ(v.class_count, 5u);
  EXPECT_EQ(v.domain_size, 16u);
  EXPECT_EQ(v.oracle, OracleStatus::kFails);
  EXPECT_EQ(v.min_value->exact(), Rational(0));
  EXPECT_EQ(v.max_value->exact(), Rational(1));
}

TEST(Classify, RecallOnFixedRetrievedSizeIsInterval) {
  Verdict v = classify(Measure::parse("recall"), DomainSpec::parse("contingency:N=15,R=5,n=5"));
  EXPECT_EQ(v.category, Category::kIntervalMetric);
  ASSERT_TRUE(v.gap);
  EXPECT_EQ(v.gap->exact(), Rational(1, 5));
  EXPECT_EQ(v.witness_summary(), "gap 1/5");
  EXPECT_EQ(v.oracle, OracleStatus::kHolds);
}

TEST(Classify, ModifiedSlidingRatioHasUnevenGaps) {
  Verdict v = classify(Measure::parse("msr"), DomainSpec::parse("binary:L=4"));
  EXPECT_EQ(v.category, Category::kOrdinalMetric);
  ASSERT_EQ(v.triple.size(), 3u);
  EXPECT_NE(v.triple[1].value.exact() - v.triple[0].value.exact(),
            v.triple[2].value.exact() - v.triple[1].value.exact());
  // With R = 1 the first three classes of msr are 1/4, 1/3, 1/2.
  Verdict one = classify(Measure::parse("msr"), DomainSpec::parse("binary:L=4,R=1,rel=1"));
  ASSERT_EQ(one.triple.size(), 3u);
  EXPECT_EQ(one.triple[0].value.exact(), Rational(1, 4));
  EXPECT_EQ(one.triple[1].value.exact(), Rational(1, 3));
  EXPECT_EQ(one.triple[2].value.exact(), Rational(1, 2));
}

TEST(Classify, SingleClassIsOrdinalMetric) {
  Verdict v = classify(Measure::parse("generality"), DomainSpec::parse("contingency:N=15,R=5,n=5"));
  EXPECT_EQ(v.category, Category::kOrdinalPseudometric);
  Verdict single = classify(Measure::parse("generality"),
                            DomainSpec::parse("contingency:N=15,R=5,n=0"));
  EXPECT_EQ(single.class_count, 1u);
  EXPECT_TRUE(single.degenerate);
  EXPECT_EQ(single.category, Category::kOrdinalMetric);
  EXPECT_EQ(single.witness_summary(), "single class");
}

TEST(Classify, OracleCapSkips) {
  ClassifyOptions options;
  options.oracle_cap = 1;
  Verdict v = classify(Measure::parse("recall"), DomainSpec::parse("contingency:N=15,R=5,n=5"),
                       options);
  EXPECT_EQ(v.oracle, OracleStatus::kSkipped);
  EXPECT_EQ(v.category, Category::kIntervalMetric);
}

// Every witness re-evaluates to its recorded value at its recorded position.
TEST(Classify, WitnessesReEvaluate) {
  const std::vector<std::pair<const char*, const char*>> cases = {
      {"prec@4", "binary:L=4"},        {"msr", "binary:L=4"},
      {"dcg?b=2", "binary:L=4"},       {"f-measure", "contingency:N=15,R=5"},
      {"esl", "leveled:L=4,s=2"},      {"retrieval-recall", "user:A=1..3"},
      {"q-measure", "graded:G=3,L=3"}, {"rnorm", "binary:L=4,R=2,rel=2"}};
  for (const auto& [id, domain_text] : cases) {
    const Measure m = Measure::parse(id);
    const DomainSpec domain = DomainSpec::parse(domain_text);
    const Verdict v = classify(m, domain);
    std::vector<WitnessPoint> points = v.collision;
    points.insert(points.end(), v.triple.begin(), v.triple.end());
    EXPECT_FALSE(points.empty()) << id;
    for (const WitnessPoint& p : points) {
      const DomainElement e = element_at(domain, p.index);
      EXPECT_EQ(to_string(e), p.element) << id;
      EXPECT_TRUE(value_eq(m.evaluate(e), p.value)) << id << " at " << p.element;
    }
  }
}

TEST(Classify, IsDeterministic) {
  const Measure m = Measure::parse("q-measure");
  const DomainSpec domain = DomainSpec::parse("graded:G=3,L=4");
  EXPECT_EQ(classify(m, domain), classify(m, domain));
}

}  // namespace
}  // namespace metriclass
