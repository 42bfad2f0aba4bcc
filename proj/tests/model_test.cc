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

#include "metriclass/model.h"

#include <memory>
#include <vector>

#include "gtest/gtest.h"
#include "metriclass/errors.h"

namespace metriclass {
namespace {

std::shared_ptr<const GradeScheme> Scheme(std::vector<Rational> gains) {
  return std::make_shared<const GradeScheme>(std::move(gains));
}

TEST(GradeScheme, Validation) {
  EXPECT_THROW(GradeScheme({Rational(0)}), ConstraintViolation);
  EXPECT_THROW(GradeScheme({Rational(1), Rational(2)}), ConstraintViolation);
  EXPECT_THROW(GradeScheme({Rational(0), Rational(2), Rational(2)}), ConstraintViolation);
  EXPECT_NO_THROW(GradeScheme({Rational(0), Rational(1, 3), Rational(5)}));
}

TEST(GradeScheme, Uniform) {
  GradeScheme s = GradeScheme::uniform(5);
  ASSERT_EQ(s.size(), 5);
  EXPECT_EQ(s.top(), 4);
  EXPECT_EQ(s.gain(2), Rational(1, 2));
  EXPECT_EQ(s.gain(4), Rational(1));
  EXPECT_FALSE(s.is_binary());
  EXPECT_TRUE(GradeScheme::binary().is_binary());
  EXPECT_THROW(s.gain(5), ConstraintViolation);
}

TEST(Ranking, RejectsGradesOutsideScheme) {
  EXPECT_THROW(Ranking::binary({0, 2}), ConstraintViolation);
  EXPECT_THROW(Ranking::binary({}), ConstraintViolation);
  EXPECT_THROW(Ranking(nullptr, {0}), ConstraintViolation);
}

TEST(Ranking, Basics) {
  Ranking r = Ranking::binary({0, 1, 0, 1});
  EXPECT_EQ(r.length(), 4);
  EXPECT_EQ(r.at(2), 1);
  EXPECT_EQ(r.relevant_count(), 2);
  EXPECT_EQ(r.to_string(), "⟨0,1,0,1⟩");
  EXPECT_EQ(r.padded_to(6).to_string(), "⟨0,1,0,1,0,0⟩");
  EXPECT_EQ(r.padded_to(2), r);
}

TEST(Universe, Consistency) {
  Ranking r = Ranking::binary({1, 1, 0});
  EXPECT_NO_THROW(check_consistent(r, Universe{3, 2, {}}));
  EXPECT_THROW(check_consistent(r, Universe{3, 1, {}}), ConstraintViolation);
  EXPECT_THROW(check_consistent(r, Universe{2, 2, {}}), ConstraintViolation);
  EXPECT_THROW(check_consistent(r, Universe{3, 4, {}}), ConstraintViolation);
  EXPECT_THROW(check_consistent(r, Universe{3, -1, {}}), ConstraintViolation);
}

TEST(Universe, InventoryConsistency) {
  auto scheme = Scheme({Rational(0), Rational(1), Rational(3)});
  Ranking r(scheme, {2, 1, 2});
  EXPECT_NO_THROW(check_consistent(r, Universe{5, 4, {0, 1, 3}}));
  EXPECT_THROW(check_consistent(r, Universe{5, 4, {0, 2, 1}}), ConstraintViolation);
  EXPECT_THROW(check_consistent(r, Universe{5, 3, {0, 1, 3}}), ConstraintViolation);
  EXPECT_THROW(check_consistent(r, Universe{5, 4, {0, 4}}), ConstraintViolation);
}

TEST(DerivedCounts, HandComputed) {
  auto scheme = Scheme({Rational(0), Rational(1), Rational(3)});
  Ranking r(scheme, {1, 0, 2});
  DerivedCounts d = derived_counts(r, Universe{6, 3, {}});
  EXPECT_EQ(d.isrel, (std::vector<int>{1, 0, 1}));
  EXPECT_EQ(d.count, (std::vector<std::int64_t>{1, 1, 2}));
  EXPECT_EQ(d.cg, (std::vector<Rational>{Rational(1), Rational(1), Rational(4)}));
  // Ideal: the ranked relevant grades best first, padded with grade 1 up to R.
  EXPECT_EQ(d.ideal_gain, (std::vector<Rational>{Rational(3), Rational(1), Rational(1)}));
  EXPECT_EQ(d.cig, (std::vector<Rational>{Rational(3), Rational(4), Rational(5)}));
  EXPECT_EQ(d.ideal_total, Rational(5));
}

TEST(DerivedCounts, IdealFromInventory) {
  auto scheme = Scheme({Rational(0), Rational(1), Rational(3)});
  Ranking r(scheme, {0, 1, 0, 0});
  Universe u{8, 3, {0, 1, 2}};
  EXPECT_EQ(ideal_grades(r, u, 4), (std::vector<Grade>{2, 2, 1, 0}));
  DerivedCounts d = derived_counts(r, u);
  EXPECT_EQ(d.ideal_total, Rational(7));
  EXPECT_EQ(d.cig.back(), Rational(7));
}

TEST(DerivedCounts, IdealTruncatedToRankingLength) {
  Ranking r = Ranking::binary({0, 1});
  EXPECT_EQ(ideal_grades(r, Universe{5, 4, {}}, 2), (std::vector<Grade>{1, 1}));
  DerivedCounts d = derived_counts(r, Universe{5, 4, {}});
  EXPECT_EQ(d.cig.back(), Rational(2));
  EXPECT_EQ(d.ideal_total, Rational(4));
}

TEST(ContingencyTable, Basics) {
  ContingencyTable t{2, 3, 3, 7};
  EXPECT_EQ(t.total(), 15);
  EXPECT_EQ(t.to_string(), "tp=2,fp=3,fn=3,tn=7");
  EXPECT_THROW(check_consistent(ContingencyTable{-1, 0, 0, 0}), ConstraintViolation);
}

TEST(UserContext, Consistency) {
  EXPECT_NO_THROW(check_consistent(UserContext{2, 1, 1, 3}));
  EXPECT_THROW(check_consistent(UserContext{0, 0, 0, 1}), ConstraintViolation);
  EXPECT_THROW(check_consistent(UserContext{1, 2, 0, 3}), ConstraintViolation);
  EXPECT_THROW(check_consistent(UserContext{2, 1, 2, 2}), ConstraintViolation);
  EXPECT_EQ(UserContext({1, 1, 0, 2}).to_string(), "U=1,Rk=1,Ru=0,A=2");
}

TEST(LeveledRanking, CountsAndText) {
  LeveledRanking l{Ranking::binary({1, 0, 0, 1}), {1, 3}, 2};
  LeveledOutput out = l.counts();
  ASSERT_EQ(out.levels.size(), 2u);
  EXPECT_EQ(out.levels[0], (LeveledOutput::Level{1, 0}));
  EXPECT_EQ(out.levels[1], (LeveledOutput::Level{1, 2}));
  EXPECT_EQ(out.need, 2);
  EXPECT_EQ(l.to_string(), "⟨1|0,0,1⟩");
  LeveledRanking bad{Ranking::binary({1, 0}), {1}, 1};
  EXPECT_THROW(bad.counts(), ConstraintViolation);
}

TEST(DomainElement, ToString) {
  EXPECT_EQ(to_string(DomainElement(ContingencyTable{1, 0, 0, 1})), "tp=1,fp=0,fn=0,tn=1");
  EXPECT_EQ(to_string(DomainElement(RankedOutput{Ranking::binary({1, 0}), Universe{2, 1, {}}})),
            "⟨1,0⟩");
}

}  // namespace
}  // namespace metriclass
