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

#include "metriclass/domain.h"

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "gtest/gtest.h"
#include "metriclass/errors.h"

namespace metriclass {
namespace {

std::vector<std::string> Texts(const DomainSpec& spec) {
  std::vector<std::string> out;
  enumerate(spec, [&](const DomainElement& e) { out.push_back(to_string(e)); });
  return out;
}

// Counts length-L grade sequences directly, without any combinatorics.
std::uint64_t BruteForceRankings(int G, int L, std::int64_t R, std::optional<std::int64_t> rel,
                                 const std::vector<std::int64_t>& inventory) {
  std::uint64_t total = 0;
  std::uint64_t codes = 1;
  for (int i = 0; i < L; ++i) codes *= G;
  for (std::uint64_t code = 0; code < codes; ++code) {
    std::vector<std::int64_t> per_grade(G, 0);
    std::uint64_t c = code;
    for (int i = 0; i < L; ++i, c /= G) ++per_grade[c % G];
    const std::int64_t relevant = L - per_grade[0];
    if (relevant > R) continue;
    if (rel && relevant != *rel) continue;
    bool fits = true;
    for (std::size_t g = 0; g < inventory.size(); ++g) fits = fits && per_grade[g + 1] <= inventory[g];
    if (fits) ++total;
  }
  return total;
}

TEST(DomainSpec, ParseAndCanonicalText) {
  EXPECT_EQ(DomainSpec::parse("binary:L=4").to_string(), "binary:L=4");
  EXPECT_EQ(DomainSpec::parse("binary:R=2,L=4,rel=2").to_string(), "binary:L=4,R=2,rel=2");
  EXPECT_EQ(DomainSpec::parse("graded:G=5,L=4").to_string(), "graded:G=5,L=4");
  EXPECT_EQ(DomainSpec::parse("graded:gains=0;1;3,L=2..3").to_string(), "graded:gains=0;1;3,L=2..3");
  EXPECT_EQ(DomainSpec::parse("graded:G=3,L=3,inventory=1;2").to_string(),
            "graded:G=3,L=3,R=3,inventory=1;2");
  EXPECT_EQ(DomainSpec::parse("contingency:N=15,R=5").to_string(), "contingency:N=15,R=5,n=0..15");
  EXPECT_EQ(DomainSpec::parse("user:A=1..3").to_string(), "user:U=1,A=1..3");
  EXPECT_EQ(DomainSpec::parse("leveled:L=4").to_string(), "leveled:L=4,s=1");
}

TEST(DomainSpec, RoundTrip) {
  for (const char* text : {"binary:L=1..6,R=3,N=9", "graded:gains=0;1/2;2,L=3,rel=1",
                           "contingency:N=7,R=0,n=2..4", "user:U=3,A=2", "leveled:L=2..5,s=2"}) {
    const DomainSpec spec = DomainSpec::parse(text);
    EXPECT_EQ(DomainSpec::parse(spec.to_string()), spec) << text;
  }
}

TEST(DomainSpec, RejectsMalformedText) {
  for (const char* text : {"ternary:L=3", "binary:", "binary:L=0", "binary:L=4,Q=1",
                           "binary:L=4,L=5", "binary:L=4,N=3", "binary:L=4,R=5,N=4",
                           "binary:L=4,R=2,rel=3", "graded:L=4", "graded:G=3,gains=0;1,L=2",
                           "graded:gains=0;2;1,L=2", "graded:G=3,L=2,inventory=1",
                           "contingency:N=5", "contingency:N=5,R=6", "contingency:N=5,R=2,n=0..6",
                           "user:U=0,A=1", "user:U=1", "leveled:L=21", "binary:L=3..2",
                           "binary:L=x"}) {
    EXPECT_THROW(DomainSpec::parse(text), ParseError) << text;
  }
}

TEST(Cardinality, MatchesBruteForceOnRankingDomains) {
  struct Case {
    int G, L;
    std::int64_t R;
    std::optional<std::int64_t> rel;
    std::vector<std::int64_t> inventory;
  };
  const std::vector<Case> cases = {
      {2, 1, 1, {}, {}},     {2, 4, 4, {}, {}},     {2, 4, 2, {}, {}},      {2, 6, 3, 2, {}},
      {3, 4, 4, {}, {}},     {5, 4, 4, {}, {}},     {3, 5, 3, {}, {1, 2}},  {4, 4, 3, 2, {1, 1, 1}},
      {2, 8, 0, {}, {}},     {5, 3, 2, 2, {}},
  };
  for (const Case& c : cases) {
    DomainSpec spec;
    spec.kind = c.G == 2 ? DomainKind::kBinary : DomainKind::kGraded;
    spec.gains.clear();
    for (int g = 0; g < c.G; ++g) spec.gains.emplace_back(g, c.G - 1);
    spec.length = {c.L, c.L};
    spec.total_relevant = c.R;
    spec.retrieved_relevant = c.rel;
    spec.inventory = c.inventory;
    const std::uint64_t expected = BruteForceRankings(c.G, c.L, c.R, c.rel, c.inventory);
    EXPECT_EQ(cardinality(spec), expected) << spec.to_string();
    EXPECT_EQ(Texts(spec).size(), expected) << spec.to_string();
  }
}

TEST(Cardinality, SetBasedAndUserDomains) {
  // Tables with tp + fn = 5 and fp + tn = 10, summed over n = 0..15.
  std::uint64_t tables = 0;
  for (int tp = 0; tp <= 5; ++tp) {
    for (int fp = 0; fp <= 10; ++fp) ++tables;
  }
  EXPECT_EQ(tables, 66u);
  EXPECT_EQ(cardinality(DomainSpec::parse("contingency:N=15,R=5")), 66u);
  EXPECT_EQ(Texts(DomainSpec::parse("contingency:N=15,R=5")).size(), 66u);
  EXPECT_EQ(cardinality(DomainSpec::parse("contingency:N=15,R=5,n=5")), 6u);
  // U = 1: A = 1 gives (0,0),(0,1),(1,0); A = 2 adds five more; A = 3 seven more.
  EXPECT_EQ(cardinality(DomainSpec::parse("user:A=1..3")), 15u);
  EXPECT_EQ(Texts(DomainSpec::parse("user:A=1..3")).size(), 15u);
}

TEST(Cardinality, LeveledDomains) {
  EXPECT_EQ(cardinality(DomainSpec::parse("leveled:L=4")), 16u * 8u);
  EXPECT_EQ(cardinality(DomainSpec::parse("leveled:L=1..3")), 2u + 4u * 2u + 8u * 4u);
  EXPECT_EQ(Texts(DomainSpec::parse("leveled:L=1..3")).size(), 42u);
}

TEST(Enumerate, BinaryOrder) {
  const std::vector<std::string> got = Texts(DomainSpec::parse("binary:L=4"));
  ASSERT_EQ(got.size(), 16u);
  const std::vector<std::string> head = {"⟨0,0,0,0⟩", "⟨1,0,0,0⟩", "⟨0,1,0,0⟩", "⟨0,0,1,0⟩",
                                         "⟨0,0,0,1⟩", "⟨1,1,0,0⟩", "⟨1,0,1,0⟩"};
  EXPECT_EQ(std::vector<std::string>(got.begin(), got.begin() + 7), head);
  EXPECT_EQ(got.back(), "⟨1,1,1,1⟩");
  EXPECT_EQ(std::set<std::string>(got.begin(), got.end()).size(), 16u);
}

TEST(Enumerate, GradedOrderIsByTotalGradeThenHighFirst) {
  const std::vector<std::string> got = Texts(DomainSpec::parse("graded:G=3,L=2"));
  const std::vector<std::string> want = {"⟨0,0⟩", "⟨1,0⟩", "⟨0,1⟩", "⟨2,0⟩", "⟨1,1⟩",
                                         "⟨0,2⟩", "⟨2,1⟩", "⟨1,2⟩", "⟨2,2⟩"};
  EXPECT_EQ(got, want);
}

TEST(Enumerate, ContingencyAndUserOrder) {
  const std::vector<std::string> tables = Texts(DomainSpec::parse("contingency:N=3,R=1,n=1..2"));
  const std::vector<std::string> want = {"tp=0,fp=1,fn=1,tn=1", "tp=1,fp=0,fn=0,tn=2",
                                         "tp=0,fp=2,fn=1,tn=0", "tp=1,fp=1,fn=0,tn=1"};
  EXPECT_EQ(tables, want);
  const std::vector<std::string> users = Texts(DomainSpec::parse("user:A=1"));
  EXPECT_EQ(users, (std::vector<std::string>{"U=1,Rk=0,Ru=0,A=1", "U=1,Rk=0,Ru=1,A=1",
                                             "U=1,Rk=1,Ru=0,A=1"}));
}

TEST(Enumerate, LeveledBreakMasks) {
  const std::vector<std::string> got = Texts(DomainSpec::parse("leveled:L=3"));
  ASSERT_EQ(got.size(), 32u);
  const std::vector<std::string> want = {"⟨0,0,0⟩", "⟨0|0,0⟩", "⟨0,0|0⟩", "⟨0|0|0⟩"};
  EXPECT_EQ(std::vector<std::string>(got.begin(), got.begin() + 4), want);
}

TEST(Enumerate, UniverseIsAttachedToEveryRanking) {
  enumerate(DomainSpec::parse("binary:L=3,R=2"), [](const DomainElement& e) {
    const auto& o = std::get<RankedOutput>(e);
    EXPECT_EQ(o.universe.total_relevant, 2);
    EXPECT_EQ(o.universe.collection_size, 3);
    EXPECT_LE(o.ranking.relevant_count(), 2);
  });
}

// Prefix streams partition the domain and keep the global order.
TEST(Enumerate, PrefixStreamsPartitionTheDomain) {
  const DomainSpec spec = DomainSpec::parse("graded:G=3,L=4");
  const std::vector<std::string> all = Texts(spec);
  std::vector<std::string> joined;
  for (Grade first = 0; first < 3; ++first) {
    std::vector<std::string> part;
    const std::vector<Grade> prefix = {first};
    enumerate_with_prefix(spec, prefix, [&](const DomainElement& e) {
      const std::string text = to_string(e);
      EXPECT_EQ(std::get<RankedOutput>(e).ranking.at(1), first) << text;
      part.push_back(text);
    });
    joined.insert(joined.end(), part.begin(), part.end());
  }
  ASSERT_EQ(joined.size(), all.size());
  EXPECT_EQ(std::set<std::string>(joined.begin(), joined.end()),
            std::set<std::string>(all.begin(), all.end()));
  EXPECT_THROW(enumerate_with_prefix(DomainSpec::parse("user:A=1"), {}, [](const DomainElement&) {}),
               ConfigurationError);
}

TEST(Enumerate, CapIsEnforcedBeforeWork) {
  int visited = 0;
  try {
    enumerate(DomainSpec::parse("binary:L=10"), [&](const DomainElement&) { ++visited; }, 1000);
    FAIL() << "expected DomainTooLarge";
  } catch (const DomainTooLarge& e) {
    EXPECT_EQ(e.cardinality(), 1024u);
  }
  EXPECT_EQ(visited, 0);
  EXPECT_EQ(cardinality(DomainSpec::parse("binary:L=64")), 18446744073709551615ull);
}

TEST(ElementAt, MatchesEnumerationPosition) {
  const DomainSpec spec = DomainSpec::parse("binary:L=4");
  const std::vector<DomainElement> all = materialize(spec);
  for (std::uint64_t i = 0; i < all.size(); ++i) EXPECT_EQ(element_at(spec, i), all[i]);
  EXPECT_THROW(element_at(spec, 16), std::out_of_range);
}

}  // namespace
}  // namespace metriclass
