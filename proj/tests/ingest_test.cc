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

#include "metriclass/ingest.h"

#include <cmath>
#include <fstream>
#include <sstream>
#include <string>

#include "gtest/gtest.h"
#include "metriclass/errors.h"
#include "metriclass/registry.h"

namespace metriclass {
namespace {

std::string ReadData(const std::string& name) {
  std::ifstream in(std::string(METRICLASS_TEST_DATA) + "/" + name);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

TEST(Qrels, Parse) {
  QrelsSet q = parse_qrels("1 0 d1 1\r\n\n  1 0 d2 0\n10 0 d1 3\n2 0 d9 2\n");
  EXPECT_EQ(q.size(), 4u);
  EXPECT_EQ(q.max_grade(), 3);
  EXPECT_EQ(q.judgments.at("1").at("d1"), 1);
  EXPECT_EQ(q.inventory("1"), (std::vector<std::int64_t>{1, 1}));
  EXPECT_TRUE(q.inventory("7").empty());
  std::vector<std::string> topics;
  for (const auto& [topic, docs] : q.judgments) topics.push_back(topic);
  EXPECT_EQ(topics, (std::vector<std::string>{"1", "2", "10"}));
}

TEST(Qrels, ErrorsCarryLineAndColumn) {
  try {
    parse_qrels("1 0 d1 1\n1 0 d2\n");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2u);
  }
  try {
    parse_qrels("1 0 d1 1\n\n1 0 d2 x\n");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 3u);
    EXPECT_EQ(e.column(), 8u);
  }
  EXPECT_THROW(parse_qrels("1 0 d1 -1\n"), ParseError);
  EXPECT_THROW(parse_qrels("1 0 d1 1\n1 0 d1 0\n"), ParseError);
}

TEST(Qrels, SerializeRoundTrip) {
  const QrelsSet q = parse_qrels(ReadData("three_topics.qrels"));
  EXPECT_EQ(q.size(), 8u);
  EXPECT_EQ(parse_qrels(serialize_qrels(q)), q);
}

TEST(Run, ParseSortsByScoreThenDocId) {
  RunSet run = parse_run("1 Q0 b 1 2.0 tag\n1 Q0 a 2 2.0 tag\n1 Q0 c 3 5 tag\n");
  EXPECT_EQ(run.tag, "tag");
  const auto& entries = run.topics.at("1");
  ASSERT_EQ(entries.size(), 3u);
  EXPECT_EQ(entries[0].doc, "c");
  EXPECT_EQ(entries[1].doc, "a");
  EXPECT_EQ(entries[2].doc, "b");
  EXPECT_EQ(entries[2].stated_rank, 1);
}

TEST(Run, Errors) {
  EXPECT_THROW(parse_run("1 Q0 a 1 2.0\n"), ParseError);
  EXPECT_THROW(parse_run("1 Q0 a 1 high tag\n"), ParseError);
  EXPECT_THROW(parse_run("1 Q0 a one 2.0 tag\n"), ParseError);
  try {
    parse_run("1 Q0 a 1 2.0 t\n1 Q0 a 2 1.0 t\n");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2u);
  }
}

TEST(ToRankings, UnjudgedIsNonrelevantAndTopicsWithoutJudgmentsAreSkipped) {
  const QrelsSet q = parse_qrels("1 0 d1 1\n");
  const RunSet run = parse_run("1 Q0 d1 1 2 t\n1 Q0 d2 2 1 t\n9 Q0 d1 1 1 t\n");
  const IngestResult r = to_rankings(run, q, integer_gain_scheme(q), 4);
  ASSERT_EQ(r.topics.size(), 1u);
  EXPECT_EQ(r.topics[0].ranking.to_string(), "⟨1,0,0,0⟩");
  EXPECT_EQ(r.topics[0].universe.total_relevant, 1);
  EXPECT_EQ(r.topics[0].universe.collection_size, 4);
  ASSERT_EQ(r.skipped.size(), 1u);
  EXPECT_EQ(r.skipped[0].topic, "9");
  EXPECT_THROW(to_rankings(run, q, integer_gain_scheme(q), 0), std::invalid_argument);
}

TEST(ToRankings, GradeOutsideSchemeIsRejected) {
  const QrelsSet q = parse_qrels("1 0 d1 3\n");
  const RunSet run = parse_run("1 Q0 d1 1 2 t\n");
  auto binary = std::make_shared<const GradeScheme>(GradeScheme::binary());
  EXPECT_THROW(to_rankings(run, q, binary, 2), ConstraintViolation);
}

TEST(ToRankings, FixtureMapping) {
  const QrelsSet q = parse_qrels(ReadData("three_topics.qrels"));
  const RunSet run = parse_run(ReadData("three_topics.run"));
  const IngestResult r = to_rankings(run, q, integer_gain_scheme(q), 4);
  ASSERT_EQ(r.topics.size(), 3u);
  EXPECT_TRUE(r.skipped.empty());
  EXPECT_EQ(r.topics[0].ranking.to_string(), "⟨1,0,1,0⟩");
  EXPECT_EQ(r.topics[0].universe.total_relevant, 3);
  EXPECT_EQ(r.topics[0].universe.collection_size, 5);
  EXPECT_EQ(r.topics[1].ranking.to_string(), "⟨0,2,1,0⟩");
  EXPECT_EQ(r.topics[1].universe.inventory, (std::vector<std::int64_t>{0, 1, 1}));
  EXPECT_EQ(r.topics[2].ranking.to_string(), "⟨0,0,0,1⟩");
  EXPECT_EQ(r.topics[2].universe.collection_size, 5);
}

// Values worked out by hand from the fixture rankings.
TEST(ToRankings, FixtureMeasureValues) {
  const QrelsSet q = parse_qrels(ReadData("three_topics.qrels"));
  const IngestResult r = to_rankings(parse_run(ReadData("three_topics.run")), q,
                                     integer_gain_scheme(q), 4);
  auto eval = [&](const char* id, std::size_t topic) {
    return Measure::parse(id).evaluate(RankedOutput{r.topics[topic].ranking, r.topics[topic].universe});
  };
  EXPECT_EQ(eval("ap", 0).exact(), Rational(5, 9));
  EXPECT_EQ(eval("ap", 1).exact(), Rational(7, 12));
  EXPECT_EQ(eval("ap", 2).exact(), Rational(1, 4));
  EXPECT_NEAR(static_cast<double>(eval("dcg?b=2", 0).real()), 1 + 1 / std::log2(3.0), 1e-12);
  EXPECT_NEAR(static_cast<double>(eval("dcg?b=2", 1).real()), 2 + 1 / std::log2(3.0), 1e-12);
  EXPECT_NEAR(static_cast<double>(eval("dcg?b=2", 2).real()), 0.5, 1e-12);
  // The gain scheme spans grades 0..2 across all topics, so RBP divides by 2.
  EXPECT_EQ(eval("rbp?p=1/2", 0).exact(), Rational(5, 16));
  EXPECT_EQ(eval("rbp?p=1/2", 1).exact(), Rational(5, 16));
  EXPECT_EQ(eval("rbp?p=1/2", 2).exact(), Rational(1, 32));
}

}  // namespace
}  // namespace metriclass
