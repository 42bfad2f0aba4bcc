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

// TREC-style relevance judgments and runs.
//
//   qrels: topic iter doc grade
//   run:   topic Q0 doc rank score tag
//
// Whitespace separated, one record per line, LF or CRLF. Blank lines are
// ignored.

#ifndef METRICLASS_INGEST_H_
#define METRICLASS_INGEST_H_

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "metriclass/model.h"

namespace metriclass {

// Orders numeric topic ids numerically ("2" < "10"), everything else
// lexicographically after them.
struct TopicLess {
  bool operator()(const std::string& a, const std::string& b) const;
};

struct QrelsSet {
  // topic -> doc -> grade
  std::map<std::string, std::map<std::string, Grade>, TopicLess> judgments;

  std::size_t size() const;
  Grade max_grade() const;
  // Number of judged documents of each grade for `topic` (index = grade).
  std::vector<std::int64_t> inventory(const std::string& topic) const;

  friend bool operator==(const QrelsSet&, const QrelsSet&) = default;
};

// Throws ParseError (with line and column) on malformed lines, duplicate
// (topic, doc) pairs and negative grades.
QrelsSet parse_qrels(std::string_view text);

// One line per judgment, topics in TopicLess order, docs ascending.
std::string serialize_qrels(const QrelsSet& qrels);

struct RunEntry {
  std::string doc;
  long double score = 0;
  std::int64_t stated_rank = 0;  // kept for diagnostics only

  friend bool operator==(const RunEntry&, const RunEntry&) = default;
};

struct RunSet {
  // Per topic, by descending score then ascending doc id.
  std::map<std::string, std::vector<RunEntry>, TopicLess> topics;
  std::string tag;  // tag of the first line

  friend bool operator==(const RunSet&, const RunSet&) = default;
};

// Throws ParseError on malformed lines and duplicate docs within a topic.
RunSet parse_run(std::string_view text);

struct TopicRanking {
  std::string topic;
  Ranking ranking;
  Universe universe;
};

struct SkippedTopic {
  std::string topic;
  std::string reason;
};

struct IngestResult {
  std::vector<TopicRanking> topics;
  std::vector<SkippedTopic> skipped;
};

// Gain of grade k is k: grades 0..max_grade of the judgments.
std::shared_ptr<const GradeScheme> integer_gain_scheme(const QrelsSet& qrels);

// Grades each retrieved document from the judgments (unjudged: grade 0) and
// truncates or pads every ranking to `depth`. R counts the topic's judged
// relevant documents and N = max(depth, |judged or retrieved|). Topics absent
// from the judgments are skipped and recorded. Throws ConstraintViolation
// when a judged grade is outside `scheme`.
IngestResult to_rankings(const RunSet& run, const QrelsSet& qrels,
                         std::shared_ptr<const GradeScheme> scheme, int depth);

}  // namespace metriclass

#endif  // METRICLASS_INGEST_H_
