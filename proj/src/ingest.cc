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

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdlib>
#include <set>

#include "metriclass/errors.h"

namespace metriclass {
namespace {

struct Field {
  std::string_view text;
  std::size_t column;  // 1-based
};

// Splits `text` into lines (LF or CRLF) and calls `fn(line_number, fields)`
// for every non-blank line.
template <typename Fn>
void for_each_record(std::string_view text, Fn fn) {
  std::size_t line_number = 0;
  while (!text.empty()) {
    auto end = text.find('\n');
    std::string_view line = text.substr(0, end);
    text = end == std::string_view::npos ? std::string_view() : text.substr(end + 1);
    ++line_number;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    std::vector<Field> fields;
    std::size_t i = 0;
    while (i < line.size()) {
      while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
      std::size_t start = i;
      while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
      if (i > start) fields.push_back({line.substr(start, i - start), start + 1});
    }
    if (!fields.empty()) fn(line_number, fields);
  }
}

std::int64_t integer_field(const Field& f, std::size_t line, const char* what) {
  std::int64_t v = 0;
  auto [ptr, ec] = std::from_chars(f.text.data(), f.text.data() + f.text.size(), v);
  if (ec != std::errc() || ptr != f.text.data() + f.text.size()) {
    throw ParseError(std::string("expected integer ") + what + ", got '" + std::string(f.text) + "'",
                     line, f.column);
  }
  return v;
}

bool all_digits(const std::string& s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); });
}

}  // namespace

bool TopicLess::operator()(const std::string& a, const std::string& b) const {
  const bool na = all_digits(a);
  const bool nb = all_digits(b);
  if (na != nb) return na;
  if (na) {
    auto strip = [](const std::string& s) {
      auto p = s.find_first_not_of('0');
      return p == std::string::npos ? std::string("0") : s.substr(p);
    };
    const std::string sa = strip(a), sb = strip(b);
    if (sa.size() != sb.size()) return sa.size() < sb.size();
    if (sa != sb) return sa < sb;
  }
  return a < b;
}

std::size_t QrelsSet::size() const {
  std::size_t n = 0;
  for (const auto& [topic, docs] : judgments) n += docs.size();
  return n;
}

Grade QrelsSet::max_grade() const {
  Grade g = 0;
  for (const auto& [topic, docs] : judgments) {
    for (const auto& [doc, grade] : docs) g = std::max(g, grade);
  }
  return g;
}

std::vector<std::int64_t> QrelsSet::inventory(const std::string& topic) const {
  std::vector<std::int64_t> counts;
  auto it = judgments.find(topic);
  if (it == judgments.end()) return counts;
  for (const auto& [doc, grade] : it->second) {
    if (static_cast<std::size_t>(grade) >= counts.size()) counts.resize(grade + 1, 0);
    ++counts[grade];
  }
  return counts;
}

QrelsSet parse_qrels(std::string_view text) {
  QrelsSet qrels;
  for_each_record(text, [&](std::size_t line, const std::vector<Field>& f) {
    if (f.size() != 4) {
      throw ParseError("qrels line needs 4 fields (topic iter doc grade), got " +
                           std::to_string(f.size()),
                       line, f.size() > 4 ? f[4].column : f.back().column);
    }
    const std::int64_t grade = integer_field(f[3], line, "grade");
    if (grade < 0) throw ParseError("negative grade", line, f[3].column);
    auto& docs = qrels.judgments[std::string(f[0].text)];
    if (!docs.emplace(std::string(f[2].text), static_cast<Grade>(grade)).second) {
      throw ParseError("duplicate judgment for topic " + std::string(f[0].text) + ", doc " +
                           std::string(f[2].text),
                       line, f[2].column);
    }
  });
  return qrels;
}

std::string serialize_qrels(const QrelsSet& qrels) {
  std::string out;
  for (const auto& [topic, docs] : qrels.judgments) {
    for (const auto& [doc, grade] : docs) {
      out += topic + " 0 " + doc + " " + std::to_string(grade) + "\n";
    }
  }
  return out;
}

RunSet parse_run(std::string_view text) {
  RunSet run;
  std::map<std::string, std::set<std::string>> seen;
  for_each_record(text, [&](std::size_t line, const std::vector<Field>& f) {
    if (f.size() != 6) {
      throw ParseError("run line needs 6 fields (topic Q0 doc rank score tag), got " +
                           std::to_string(f.size()),
                       line, f.size() > 6 ? f[6].column : f.back().column);
    }
    const std::string topic(f[0].text);
    const std::string doc(f[2].text);
    const std::int64_t rank = integer_field(f[3], line, "rank");
    const std::string score_text(f[4].text);
    char* end = nullptr;
    const long double score = std::strtold(score_text.c_str(), &end);
    if (end != score_text.c_str() + score_text.size()) {
      throw ParseError("expected numeric score, got '" + score_text + "'", line, f[4].column);
    }
    if (!seen[topic].insert(doc).second) {
      throw ParseError("duplicate doc " + doc + " for topic " + topic, line, f[2].column);
    }
    if (run.tag.empty()) run.tag = std::string(f[5].text);
    run.topics[topic].push_back({doc, score, rank});
  });
  for (auto& [topic, entries] : run.topics) {
    std::sort(entries.begin(), entries.end(), [](const RunEntry& a, const RunEntry& b) {
      if (a.score != b.score) return a.score > b.score;
      return a.doc < b.doc;
    });
  }
  return run;
}

std::shared_ptr<const GradeScheme> integer_gain_scheme(const QrelsSet& qrels) {
  std::vector<Rational> gains;
  for (Grade g = 0; g <= std::max(1, qrels.max_grade()); ++g) gains.push_back(Rational(g));
  return std::make_shared<const GradeScheme>(std::move(gains));
}

IngestResult to_rankings(const RunSet& run, const QrelsSet& qrels,
                         std::shared_ptr<const GradeScheme> scheme, int depth) {
  if (depth < 1) throw std::invalid_argument("depth must be >= 1");
  IngestResult result;
  for (const auto& [topic, entries] : run.topics) {
    auto judged = qrels.judgments.find(topic);
    if (judged == qrels.judgments.end()) {
      result.skipped.push_back({topic, "no judgments for this topic"});
      continue;
    }
    const auto& docs = judged->second;
    std::vector<Grade> grades;
    for (const auto& e : entries) {
      if (static_cast<int>(grades.size()) == depth) break;
      auto it = docs.find(e.doc);
      grades.push_back(it == docs.end() ? 0 : it->second);
    }
    grades.resize(depth, 0);

    Universe universe;
    std::set<std::string> pool;
    for (const auto& [doc, grade] : docs) {
      pool.insert(doc);
      if (grade >= scheme->size()) {
        throw ConstraintViolation("topic " + topic + ": grade " + std::to_string(grade) +
                                  " is outside the grade scheme");
      }
      if (grade > 0) ++universe.total_relevant;
    }
    for (const auto& e : entries) pool.insert(e.doc);
    universe.collection_size = std::max<std::int64_t>(depth, pool.size());
    universe.inventory = qrels.inventory(topic);
    universe.inventory.resize(scheme->size(), 0);
    universe.inventory[0] = 0;

    Ranking ranking(scheme, std::move(grades));
    check_consistent(ranking, universe);
    result.topics.push_back({topic, std::move(ranking), std::move(universe)});
  }
  return result;
}

}  // namespace metriclass
