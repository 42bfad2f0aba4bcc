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

// Core model: the objects measures are evaluated on.
//
// Relevance grades are small integers 0..G-1 indexing a GradeScheme; grade 0
// is the lowest (non-relevant) grade and always has gain 0. A document is
// "relevant" (isrel = 1) when its grade is above 0.

#ifndef METRICLASS_MODEL_H_
#define METRICLASS_MODEL_H_

#include <cstdint>
#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "metriclass/rational.h"

namespace metriclass {

using Grade = int;

class GradeScheme {
 public:
  // gains[k] is the gain of grade k. Requires at least two grades, gains[0]
  // == 0 and strictly increasing gains.
  explicit GradeScheme(std::vector<Rational> gains);

  static GradeScheme binary();
  // G grades with gains k / (G - 1), so the top grade has gain 1.
  static GradeScheme uniform(int num_grades);

  int size() const { return static_cast<int>(gains_.size()); }
  Grade top() const { return size() - 1; }
  const Rational& gain(Grade g) const;
  const std::vector<Rational>& gains() const { return gains_; }
  bool is_binary() const { return size() == 2 && gains_[1] == Rational(1); }

  friend bool operator==(const GradeScheme&, const GradeScheme&) = default;

 private:
  std::vector<Rational> gains_;
};

// A ranked list of graded documents, positions 1..L.
class Ranking {
 public:
  Ranking(std::shared_ptr<const GradeScheme> scheme, std::vector<Grade> grades);

  // Binary ranking from 0/1 flags, e.g. binary({1, 0, 0, 0}).
  static Ranking binary(std::vector<Grade> flags);

  int length() const { return static_cast<int>(grades_.size()); }
  const std::vector<Grade>& grades() const { return grades_; }
  Grade at(int rank) const { return grades_.at(rank - 1); }  // 1-based
  const GradeScheme& scheme() const { return *scheme_; }
  const std::shared_ptr<const GradeScheme>& scheme_ptr() const {
    return scheme_;
  }

  int relevant_count() const;

  // Copy padded with grade 0 up to `length` (no-op when already long enough).
  Ranking padded_to(int length) const;

  // "⟨1,0,0,0⟩"
  std::string to_string() const;

  friend bool operator==(const Ranking& a, const Ranking& b) {
    return a.grades_ == b.grades_ && *a.scheme_ == *b.scheme_;
  }

 private:
  std::shared_ptr<const GradeScheme> scheme_;
  std::vector<Grade> grades_;
};

// The collection a ranking is judged against.
struct Universe {
  std::int64_t collection_size = 0;  // N
  std::int64_t total_relevant = 0;   // R
  // Optional per-grade relevant inventory: inventory[g] relevant documents of
  // grade g exist in the collection (inventory[0] unused). When empty, the
  // ideal ranking uses the ranking's own relevant grades and fills the
  // remaining R - count(L) slots with grade 1.
  std::vector<std::int64_t> inventory;

  friend bool operator==(const Universe&, const Universe&) = default;
};

// Throws ConstraintViolation if `universe` is internally inconsistent or the
// ranking cannot come from it.
void check_consistent(const Ranking& ranking, const Universe& universe);

// Per-position quantities, 0-based vectors for ranks 1..L.
struct DerivedCounts {
  std::vector<int> isrel;
  std::vector<std::int64_t> count;
  std::vector<Rational> gain;        // g(r)
  std::vector<Rational> cg;          // sum_{k<=r} g(k)
  std::vector<Rational> ideal_gain;  // ig(r)
  std::vector<Rational> cig;         // sum_{k<=r} ig(k)
  Rational ideal_total;              // total gain of every relevant document
};

DerivedCounts derived_counts(const Ranking& ranking, const Universe& universe);

// Ideal grade sequence for the universe (all relevant documents, best first),
// truncated or padded with grade 0 to `length`.
std::vector<Grade> ideal_grades(const Ranking& ranking,
                                const Universe& universe, int length);

struct ContingencyTable {
  std::int64_t tp = 0;
  std::int64_t fp = 0;
  std::int64_t fn = 0;
  std::int64_t tn = 0;

  std::int64_t total() const { return tp + fp + fn + tn; }
  std::string to_string() const;
  friend bool operator==(const ContingencyTable&,
                         const ContingencyTable&) = default;
};

void check_consistent(const ContingencyTable& table);

struct UserContext {
  std::int64_t known_relevant = 1;     // U
  std::int64_t retrieved_known = 0;    // R_k
  std::int64_t retrieved_unknown = 0;  // R_u
  std::int64_t retrieved_total = 1;    // A

  std::string to_string() const;
  friend bool operator==(const UserContext&, const UserContext&) = default;
};

void check_consistent(const UserContext& context);

// Weakly ordered output: documents grouped into levels, order within a level
// unspecified.
struct LeveledOutput {
  struct Level {
    std::int64_t relevant = 0;
    std::int64_t nonrelevant = 0;
    friend bool operator==(const Level&, const Level&) = default;
  };
  std::vector<Level> levels;
  std::int64_t need = 1;  // s

  friend bool operator==(const LeveledOutput&, const LeveledOutput&) = default;
};

// A concrete ranking cut into consecutive levels; the enumerable form of a
// LeveledOutput (two of these that differ only by order inside a level
// collapse to the same LeveledOutput).
struct LeveledRanking {
  Ranking documents;
  std::vector<int> level_sizes;  // sums to documents.length()
  std::int64_t need = 1;

  LeveledOutput counts() const;
  std::string to_string() const;  // "⟨1,0|0,1⟩"
  friend bool operator==(const LeveledRanking&,
                         const LeveledRanking&) = default;
};

struct RankedOutput {
  Ranking ranking;
  Universe universe;
  friend bool operator==(const RankedOutput&, const RankedOutput&) = default;
};

// One element of an empirical domain.
using DomainElement =
    std::variant<ContingencyTable, UserContext, RankedOutput, LeveledRanking>;

std::string to_string(const DomainElement& element);

}  // namespace metriclass

#endif  // METRICLASS_MODEL_H_
