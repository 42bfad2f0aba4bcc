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

#include <algorithm>
#include <functional>
#include <numeric>

#include "metriclass/errors.h"

namespace metriclass {

GradeScheme::GradeScheme(std::vector<Rational> gains) : gains_(std::move(gains)) {
  if (gains_.size() < 2) {
    throw ConstraintViolation("grade scheme needs at least two grades");
  }
  if (!gains_[0].is_zero()) {
    throw ConstraintViolation("gain of the lowest grade must be 0");
  }
  for (std::size_t k = 1; k < gains_.size(); ++k) {
    if (!(gains_[k - 1] < gains_[k])) {
      throw ConstraintViolation("gains must strictly increase with grade");
    }
  }
}

GradeScheme GradeScheme::binary() { return GradeScheme({Rational(0), Rational(1)}); }

GradeScheme GradeScheme::uniform(int num_grades) {
  if (num_grades < 2) throw ConstraintViolation("grade scheme needs at least two grades");
  std::vector<Rational> gains;
  for (int k = 0; k < num_grades; ++k) gains.emplace_back(k, num_grades - 1);
  return GradeScheme(std::move(gains));
}

const Rational& GradeScheme::gain(Grade g) const {
  if (g < 0 || g >= size()) {
    throw ConstraintViolation("grade " + std::to_string(g) + " outside scheme");
  }
  return gains_[g];
}

Ranking::Ranking(std::shared_ptr<const GradeScheme> scheme,
                 std::vector<Grade> grades)
    : scheme_(std::move(scheme)), grades_(std::move(grades)) {
  if (!scheme_) throw ConstraintViolation("ranking without grade scheme");
  if (grades_.empty()) throw ConstraintViolation("ranking must have length >= 1");
  for (Grade g : grades_) {
    if (g < 0 || g >= scheme_->size()) {
      throw ConstraintViolation("grade " + std::to_string(g) +
                                " does not belong to the grade scheme");
    }
  }
}

Ranking Ranking::binary(std::vector<Grade> flags) {
  static const auto kBinary =
      std::make_shared<const GradeScheme>(GradeScheme::binary());
  return Ranking(kBinary, std::move(flags));
}

int Ranking::relevant_count() const {
  return static_cast<int>(
      std::count_if(grades_.begin(), grades_.end(), [](Grade g) { return g > 0; }));
}

Ranking Ranking::padded_to(int length) const {
  if (length <= this->length()) return *this;
  std::vector<Grade> grades = grades_;
  grades.resize(length, 0);
  return Ranking(scheme_, std::move(grades));
}

std::string Ranking::to_string() const {
  std::string out = "⟨";
  for (std::size_t i = 0; i < grades_.size(); ++i) {
    if (i > 0) out += ",";
    out += std::to_string(grades_[i]);
  }
  return out + "⟩";
}

void check_consistent(const Ranking& ranking, const Universe& universe) {
  if (universe.total_relevant < 0 || universe.collection_size < 0) {
    throw ConstraintViolation("universe counts must be non-negative");
  }
  if (universe.total_relevant > universe.collection_size) {
    throw ConstraintViolation("universe has R > N");
  }
  if (ranking.length() > universe.collection_size) {
    throw ConstraintViolation("ranking longer than the collection (L > N)");
  }
  if (ranking.relevant_count() > universe.total_relevant) {
    throw ConstraintViolation("ranking holds " +
                              std::to_string(ranking.relevant_count()) +
                              " relevant documents but the universe has R = " +
                              std::to_string(universe.total_relevant));
  }
  if (!universe.inventory.empty()) {
    const auto& inv = universe.inventory;
    if (static_cast<int>(inv.size()) != ranking.scheme().size()) {
      throw ConstraintViolation("inventory size does not match grade scheme");
    }
    std::int64_t total = std::accumulate(inv.begin() + 1, inv.end(), std::int64_t{0});
    if (total != universe.total_relevant) {
      throw ConstraintViolation("inventory does not sum to R");
    }
    std::vector<std::int64_t> seen(inv.size(), 0);
    for (Grade g : ranking.grades()) ++seen[g];
    for (std::size_t g = 1; g < inv.size(); ++g) {
      if (seen[g] > inv[g]) {
        throw ConstraintViolation("ranking holds more grade-" + std::to_string(g) +
                                  " documents than the universe inventory");
      }
    }
  }
}

namespace {

// All relevant grades of the universe, best first.
std::vector<Grade> relevant_pool(const Ranking& ranking, const Universe& universe) {
  std::vector<Grade> pool;
  if (!universe.inventory.empty()) {
    for (Grade g = static_cast<Grade>(universe.inventory.size()) - 1; g >= 1; --g) {
      pool.insert(pool.end(), universe.inventory[g], g);
    }
    return pool;
  }
  for (Grade g : ranking.grades()) {
    if (g > 0) pool.push_back(g);
  }
  std::sort(pool.begin(), pool.end(), std::greater<>());
  pool.resize(universe.total_relevant, 1);
  return pool;
}

}  // namespace

std::vector<Grade> ideal_grades(const Ranking& ranking, const Universe& universe,
                                int length) {
  std::vector<Grade> pool = relevant_pool(ranking, universe);
  pool.resize(length, 0);
  return pool;
}

DerivedCounts derived_counts(const Ranking& ranking, const Universe& universe) {
  check_consistent(ranking, universe);
  const GradeScheme& scheme = ranking.scheme();
  const int L = ranking.length();
  DerivedCounts d;
  d.isrel.reserve(L);
  d.count.reserve(L);
  d.gain.reserve(L);
  d.cg.reserve(L);
  std::int64_t count = 0;
  Rational cg;
  for (int r = 1; r <= L; ++r) {
    Grade g = ranking.at(r);
    int rel = g > 0 ? 1 : 0;
    count += rel;
    cg += scheme.gain(g);
    d.isrel.push_back(rel);
    d.count.push_back(count);
    d.gain.push_back(scheme.gain(g));
    d.cg.push_back(cg);
  }
  std::vector<Grade> pool = relevant_pool(ranking, universe);
  for (Grade g : pool) d.ideal_total += scheme.gain(g);
  pool.resize(L, 0);
  Rational cig;
  for (Grade g : pool) {
    cig += scheme.gain(g);
    d.ideal_gain.push_back(scheme.gain(g));
    d.cig.push_back(cig);
  }
  return d;
}

std::string ContingencyTable::to_string() const {
  return "tp=" + std::to_string(tp) + ",fp=" + std::to_string(fp) +
         ",fn=" + std::to_string(fn) + ",tn=" + std::to_string(tn);
}

void check_consistent(const ContingencyTable& t) {
  if (t.tp < 0 || t.fp < 0 || t.fn < 0 || t.tn < 0) {
    throw ConstraintViolation("contingency counts must be non-negative");
  }
}

std::string UserContext::to_string() const {
  return "U=" + std::to_string(known_relevant) + ",Rk=" +
         std::to_string(retrieved_known) + ",Ru=" +
         std::to_string(retrieved_unknown) + ",A=" +
         std::to_string(retrieved_total);
}

void check_consistent(const UserContext& c) {
  if (c.known_relevant < 1) throw ConstraintViolation("U must be positive");
  if (c.retrieved_total < 1) throw ConstraintViolation("A must be positive");
  if (c.retrieved_known < 0 || c.retrieved_unknown < 0) {
    throw ConstraintViolation("retrieved counts must be non-negative");
  }
  if (c.retrieved_known > c.known_relevant) {
    throw ConstraintViolation("R_k exceeds U");
  }
  if (c.retrieved_known + c.retrieved_unknown > c.retrieved_total) {
    throw ConstraintViolation("R_k + R_u exceeds A");
  }
}

LeveledOutput LeveledRanking::counts() const {
  LeveledOutput out;
  out.need = need;
  int pos = 1;
  for (int size : level_sizes) {
    LeveledOutput::Level level;
    for (int k = 0; k < size; ++k, ++pos) {
      if (documents.at(pos) > 0) {
        ++level.relevant;
      } else {
        ++level.nonrelevant;
      }
    }
    out.levels.push_back(level);
  }
  if (pos != documents.length() + 1) {
    throw ConstraintViolation("level sizes do not cover the ranking");
  }
  return out;
}

std::string LeveledRanking::to_string() const {
  std::string out = "⟨";
  int pos = 1;
  for (std::size_t l = 0; l < level_sizes.size(); ++l) {
    if (l > 0) out += "|";
    for (int k = 0; k < level_sizes[l]; ++k, ++pos) {
      if (k > 0) out += ",";
      out += std::to_string(documents.at(pos));
    }
  }
  return out + "⟩";
}

std::string to_string(const DomainElement& element) {
  return std::visit(
      [](const auto& e) -> std::string {
        using T = std::decay_t<decltype(e)>;
        if constexpr (std::is_same_v<T, RankedOutput>) {
          return e.ranking.to_string();
        } else {
          return e.to_string();
        }
      },
      element);
}

}  // namespace metriclass
