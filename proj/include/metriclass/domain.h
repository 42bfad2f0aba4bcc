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

// Finite empirical domains.
//
// A DomainSpec is written as "kind:key=value,key=value", e.g.
//
//   binary:L=4                      all 0/1 rankings of length 4
//   binary:L=4,R=2,rel=2            ... with exactly 2 of the R=2 relevant
//   graded:G=5,L=4                  grades 0..4, gains k/4
//   graded:gains=0;1;3,L=3,R=2      explicit gains
//   contingency:N=15,R=5,n=0..15    tables with tp+fp = n
//   user:U=1,A=1..3                 user contexts
//   leveled:L=4,s=1                 binary rankings cut into levels
//
// Ranking streams follow graded reverse-lexicographic order: by length, then
// by the sum of grade indices, then lexicographically with higher grades
// first. For binary rankings this lists <0,0,0,0>, <1,0,0,0>, <0,1,0,0>, ...

#ifndef METRICLASS_DOMAIN_H_
#define METRICLASS_DOMAIN_H_

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "metriclass/model.h"
#include "metriclass/rational.h"

namespace metriclass {

enum class DomainKind { kBinary, kGraded, kContingency, kUserContext, kLeveled };

struct IntRange {
  std::int64_t lo = 0;
  std::int64_t hi = 0;
  friend bool operator==(const IntRange&, const IntRange&) = default;
};

struct DomainSpec {
  DomainKind kind = DomainKind::kBinary;

  // Ranking kinds (binary, graded, leveled).
  std::vector<Rational> gains = {Rational(0), Rational(1)};
  IntRange length{4, 4};                             // L
  std::optional<std::int64_t> total_relevant;        // R (default: L)
  std::optional<std::int64_t> collection_size;       // N (default: max(L, R))
  std::optional<std::int64_t> retrieved_relevant;    // rel: exact count(L)
  std::vector<std::int64_t> inventory;               // grades 1..G-1
  std::int64_t need = 1;                             // s (leveled)

  // Contingency: N, R above plus retrieved-set size n. User: U, A.
  IntRange retrieved{0, 0};
  std::int64_t known_relevant = 1;  // U

  static DomainSpec parse(std::string_view text);
  // Canonical text form; parse(to_string()) == *this.
  std::string to_string() const;

  friend bool operator==(const DomainSpec&, const DomainSpec&) = default;
};

// Default refusal threshold, 10^7, overridable by METRICLASS_MAX_DOMAIN.
std::uint64_t default_domain_cap();

// Exact element count, computed in closed form (independently of the
// generator).
std::uint64_t cardinality(const DomainSpec& spec);

using ElementVisitor = std::function<void(const DomainElement&)>;

// Streams every element once, in the documented deterministic order. Throws
// DomainTooLarge if cardinality(spec) > cap.
void enumerate(const DomainSpec& spec, const ElementVisitor& visit,
               std::uint64_t cap = default_domain_cap());

// The sub-stream of ranking elements whose leading grades equal `prefix`.
// Prefix sub-streams over all prefixes of a fixed length partition the
// stream. Only for binary/graded/leveled domains.
void enumerate_with_prefix(const DomainSpec& spec, std::span<const Grade> prefix,
                           const ElementVisitor& visit,
                           std::uint64_t cap = default_domain_cap());

// The element at 0-based position `index` of the enumeration stream.
// Throws std::out_of_range past the end.
DomainElement element_at(const DomainSpec& spec, std::uint64_t index,
                         std::uint64_t cap = default_domain_cap());

std::vector<DomainElement> materialize(const DomainSpec& spec,
                                       std::uint64_t cap = default_domain_cap());

}  // namespace metriclass

#endif  // METRICLASS_DOMAIN_H_
