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

// The structure a measure induces on a finite domain: the weak order by
// value, its quotient into equal-value classes, the Hasse chain over the
// classes and the |f(x) - f(y)| distance. classify() turns these into one of
// three categories:
//
//   ordinal/pseudometric  some distinct elements share a value
//   ordinal/metric        injective, class values unevenly spaced
//   interval/metric       injective, class values evenly spaced

#ifndef METRICLASS_INTRINSIC_H_
#define METRICLASS_INTRINSIC_H_

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "metriclass/domain.h"
#include "metriclass/model.h"
#include "metriclass/registry.h"
#include "metriclass/value.h"

namespace metriclass {

struct ExcludedElement {
  std::uint64_t index = 0;  // position in the enumeration stream
  std::string element;
  std::string reason;
  friend bool operator==(const ExcludedElement&, const ExcludedElement&) = default;
};

struct EquivalenceClass {
  Value value;                       // value of the first member
  std::vector<std::size_t> members;  // positions in OrderedDomain::elements()
};

class OrderedDomain {
 public:
  struct Entry {
    DomainElement element;
    Value value;
    std::uint64_t index;  // position in the enumeration stream
  };

  // Groups `entries` into value classes. Entries must be in enumeration
  // order. Throws std::invalid_argument when empty.
  explicit OrderedDomain(std::vector<Entry> entries,
                         std::vector<ExcludedElement> excluded = {},
                         std::uint64_t excluded_count = 0);

  const std::vector<Entry>& elements() const { return entries_; }
  std::size_t size() const { return entries_.size(); }
  const std::vector<EquivalenceClass>& classes() const { return classes_; }
  std::size_t class_of(std::size_t element) const { return class_of_[element]; }
  const std::vector<ExcludedElement>& excluded() const { return excluded_; }
  // Total number of excluded elements; excluded() keeps only the first few.
  std::uint64_t excluded_count() const { return excluded_count_; }
  Backend backend() const { return backend_; }
  long double epsilon() const { return epsilon_; }

  // x precedes-or-ties y in the induced order.
  bool precedes(std::size_t x, std::size_t y) const {
    return class_of_[x] <= class_of_[y];
  }

 private:
  std::vector<Entry> entries_;
  std::vector<EquivalenceClass> classes_;
  std::vector<std::size_t> class_of_;
  std::vector<ExcludedElement> excluded_;
  std::uint64_t excluded_count_ = 0;
  Backend backend_ = Backend::kExactRational;
  long double epsilon_ = 0;
};

// Evaluates `measure` on every element of `domain`. Elements where the
// measure is undefined are excluded and recorded; if nothing is left,
// throws UndefinedValue.
OrderedDomain induced_order(const Measure& measure, const DomainSpec& domain,
                            std::uint64_t cap = default_domain_cap());

// Same over an explicit list; indices are positions in `elements`.
OrderedDomain induced_order(const Measure& measure,
                            const std::vector<DomainElement>& elements);

// |f(x) - f(y)|.
Value distance(const Measure& measure, const DomainElement& x,
               const DomainElement& y);

// Chain over the equivalence classes in increasing value order. Edge i joins
// node i and node i + 1 with weight value(i + 1) - value(i).
struct HasseDiagram {
  std::vector<Value> node_values;
  std::vector<std::vector<std::string>> node_members;
  std::vector<Value> edge_weights;

  std::size_t node_count() const { return node_values.size(); }
  std::size_t edge_count() const { return edge_weights.size(); }

  // Single-source shortest path lengths over the weighted, undirected edges
  // (Dijkstra; the graph need not be a chain for this to work).
  std::vector<Value> shortest_paths_from(std::size_t node) const;
};

HasseDiagram build_hasse(const OrderedDomain& ordered);

struct InjectivityResult {
  bool injective = true;
  // First collision: the class whose second member comes earliest in the
  // enumeration; the pair is that class's first two members.
  std::optional<std::array<std::size_t, 2>> witness;
};

InjectivityResult check_injective(const OrderedDomain& ordered);

struct EquispacingResult {
  bool equispaced = true;
  bool degenerate = false;  // a single class: vacuously equispaced
  std::optional<Value> gap;
  // Three consecutive classes whose two gaps differ (class positions).
  std::optional<std::array<std::size_t, 3>> triple;
};

EquispacingResult check_equispaced(const OrderedDomain& ordered);

enum class OracleStatus { kHolds, kFails, kSkipped };

std::string oracle_status_name(OracleStatus status);

inline constexpr std::size_t kDefaultOracleCap = 200;

// The definitional interval-scale test: orders every interval between class
// representatives by span and by value difference and checks the two orders
// agree; also checks that d(x, y) = 0 only for x = y. Skipped when the
// quotient has more than `cap` classes.
OracleStatus interval_scale_oracle(const OrderedDomain& ordered,
                                   std::size_t cap = kDefaultOracleCap);

// Number of elements z with x <= z <= y. Throws std::invalid_argument when y
// precedes x strictly.
std::uint64_t interval_span(const OrderedDomain& ordered, std::size_t x,
                            std::size_t y);

struct PseudometricReport {
  std::uint64_t triples_checked = 0;
  std::uint64_t violations = 0;
  std::string first_violation;  // empty when none
};

// Symmetry, d(x, x) = 0 and the triangle inequality on triples of elements.
// Exhaustive when size^3 <= max_triples, otherwise a fixed pseudo-random
// sample of max_triples triples.
PseudometricReport pseudometric_check(const OrderedDomain& ordered,
                                      std::uint64_t max_triples = 5'000'000);

enum class Category { kOrdinalPseudometric, kOrdinalMetric, kIntervalMetric };

std::string category_name(Category category);  // "ordinal/pseudometric", ...
std::optional<Category> parse_category(std::string_view name);

struct WitnessPoint {
  std::uint64_t index = 0;  // position in the domain's enumeration stream
  std::string element;
  Value value;
  friend bool operator==(const WitnessPoint&, const WitnessPoint&) = default;
};

struct Verdict {
  std::string measure;  // canonical id
  std::string measure_name;
  std::string domain;   // canonical domain text
  Category category = Category::kOrdinalPseudometric;
  Backend backend = Backend::kExactRational;
  long double epsilon = 0;

  std::uint64_t domain_size = 0;
  std::uint64_t evaluated = 0;
  std::uint64_t class_count = 0;
  std::optional<Value> min_value;
  std::optional<Value> max_value;

  bool injective = true;
  std::vector<WitnessPoint> collision;  // two points or empty

  bool equispaced = true;
  bool degenerate = false;
  std::optional<Value> gap;
  std::vector<WitnessPoint> triple;  // three class representatives or empty

  OracleStatus oracle = OracleStatus::kSkipped;
  std::uint64_t excluded_count = 0;
  std::vector<ExcludedElement> excluded;

  // "collision ⟨1,0,0,0⟩ = ⟨0,1,0,0⟩ = 1/4", "gaps 1/12 ≠ 1/6 at
  // 1/4 < 1/3 < 1/2", "gap 1/5" or "—".
  std::string witness_summary() const;

  friend bool operator==(const Verdict&, const Verdict&) = default;
};

struct ClassifyOptions {
  std::uint64_t domain_cap = default_domain_cap();
  std::size_t oracle_cap = kDefaultOracleCap;
};

// Throws UndefinedValue if the measure is undefined everywhere on the domain
// and DomainTooLarge if it exceeds the cap.
Verdict classify(const Measure& measure, const DomainSpec& domain,
                 const ClassifyOptions& options = {});

// Classification of an already ordered domain.
Verdict classify(const Measure& measure, const DomainSpec& domain,
                 const OrderedDomain& ordered,
                 std::size_t oracle_cap = kDefaultOracleCap);

}  // namespace metriclass

#endif  // METRICLASS_INTRINSIC_H_
