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

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <random>
#include <stdexcept>

#include "metriclass/errors.h"

namespace metriclass {
namespace {

constexpr std::size_t kKeptExclusions = 20;

// Strict order on raw representations; ties under value_eq are resolved
// afterwards by grouping.
bool raw_less(const Value& a, const Value& b) {
  if (a.is_exact() && b.is_exact()) return a.exact() < b.exact();
  return a.real() < b.real();
}

std::string value_text(const Value& v) {
  return v.is_exact() ? v.to_string() : v.to_display();
}

}  // namespace

OrderedDomain::OrderedDomain(std::vector<Entry> entries, std::vector<ExcludedElement> excluded,
                             std::uint64_t excluded_count)
    : entries_(std::move(entries)),
      excluded_(std::move(excluded)),
      excluded_count_(std::max<std::uint64_t>(excluded_count, excluded_.size())) {
  if (entries_.empty()) throw std::invalid_argument("ordered domain needs at least one element");
  for (const Entry& e : entries_) {
    if (!e.value.is_exact()) {
      backend_ = Backend::kApproxReal;
      epsilon_ = std::max(epsilon_, e.value.epsilon());
    }
  }
  std::vector<std::size_t> order(entries_.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return raw_less(entries_[a].value, entries_[b].value);
  });
  class_of_.assign(entries_.size(), 0);
  for (std::size_t pos : order) {
    const Value& v = entries_[pos].value;
    if (classes_.empty() || !value_eq(classes_.back().value, v)) {
      classes_.push_back({v, {}});
    }
    classes_.back().members.push_back(pos);
    class_of_[pos] = classes_.size() - 1;
  }
  // Members in enumeration order.
  for (auto& c : classes_) std::sort(c.members.begin(), c.members.end());
}

OrderedDomain induced_order(const Measure& measure, const DomainSpec& domain, std::uint64_t cap) {
  std::vector<OrderedDomain::Entry> entries;
  std::vector<ExcludedElement> excluded;
  std::uint64_t excluded_count = 0;
  std::uint64_t index = 0;
  enumerate(domain, [&](const DomainElement& e) {
    try {
      entries.push_back({e, measure.evaluate(e), index});
    } catch (const UndefinedValue& u) {
      if (excluded.size() < kKeptExclusions) excluded.push_back({index, to_string(e), u.reason()});
      ++excluded_count;
    }
    ++index;
  }, cap);
  if (entries.empty()) {
    throw UndefinedValue(measure.id(), domain.to_string(), "undefined on every element");
  }
  return OrderedDomain(std::move(entries), std::move(excluded), excluded_count);
}

OrderedDomain induced_order(const Measure& measure, const std::vector<DomainElement>& elements) {
  std::vector<OrderedDomain::Entry> entries;
  std::vector<ExcludedElement> excluded;
  std::uint64_t excluded_count = 0;
  for (std::uint64_t i = 0; i < elements.size(); ++i) {
    try {
      entries.push_back({elements[i], measure.evaluate(elements[i]), i});
    } catch (const UndefinedValue& u) {
      if (excluded.size() < kKeptExclusions) excluded.push_back({i, to_string(elements[i]), u.reason()});
      ++excluded_count;
    }
  }
  if (entries.empty()) {
    throw UndefinedValue(measure.id(), "the given elements", "undefined on every element");
  }
  return OrderedDomain(std::move(entries), std::move(excluded), excluded_count);
}

Value distance(const Measure& measure, const DomainElement& x, const DomainElement& y) {
  return abs(measure.evaluate(x) - measure.evaluate(y));
}

HasseDiagram build_hasse(const OrderedDomain& ordered) {
  HasseDiagram h;
  for (const auto& c : ordered.classes()) {
    h.node_values.push_back(c.value);
    std::vector<std::string> names;
    for (std::size_t m : c.members) names.push_back(to_string(ordered.elements()[m].element));
    h.node_members.push_back(std::move(names));
  }
  for (std::size_t i = 0; i + 1 < h.node_values.size(); ++i) {
    h.edge_weights.push_back(h.node_values[i + 1] - h.node_values[i]);
  }
  return h;
}

std::vector<Value> HasseDiagram::shortest_paths_from(std::size_t node) const {
  const std::size_t n = node_count();
  std::vector<std::vector<std::pair<std::size_t, Value>>> adjacent(n);
  for (std::size_t i = 0; i < edge_weights.size(); ++i) {
    adjacent[i].push_back({i + 1, edge_weights[i]});
    adjacent[i + 1].push_back({i, edge_weights[i]});
  }
  std::vector<std::optional<Value>> best(n);
  std::vector<bool> done(n, false);
  auto worse = [](const std::pair<Value, std::size_t>& a, const std::pair<Value, std::size_t>& b) {
    return raw_less(b.first, a.first);
  };
  std::priority_queue<std::pair<Value, std::size_t>, std::vector<std::pair<Value, std::size_t>>,
                      decltype(worse)>
      frontier(worse);
  best[node] = Value(Rational(0));
  frontier.push({Rational(0), node});
  while (!frontier.empty()) {
    auto [d, u] = frontier.top();
    frontier.pop();
    if (done[u]) continue;
    done[u] = true;
    for (const auto& [v, w] : adjacent[u]) {
      Value candidate = d + w;
      if (!best[v] || raw_less(candidate, *best[v])) {
        best[v] = candidate;
        frontier.push({candidate, v});
      }
    }
  }
  std::vector<Value> out;
  out.reserve(n);
  for (auto& b : best) out.push_back(b.value_or(Value()));
  return out;
}

InjectivityResult check_injective(const OrderedDomain& ordered) {
  InjectivityResult result;
  const auto& elements = ordered.elements();
  for (const auto& c : ordered.classes()) {
    if (c.members.size() < 2) continue;
    result.injective = false;
    if (!result.witness || elements[c.members[1]].index < elements[(*result.witness)[1]].index) {
      result.witness = {c.members[0], c.members[1]};
    }
  }
  return result;
}

EquispacingResult check_equispaced(const OrderedDomain& ordered) {
  EquispacingResult result;
  const auto& classes = ordered.classes();
  if (classes.size() < 2) {
    result.degenerate = true;
    return result;
  }
  const Value first_gap = classes[1].value - classes[0].value;
  for (std::size_t i = 0; i + 2 < classes.size(); ++i) {
    const Value a = classes[i + 1].value - classes[i].value;
    const Value b = classes[i + 2].value - classes[i + 1].value;
    if (!value_eq(a, b)) {
      result.equispaced = false;
      result.triple = {i, i + 1, i + 2};
      return result;
    }
  }
  result.gap = first_gap;
  return result;
}

std::string oracle_status_name(OracleStatus status) {
  switch (status) {
    case OracleStatus::kHolds: return "holds";
    case OracleStatus::kFails: return "fails";
    case OracleStatus::kSkipped: return "skipped";
  }
  return "?";
}

OracleStatus interval_scale_oracle(const OrderedDomain& ordered, std::size_t cap) {
  const auto& classes = ordered.classes();
  const std::size_t k = classes.size();
  if (k > cap) return OracleStatus::kSkipped;

  // Identity of indiscernibles, decided on the raw values without the class
  // structure: after sorting, any zero-distance pair shows up as neighbours.
  std::vector<Value> raw;
  for (const auto& e : ordered.elements()) raw.push_back(e.value);
  std::sort(raw.begin(), raw.end(), raw_less);
  for (std::size_t i = 0; i + 1 < raw.size(); ++i) {
    if (value_eq(raw[i], raw[i + 1])) return OracleStatus::kFails;
  }

  // Intervals [c_i, c_j] between class representatives, i <= j. Span order
  // and difference order agree iff equal spans carry equal differences and a
  // larger span always carries a strictly larger difference.
  std::vector<std::uint64_t> prefix(k + 1, 0);
  for (std::size_t i = 0; i < k; ++i) prefix[i + 1] = prefix[i] + classes[i].members.size();
  std::map<std::uint64_t, Value> by_span;
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i; j < k; ++j) {
      const std::uint64_t span = prefix[j + 1] - prefix[i];
      const Value diff = classes[j].value - classes[i].value;
      auto [it, inserted] = by_span.emplace(span, diff);
      if (!inserted && !value_eq(it->second, diff)) return OracleStatus::kFails;
    }
  }
  const Value* previous = nullptr;
  for (const auto& [span, diff] : by_span) {
    if (previous != nullptr && value_compare(*previous, diff) >= 0) return OracleStatus::kFails;
    previous = &diff;
  }
  return OracleStatus::kHolds;
}

std::uint64_t interval_span(const OrderedDomain& ordered, std::size_t x, std::size_t y) {
  const std::size_t cx = ordered.class_of(x);
  const std::size_t cy = ordered.class_of(y);
  if (cx > cy) throw std::invalid_argument("interval endpoints are reversed");
  std::uint64_t span = 0;
  for (std::size_t c = cx; c <= cy; ++c) span += ordered.classes()[c].members.size();
  return span;
}

PseudometricReport pseudometric_check(const OrderedDomain& ordered, std::uint64_t max_triples) {
  PseudometricReport report;
  const auto& e = ordered.elements();
  const std::uint64_t n = e.size();
  auto d = [&](std::size_t a, std::size_t b) { return abs(e[a].value - e[b].value); };
  auto fail = [&](const std::string& what) {
    if (report.violations++ == 0) report.first_violation = what;
  };
  auto check = [&](std::size_t x, std::size_t y, std::size_t z) {
    ++report.triples_checked;
    const Value dxy = d(x, y);
    if (!value_eq(d(x, x), Value())) fail("d(x,x) != 0 at " + to_string(e[x].element));
    if (!value_eq(dxy, d(y, x))) {
      fail("asymmetric at " + to_string(e[x].element) + ", " + to_string(e[y].element));
    }
    if (value_compare(d(x, z), dxy + d(y, z)) > 0) {
      fail("triangle inequality fails at " + to_string(e[x].element) + ", " +
           to_string(e[y].element) + ", " + to_string(e[z].element));
    }
  };
  const bool exhaustive = n <= 1'000'000 && n * n * n <= max_triples;
  if (exhaustive) {
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = 0; y < n; ++y) {
        for (std::size_t z = 0; z < n; ++z) check(x, y, z);
      }
    }
  } else {
    std::mt19937_64 rng(0x5eed);
    std::uniform_int_distribution<std::size_t> pick(0, n - 1);
    for (std::uint64_t t = 0; t < max_triples; ++t) check(pick(rng), pick(rng), pick(rng));
  }
  return report;
}

std::string category_name(Category category) {
  switch (category) {
    case Category::kOrdinalPseudometric: return "ordinal/pseudometric";
    case Category::kOrdinalMetric: return "ordinal/metric";
    case Category::kIntervalMetric: return "interval/metric";
  }
  return "?";
}

std::optional<Category> parse_category(std::string_view name) {
  for (Category c : {Category::kOrdinalPseudometric, Category::kOrdinalMetric,
                     Category::kIntervalMetric}) {
    if (category_name(c) == name) return c;
  }
  return std::nullopt;
}

std::string Verdict::witness_summary() const {
  if (collision.size() == 2) {
    return "collision " + collision[0].element + " = " + collision[1].element + " = " +
           value_text(collision[0].value);
  }
  if (triple.size() == 3) {
    return "uneven gaps " + value_text(triple[1].value - triple[0].value) + ", " +
           value_text(triple[2].value - triple[1].value) + " at " + value_text(triple[0].value) +
           " < " + value_text(triple[1].value) + " < " + value_text(triple[2].value);
  }
  if (degenerate) return "single class";
  if (gap) return "gap " + value_text(*gap);
  return "—";
}

Verdict classify(const Measure& measure, const DomainSpec& domain, const ClassifyOptions& options) {
  return classify(measure, domain, induced_order(measure, domain, options.domain_cap),
                  options.oracle_cap);
}

Verdict classify(const Measure& measure, const DomainSpec& domain, const OrderedDomain& ordered,
                 std::size_t oracle_cap) {
  Verdict v;
  v.measure = measure.id();
  v.measure_name = measure.display_name();
  v.domain = domain.to_string();
  v.backend = ordered.backend();
  v.epsilon = ordered.epsilon();
  v.evaluated = ordered.size();
  v.excluded_count = ordered.excluded_count();
  v.excluded = ordered.excluded();
  v.domain_size = v.evaluated + v.excluded_count;
  v.class_count = ordered.classes().size();
  v.min_value = ordered.classes().front().value;
  v.max_value = ordered.classes().back().value;

  auto point = [&](std::size_t pos) {
    const auto& e = ordered.elements()[pos];
    return WitnessPoint{e.index, to_string(e.element), e.value};
  };

  const InjectivityResult inj = check_injective(ordered);
  v.injective = inj.injective;
  if (inj.witness) v.collision = {point((*inj.witness)[0]), point((*inj.witness)[1])};

  const EquispacingResult eq = check_equispaced(ordered);
  v.equispaced = eq.equispaced;
  v.degenerate = eq.degenerate;
  v.gap = eq.gap;
  if (eq.triple) {
    for (std::size_t c : *eq.triple) v.triple.push_back(point(ordered.classes()[c].members.front()));
  }

  if (!v.injective) {
    v.category = Category::kOrdinalPseudometric;
  } else if (v.equispaced && !v.degenerate) {
    v.category = Category::kIntervalMetric;
  } else {
    v.category = Category::kOrdinalMetric;
  }
  v.oracle = interval_scale_oracle(ordered, oracle_cap);
  return v;
}

}  // namespace metriclass
