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

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <limits>
#include <map>
#include <memory>
#include <numeric>
#include <stdexcept>

#include "metriclass/errors.h"

namespace metriclass {
namespace {

using u128 = unsigned __int128;
constexpr std::uint64_t kSaturated = std::numeric_limits<std::uint64_t>::max();

std::uint64_t saturate(u128 x) { return x > kSaturated ? kSaturated : static_cast<std::uint64_t>(x); }

std::int64_t parse_integer(std::string_view text, std::string_view key) {
  std::int64_t v = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size() || text.empty()) {
    throw ParseError("bad integer '" + std::string(text) + "' for key '" +
                     std::string(key) + "'");
  }
  return v;
}

IntRange parse_range(std::string_view text, std::string_view key) {
  if (auto dots = text.find(".."); dots != std::string_view::npos) {
    IntRange r{parse_integer(text.substr(0, dots), key),
               parse_integer(text.substr(dots + 2), key)};
    if (r.lo > r.hi) throw ParseError("empty range '" + std::string(text) + "'");
    return r;
  }
  std::int64_t v = parse_integer(text, key);
  return {v, v};
}

std::string format_range(const IntRange& r) {
  if (r.lo == r.hi) return std::to_string(r.lo);
  return std::to_string(r.lo) + ".." + std::to_string(r.hi);
}

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> parts;
  while (true) {
    auto pos = text.find(sep);
    parts.push_back(text.substr(0, pos));
    if (pos == std::string_view::npos) break;
    text.remove_prefix(pos + 1);
  }
  return parts;
}

bool is_ranking_kind(DomainKind kind) {
  return kind == DomainKind::kBinary || kind == DomainKind::kGraded ||
         kind == DomainKind::kLeveled;
}

bool uniform_gains(const std::vector<Rational>& gains) {
  const auto g = static_cast<std::int64_t>(gains.size());
  for (std::int64_t k = 0; k < g; ++k) {
    if (gains[k] != Rational(k, g - 1)) return false;
  }
  return true;
}

u128 binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || k > n) return 0;
  u128 result = 1;
  for (std::int64_t i = 1; i <= k; ++i) result = result * (n - k + i) / i;
  return result;
}

// Number of length-L grade sequences honouring the relevant-count and
// inventory constraints: sum over relevant counts k of C(L, k) (G-1)^k, or
// the multinomial sum when per-grade limits apply.
u128 count_rankings(const DomainSpec& spec, std::int64_t L) {
  const auto G = static_cast<std::int64_t>(spec.gains.size());
  const std::int64_t limit = std::min(L, spec.total_relevant.value_or(L));
  auto allowed = [&](std::int64_t k) {
    return k <= limit && (!spec.retrieved_relevant || *spec.retrieved_relevant == k);
  };
  if (spec.inventory.empty()) {
    u128 total = 0;
    for (std::int64_t k = 0; k <= L; ++k) {
      if (!allowed(k)) continue;
      u128 term = binomial(L, k);
      for (std::int64_t i = 0; i < k; ++i) term *= static_cast<u128>(G - 1);
      total += term;
    }
    return total;
  }
  // Choose c_g documents of each relevant grade; arrangements are
  // C(L, c_1) C(L - c_1, c_2) ...
  u128 total = 0;
  std::function<void(std::size_t, std::int64_t, std::int64_t, u128)> rec =
      [&](std::size_t g, std::int64_t free, std::int64_t used, u128 ways) {
        if (g == spec.inventory.size()) {
          if (allowed(used)) total += ways;
          return;
        }
        for (std::int64_t c = 0; c <= std::min(free, spec.inventory[g]); ++c) {
          rec(g + 1, free - c, used + c, ways * binomial(free, c));
        }
      };
  rec(0, L, 0, 1);
  return total;
}

struct RankingStream {
  const DomainSpec& spec;
  std::span<const Grade> prefix;
  std::shared_ptr<const GradeScheme> scheme;
  const std::function<void(std::vector<Grade>&)>& emit;

  std::int64_t L = 0;
  std::int64_t relevant_limit = 0;
  std::vector<Grade> current;
  std::vector<std::int64_t> per_grade;

  void run_length(std::int64_t length) {
    L = length;
    relevant_limit = std::min(L, spec.total_relevant.value_or(L));
    if (spec.retrieved_relevant) relevant_limit = std::min(relevant_limit, *spec.retrieved_relevant);
    current.assign(L, 0);
    per_grade.assign(spec.gains.size(), 0);
    const std::int64_t top = static_cast<std::int64_t>(spec.gains.size()) - 1;
    for (std::int64_t degree = 0; degree <= top * L; ++degree) fill(0, degree, 0);
  }

  void fill(std::int64_t pos, std::int64_t remaining, std::int64_t relevant) {
    const std::int64_t top = static_cast<std::int64_t>(spec.gains.size()) - 1;
    if (pos == L) {
      if (remaining != 0) return;
      if (spec.retrieved_relevant && relevant != *spec.retrieved_relevant) return;
      emit(current);
      return;
    }
    const std::int64_t capacity_after = top * (L - pos - 1);
    std::int64_t hi = std::min(top, remaining);
    std::int64_t lo = std::max<std::int64_t>(0, remaining - capacity_after);
    if (pos < static_cast<std::int64_t>(prefix.size())) {
      const std::int64_t forced = prefix[pos];
      if (forced < lo || forced > hi) return;
      lo = hi = forced;
    }
    for (std::int64_t v = hi; v >= lo; --v) {
      const std::int64_t rel = relevant + (v > 0 ? 1 : 0);
      if (rel > relevant_limit) continue;
      if (v > 0 && !spec.inventory.empty() &&
          per_grade[v] + 1 > spec.inventory[v - 1]) {
        continue;
      }
      current[pos] = static_cast<Grade>(v);
      ++per_grade[v];
      fill(pos + 1, remaining - v, rel);
      --per_grade[v];
    }
  }
};

Universe universe_for(const DomainSpec& spec, std::int64_t L) {
  Universe u;
  u.total_relevant = spec.total_relevant.value_or(L);
  u.collection_size = spec.collection_size.value_or(std::max(L, u.total_relevant));
  if (!spec.inventory.empty()) {
    u.inventory.push_back(0);
    u.inventory.insert(u.inventory.end(), spec.inventory.begin(), spec.inventory.end());
  }
  return u;
}

void stream_rankings(const DomainSpec& spec, std::span<const Grade> prefix,
                     const ElementVisitor& visit) {
  auto scheme = std::make_shared<const GradeScheme>(spec.gains);
  for (std::int64_t L = spec.length.lo; L <= spec.length.hi; ++L) {
    const Universe universe = universe_for(spec, L);
    std::function<void(std::vector<Grade>&)> emit;
    if (spec.kind == DomainKind::kLeveled) {
      emit = [&](std::vector<Grade>& grades) {
        Ranking ranking(scheme, grades);
        const std::uint64_t masks = std::uint64_t{1} << (L - 1);
        for (std::uint64_t mask = 0; mask < masks; ++mask) {
          LeveledRanking element{ranking, {}, spec.need};
          int size = 1;
          for (std::int64_t i = 0; i + 1 < L; ++i) {
            if (mask & (std::uint64_t{1} << i)) {
              element.level_sizes.push_back(size);
              size = 1;
            } else {
              ++size;
            }
          }
          element.level_sizes.push_back(size);
          visit(DomainElement(std::move(element)));
        }
      };
    } else {
      emit = [&](std::vector<Grade>& grades) {
        visit(DomainElement(RankedOutput{Ranking(scheme, grades), universe}));
      };
    }
    RankingStream stream{spec, prefix, scheme, emit, 0, 0, {}, {}};
    stream.run_length(L);
  }
}

void check_cap(const DomainSpec& spec, std::uint64_t cap) {
  const std::uint64_t n = cardinality(spec);
  if (n > cap) throw DomainTooLarge(n, cap);
}

}  // namespace

DomainSpec DomainSpec::parse(std::string_view text) {
  DomainSpec spec;
  auto colon = text.find(':');
  std::string_view kind = text.substr(0, colon);
  std::string_view body = colon == std::string_view::npos ? std::string_view() : text.substr(colon + 1);
  static const std::map<std::string_view, DomainKind> kKinds = {
      {"binary", DomainKind::kBinary},         {"graded", DomainKind::kGraded},
      {"contingency", DomainKind::kContingency}, {"user", DomainKind::kUserContext},
      {"leveled", DomainKind::kLeveled}};
  auto it = kKinds.find(kind);
  if (it == kKinds.end()) throw ParseError("unknown domain kind '" + std::string(kind) + "'");
  spec.kind = it->second;

  std::map<std::string, std::string_view> items;
  if (!body.empty()) {
    for (std::string_view item : split(body, ',')) {
      auto eq = item.find('=');
      if (eq == std::string_view::npos) {
        throw ParseError("expected key=value in domain spec, got '" + std::string(item) + "'");
      }
      std::string key(item.substr(0, eq));
      if (!items.emplace(key, item.substr(eq + 1)).second) {
        throw ParseError("duplicate key '" + key + "' in domain spec");
      }
    }
  }
  auto take = [&](const std::string& key) -> std::optional<std::string_view> {
    auto found = items.find(key);
    if (found == items.end()) return std::nullopt;
    std::string_view v = found->second;
    items.erase(found);
    return v;
  };
  auto take_int = [&](const std::string& key) -> std::optional<std::int64_t> {
    if (auto v = take(key)) return parse_integer(*v, key);
    return std::nullopt;
  };

  switch (spec.kind) {
    case DomainKind::kBinary:
    case DomainKind::kGraded:
    case DomainKind::kLeveled: {
      if (spec.kind == DomainKind::kGraded) {
        auto g = take_int("G");
        auto gains = take("gains");
        if (g && gains) throw ParseError("give either G or gains, not both");
        if (g) {
          if (*g < 2) throw ParseError("G must be >= 2");
          spec.gains = GradeScheme::uniform(static_cast<int>(*g)).gains();
        } else if (gains) {
          spec.gains.clear();
          for (auto part : split(*gains, ';')) spec.gains.push_back(Rational::parse(part));
          try {
            GradeScheme check(spec.gains);
          } catch (const ConstraintViolation& e) {
            throw ParseError(std::string("bad gains: ") + e.what());
          }
        } else {
          throw ParseError("graded domain needs G=<grades> or gains=<list>");
        }
        if (auto inv = take("inventory")) {
          for (auto part : split(*inv, ';')) spec.inventory.push_back(parse_integer(part, "inventory"));
        }
      }
      auto length = take("L");
      if (!length) throw ParseError("ranking domain needs L");
      spec.length = parse_range(*length, "L");
      if (spec.length.lo < 1) throw ParseError("L must be >= 1");
      if (spec.kind == DomainKind::kLeveled) {
        spec.need = take_int("s").value_or(1);
        if (spec.need < 1) throw ParseError("s must be >= 1");
        if (spec.length.hi > 20) throw ParseError("leveled domains support L <= 20");
        break;
      }
      spec.total_relevant = take_int("R");
      spec.collection_size = take_int("N");
      spec.retrieved_relevant = take_int("rel");
      break;
    }
    case DomainKind::kContingency: {
      auto n = take_int("N");
      auto r = take_int("R");
      if (!n || !r) throw ParseError("contingency domain needs N and R");
      spec.collection_size = n;
      spec.total_relevant = r;
      if (auto range = take("n")) {
        spec.retrieved = parse_range(*range, "n");
      } else {
        spec.retrieved = {0, *n};
      }
      break;
    }
    case DomainKind::kUserContext: {
      spec.known_relevant = take_int("U").value_or(1);
      auto a = take("A");
      if (!a) throw ParseError("user domain needs A");
      spec.retrieved = parse_range(*a, "A");
      break;
    }
  }
  if (!items.empty()) {
    throw ParseError("unknown key '" + items.begin()->first + "' for domain kind '" +
                     std::string(kind) + "'");
  }

  // Invariants.
  if (is_ranking_kind(spec.kind)) {
    if (!spec.inventory.empty()) {
      if (spec.inventory.size() + 1 != spec.gains.size()) {
        throw ParseError("inventory needs one count per relevant grade");
      }
      const std::int64_t total =
          std::accumulate(spec.inventory.begin(), spec.inventory.end(), std::int64_t{0});
      if (spec.total_relevant && *spec.total_relevant != total) {
        throw ParseError("inventory does not sum to R");
      }
      spec.total_relevant = total;
    }
    if (spec.total_relevant && *spec.total_relevant < 0) throw ParseError("R must be >= 0");
    if (spec.collection_size) {
      if (*spec.collection_size < spec.length.hi) throw ParseError("N must be >= L");
      if (*spec.collection_size < spec.total_relevant.value_or(0)) throw ParseError("R must be <= N");
    }
    if (spec.retrieved_relevant && (*spec.retrieved_relevant < 0 ||
                                    *spec.retrieved_relevant > spec.total_relevant.value_or(spec.length.hi))) {
      throw ParseError("rel must lie in 0..R");
    }
  } else if (spec.kind == DomainKind::kContingency) {
    if (*spec.total_relevant < 0 || *spec.total_relevant > *spec.collection_size) {
      throw ParseError("contingency domain needs 0 <= R <= N");
    }
    if (spec.retrieved.lo < 0 || spec.retrieved.hi > *spec.collection_size) {
      throw ParseError("retrieved size n must lie in 0..N");
    }
  } else {
    if (spec.known_relevant < 1) throw ParseError("U must be >= 1");
    if (spec.retrieved.lo < 1) throw ParseError("A must be >= 1");
  }
  return spec;
}

std::string DomainSpec::to_string() const {
  std::string out;
  auto add = [&](const std::string& key, const std::string& value) {
    out += (out.back() == ':' ? "" : ",") + key + "=" + value;
  };
  switch (kind) {
    case DomainKind::kBinary:
    case DomainKind::kGraded:
    case DomainKind::kLeveled: {
      out = kind == DomainKind::kBinary ? "binary:" : kind == DomainKind::kGraded ? "graded:" : "leveled:";
      if (kind == DomainKind::kGraded) {
        if (uniform_gains(gains)) {
          add("G", std::to_string(gains.size()));
        } else {
          std::string list;
          for (std::size_t k = 0; k < gains.size(); ++k) list += (k ? ";" : "") + gains[k].to_string();
          add("gains", list);
        }
      }
      add("L", format_range(length));
      if (kind == DomainKind::kLeveled) {
        add("s", std::to_string(need));
        break;
      }
      if (total_relevant) add("R", std::to_string(*total_relevant));
      if (collection_size) add("N", std::to_string(*collection_size));
      if (retrieved_relevant) add("rel", std::to_string(*retrieved_relevant));
      if (!inventory.empty()) {
        std::string list;
        for (std::size_t k = 0; k < inventory.size(); ++k) list += (k ? ";" : "") + std::to_string(inventory[k]);
        add("inventory", list);
      }
      break;
    }
    case DomainKind::kContingency:
      out = "contingency:";
      add("N", std::to_string(collection_size.value_or(0)));
      add("R", std::to_string(total_relevant.value_or(0)));
      add("n", format_range(retrieved));
      break;
    case DomainKind::kUserContext:
      out = "user:";
      add("U", std::to_string(known_relevant));
      add("A", format_range(retrieved));
      break;
  }
  return out;
}

std::uint64_t default_domain_cap() {
  if (const char* env = std::getenv("METRICLASS_MAX_DOMAIN")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0') return v;
  }
  return 10'000'000;
}

std::uint64_t cardinality(const DomainSpec& spec) {
  u128 total = 0;
  switch (spec.kind) {
    case DomainKind::kBinary:
    case DomainKind::kGraded:
      for (std::int64_t L = spec.length.lo; L <= spec.length.hi; ++L) total += count_rankings(spec, L);
      break;
    case DomainKind::kLeveled:
      for (std::int64_t L = spec.length.lo; L <= spec.length.hi; ++L) {
        total += count_rankings(spec, L) * (u128{1} << (L - 1));
      }
      break;
    case DomainKind::kContingency: {
      const std::int64_t N = *spec.collection_size;
      const std::int64_t R = *spec.total_relevant;
      for (std::int64_t n = spec.retrieved.lo; n <= spec.retrieved.hi; ++n) {
        const std::int64_t feasible = std::min(R, n) - std::max<std::int64_t>(0, n - (N - R)) + 1;
        if (feasible > 0) total += feasible;
      }
      break;
    }
    case DomainKind::kUserContext:
      for (std::int64_t A = spec.retrieved.lo; A <= spec.retrieved.hi; ++A) {
        for (std::int64_t rk = 0; rk <= std::min(spec.known_relevant, A); ++rk) total += A - rk + 1;
      }
      break;
  }
  return saturate(total);
}

void enumerate(const DomainSpec& spec, const ElementVisitor& visit, std::uint64_t cap) {
  check_cap(spec, cap);
  switch (spec.kind) {
    case DomainKind::kBinary:
    case DomainKind::kGraded:
    case DomainKind::kLeveled:
      stream_rankings(spec, {}, visit);
      return;
    case DomainKind::kContingency: {
      const std::int64_t N = *spec.collection_size;
      const std::int64_t R = *spec.total_relevant;
      for (std::int64_t n = spec.retrieved.lo; n <= spec.retrieved.hi; ++n) {
        for (std::int64_t tp = std::max<std::int64_t>(0, n - (N - R)); tp <= std::min(R, n); ++tp) {
          const std::int64_t fp = n - tp;
          visit(DomainElement(ContingencyTable{tp, fp, R - tp, N - R - fp}));
        }
      }
      return;
    }
    case DomainKind::kUserContext:
      for (std::int64_t A = spec.retrieved.lo; A <= spec.retrieved.hi; ++A) {
        for (std::int64_t rk = 0; rk <= std::min(spec.known_relevant, A); ++rk) {
          for (std::int64_t ru = 0; ru <= A - rk; ++ru) {
            visit(DomainElement(UserContext{spec.known_relevant, rk, ru, A}));
          }
        }
      }
      return;
  }
}

void enumerate_with_prefix(const DomainSpec& spec, std::span<const Grade> prefix,
                           const ElementVisitor& visit, std::uint64_t cap) {
  if (!is_ranking_kind(spec.kind)) {
    throw ConfigurationError("prefix enumeration needs a ranking domain");
  }
  check_cap(spec, cap);
  stream_rankings(spec, prefix, visit);
}

DomainElement element_at(const DomainSpec& spec, std::uint64_t index, std::uint64_t cap) {
  std::optional<DomainElement> found;
  std::uint64_t position = 0;
  enumerate(spec, [&](const DomainElement& e) {
    if (position++ == index) found = e;
  }, cap);
  if (!found) throw std::out_of_range("domain " + spec.to_string() + " has no element " + std::to_string(index));
  return *found;
}

std::vector<DomainElement> materialize(const DomainSpec& spec, std::uint64_t cap) {
  std::vector<DomainElement> out;
  out.reserve(static_cast<std::size_t>(std::min<std::uint64_t>(cardinality(spec), cap)));
  enumerate(spec, [&](const DomainElement& e) { out.push_back(e); }, cap);
  return out;
}

}  // namespace metriclass
