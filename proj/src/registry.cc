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

#include "metriclass/registry.h"

#include <cmath>

#include "metriclass/errors.h"

namespace metriclass {
namespace {

constexpr auto kExact = Backend::kExactRational;
constexpr auto kApprox = Backend::kApproxReal;

std::vector<CatalogueEntry> build_catalogue() {
  const Rational zero(0);
  const Rational one(1);
  using P = ParamKind;
  using I = InputKind;
  return {
      {"recall", "recall", I::kContingency, P::kNone, zero, one, kExact},
      {"precision", "precision", I::kContingency, P::kNone, zero, one, kExact},
      {"fallout", "fallout", I::kContingency, P::kNone, zero, one, kExact},
      {"miss-rate", "miss rate", I::kContingency, P::kNone, zero, one, kExact},
      {"accuracy", "classification accuracy", I::kContingency, P::kNone, zero, one, kExact},
      {"error-rate", "error rate", I::kContingency, P::kNone, zero, one, kExact},
      {"inverse-recall", "inverse recall", I::kContingency, P::kNone, zero, one, kExact},
      {"inverse-precision", "inverse precision", I::kContingency, P::kNone, zero, one, kExact},
      {"specificity", "specificity", I::kContingency, P::kNone, zero, one, kExact},
      {"fdr", "false discovery rate", I::kContingency, P::kNone, zero, one, kExact},
      {"for", "false omission rate", I::kContingency, P::kNone, zero, one, kExact},
      {"f-measure", "F-measure", I::kContingency, P::kNone, zero, one, kExact},
      {"generality", "generality factor", I::kContingency, P::kNone, zero, one, kExact},
      {"utility", "utility", I::kContingency, P::kUtility, zero, std::nullopt, kExact},
      {"coverage-ratio", "coverage ratio", I::kUserContext, P::kNone, zero, one, kExact},
      {"retrieval-recall", "retrieval recall", I::kUserContext, P::kNone, zero, std::nullopt, kExact},
      {"novelty-ratio", "novelty ratio", I::kUserContext, P::kNone, zero, one, kExact},
      {"recall-effort", "recall effort", I::kUserContext, P::kNone, zero, std::nullopt, kExact},
      {"prec", "Prec@r", I::kRanking, P::kCutoff, zero, one, kExact},
      {"recall", "recall@r", I::kRanking, P::kCutoff, zero, one, kExact},
      {"r-precision", "R-precision", I::kRanking, P::kNone, zero, one, kExact},
      {"sr", "sliding ratio", I::kRanking, P::kNone, zero, one, kExact},
      {"msr", "modified sliding ratio", I::kRanking, P::kNone, zero, one, kExact},
      {"rnorm", "Rnorm", I::kRanking, P::kNone, zero, one, kExact},
      {"pnorm", "Pnorm", I::kRanking, P::kNone, zero, one, kApprox},
      {"r-wp", "R-WP", I::kRanking, P::kNone, zero, one, kExact},
      {"r-measure", "R-measure", I::kRanking, P::kNone, zero, one, kExact},
      {"ap", "AP", I::kRanking, P::kNone, zero, one, kExact},
      {"awp", "AWP", I::kRanking, P::kNone, zero, std::nullopt, kExact},
      {"q-measure", "Q-measure", I::kRanking, P::kNone, zero, one, kExact},
      {"rr", "RR", I::kRanking, P::kNone, zero, one, kExact},
      {"dcg", "DCG_b", I::kRanking, P::kBase, zero, std::nullopt, kApprox},
      {"rbp", "RBP_p", I::kRanking, P::kPersistence, zero, one, std::nullopt},
      {"bpref", "bpref", I::kRanking, P::kNone, zero, one, kExact},
      {"nxcg", "nxCG[r]", I::kRanking, P::kCutoff, zero, one, kExact},
      {"manxcg", "MAnxCG[r]", I::kRanking, P::kCutoff, zero, one, kExact},
      {"gr", "gr[r]", I::kRanking, P::kCutoff, zero, one, kExact},
      {"esl", "esl", I::kLeveled, P::kNone, zero, std::nullopt, kExact},
  };
}

}  // namespace

std::string input_kind_name(InputKind kind) {
  switch (kind) {
    case InputKind::kContingency: return "contingency";
    case InputKind::kUserContext: return "user-context";
    case InputKind::kRanking: return "ranking";
    case InputKind::kLeveled: return "leveled";
  }
  return "?";
}

const std::vector<CatalogueEntry>& catalogue() {
  static const std::vector<CatalogueEntry> kCatalogue = build_catalogue();
  return kCatalogue;
}

const CatalogueEntry* find_entry(std::string_view id) {
  for (const auto& e : catalogue()) {
    if (e.id == id) return &e;
  }
  return nullptr;
}

namespace {

// "recall" names both the set-based measure and recall@r; the cutoff picks.
const CatalogueEntry* resolve(const MeasureSpec& spec) {
  for (const auto& e : catalogue()) {
    if (e.id != spec.id) continue;
    bool wants_cutoff = e.params == ParamKind::kCutoff;
    if (wants_cutoff == spec.cutoff.has_value()) return &e;
  }
  for (const auto& e : catalogue()) {
    if (e.id == spec.id) return &e;
  }
  return nullptr;
}

}  // namespace

Measure Measure::parse(std::string_view id) { return Measure(MeasureSpec::parse(id)); }

Measure::Measure(MeasureSpec spec) : spec_(std::move(spec)), entry_(resolve(spec_)) {
  if (entry_ == nullptr) throw ParseError("unknown measure '" + spec_.id + "'");
  const std::string id = spec_.to_string();
  const ParamKind params = entry_->params;
  if ((params == ParamKind::kCutoff) != spec_.cutoff.has_value()) {
    throw ParameterError(params == ParamKind::kCutoff
                             ? "measure '" + spec_.id + "' needs a cutoff, e.g. " + spec_.id + "@4"
                             : "measure '" + spec_.id + "' takes no cutoff");
  }
  if ((params == ParamKind::kPersistence) != spec_.p.has_value()) {
    throw ParameterError(params == ParamKind::kPersistence
                             ? "rbp needs persistence p, e.g. rbp?p=1/2"
                             : "measure '" + id + "' takes no parameter p");
  }
  if ((params == ParamKind::kBase) != spec_.b.has_value()) {
    throw ParameterError(params == ParamKind::kBase
                             ? "dcg needs base b, e.g. dcg?b=2"
                             : "measure '" + id + "' takes no parameter b");
  }
  if ((params == ParamKind::kUtility) != spec_.utility.has_value()) {
    throw ParameterError(params == ParamKind::kUtility
                             ? "utility needs alpha, beta, gamma, delta"
                             : "measure '" + id + "' takes no utility weights");
  }
  if (spec_.p) {
    bool ok = std::visit(
        [](const auto& p) {
          if constexpr (std::is_same_v<std::decay_t<decltype(p)>, Rational>) {
            return p.sign() > 0 && p < Rational(1);
          } else {
            return p > 0 && p < 1;
          }
        },
        *spec_.p);
    if (!ok) throw ParameterError("RBP persistence p must lie in (0, 1)");
  }
  if (spec_.b && !(*spec_.b > 1)) throw ParameterError("DCG base b must be > 1");
  if (spec_.utility) {
    for (const auto& w : *spec_.utility) {
      if (w.sign() <= 0) throw ParameterError("utility weights must be positive");
    }
  }
}

std::string Measure::display_name() const {
  std::string name(entry_->name);
  if (spec_.cutoff) {
    if (auto pos = name.find("r]"); pos != std::string::npos) {
      name.replace(pos, 1, std::to_string(*spec_.cutoff));
    } else if (auto at = name.find("@r"); at != std::string::npos) {
      name.replace(at + 1, 1, std::to_string(*spec_.cutoff));
    }
  }
  if (spec_.b || spec_.p) {
    // "dcg?b=2" -> "DCG_2", "rbp?p=1/2" -> "RBP_1/2"
    std::string id = spec_.to_string();
    name = name.substr(0, name.size() - 1) + id.substr(id.find('=') + 1);
  }
  return name;
}

Backend Measure::backend() const {
  if (entry_->fixed_backend) return *entry_->fixed_backend;
  return std::holds_alternative<Rational>(*spec_.p) ? Backend::kExactRational
                                                    : Backend::kApproxReal;
}

Value Measure::evaluate(const DomainElement& element) const {
  const InputKind kind = entry_->input;
  if (const auto* t = std::get_if<ContingencyTable>(&element)) {
    if (kind == InputKind::kContingency) return eval_contingency(spec_, *t);
  } else if (const auto* c = std::get_if<UserContext>(&element)) {
    if (kind == InputKind::kUserContext) return eval_user_oriented(spec_, *c);
  } else if (const auto* l = std::get_if<LeveledRanking>(&element)) {
    if (kind == InputKind::kLeveled) return eval_esl(l->counts());
  } else if (const auto* o = std::get_if<RankedOutput>(&element)) {
    if (kind == InputKind::kRanking) {
      using namespace formulas;
      const Ranking& x = o->ranking;
      const Universe& u = o->universe;
      const std::string_view id = entry_->id;
      const int k = spec_.cutoff.value_or(0);
      if (id == "prec") return precision_at(k, x, u);
      if (id == "recall") return recall_at(k, x, u);
      if (id == "r-precision") return r_precision(x, u);
      if (id == "sr") return sliding_ratio(x, u);
      if (id == "msr") return modified_sliding_ratio(x, u);
      if (id == "rnorm") return normalized_recall(x, u);
      if (id == "pnorm") return normalized_precision(x, u);
      if (id == "r-wp") return r_weighted_precision(x, u);
      if (id == "r-measure") return r_measure(x, u);
      if (id == "ap") return average_precision(x, u);
      if (id == "awp") return average_weighted_precision(x, u);
      if (id == "q-measure") return q_measure(x, u);
      check_consistent(x, u);
      if (id == "rr") return reciprocal_rank(x);
      if (id == "dcg") return discounted_cumulative_gain(x, *spec_.b);
      if (id == "rbp") return rank_biased_precision(x, *spec_.p);
      if (id == "bpref") return bpref(x, u);
      if (id == "nxcg") return nxcg(k, x, u);
      if (id == "manxcg") return manxcg(k, x, u);
      if (id == "gr") return gain_recall(k, x, u);
    }
  }
  throw ConfigurationError("measure '" + id() + "' expects " + input_kind_name(kind) +
                           " input, got " + to_string(element));
}

bool Measure::within_bounds(const Value& v, const DomainElement& element) const {
  const long double slack = v.is_exact() ? 0 : v.epsilon();
  auto below = [&](const Rational& bound) {
    return v.is_exact() ? v.exact() < bound : v.real() < bound.to_long_double() - slack;
  };
  auto above = [&](const Rational& bound) {
    return v.is_exact() ? v.exact() > bound : v.real() > bound.to_long_double() + slack;
  };
  if (below(entry_->lower)) return false;
  if (entry_->upper && above(*entry_->upper)) return false;
  if (entry_->id == "awp") {
    if (const auto* o = std::get_if<RankedOutput>(&element)) {
      if (above(Rational(o->universe.total_relevant))) return false;
    }
  }
  return true;
}

}  // namespace metriclass
