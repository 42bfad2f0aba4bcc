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

#include "metriclass/measures.h"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <stdexcept>

#include "metriclass/errors.h"

namespace metriclass {
namespace {

std::string format_real(long double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17Lg", x);
  return buf;
}

std::string describe(const Ranking& ranking, const Universe& universe) {
  return ranking.to_string() + " (R=" + std::to_string(universe.total_relevant) + ")";
}

Rational ratio(std::int64_t num, std::int64_t den, const char* measure,
               const std::string& input, const char* what) {
  if (den == 0) throw UndefinedValue(measure, input, std::string("zero denominator (") + what + ")");
  return Rational(num, den);
}

void check_cutoff(int cutoff, const Ranking& ranking) {
  if (cutoff < 1) throw ParameterError("cutoff must be a positive integer");
  if (cutoff > ranking.length()) {
    throw std::out_of_range("cutoff " + std::to_string(cutoff) +
                            " exceeds ranking length " +
                            std::to_string(ranking.length()));
  }
}

void require_relevant(const Universe& universe, const char* measure,
                      const Ranking& ranking) {
  if (universe.total_relevant == 0) {
    throw UndefinedValue(measure, describe(ranking, universe),
                         "no relevant documents in the universe (R = 0)");
  }
}

}  // namespace

long double golden_persistence() { return (std::sqrt(5.0L) - 1.0L) / 2.0L; }

// --- MeasureSpec -------------------------------------------------------------

std::string MeasureSpec::to_string() const {
  std::string out = id;
  if (cutoff) out += "@" + std::to_string(*cutoff);
  std::vector<std::string> params;
  if (p) {
    if (const auto* exact = std::get_if<Rational>(&*p)) {
      params.push_back("p=" + exact->to_string());
    } else if (std::get<long double>(*p) == golden_persistence()) {
      params.push_back("p=golden");
    } else {
      params.push_back("p=" + format_real(std::get<long double>(*p)));
    }
  }
  if (b) params.push_back("b=" + format_real(*b));
  if (utility) {
    static constexpr const char* kNames[] = {"alpha", "beta", "gamma", "delta"};
    for (int k = 0; k < 4; ++k) {
      params.push_back(std::string(kNames[k]) + "=" + (*utility)[k].to_string());
    }
  }
  for (std::size_t k = 0; k < params.size(); ++k) {
    out += (k == 0 ? "?" : "&") + params[k];
  }
  return out;
}

MeasureSpec MeasureSpec::parse(std::string_view text) {
  MeasureSpec spec;
  std::string_view head = text;
  std::string_view query;
  if (auto q = text.find('?'); q != std::string_view::npos) {
    head = text.substr(0, q);
    query = text.substr(q + 1);
  }
  if (auto at = head.find('@'); at != std::string_view::npos) {
    std::string digits(head.substr(at + 1));
    char* end = nullptr;
    long v = std::strtol(digits.c_str(), &end, 10);
    if (digits.empty() || *end != '\0' || v < 1) {
      throw ParseError("bad cutoff in measure id '" + std::string(text) + "'");
    }
    spec.cutoff = static_cast<int>(v);
    head = head.substr(0, at);
  }
  if (head.empty()) throw ParseError("empty measure id");
  spec.id = std::string(head);

  std::optional<Rational> weights[4];
  while (!query.empty()) {
    auto sep = query.find_first_of("&,");
    std::string_view item = query.substr(0, sep);
    query = sep == std::string_view::npos ? std::string_view() : query.substr(sep + 1);
    auto eq = item.find('=');
    if (eq == std::string_view::npos) {
      throw ParseError("parameter without value in '" + std::string(text) + "'");
    }
    std::string key(item.substr(0, eq));
    std::string value(item.substr(eq + 1));
    if (key == "p") {
      if (value == "golden") {
        spec.p = golden_persistence();
      } else {
        spec.p = Rational::parse(value);
      }
    } else if (key == "b") {
      char* end = nullptr;
      long double v = std::strtold(value.c_str(), &end);
      if (value.empty() || *end != '\0') throw ParseError("bad DCG base '" + value + "'");
      spec.b = v;
    } else if (key == "alpha" || key == "beta" || key == "gamma" || key == "delta") {
      int k = key == "alpha" ? 0 : key == "beta" ? 1 : key == "gamma" ? 2 : 3;
      weights[k] = Rational::parse(value);
    } else {
      throw ParseError("unknown parameter '" + key + "' in '" + std::string(text) + "'");
    }
  }
  if (weights[0] || weights[1] || weights[2] || weights[3]) {
    if (!(weights[0] && weights[1] && weights[2] && weights[3])) {
      throw ParameterError("utility needs all four weights alpha, beta, gamma, delta");
    }
    spec.utility = std::array<Rational, 4>{*weights[0], *weights[1], *weights[2], *weights[3]};
  }
  return spec;
}

// --- Set-based ------------------------------------------------------------------

Value eval_contingency(const MeasureSpec& spec, const ContingencyTable& t) {
  check_consistent(t);
  const std::string input = t.to_string();
  const char* m = spec.id.c_str();
  const std::int64_t n = t.total();
  const std::string& id = spec.id;
  if (id == "recall") return ratio(t.tp, t.tp + t.fn, m, input, "tp + fn = 0");
  if (id == "precision") return ratio(t.tp, t.tp + t.fp, m, input, "tp + fp = 0");
  if (id == "fallout") return ratio(t.fp, t.fp + t.tn, m, input, "fp + tn = 0");
  if (id == "accuracy") return ratio(t.tp + t.tn, n, m, input, "N = 0");
  if (id == "miss-rate") return ratio(t.fn, t.tp + t.fn, m, input, "tp + fn = 0");
  if (id == "error-rate") return ratio(t.fp + t.fn, n, m, input, "N = 0");
  if (id == "inverse-recall") return ratio(t.tn, t.fp + t.tn, m, input, "fp + tn = 0");
  if (id == "inverse-precision") return ratio(t.tn, t.fn + t.tn, m, input, "fn + tn = 0");
  if (id == "specificity") return ratio(t.tn, t.tn + t.fp, m, input, "tn + fp = 0");
  if (id == "fdr") return ratio(t.fp, t.fp + t.tp, m, input, "fp + tp = 0");
  if (id == "for") return ratio(t.fn, t.fn + t.tn, m, input, "fn + tn = 0");
  if (id == "f-measure") {
    return ratio(2 * t.tp, 2 * t.tp + t.fp + t.fn, m, input, "2tp + fp + fn = 0");
  }
  if (id == "generality") return ratio(t.tp + t.fn, n, m, input, "N = 0");
  if (id == "utility") {
    if (!spec.utility) throw ParameterError("utility needs alpha, beta, gamma, delta");
    const auto& w = *spec.utility;
    for (const auto& x : w) {
      if (x.sign() <= 0) throw ParameterError("utility weights must be positive");
    }
    return w[0] * t.tp + w[1] * t.fn + w[2] * t.fp + w[3] * t.tn;
  }
  throw ParameterError("'" + id + "' is not a set-based measure");
}

Value eval_user_oriented(const MeasureSpec& spec, const UserContext& c) {
  check_consistent(c);
  const std::string input = c.to_string();
  const char* m = spec.id.c_str();
  const std::string& id = spec.id;
  if (id == "coverage-ratio") return Rational(c.retrieved_known, c.known_relevant);
  if (id == "retrieval-recall") {
    return Rational(c.retrieved_known + c.retrieved_unknown, c.known_relevant);
  }
  if (id == "novelty-ratio") {
    return ratio(c.retrieved_unknown, c.retrieved_unknown + c.retrieved_known, m,
                 input, "R_u + R_k = 0");
  }
  if (id == "recall-effort") return Rational(c.known_relevant, c.retrieved_total);
  throw ParameterError("'" + id + "' is not a user-oriented measure");
}

// --- Rank-based ---------------------------------------------------------------

namespace formulas {

Value precision_at(int cutoff, const Ranking& ranking, const Universe& universe) {
  check_cutoff(cutoff, ranking);
  DerivedCounts d = derived_counts(ranking, universe);
  return d.cg[cutoff - 1] / Rational(cutoff);
}

Value recall_at(int cutoff, const Ranking& ranking, const Universe& universe) {
  check_cutoff(cutoff, ranking);
  DerivedCounts d = derived_counts(ranking, universe);
  if (d.ideal_total.is_zero()) {
    throw UndefinedValue("recall@" + std::to_string(cutoff), describe(ranking, universe),
                         "no relevant documents in the universe (R = 0)");
  }
  return d.cg[cutoff - 1] / d.ideal_total;
}

namespace {

DerivedCounts r_counts(const Ranking& ranking, const Universe& universe,
                       const char* measure) {
  require_relevant(universe, measure, ranking);
  return derived_counts(ranking.padded_to(static_cast<int>(universe.total_relevant)),
                        universe);
}

}  // namespace

Value r_precision(const Ranking& ranking, const Universe& universe) {
  DerivedCounts d = r_counts(ranking, universe, "r-precision");
  const std::int64_t R = universe.total_relevant;
  return Rational(d.count[R - 1], R);
}

Value r_weighted_precision(const Ranking& ranking, const Universe& universe) {
  DerivedCounts d = r_counts(ranking, universe, "r-wp");
  const std::int64_t R = universe.total_relevant;
  return d.cg[R - 1] / d.cig[R - 1];
}

Value r_measure(const Ranking& ranking, const Universe& universe) {
  DerivedCounts d = r_counts(ranking, universe, "r-measure");
  const std::int64_t R = universe.total_relevant;
  return (d.cg[R - 1] + d.count[R - 1]) / (d.cig[R - 1] + R);
}

Value sliding_ratio(const Ranking& ranking, const Universe& universe) {
  DerivedCounts d = derived_counts(ranking, universe);
  if (d.cig.back().is_zero()) {
    throw UndefinedValue("sr", describe(ranking, universe), "cig(L) = 0");
  }
  return d.cg.back() / d.cig.back();
}

Value modified_sliding_ratio(const Ranking& ranking, const Universe& universe) {
  DerivedCounts d = derived_counts(ranking, universe);
  Rational num;
  Rational den;
  for (int r = 1; r <= ranking.length(); ++r) {
    num += d.gain[r - 1] / Rational(r);
    den += d.ideal_gain[r - 1] / Rational(r);
  }
  if (den.is_zero()) {
    throw UndefinedValue("msr", describe(ranking, universe), "ideal weighted gain is 0");
  }
  return num / den;
}

namespace {

void check_rocchio(const Ranking& ranking, const Universe& universe,
                   const char* measure) {
  const std::int64_t R = universe.total_relevant;
  const int L = ranking.length();
  if (R == 0 || R >= L) {
    throw UndefinedValue(measure, describe(ranking, universe),
                         "requires 0 < R < L (R * (L - R) = 0)");
  }
  check_consistent(ranking, universe);
  if (ranking.relevant_count() != R) {
    throw UndefinedValue(measure, describe(ranking, universe),
                         "requires every relevant document to be ranked (count(L) = R)");
  }
}

}  // namespace

Value normalized_recall(const Ranking& ranking, const Universe& universe) {
  check_rocchio(ranking, universe, "rnorm");
  const std::int64_t R = universe.total_relevant;
  const int L = ranking.length();
  std::int64_t rank_sum = 0;
  for (int r = 1; r <= L; ++r) {
    if (ranking.at(r) > 0) rank_sum += r;
  }
  const std::int64_t ideal_sum = R * (R + 1) / 2;
  return Rational(1) - Rational(rank_sum - ideal_sum, R * (L - R));
}

Value normalized_precision(const Ranking& ranking, const Universe& universe) {
  check_rocchio(ranking, universe, "pnorm");
  const std::int64_t R = universe.total_relevant;
  const int L = ranking.length();
  long double log_sum = 0;
  long double ideal_log_sum = 0;
  for (int r = 1; r <= L; ++r) {
    if (ranking.at(r) > 0) log_sum += std::log(static_cast<long double>(r));
  }
  for (std::int64_t r = 1; r <= R; ++r) {
    ideal_log_sum += std::log(static_cast<long double>(r));
  }
  const long double log_binomial = std::lgamma(static_cast<long double>(L) + 1) -
                                   std::lgamma(static_cast<long double>(R) + 1) -
                                   std::lgamma(static_cast<long double>(L - R) + 1);
  return Value::approx(1.0L - (log_sum - ideal_log_sum) / log_binomial);
}

Value average_precision(const Ranking& ranking, const Universe& universe) {
  require_relevant(universe, "ap", ranking);
  DerivedCounts d = derived_counts(ranking, universe);
  Rational sum;
  for (int r = 1; r <= ranking.length(); ++r) {
    if (d.isrel[r - 1]) sum += Rational(d.count[r - 1], r);
  }
  return sum / Rational(universe.total_relevant);
}

Value average_weighted_precision(const Ranking& ranking, const Universe& universe) {
  require_relevant(universe, "awp", ranking);
  DerivedCounts d = derived_counts(ranking, universe);
  Rational sum;
  for (int r = 1; r <= ranking.length(); ++r) {
    if (d.isrel[r - 1]) sum += d.cg[r - 1] / d.cig[r - 1];
  }
  return sum;
}

Value q_measure(const Ranking& ranking, const Universe& universe) {
  require_relevant(universe, "q-measure", ranking);
  DerivedCounts d = derived_counts(ranking, universe);
  Rational sum;
  for (int r = 1; r <= ranking.length(); ++r) {
    if (d.isrel[r - 1]) {
      sum += (d.cg[r - 1] + d.count[r - 1]) / (d.cig[r - 1] + r);
    }
  }
  return sum / Rational(universe.total_relevant);
}

Value reciprocal_rank(const Ranking& ranking) {
  for (int r = 1; r <= ranking.length(); ++r) {
    if (ranking.at(r) > 0) return Rational(1, r);
  }
  return Rational(0);
}

Value discounted_cumulative_gain(const Ranking& ranking, long double base) {
  if (!(base > 1)) throw ParameterError("DCG base b must be > 1");
  long double sum = 0;
  const long double log_base = std::log(base);
  for (int r = 1; r <= ranking.length(); ++r) {
    const long double discount =
        std::max(1.0L, std::log(static_cast<long double>(r)) / log_base);
    sum += ranking.scheme().gain(ranking.at(r)).to_long_double() / discount;
  }
  return Value::approx(sum);
}

Value rank_biased_precision(const Ranking& ranking,
                            const MeasureSpec::Persistence& p) {
  const GradeScheme& scheme = ranking.scheme();
  const Rational& top_gain = scheme.gain(scheme.top());
  if (const auto* exact = std::get_if<Rational>(&p)) {
    if (!(exact->sign() > 0 && *exact < Rational(1))) {
      throw ParameterError("RBP persistence p must lie in (0, 1)");
    }
    Rational sum;
    Rational weight(1);
    for (int r = 1; r <= ranking.length(); ++r) {
      sum += weight * scheme.gain(ranking.at(r));
      if (r < ranking.length()) weight *= *exact;
    }
    return (Rational(1) - *exact) / top_gain * sum;
  }
  const long double real_p = std::get<long double>(p);
  if (!(real_p > 0 && real_p < 1)) {
    throw ParameterError("RBP persistence p must lie in (0, 1)");
  }
  long double sum = 0;
  long double weight = 1;
  for (int r = 1; r <= ranking.length(); ++r) {
    sum += weight * scheme.gain(ranking.at(r)).to_long_double();
    weight *= real_p;
  }
  return Value::approx((1 - real_p) / top_gain.to_long_double() * sum);
}

Value bpref(const Ranking& ranking, const Universe& universe) {
  require_relevant(universe, "bpref", ranking);
  DerivedCounts d = derived_counts(ranking, universe);
  const std::int64_t R = universe.total_relevant;
  Rational sum;
  for (int r = 1; r <= ranking.length(); ++r) {
    if (!d.isrel[r - 1]) continue;
    const std::int64_t nonrelevant_above = std::min<std::int64_t>(r - d.count[r - 1], R);
    sum += Rational(1) - Rational(nonrelevant_above, R);
  }
  return sum / Rational(R);
}

Value nxcg(int cutoff, const Ranking& ranking, const Universe& universe) {
  check_cutoff(cutoff, ranking);
  require_relevant(universe, "nxcg", ranking);
  DerivedCounts d = derived_counts(ranking, universe);
  return d.cg[cutoff - 1] / d.cig[cutoff - 1];
}

Value manxcg(int cutoff, const Ranking& ranking, const Universe& universe) {
  check_cutoff(cutoff, ranking);
  require_relevant(universe, "manxcg", ranking);
  DerivedCounts d = derived_counts(ranking, universe);
  Rational sum;
  for (int j = 1; j <= cutoff; ++j) sum += d.cg[j - 1] / d.cig[j - 1];
  return sum / Rational(cutoff);
}

Value gain_recall(int cutoff, const Ranking& ranking, const Universe& universe) {
  check_cutoff(cutoff, ranking);
  require_relevant(universe, "gr", ranking);
  DerivedCounts d = derived_counts(ranking, universe);
  return d.cg[cutoff - 1] / d.cig.back();
}

}  // namespace formulas

PrecisionRecall eval_prec_recall_at(int cutoff, const Ranking& ranking,
                                    const Universe& universe) {
  return {formulas::precision_at(cutoff, ranking, universe),
          formulas::recall_at(cutoff, ranking, universe)};
}

RFamily eval_r_family(const Ranking& ranking, const Universe& universe) {
  return {formulas::r_precision(ranking, universe),
          formulas::r_weighted_precision(ranking, universe),
          formulas::r_measure(ranking, universe)};
}

SlidingRatios eval_sliding(const Ranking& ranking, const Universe& universe) {
  return {formulas::sliding_ratio(ranking, universe),
          formulas::modified_sliding_ratio(ranking, universe)};
}

RocchioMeasures eval_rocchio(const Ranking& ranking, const Universe& universe) {
  return {formulas::normalized_recall(ranking, universe),
          formulas::normalized_precision(ranking, universe)};
}

ApFamily eval_ap_family(const Ranking& ranking, const Universe& universe) {
  return {formulas::average_precision(ranking, universe),
          formulas::average_weighted_precision(ranking, universe),
          formulas::q_measure(ranking, universe)};
}

RankBiased eval_rank_biased(const Ranking& ranking, const Universe& universe,
                            const MeasureSpec& spec) {
  check_consistent(ranking, universe);
  if (!spec.b) throw ParameterError("DCG needs base b");
  if (!spec.p) throw ParameterError("RBP needs persistence p");
  return {formulas::reciprocal_rank(ranking),
          formulas::discounted_cumulative_gain(ranking, *spec.b),
          formulas::rank_biased_precision(ranking, *spec.p)};
}

Value eval_bpref(const Ranking& ranking, const Universe& universe) {
  return formulas::bpref(ranking, universe);
}

XcgFamily eval_xcg_family(const Ranking& ranking, const Universe& universe,
                          int cutoff) {
  return {formulas::nxcg(cutoff, ranking, universe),
          formulas::manxcg(cutoff, ranking, universe),
          formulas::gain_recall(cutoff, ranking, universe)};
}

Value eval_esl(const LeveledOutput& output) {
  if (output.need < 1) throw ParameterError("esl need s must be positive");
  std::string input = "levels [";
  for (std::size_t l = 0; l < output.levels.size(); ++l) {
    if (l > 0) input += ",";
    input += "(" + std::to_string(output.levels[l].relevant) + "," +
             std::to_string(output.levels[l].nonrelevant) + ")";
  }
  input += "], s=" + std::to_string(output.need);

  std::int64_t nonrelevant_before = 0;  // j
  std::int64_t relevant_before = 0;
  for (const auto& level : output.levels) {
    if (level.relevant < 0 || level.nonrelevant < 0) {
      throw ConstraintViolation("level counts must be non-negative");
    }
    if (relevant_before + level.relevant >= output.need) {
      const std::int64_t remaining = output.need - relevant_before;  // s
      return Rational(nonrelevant_before) +
             Rational(level.nonrelevant * remaining, level.relevant + 1);
    }
    relevant_before += level.relevant;
    nonrelevant_before += level.nonrelevant;
  }
  throw UndefinedValue("esl", input, "unsatisfiable need: fewer than s relevant documents");
}

}  // namespace metriclass
