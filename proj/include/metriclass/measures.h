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

// Evaluation measures over contingency tables, user contexts, rankings and
// leveled outputs. Every function is pure and throws UndefinedValue when the
// formula has no value on the given input.

#ifndef METRICLASS_MEASURES_H_
#define METRICLASS_MEASURES_H_

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <variant>

#include "metriclass/model.h"
#include "metriclass/value.h"

namespace metriclass {

// A measure identifier plus its parameters, addressable as a string:
//   "recall", "prec@4", "dcg?b=2", "rbp?p=1/2", "rbp?p=golden",
//   "utility?alpha=4&beta=1&gamma=2&delta=3".
struct MeasureSpec {
  // Persistence parameter: exact rational, or a real (the golden-ratio
  // conjugate) that forces the approximate backend.
  using Persistence = std::variant<Rational, long double>;

  std::string id;
  std::optional<Persistence> p;
  std::optional<long double> b;
  std::optional<std::array<Rational, 4>> utility;  // alpha, beta, gamma, delta
  std::optional<int> cutoff;

  // Canonical string form; parse(to_string()) reproduces the spec.
  std::string to_string() const;
  static MeasureSpec parse(std::string_view text);

  friend bool operator==(const MeasureSpec&, const MeasureSpec&) = default;
};

// (sqrt(5) - 1) / 2, the persistence at which <1,0,0> and <0,1,1> tie.
long double golden_persistence();

// --- Set-based and user-oriented measures ----------------------------------

// recall, precision, fallout, accuracy, miss-rate, error-rate,
// inverse-recall, inverse-precision, specificity, fdr, for, f-measure,
// generality, utility.
Value eval_contingency(const MeasureSpec& spec, const ContingencyTable& table);

// coverage-ratio, novelty-ratio, recall-effort, retrieval-recall.
Value eval_user_oriented(const MeasureSpec& spec, const UserContext& context);

// --- Rank-based measures ----------------------------------------------------

struct PrecisionRecall {
  Value precision;
  Value recall;
};
// cg(r)/r and cg(r)/(total ideal gain). Cutoff beyond L is out of range.
PrecisionRecall eval_prec_recall_at(int cutoff, const Ranking& ranking,
                                    const Universe& universe);

struct RFamily {
  Value r_precision;
  Value r_wp;
  Value r_measure;
};
// Rankings shorter than R are padded with grade 0.
RFamily eval_r_family(const Ranking& ranking, const Universe& universe);

struct SlidingRatios {
  Value sr;
  Value msr;
};
SlidingRatios eval_sliding(const Ranking& ranking, const Universe& universe);

struct RocchioMeasures {
  Value r_norm;  // exact
  Value p_norm;  // approximate
};
// Requires 0 < R < L and every relevant document retrieved (count(L) == R).
RocchioMeasures eval_rocchio(const Ranking& ranking, const Universe& universe);

struct ApFamily {
  Value ap;
  Value awp;
  Value q_measure;
};
ApFamily eval_ap_family(const Ranking& ranking, const Universe& universe);

struct RankBiased {
  Value rr;
  Value dcg;
  Value rbp;
};
// Uses spec.b for DCG and spec.p for RBP (both required).
RankBiased eval_rank_biased(const Ranking& ranking, const Universe& universe,
                            const MeasureSpec& spec);

Value eval_bpref(const Ranking& ranking, const Universe& universe);

struct XcgFamily {
  Value nxcg;
  Value manxcg;
  Value gr;
};
XcgFamily eval_xcg_family(const Ranking& ranking, const Universe& universe,
                          int cutoff);

// j + i*s/(t+1) over the first level at which the need s is met.
Value eval_esl(const LeveledOutput& output);

// Single-measure entry points used by the registry.
namespace formulas {

Value precision_at(int cutoff, const Ranking& ranking, const Universe& universe);
Value recall_at(int cutoff, const Ranking& ranking, const Universe& universe);
Value r_precision(const Ranking& ranking, const Universe& universe);
Value r_weighted_precision(const Ranking& ranking, const Universe& universe);
Value r_measure(const Ranking& ranking, const Universe& universe);
Value sliding_ratio(const Ranking& ranking, const Universe& universe);
Value modified_sliding_ratio(const Ranking& ranking, const Universe& universe);
Value normalized_recall(const Ranking& ranking, const Universe& universe);
Value normalized_precision(const Ranking& ranking, const Universe& universe);
Value average_precision(const Ranking& ranking, const Universe& universe);
Value average_weighted_precision(const Ranking& ranking,
                                 const Universe& universe);
Value q_measure(const Ranking& ranking, const Universe& universe);
Value reciprocal_rank(const Ranking& ranking);
Value discounted_cumulative_gain(const Ranking& ranking, long double base);
Value rank_biased_precision(const Ranking& ranking,
                            const MeasureSpec::Persistence& p);
Value bpref(const Ranking& ranking, const Universe& universe);
Value nxcg(int cutoff, const Ranking& ranking, const Universe& universe);
Value manxcg(int cutoff, const Ranking& ranking, const Universe& universe);
Value gain_recall(int cutoff, const Ranking& ranking, const Universe& universe);

}  // namespace formulas
}  // namespace metriclass

#endif  // METRICLASS_MEASURES_H_
