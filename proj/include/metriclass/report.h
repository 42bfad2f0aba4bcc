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

// Classification reports: suites of (measure, domains) rows compared with a
// published category, rendered as text, CSV or markdown tables, serialized as
// JSON (schema "metriclass/1"), and Hasse diagrams as DOT.

#ifndef METRICLASS_REPORT_H_
#define METRICLASS_REPORT_H_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "metriclass/intrinsic.h"

namespace metriclass {

inline constexpr std::string_view kToolVersion = "0.1.0";
inline constexpr std::string_view kSchemaTag = "metriclass/1";

struct SuiteRow {
  std::string label;                   // row label, e.g. "precision"
  std::string measure;                 // measure id
  std::vector<std::string> domains;    // domain specs, each classified
  std::optional<Category> published;   // nullopt: no published row
  bool contested = false;              // published cell known to be disputed
  std::string note;
};

struct SuiteSection {
  std::string name;   // "set-based", "rank-based"
  std::string title;
  std::vector<SuiteRow> rows;
};

struct Suite {
  std::string name;
  std::vector<SuiteSection> sections;
};

// The default suite reproducing the two published classification tables.
// Throws std::invalid_argument for an unknown name.
Suite find_suite(std::string_view name);  // "paper"

enum class Agreement { kAgree, kDisagree, kContested, kNotListed };

std::string agreement_name(Agreement a);  // "agree", "disagree", ...

struct ReportRow {
  std::string label;
  std::string measure;
  std::optional<Category> published;
  bool contested = false;
  std::string note;
  std::vector<Verdict> verdicts;  // one per domain, in suite order
  // Some verdict's category equals the published one.
  bool matches_published = false;
  Agreement agreement = Agreement::kNotListed;

  // The verdict whose evidence the row shows: the first matching the
  // published category, else the first with a witness, else the first.
  const Verdict& featured() const;
  // "Prec@4: ⟨1,0,0,0⟩ = ⟨0,1,0,0⟩ = 1/4" or "—".
  std::string witness_text() const;

  friend bool operator==(const ReportRow&, const ReportRow&) = default;
};

struct ReportSection {
  std::string name;
  std::string title;
  std::vector<ReportRow> rows;
  friend bool operator==(const ReportSection&, const ReportSection&) = default;
};

struct ClassificationReport {
  std::string tool_version{kToolVersion};
  std::string suite;
  std::vector<ReportSection> sections;
  friend bool operator==(const ClassificationReport&,
                         const ClassificationReport&) = default;
};

// Derives matches_published and agreement from the verdicts.
void settle_agreement(ReportRow& row);

ClassificationReport run_suite(const Suite& suite,
                               const ClassifyOptions& options = {});

// A single-section report over explicit verdicts (no published column).
ClassificationReport report_from_verdicts(std::vector<Verdict> verdicts);

enum class TableFormat { kText, kCsv, kMarkdown };

// Throws std::invalid_argument for names other than text, csv, markdown.
TableFormat parse_table_format(std::string_view name);

// Text and markdown: one row per measure with category columns marking the
// domain variants that produced them. CSV: one row per verdict. Throws
// std::invalid_argument on an empty report.
std::string render_table(const ClassificationReport& report, TableFormat format);

std::string emit_json_report(const ClassificationReport& report);
// Throws ParseError on malformed input or a different schema tag.
ClassificationReport parse_json_report(std::string_view text);

struct DotLabels {
  enum class Mode { kMembers, kValueOnly } mode = Mode::kMembers;
  std::size_t max_members = 8;  // members beyond this are summarized
};

// Bottom-to-top chain, one node per class with its value (and members),
// edges labelled with their weights.
std::string export_dot(const HasseDiagram& hasse, const DotLabels& labels = {});

}  // namespace metriclass

#endif  // METRICLASS_REPORT_H_
