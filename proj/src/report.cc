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

#include "metriclass/report.h"

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <map>
#include <sstream>
#include <stdexcept>

#include "json.hpp"
#include "metriclass/errors.h"

namespace metriclass {
namespace {

using nlohmann::json;

constexpr auto kPseudo = Category::kOrdinalPseudometric;
constexpr auto kOrdMetric = Category::kOrdinalMetric;
constexpr auto kInterval = Category::kIntervalMetric;

std::string short_category(Category c) {
  switch (c) {
    case Category::kOrdinalPseudometric: return "ord/pseudom";
    case Category::kOrdinalMetric: return "ord/metr";
    case Category::kIntervalMetric: return "interv/metr";
  }
  return "?";
}

SuiteSection set_based_section() {
  const std::string c5 = "contingency:N=15,R=5,n=5";
  const std::string cv = "contingency:N=15,R=5,n=0..15";
  const std::string user = "user:U=1,A=1..3";
  SuiteSection s{"set-based", "Set-based and user-oriented measures", {}};
  auto add = [&](std::string label, std::string id, std::vector<std::string> domains,
                 std::optional<Category> published, bool contested = false, std::string note = {}) {
    s.rows.push_back({std::move(label), std::move(id), std::move(domains), published, contested,
                      std::move(note)});
  };
  add("recall", "recall", {c5, cv}, kInterval);
  add("precision", "precision", {c5, cv}, kInterval);
  add("fallout", "fallout", {c5, cv}, kInterval);
  add("miss rate", "miss-rate", {c5, cv}, kInterval);
  add("classification accuracy", "accuracy", {c5, cv}, kInterval);
  add("error rate", "error-rate", {c5, cv}, kInterval);
  add("inverse recall", "inverse-recall", {c5, cv}, kInterval);
  add("inverse precision", "inverse-precision", {c5, cv}, kInterval);
  add("specificity", "specificity", {c5, cv}, kInterval);
  add("false discovery rate", "fdr", {c5, cv}, kInterval);
  add("false omission rate", "for", {c5, cv}, kInterval);
  add("F-measure", "f-measure", {c5, cv}, kOrdMetric, true,
      "published worked values do not follow from the formula");
  add("generality factor", "generality", {c5, cv}, kPseudo);
  add("utility", "utility?alpha=4&beta=1&gamma=2&delta=3", {c5, cv}, std::nullopt);
  add("coverage ratio", "coverage-ratio", {user}, kPseudo);
  add("retrieval recall", "retrieval-recall", {user}, kPseudo);
  add("novelty ratio", "novelty-ratio", {user}, kPseudo);
  add("recall effort", "recall-effort", {user}, kPseudo);
  return s;
}

SuiteSection rank_based_section() {
  const std::vector<std::string> rank = {"binary:L=4", "binary:L=8", "graded:G=5,L=4"};
  const std::vector<std::string> full_recall = {"binary:L=4,R=2,rel=2", "binary:L=8,R=4,rel=4"};
  SuiteSection s{"rank-based", "Rank-based measures", {}};
  auto add = [&](std::string label, std::string id, std::vector<std::string> domains,
                 std::optional<Category> published, bool contested = false, std::string note = {}) {
    s.rows.push_back({std::move(label), std::move(id), std::move(domains), published, contested,
                      std::move(note)});
  };
  add("Prec@4", "prec@4", rank, kPseudo);
  add("recall@4", "recall@4", rank, std::nullopt);
  add("R-precision", "r-precision", rank, kPseudo);
  add("sliding ratio", "sr", rank, kPseudo);
  add("modified sliding ratio", "msr", rank, kOrdMetric);
  add("Rnorm", "rnorm", full_recall, kInterval, true,
      "published for the binary case; rank-sum ties make it non-injective");
  add("Pnorm", "pnorm", full_recall, kOrdMetric);
  add("R-WP", "r-wp", rank, kPseudo);
  add("R-measure", "r-measure", rank, kPseudo);
  add("AP", "ap", rank, kPseudo);
  add("AWP", "awp", rank, kPseudo);
  add("Q-measure", "q-measure", rank, kPseudo);
  add("RR", "rr", rank, kPseudo);
  add("DCG_2", "dcg?b=2", rank, kPseudo);
  add("RBP_p (golden p)", "rbp?p=golden", rank, kPseudo);
  add("RBP_1/2", "rbp?p=1/2", rank, std::nullopt);
  add("bpref", "bpref", rank, kPseudo);
  add("nxCG[4]", "nxcg@4", rank, kPseudo);
  add("MAnxCG[4]", "manxcg@4", rank, kPseudo);
  add("gr[4]", "gr@4", rank, kPseudo);
  add("esl", "esl", {"leveled:L=4,s=1"}, kPseudo);
  return s;
}

std::string long_double_text(long double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.21Lg", x);
  return buf;
}

long double parse_long_double(const std::string& text) {
  char* end = nullptr;
  long double x = std::strtold(text.c_str(), &end);
  if (end == text.c_str() || *end != '\0') throw ParseError("bad real '" + text + "'");
  return x;
}

json value_to_json(const Value& v) {
  if (v.is_exact()) return {{"num", v.exact().numerator()}, {"den", v.exact().denominator()}};
  return {{"real", long_double_text(v.real())}, {"epsilon", long_double_text(v.epsilon())}};
}

Value value_from_json(const json& j) {
  if (j.contains("num")) {
    return Rational(j.at("num").get<std::int64_t>(), j.at("den").get<std::int64_t>());
  }
  return Value::approx(parse_long_double(j.at("real").get<std::string>()),
                       parse_long_double(j.at("epsilon").get<std::string>()));
}

json optional_value(const std::optional<Value>& v) {
  return v ? value_to_json(*v) : json(nullptr);
}

std::optional<Value> optional_value_from(const json& j) {
  if (j.is_null()) return std::nullopt;
  return value_from_json(j);
}

json points_to_json(const std::vector<WitnessPoint>& points) {
  json out = json::array();
  for (const auto& p : points) {
    out.push_back({{"index", p.index}, {"element", p.element}, {"value", value_to_json(p.value)}});
  }
  return out;
}

std::vector<WitnessPoint> points_from_json(const json& j) {
  std::vector<WitnessPoint> out;
  for (const auto& p : j) {
    out.push_back({p.at("index").get<std::uint64_t>(), p.at("element").get<std::string>(),
                   value_from_json(p.at("value"))});
  }
  return out;
}

Category category_from(const std::string& name) {
  auto c = parse_category(name);
  if (!c) throw ParseError("unknown category '" + name + "'");
  return *c;
}

json verdict_to_json(const Verdict& v) {
  json excluded = json::array();
  for (const auto& e : v.excluded) {
    excluded.push_back({{"index", e.index}, {"element", e.element}, {"reason", e.reason}});
  }
  return {
      {"measure", v.measure},
      {"measure_name", v.measure_name},
      {"domain", v.domain},
      {"category", category_name(v.category)},
      {"backend", backend_name(v.backend)},
      {"epsilon", long_double_text(v.epsilon)},
      {"domain_size", v.domain_size},
      {"evaluated", v.evaluated},
      {"class_count", v.class_count},
      {"min_value", optional_value(v.min_value)},
      {"max_value", optional_value(v.max_value)},
      {"injective", v.injective},
      {"collision", points_to_json(v.collision)},
      {"equispaced", v.equispaced},
      {"degenerate", v.degenerate},
      {"gap", optional_value(v.gap)},
      {"triple", points_to_json(v.triple)},
      {"oracle", oracle_status_name(v.oracle)},
      {"excluded_count", v.excluded_count},
      {"excluded", excluded},
  };
}

Verdict verdict_from_json(const json& j) {
  Verdict v;
  v.measure = j.at("measure").get<std::string>();
  v.measure_name = j.at("measure_name").get<std::string>();
  v.domain = j.at("domain").get<std::string>();
  v.category = category_from(j.at("category").get<std::string>());
  const std::string backend = j.at("backend").get<std::string>();
  if (backend == backend_name(Backend::kExactRational)) {
    v.backend = Backend::kExactRational;
  } else if (backend == backend_name(Backend::kApproxReal)) {
    v.backend = Backend::kApproxReal;
  } else {
    throw ParseError("unknown backend '" + backend + "'");
  }
  v.epsilon = parse_long_double(j.at("epsilon").get<std::string>());
  v.domain_size = j.at("domain_size").get<std::uint64_t>();
  v.evaluated = j.at("evaluated").get<std::uint64_t>();
  v.class_count = j.at("class_count").get<std::uint64_t>();
  v.min_value = optional_value_from(j.at("min_value"));
  v.max_value = optional_value_from(j.at("max_value"));
  v.injective = j.at("injective").get<bool>();
  v.collision = points_from_json(j.at("collision"));
  v.equispaced = j.at("equispaced").get<bool>();
  v.degenerate = j.at("degenerate").get<bool>();
  v.gap = optional_value_from(j.at("gap"));
  v.triple = points_from_json(j.at("triple"));
  const std::string oracle = j.at("oracle").get<std::string>();
  bool known = false;
  for (auto s : {OracleStatus::kHolds, OracleStatus::kFails, OracleStatus::kSkipped}) {
    if (oracle_status_name(s) == oracle) {
      v.oracle = s;
      known = true;
    }
  }
  if (!known) throw ParseError("unknown oracle status '" + oracle + "'");
  v.excluded_count = j.at("excluded_count").get<std::uint64_t>();
  for (const auto& e : j.at("excluded")) {
    v.excluded.push_back({e.at("index").get<std::uint64_t>(), e.at("element").get<std::string>(),
                          e.at("reason").get<std::string>()});
  }
  return v;
}

// Display width in code points.
std::size_t text_width(const std::string& s) {
  std::size_t n = 0;
  for (unsigned char c : s) n += (c & 0xC0) != 0x80;
  return n;
}

std::string pad(const std::string& s, std::size_t width) {
  return s + std::string(width - std::min(width, text_width(s)), ' ');
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string dot_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

std::string value_cell(const Value& v) { return v.is_exact() ? v.to_string() : v.to_display(); }

// Per-section domain legend: tag number by first appearance.
std::vector<std::string> section_domains(const ReportSection& section) {
  std::vector<std::string> domains;
  for (const auto& row : section.rows) {
    for (const auto& v : row.verdicts) {
      if (std::find(domains.begin(), domains.end(), v.domain) == domains.end()) {
        domains.push_back(v.domain);
      }
    }
  }
  return domains;
}

std::vector<std::string> row_cells(const ReportRow& row, const std::vector<std::string>& domains) {
  std::vector<std::string> cells = {row.label};
  for (Category c : {kPseudo, kOrdMetric, kInterval}) {
    std::string tags;
    for (const auto& v : row.verdicts) {
      if (v.category != c) continue;
      auto pos = std::find(domains.begin(), domains.end(), v.domain) - domains.begin();
      tags += (tags.empty() ? "" : ",") + std::to_string(pos + 1);
    }
    cells.push_back(tags.empty() ? "" : "✓ [" + tags + "]");
  }
  cells.push_back(row.published ? short_category(*row.published) : "—");
  cells.push_back(agreement_name(row.agreement));
  cells.push_back(row.witness_text());
  return cells;
}

const std::vector<std::string> kColumns = {"measure",   "ord/pseudom", "ord/metr", "interv/metr",
                                           "published", "status",      "witness"};

std::string summary_line(const ClassificationReport& report) {
  int listed = 0, matched = 0, contested = 0;
  for (const auto& s : report.sections) {
    for (const auto& r : s.rows) {
      if (!r.published) continue;
      ++listed;
      matched += r.matches_published && !r.contested;
      contested += r.contested;
    }
  }
  return "published rows: " + std::to_string(listed) + "; agree: " + std::to_string(matched) +
         "; contested: " + std::to_string(contested) + "; disagree: " +
         std::to_string(listed - matched - contested);
}

std::string render_text(const ClassificationReport& report, bool markdown) {
  std::ostringstream out;
  if (markdown) {
    out << "# Classification report (" << report.suite << ")\n";
  } else {
    out << "classification report (" << report.suite << "), metriclass " << report.tool_version
        << "\n";
  }
  for (const auto& section : report.sections) {
    const auto domains = section_domains(section);
    std::vector<std::vector<std::string>> table = {kColumns};
    for (const auto& row : section.rows) table.push_back(row_cells(row, domains));
    if (markdown) {
      out << "\n## " << section.title << "\n\nDomains:\n\n";
      for (std::size_t i = 0; i < domains.size(); ++i) {
        out << "- [" << i + 1 << "] `" << domains[i] << "`\n";
      }
      out << "\n";
      for (std::size_t r = 0; r < table.size(); ++r) {
        out << "|";
        for (const auto& cell : table[r]) out << " " << cell << " |";
        out << "\n";
        if (r == 0) {
          out << "|";
          for (std::size_t c = 0; c < kColumns.size(); ++c) out << "---|";
          out << "\n";
        }
      }
    } else {
      out << "\n" << section.title << "\n";
      for (std::size_t i = 0; i < domains.size(); ++i) {
        out << "  [" << i + 1 << "] " << domains[i] << "\n";
      }
      std::vector<std::size_t> width(kColumns.size(), 0);
      for (const auto& line : table) {
        for (std::size_t c = 0; c < line.size(); ++c) width[c] = std::max(width[c], text_width(line[c]));
      }
      for (const auto& line : table) {
        std::string text;
        for (std::size_t c = 0; c < line.size(); ++c) {
          text += c + 1 == line.size() ? line[c] : pad(line[c], width[c]) + "  ";
        }
        out << text << "\n";
      }
    }
    for (const auto& row : section.rows) {
      if (!row.note.empty()) out << (markdown ? "\n- " : "  note: ") << row.label << ": " << row.note << "\n";
    }
  }
  out << "\n" << summary_line(report) << "\n";
  return out.str();
}

std::string render_csv(const ClassificationReport& report) {
  std::ostringstream out;
  out << "section,measure,id,domain,category,published,status,backend,epsilon,classes,evaluated,"
         "excluded,oracle,witness\n";
  for (const auto& section : report.sections) {
    for (const auto& row : section.rows) {
      for (const auto& v : row.verdicts) {
        const std::vector<std::string> fields = {
            section.name,
            row.label,
            v.measure,
            v.domain,
            category_name(v.category),
            row.published ? category_name(*row.published) : "",
            agreement_name(row.agreement),
            backend_name(v.backend),
            v.epsilon == 0 ? "0" : long_double_text(v.epsilon),
            std::to_string(v.class_count),
            std::to_string(v.evaluated),
            std::to_string(v.excluded_count),
            oracle_status_name(v.oracle),
            v.witness_summary(),
        };
        for (std::size_t i = 0; i < fields.size(); ++i) out << (i ? "," : "") << csv_field(fields[i]);
        out << "\n";
      }
    }
  }
  return out.str();
}

}  // namespace

Suite find_suite(std::string_view name) {
  if (name != "paper") throw std::invalid_argument("unknown suite '" + std::string(name) + "'");
  return {"paper", {set_based_section(), rank_based_section()}};
}

std::string agreement_name(Agreement a) {
  switch (a) {
    case Agreement::kAgree: return "agree";
    case Agreement::kDisagree: return "disagree";
    case Agreement::kContested: return "contested";
    case Agreement::kNotListed: return "n/a";
  }
  return "?";
}

const Verdict& ReportRow::featured() const {
  if (verdicts.empty()) throw std::logic_error("report row without verdicts");
  if (published) {
    for (const auto& v : verdicts) {
      if (v.category == *published) return v;
    }
  }
  for (const auto& v : verdicts) {
    if (!v.collision.empty() || !v.triple.empty()) return v;
  }
  return verdicts.front();
}

std::string ReportRow::witness_text() const {
  const Verdict& v = featured();
  if (v.collision.empty() && v.triple.empty()) return "—";
  std::string text = v.witness_summary();
  if (text.rfind("collision ", 0) == 0) text = text.substr(10);
  return v.measure_name + ": " + text;
}

void settle_agreement(ReportRow& row) {
  row.matches_published = false;
  if (row.published) {
    for (const auto& v : row.verdicts) row.matches_published |= v.category == *row.published;
  }
  if (!row.published) {
    row.agreement = Agreement::kNotListed;
  } else if (row.contested) {
    row.agreement = Agreement::kContested;
  } else {
    row.agreement = row.matches_published ? Agreement::kAgree : Agreement::kDisagree;
  }
}

ClassificationReport run_suite(const Suite& suite, const ClassifyOptions& options) {
  ClassificationReport report;
  report.suite = suite.name;
  for (const auto& section : suite.sections) {
    ReportSection out{section.name, section.title, {}};
    for (const auto& row : section.rows) {
      ReportRow r;
      r.label = row.label;
      r.measure = row.measure;
      r.published = row.published;
      r.contested = row.contested;
      r.note = row.note;
      const Measure measure = Measure::parse(row.measure);
      for (const auto& d : row.domains) {
        r.verdicts.push_back(classify(measure, DomainSpec::parse(d), options));
      }
      settle_agreement(r);
      out.rows.push_back(std::move(r));
    }
    report.sections.push_back(std::move(out));
  }
  return report;
}

ClassificationReport report_from_verdicts(std::vector<Verdict> verdicts) {
  ClassificationReport report;
  report.suite = "custom";
  ReportSection section{"custom", "Classification", {}};
  for (auto& v : verdicts) {
    ReportRow row;
    row.label = v.measure_name;
    row.measure = v.measure;
    row.verdicts.push_back(std::move(v));
    settle_agreement(row);
    section.rows.push_back(std::move(row));
  }
  report.sections.push_back(std::move(section));
  return report;
}

TableFormat parse_table_format(std::string_view name) {
  if (name == "text") return TableFormat::kText;
  if (name == "csv") return TableFormat::kCsv;
  if (name == "markdown" || name == "md") return TableFormat::kMarkdown;
  throw std::invalid_argument("unknown table format '" + std::string(name) + "'");
}

std::string render_table(const ClassificationReport& report, TableFormat format) {
  bool empty = true;
  for (const auto& s : report.sections) empty = empty && s.rows.empty();
  if (empty) throw std::invalid_argument("cannot render an empty report");
  switch (format) {
    case TableFormat::kText: return render_text(report, false);
    case TableFormat::kMarkdown: return render_text(report, true);
    case TableFormat::kCsv: return render_csv(report);
  }
  return {};
}

std::string emit_json_report(const ClassificationReport& report) {
  json sections = json::array();
  for (const auto& s : report.sections) {
    json rows = json::array();
    for (const auto& r : s.rows) {
      json verdicts = json::array();
      for (const auto& v : r.verdicts) verdicts.push_back(verdict_to_json(v));
      rows.push_back({
          {"label", r.label},
          {"measure", r.measure},
          {"published", r.published ? json(category_name(*r.published)) : json(nullptr)},
          {"contested", r.contested},
          {"note", r.note},
          {"matches_published", r.matches_published},
          {"agreement", agreement_name(r.agreement)},
          {"verdicts", verdicts},
      });
    }
    sections.push_back({{"name", s.name}, {"title", s.title}, {"rows", rows}});
  }
  json doc = {
      {"schema", kSchemaTag},
      {"tool_version", report.tool_version},
      {"suite", report.suite},
      {"sections", sections},
  };
  return doc.dump(2) + "\n";
}

ClassificationReport parse_json_report(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("malformed report: ") + e.what());
  }
  try {
    if (doc.at("schema").get<std::string>() != kSchemaTag) {
      throw ParseError("unsupported report schema '" + doc.at("schema").get<std::string>() + "'");
    }
    ClassificationReport report;
    report.tool_version = doc.at("tool_version").get<std::string>();
    report.suite = doc.at("suite").get<std::string>();
    for (const auto& s : doc.at("sections")) {
      ReportSection section{s.at("name").get<std::string>(), s.at("title").get<std::string>(), {}};
      for (const auto& r : s.at("rows")) {
        ReportRow row;
        row.label = r.at("label").get<std::string>();
        row.measure = r.at("measure").get<std::string>();
        if (!r.at("published").is_null()) {
          row.published = category_from(r.at("published").get<std::string>());
        }
        row.contested = r.at("contested").get<bool>();
        row.note = r.at("note").get<std::string>();
        row.matches_published = r.at("matches_published").get<bool>();
        const std::string agreement = r.at("agreement").get<std::string>();
        bool known = false;
        for (auto a : {Agreement::kAgree, Agreement::kDisagree, Agreement::kContested,
                       Agreement::kNotListed}) {
          if (agreement_name(a) == agreement) {
            row.agreement = a;
            known = true;
          }
        }
        if (!known) throw ParseError("unknown agreement '" + agreement + "'");
        for (const auto& v : r.at("verdicts")) row.verdicts.push_back(verdict_from_json(v));
        section.rows.push_back(std::move(row));
      }
      report.sections.push_back(std::move(section));
    }
    return report;
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed report: ") + e.what());
  }
}

std::string export_dot(const HasseDiagram& hasse, const DotLabels& labels) {
  std::ostringstream out;
  out << "digraph hasse {\n  rankdir=BT;\n  node [shape=box];\n";
  for (std::size_t i = 0; i < hasse.node_count(); ++i) {
    std::string label = value_cell(hasse.node_values[i]);
    if (labels.mode == DotLabels::Mode::kMembers) {
      const auto& members = hasse.node_members[i];
      const std::size_t shown = std::min(members.size(), labels.max_members);
      for (std::size_t m = 0; m < shown; ++m) label += "\n" + members[m];
      if (shown < members.size()) {
        label += "\n(+" + std::to_string(members.size() - shown) + " more)";
      }
    }
    std::string escaped;
    for (char c : dot_escape(label)) escaped += c == '\n' ? std::string("\\n") : std::string(1, c);
    out << "  c" << i << " [label=\"" << escaped << "\"];\n";
  }
  for (std::size_t i = 0; i < hasse.edge_count(); ++i) {
    out << "  c" << i << " -> c" << i + 1 << " [label=\"" << dot_escape(value_cell(hasse.edge_weights[i]))
        << "\"];\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace metriclass
