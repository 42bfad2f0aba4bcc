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

#include "metriclass/cli.h"

#include <fstream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "metriclass/aggregate.h"
#include "metriclass/domain.h"
#include "metriclass/errors.h"
#include "metriclass/ingest.h"
#include "metriclass/intrinsic.h"
#include "metriclass/registry.h"
#include "metriclass/report.h"

namespace metriclass {
namespace {

// Malformed command-line text (measure ids, domain specs, inputs).
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::stringstream in(text);
  std::string part;
  while (std::getline(in, part, sep)) parts.push_back(part);
  return parts;
}

std::int64_t to_int(const std::string& text, const std::string& what) {
  try {
    std::size_t used = 0;
    long long v = std::stoll(text, &used);
    if (used == text.size()) return v;
  } catch (const std::exception&) {
  }
  throw UsageError("bad integer '" + text + "' for " + what);
}

Measure parse_measure(const std::string& id) {
  try {
    return Measure::parse(id);
  } catch (const ParseError& e) {
    throw UsageError(e.what());
  } catch (const ParameterError& e) {
    throw UsageError(e.what());
  }
}

DomainSpec parse_domain(const std::string& text) {
  try {
    return DomainSpec::parse(text);
  } catch (const std::exception& e) {
    throw UsageError(std::string("domain '") + text + "': " + e.what());
  }
}

// "key=value,key=value" -> map, keys restricted to `allowed`.
std::map<std::string, std::int64_t> parse_fields(const std::string& text,
                                                 const std::vector<std::string>& allowed) {
  std::map<std::string, std::int64_t> fields;
  for (const auto& item : split(text, ',')) {
    auto eq = item.find('=');
    if (eq == std::string::npos) throw UsageError("expected key=value, got '" + item + "'");
    std::string key = item.substr(0, eq);
    if (std::find(allowed.begin(), allowed.end(), key) == allowed.end()) {
      throw UsageError("unknown field '" + key + "'");
    }
    fields[key] = to_int(item.substr(eq + 1), key);
  }
  return fields;
}

std::vector<Grade> parse_grades(const std::string& text) {
  std::vector<Grade> grades;
  for (const auto& g : split(text, ',')) grades.push_back(static_cast<Grade>(to_int(g, "grade")));
  if (grades.empty()) throw UsageError("empty ranking");
  return grades;
}

std::shared_ptr<const GradeScheme> parse_scheme(const std::string& gains, int grades) {
  try {
    if (!gains.empty()) {
      std::vector<Rational> values;
      for (const auto& g : split(gains, ';')) values.push_back(Rational::parse(g));
      return std::make_shared<const GradeScheme>(std::move(values));
    }
    return std::make_shared<const GradeScheme>(grades == 2 ? GradeScheme::binary()
                                                           : GradeScheme::uniform(grades));
  } catch (const std::exception& e) {
    throw UsageError(std::string("grade scheme: ") + e.what());
  }
}

// A domain to search for witnesses when none is given: the measure's first
// suite domain, else a small default for its input kind.
std::vector<std::string> default_domains(const Measure& measure) {
  for (const auto& section : find_suite("paper").sections) {
    for (const auto& row : section.rows) {
      if (Measure::parse(row.measure).id() == measure.id()) return row.domains;
    }
  }
  switch (measure.input_kind()) {
    case InputKind::kContingency: return {"contingency:N=15,R=5,n=0..15"};
    case InputKind::kUserContext: return {"user:U=1,A=1..3"};
    case InputKind::kLeveled: return {"leveled:L=4,s=1"};
    case InputKind::kRanking:
      if (measure.entry().id == "rnorm" || measure.entry().id == "pnorm") {
        return {"binary:L=4,R=2,rel=2"};
      }
      return {"binary:L=4"};
  }
  return {};
}

void print_verdict(const Verdict& v, std::ostream& out) {
  out << category_name(v.category) << "; " << v.witness_summary() << "\n";
  out << "measure: " << v.measure << " (" << v.measure_name << ")\n";
  out << "domain: " << v.domain << "\n";
  out << "backend: " << backend_name(v.backend);
  if (v.backend == Backend::kApproxReal) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3Lg", v.epsilon);
    out << " (epsilon " << buf << ")";
  }
  out << "\n";
  out << "elements: " << v.evaluated << " evaluated, " << v.excluded_count << " excluded\n";
  for (const auto& e : v.excluded) out << "  excluded " << e.element << ": " << e.reason << "\n";
  if (v.excluded_count > v.excluded.size()) {
    out << "  ... " << v.excluded_count - v.excluded.size() << " more excluded\n";
  }
  out << "classes: " << v.class_count;
  if (v.min_value && v.max_value) {
    out << " (values " << v.min_value->to_display() << " .. " << v.max_value->to_display() << ")";
  }
  out << "\n";
  out << "injective: " << (v.injective ? "yes" : "no") << "\n";
  out << "equispaced: " << (v.equispaced ? "yes" : "no");
  if (v.degenerate) out << " (single class)";
  if (v.gap) out << ", gap " << v.gap->to_display();
  out << "\n";
  out << "interval oracle: " << oracle_status_name(v.oracle) << "\n";
}

struct Options {
  std::string measure, domain, format, out_file, suite = "paper";
  std::string table, ranking, user, levels, gains;
  std::int64_t total_relevant = -1, collection_size = -1, need = 1;
  int grades = 2;
  std::size_t oracle_cap = kDefaultOracleCap;
  std::string qrels, run, aggregate, labels = "members";
  int depth = 10;
  std::size_t max_members = 8;
  bool quiet_warnings = false;
};

int list_measures(const Options& o, std::ostream& out) {
  if (o.format == "json") {
    nlohmann::json list = nlohmann::json::array();
    for (const auto& e : catalogue()) {
      list.push_back({{"id", e.id}, {"name", e.name}, {"input", input_kind_name(e.input)}});
    }
    out << list.dump(2) << "\n";
    return kExitOk;
  }
  for (const auto& e : catalogue()) {
    std::string usage(e.id);
    switch (e.params) {
      case ParamKind::kCutoff: usage += "@<r>"; break;
      case ParamKind::kPersistence: usage += "?p=<p|golden>"; break;
      case ParamKind::kBase: usage += "?b=<b>"; break;
      case ParamKind::kUtility: usage += "?alpha=<a>&beta=<b>&gamma=<c>&delta=<d>"; break;
      case ParamKind::kNone: break;
    }
    out << usage << "\t" << e.name << "\t" << input_kind_name(e.input) << "\n";
  }
  return kExitOk;
}

int evaluate(const Options& o, std::ostream& out) {
  const Measure measure = parse_measure(o.measure);
  const int given = !o.table.empty() + !o.ranking.empty() + !o.user.empty() + !o.levels.empty();
  if (given != 1) throw UsageError("give exactly one of --table, --ranking, --user, --levels");
  std::optional<DomainElement> element;
  if (!o.table.empty()) {
    auto f = parse_fields(o.table, {"tp", "fp", "fn", "tn"});
    element = ContingencyTable{f["tp"], f["fp"], f["fn"], f["tn"]};
  } else if (!o.user.empty()) {
    auto f = parse_fields(o.user, {"U", "Rk", "Ru", "A"});
    element = UserContext{f.count("U") ? f["U"] : 1, f["Rk"], f["Ru"], f["A"]};
  } else if (!o.ranking.empty()) {
    auto scheme = parse_scheme(o.gains, o.grades);
    std::vector<Grade> grades = parse_grades(o.ranking);
    const auto L = static_cast<std::int64_t>(grades.size());
    Universe u;
    u.total_relevant = o.total_relevant >= 0 ? o.total_relevant : L;
    u.collection_size = o.collection_size >= 0 ? o.collection_size : std::max(L, u.total_relevant);
    element = RankedOutput{Ranking(scheme, std::move(grades)), u};
  } else {
    LeveledRanking l{Ranking::binary({0}), {}, o.need};
    std::vector<Grade> all;
    for (const auto& level : split(o.levels, '|')) {
      auto g = parse_grades(level);
      l.level_sizes.push_back(static_cast<int>(g.size()));
      all.insert(all.end(), g.begin(), g.end());
    }
    l.documents = Ranking::binary(all);
    element = l;
  }
  out << measure.evaluate(*element).to_display() << "\n";
  return kExitOk;
}

int classify_verb(const Options& o, std::ostream& out) {
  const Measure measure = parse_measure(o.measure);
  const DomainSpec domain = parse_domain(o.domain);
  ClassifyOptions options;
  options.oracle_cap = o.oracle_cap;
  Verdict v = classify(measure, domain, options);
  if (o.format.empty() || o.format == "text") {
    print_verdict(v, out);
  } else if (o.format == "json") {
    out << emit_json_report(report_from_verdicts({v}));
  } else {
    out << render_table(report_from_verdicts({v}), parse_table_format(o.format));
  }
  return kExitOk;
}

int witness(const Options& o, std::ostream& out) {
  const Measure measure = parse_measure(o.measure);
  std::vector<std::string> domains =
      o.domain.empty() ? default_domains(measure) : std::vector<std::string>{o.domain};
  std::optional<Verdict> last;
  for (const auto& d : domains) {
    Verdict v = classify(measure, parse_domain(d));
    if (!v.collision.empty() || !v.triple.empty()) {
      out << v.measure_name << " on " << v.domain << ": " << v.witness_summary() << "\n";
      for (const auto& p : v.collision.empty() ? v.triple : v.collision) {
        out << "  #" << p.index << " " << p.element << " -> " << p.value.to_display() << "\n";
      }
      return kExitOk;
    }
    last = std::move(v);
  }
  out << last->measure_name << ": no witness on " << last->domain << " ("
      << category_name(last->category) << ", " << last->witness_summary() << ")\n";
  return kExitOk;
}

int hasse(const Options& o, std::ostream& out) {
  const Measure measure = parse_measure(o.measure);
  const DomainSpec domain = parse_domain(o.domain);
  DotLabels labels;
  if (o.labels == "values") {
    labels.mode = DotLabels::Mode::kValueOnly;
  } else if (o.labels != "members") {
    throw UsageError("--labels must be members or values");
  }
  labels.max_members = o.max_members;
  const std::string dot = export_dot(build_hasse(induced_order(measure, domain)), labels);
  if (o.out_file.empty()) {
    out << dot;
    return kExitOk;
  }
  std::ofstream file(o.out_file, std::ios::binary);
  file << dot;
  if (!file) throw std::runtime_error("cannot write " + o.out_file);
  out << "wrote " << o.out_file << "\n";
  return kExitOk;
}

int table(const Options& o, std::ostream& out) {
  Suite suite;
  try {
    suite = find_suite(o.suite);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  const std::string format = o.format.empty() ? "markdown" : o.format;
  std::optional<TableFormat> table_format;
  if (format != "json") {
    try {
      table_format = parse_table_format(format);
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
  }
  const ClassificationReport report = run_suite(suite);
  out << (table_format ? render_table(report, *table_format) : emit_json_report(report));
  return kExitOk;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

int ingest_eval(const Options& o, std::ostream& out, std::ostream& err) {
  const Measure measure = parse_measure(o.measure);
  if (measure.input_kind() != InputKind::kRanking) {
    throw UsageError("ingest-eval needs a rank-based measure");
  }
  if (o.depth < 1) throw UsageError("--depth must be >= 1");
  std::optional<AggregateSpec> aggregate_spec;
  if (!o.aggregate.empty()) {
    try {
      aggregate_spec = AggregateSpec::parse(o.aggregate);
    } catch (const ParseError& e) {
      throw UsageError(e.what());
    }
  }
  const std::string qrels_text = read_file(o.qrels);
  const std::string run_text = read_file(o.run);
  const QrelsSet qrels = parse_qrels(qrels_text);
  const RunSet run = parse_run(run_text);
  const auto scheme = o.gains.empty() ? integer_gain_scheme(qrels) : parse_scheme(o.gains, 2);
  const IngestResult ingested = to_rankings(run, qrels, scheme, o.depth);
  for (const auto& s : ingested.skipped) err << "skipped topic " << s.topic << ": " << s.reason << "\n";

  std::vector<Value> values;
  nlohmann::json topics = nlohmann::json::array();
  for (const auto& t : ingested.topics) {
    Value v = measure.evaluate(RankedOutput{t.ranking, t.universe});
    if (o.format != "json") out << t.topic << "\t" << v.to_display() << "\n";
    topics.push_back({{"topic", t.topic}, {"ranking", t.ranking.to_string()}, {"value", v.to_string()}});
    values.push_back(std::move(v));
  }
  nlohmann::json doc = {{"measure", measure.id()}, {"depth", o.depth}, {"topics", topics}};
  if (aggregate_spec && !values.empty()) {
    const AggregateResult result = aggregate(values, *aggregate_spec);
    // Whether the measure is ordinal is decided by classifying it.
    const Verdict verdict = classify(measure, parse_domain(default_domains(measure).front()));
    const bool ordinal = verdict.category != Category::kIntervalMetric;
    if (o.format != "json") {
      out << aggregate_spec->name() << "\t" << result.value.to_display() << "\n";
      if (ordinal && !o.quiet_warnings) err << result.warning << "\n";
    }
    doc["aggregate"] = {{"kind", aggregate_spec->name()},
                        {"value", result.value.to_string()},
                        {"permissibility_flag", ordinal && result.permissibility_flag},
                        {"category", category_name(verdict.category)},
                        {"warning", o.quiet_warnings ? "" : result.warning}};
  }
  if (o.format == "json") out << doc.dump(2) << "\n";
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Intrinsic classification of IR evaluation measures", "metriclass"};
  app.require_subcommand(1);
  Options o;

  auto* list = app.add_subcommand("list-measures", "List registered measures");
  list->add_option("--format", o.format, "text or json");

  auto* eval = app.add_subcommand("evaluate", "Evaluate a measure on one input");
  eval->add_option("--measure", o.measure, "Measure id, e.g. recall, prec@4, rbp?p=1/2")->required();
  eval->add_option("--table", o.table, "Contingency table tp=..,fp=..,fn=..,tn=..");
  eval->add_option("--ranking", o.ranking, "Comma-separated grades, e.g. 1,0,0,1");
  eval->add_option("--R", o.total_relevant, "Relevant documents in the collection (default: L)");
  eval->add_option("--N", o.collection_size, "Collection size (default: max(L, R))");
  eval->add_option("--grades", o.grades, "Number of grades with uniform gains (default 2)");
  eval->add_option("--gains", o.gains, "Explicit gains, e.g. 0;1;3");
  eval->add_option("--user", o.user, "User context U=..,Rk=..,Ru=..,A=..");
  eval->add_option("--levels", o.levels, "Leveled output, e.g. 1,0|0,1");
  eval->add_option("--need", o.need, "Relevant documents wanted (esl)");

  auto* cls = app.add_subcommand("classify", "Classify a measure over a finite domain");
  cls->add_option("--measure", o.measure, "Measure id")->required();
  cls->add_option("--domain", o.domain, "Domain spec, e.g. binary:L=4")->required();
  cls->add_option("--format", o.format, "text, json, csv or markdown");
  cls->add_option("--oracle-cap", o.oracle_cap, "Largest quotient the interval oracle checks");

  auto* wit = app.add_subcommand("witness", "Print the first collision or uneven-gap triple");
  wit->add_option("--measure", o.measure, "Measure id")->required();
  wit->add_option("--domain", o.domain, "Domain spec (default: the measure's suite domains)");

  auto* has = app.add_subcommand("hasse", "Write the Hasse chain as DOT");
  has->add_option("--measure", o.measure, "Measure id")->required();
  has->add_option("--domain", o.domain, "Domain spec")->required();
  has->add_option("--out", o.out_file, "Output file (default: stdout)");
  has->add_option("--labels", o.labels, "members or values");
  has->add_option("--max-members", o.max_members, "Members listed per node");

  auto* tab = app.add_subcommand("table", "Classify a suite and compare with published categories");
  tab->add_option("--suite", o.suite, "Suite name (paper)");
  tab->add_option("--format", o.format, "markdown, text, csv or json");

  auto* ing = app.add_subcommand("ingest-eval", "Evaluate a measure on TREC qrels and run files");
  ing->add_option("--qrels", o.qrels, "qrels file")->required();
  ing->add_option("--run", o.run, "run file")->required();
  ing->add_option("--measure", o.measure, "Rank-based measure id")->required();
  ing->add_option("--depth", o.depth, "Ranking depth L")->required();
  ing->add_option("--gains", o.gains, "Gains per grade (default: gain = grade)");
  ing->add_option("--aggregate", o.aggregate, "mean or gmean");
  ing->add_flag("--quiet-warnings", o.quiet_warnings, "Suppress the permissibility warning text");
  ing->add_option("--format", o.format, "text or json");

  std::vector<const char*> argv = {"metriclass"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  const std::string verb = app.get_subcommands().front()->get_name();
  try {
    if (verb == "list-measures") return list_measures(o, out);
    if (verb == "evaluate") return evaluate(o, out);
    if (verb == "classify") return classify_verb(o, out);
    if (verb == "witness") return witness(o, out);
    if (verb == "hasse") return hasse(o, out);
    if (verb == "table") return table(o, out);
    if (verb == "ingest-eval") return ingest_eval(o, out, err);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const DomainTooLarge& e) {
    err << "error (enumeration): " << e.what() << "\n";
    return kExitComputation;
  } catch (const UndefinedValue& e) {
    err << "error (measures): " << e.what() << "\n";
    return kExitComputation;
  } catch (const ConstraintViolation& e) {
    err << "error (core model): " << e.what() << "\n";
    return kExitComputation;
  } catch (const ParseError& e) {
    err << "error (ingest): " << e.what() << "\n";
    return kExitComputation;
  } catch (const std::exception& e) {
    err << "error (" << verb << "): " << e.what() << "\n";
    return kExitComputation;
  }
  return kExitUsage;
}

}  // namespace metriclass
