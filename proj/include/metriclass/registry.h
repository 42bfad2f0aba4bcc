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

#ifndef METRICLASS_REGISTRY_H_
#define METRICLASS_REGISTRY_H_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "metriclass/measures.h"
#include "metriclass/model.h"
#include "metriclass/value.h"

namespace metriclass {

enum class InputKind { kContingency, kUserContext, kRanking, kLeveled };

std::string input_kind_name(InputKind kind);

enum class ParamKind { kNone, kCutoff, kPersistence, kBase, kUtility };

struct CatalogueEntry {
  std::string_view id;
  std::string_view name;
  InputKind input;
  ParamKind params;
  // Range every value must lie in; nullopt upper bound means unbounded above.
  Rational lower;
  std::optional<Rational> upper;
  // Backend for the measure regardless of parameters (RBP depends on p).
  std::optional<Backend> fixed_backend;
};

// Every registered measure, in a stable order.
const std::vector<CatalogueEntry>& catalogue();

const CatalogueEntry* find_entry(std::string_view id);

// A parsed, validated measure ready for evaluation.
class Measure {
 public:
  // Throws ParseError for unknown ids and ParameterError for missing or
  // invalid parameters.
  static Measure parse(std::string_view id);
  explicit Measure(MeasureSpec spec);

  const MeasureSpec& spec() const { return spec_; }
  const CatalogueEntry& entry() const { return *entry_; }
  std::string id() const { return spec_.to_string(); }
  std::string display_name() const;
  InputKind input_kind() const { return entry_->input; }
  Backend backend() const;

  // Throws ConfigurationError when the element kind does not match the
  // measure, UndefinedValue when the formula has no value there.
  Value evaluate(const DomainElement& element) const;

  // Whether `v` lies within the documented range of the measure. The upper
  // bound of AWP is R, so the element is needed.
  bool within_bounds(const Value& v, const DomainElement& element) const;

 private:
  MeasureSpec spec_;
  const CatalogueEntry* entry_;
};

}  // namespace metriclass

#endif  // METRICLASS_REGISTRY_H_
