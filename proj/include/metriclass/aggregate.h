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

#ifndef METRICLASS_AGGREGATE_H_
#define METRICLASS_AGGREGATE_H_

#include <span>
#include <string>
#include <string_view>

#include "metriclass/value.h"

namespace metriclass {

enum class AggregateKind { kMap, kGmap, kErrMean, kManxcgMean };

struct AggregateSpec {
  AggregateKind kind = AggregateKind::kMap;
  // Means over per-query values of ordinal-scale measures are not
  // permissible statistics; every aggregate carries the flag.
  bool permissibility_flag = true;

  static AggregateSpec parse(std::string_view name);  // "map", "gmap", ...
  std::string name() const;
};

struct AggregateResult {
  Value value;
  std::string warning;
  bool permissibility_flag = true;
};

std::string permissibility_warning();

// Arithmetic mean for MAP / ERR-mean / MAnxCG mean, geometric mean for GMAP.
// GMAP stays exact when the root of the product is rational. Throws
// std::invalid_argument on an empty list and UndefinedValue when GMAP meets a
// non-positive value.
AggregateResult aggregate(std::span<const Value> values, const AggregateSpec& spec);

}  // namespace metriclass

#endif  // METRICLASS_AGGREGATE_H_
