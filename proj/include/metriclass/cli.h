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

#ifndef METRICLASS_CLI_H_
#define METRICLASS_CLI_H_

#include <ostream>
#include <string>
#include <vector>

namespace metriclass {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitComputation = 2;

// Runs the command line `args` (without the program name). Returns 0 on
// success, 1 on usage errors (unknown verb or flag, malformed measure or
// domain text) and 2 when the computation fails.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace metriclass

#endif  // METRICLASS_CLI_H_
