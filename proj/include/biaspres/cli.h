// Copyright 2026 The biaspres Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef BIASPRES_CLI_H
#define BIASPRES_CLI_H

#include <ostream>
#include <string>
#include <vector>

namespace biaspres {

constexpr int EXIT_AFFIRMATIVE = 0;
constexpr int EXIT_NEGATIVE = 1;
constexpr int EXIT_USAGE = 2;

/// Runs one command-line invocation. `args` excludes the program name.
/// Returns 0 on affirmative results, 1 on negative verdicts, 2 on input or usage errors.
int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

}  // namespace biaspres

#endif
