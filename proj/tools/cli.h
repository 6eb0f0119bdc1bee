// Copyright 2026 The lcacode Authors
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

#ifndef LCA_TOOLS_CLI_H
#define LCA_TOOLS_CLI_H

#include <ostream>
#include <string>
#include <vector>

namespace lca::cli {

constexpr int kExitOk = 0;
constexpr int kExitMalformed = 1;
constexpr int kExitVerifyFailed = 2;

/// CSV header of decode-mc output.
extern const char *const kMonteCarloHeader;

/// Runs one command line (without the program name). Reports go to `out` as JSON, diagnostics
/// to `err`. Returns kExitOk, kExitMalformed for bad input or a violated precondition, and
/// kExitVerifyFailed when an exact verification fails.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

}  // namespace lca::cli

#endif
