// Copyright 2026 The PII Forge Authors
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

#ifndef PIIFORGE_TOOLS_CLI_H_
#define PIIFORGE_TOOLS_CLI_H_

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace piiforge::cli {

// Stable exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitInputError = 2;
inline constexpr int kExitConfigError = 3;

struct CommandOutcome {
  int exit_code = kExitOk;
  std::uint64_t warnings = 0;
  std::optional<std::string> report_path;
};

// Runs one pii-forge invocation. args[0] is the program name. Records go to
// --out (or `out` when absent); usage text, per-record diagnostics and
// errors go to `err`.
CommandOutcome run(const std::vector<std::string>& args, std::ostream& out,
                   std::ostream& err);

}  // namespace piiforge::cli

#endif  // PIIFORGE_TOOLS_CLI_H_
