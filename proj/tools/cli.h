// Copyright 2026 The rtwalk Authors
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
//
#ifndef RTWALK_TOOLS_CLI_H_
#define RTWALK_TOOLS_CLI_H_

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace rtwalk::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitCap = 3;

// args[0] is the program name. Data goes to `out` unless --out is given;
// diagnostics and summaries go to `err` (or to `out` when --out is set).
int RunCli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// "0,5,10" and inclusive ranges "start:stop:step", mixed freely. Sorted and
// deduplicated. Throws std::invalid_argument.
std::vector<std::int64_t> ParseTimeGrid(const std::string& text);

}  // namespace rtwalk::cli

#endif  // RTWALK_TOOLS_CLI_H_
