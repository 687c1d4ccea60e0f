// Copyright 2026 The textaug Authors
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

#ifndef TEXTAUG_TOOLS_CLI_H_
#define TEXTAUG_TOOLS_CLI_H_

#include <ostream>

namespace textaug::cli {

// Exit codes of the textaug command.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitRuntime = 2;

// Runs `textaug <subcommand> ...`; argv[0] is the program name.
int Run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace textaug::cli

#endif  // TEXTAUG_TOOLS_CLI_H_
