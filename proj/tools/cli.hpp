// Copyright 2026 The mixkit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef MIXKIT_TOOLS_CLI_HPP_
#define MIXKIT_TOOLS_CLI_HPP_

#include <ostream>
#include <string>
#include <vector>

namespace mixkit::cli {

inline constexpr int kExitTrue = 0;
inline constexpr int kExitFalse = 1;
inline constexpr int kExitError = 2;

// Runs one invocation. args excludes the program name. Verdict commands
// return kExitTrue or kExitFalse; any usage or input error prints a
// diagnostic to err and returns kExitError.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace mixkit::cli

#endif  // MIXKIT_TOOLS_CLI_HPP_
