// Copyright 2026 The sicfid Authors
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

#ifndef SICFID_TOOLS_COMMANDS_HPP
#define SICFID_TOOLS_COMMANDS_HPP

#include <ostream>

namespace sicfid::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitFailed = 2;

/// Worker threads for `search`.
inline constexpr const char* kThreadsEnv = "SICFID_THREADS";

/// SICFID_THREADS if set to a positive integer, otherwise the hardware
/// concurrency.
unsigned thread_count_from_env();

/// Entry point for `sicfid search|verify|analyze`. Returns the process exit
/// code: 0 success or pass, 1 usage or input error, 2 completed but failed.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace sicfid::cli

#endif  // SICFID_TOOLS_COMMANDS_HPP
