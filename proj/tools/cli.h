// Copyright 2026 The ft422 Authors
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

#ifndef FT422_TOOLS_CLI_H
#define FT422_TOOLS_CLI_H

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

namespace ft422::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;

/// Seed used when --seed is not given.
inline constexpr std::uint64_t kDefaultSeed = 422;

/// Runs the command line `args` (args[0] is the program name). Tables and
/// reports go to `out` unless --out is given; diagnostics go to `err`.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

}  // namespace ft422::cli

#endif
