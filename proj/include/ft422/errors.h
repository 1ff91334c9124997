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

#ifndef FT422_ERRORS_H
#define FT422_ERRORS_H

#include <stdexcept>
#include <string>

namespace ft422 {

/// Raised when a caller violates an operation's preconditions (bad qubit
/// index, malformed name, zero shots, ...). The CLI maps it to exit code 2.
struct UsageError : std::invalid_argument {
    explicit UsageError(const std::string &msg) : std::invalid_argument(msg) {}
};

/// An odd-parity bitstring reached a decoder that requires a codeword.
struct RejectedOutcome : std::runtime_error {
    explicit RejectedOutcome(const std::string &msg) : std::runtime_error(msg) {}
};

/// Every shot of an encoded run was discarded by post-selection.
struct AllRejected : std::runtime_error {
    explicit AllRejected(const std::string &msg) : std::runtime_error(msg) {}
};

}  // namespace ft422

#endif
