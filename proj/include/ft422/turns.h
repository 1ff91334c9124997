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

#ifndef FT422_TURNS_H
#define FT422_TURNS_H

#include <cstdint>
#include <string>
#include <string_view>

namespace ft422 {

/// An angle measured in turns (fractions of 2*pi), held as an exact reduced
/// rational so that table-driven angles like 3/8 never drift.
class Turns {
   public:
    constexpr Turns() = default;
    Turns(std::int64_t num, std::int64_t den);

    static Turns parse(std::string_view text);

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }
    double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }
    /// "p/q", or "p" when the denominator is 1.
    std::string str() const;

    bool operator==(const Turns &) const = default;

   private:
    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

}  // namespace ft422

#endif
