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

#ifndef FT422_FTVERIFY_H
#define FT422_FTVERIFY_H

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ft422/circuitlib.h"
#include "ft422/fault.h"
#include "ft422/noisefault.h"

namespace ft422 {

enum class Verdict { Detected, Harmless, LogicalError };

std::string_view verdict_name(Verdict v);

struct FaultVerdict {
    PauliFault fault;
    double accept_probability = 0.0;
    /// Total variation between the accepted logical distribution and the
    /// ideal one; for a deterministic ideal this is the wrong-answer
    /// probability among accepted shots.
    double error_probability = 0.0;
    Verdict classification = Verdict::Detected;
};

/// Tolerance on "the fault changed the accepted answer". Deterministic
/// ideals use the probability floor; spread-out ideals use 1e-10.
double logical_error_tolerance(const Distribution &ideal);

/// Ideal logical distribution of a fault-free run.
Distribution ideal_logical_distribution(const Circuit &circuit, const Decoder &decoder);

/// Exact classification of one injected fault. Throws UsageError for a fault
/// that does not fit the circuit or a circuit without MeasureAll.
FaultVerdict classify_fault(const Circuit &circuit, const PauliFault &fault, const Decoder &decoder,
                            const Distribution &ideal);

struct FtReport {
    std::string circuit;
    std::size_t total = 0;
    std::size_t detected = 0;
    std::size_t harmless = 0;
    std::size_t logical_errors = 0;
    /// The LogicalError with the largest error probability, if any.
    std::optional<FaultVerdict> worst;
    std::vector<FaultVerdict> verdicts;  // enumeration order

    bool fault_tolerant() const { return logical_errors == 0; }
};

/// Classifies every single fault of the circuit. Faults are evaluated in
/// parallel; the report does not depend on the thread count.
FtReport verify_fault_tolerance(const Circuit &circuit, const Decoder &decoder, const Distribution &ideal,
                                LocationOptions options = {}, unsigned threads = 0);
FtReport verify_fault_tolerance(const Protocol &protocol, LocationOptions options = {}, unsigned threads = 0);

}  // namespace ft422

#endif
