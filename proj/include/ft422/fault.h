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

#ifndef FT422_FAULT_H
#define FT422_FAULT_H

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace ft422 {

enum class Pauli : std::uint8_t { I, X, Y, Z };

char pauli_char(Pauli p);

/// Where a fault can strike.
///  - Gate: immediately after the op at `op_index`, on that op's qubits.
///  - Prep: an X flip on `qubits[0]` before the first op.
///  - Idle: a single-qubit Pauli on `qubits[0]` while waiting at the barrier
///    at `op_index`.
///  - PreMeasure: a classical flip of `qubits[0]`'s measured bit.
enum class LocationKind : std::uint8_t { Gate, Prep, Idle, PreMeasure };

struct FaultLocation {
    LocationKind kind = LocationKind::Gate;
    std::size_t op_index = 0;
    std::vector<int> qubits;

    int arity() const { return static_cast<int>(qubits.size()); }
    bool operator==(const FaultLocation &) const = default;
};

/// One Pauli per qubit of the location's support. Prep and PreMeasure
/// faults always carry {X}.
struct PauliFault {
    FaultLocation location;
    std::vector<Pauli> paulis;

    /// e.g. "gate#3(CNOT q3,q2):XZ" or "premeasure(q1)".
    std::string describe() const;
    bool operator==(const PauliFault &) const = default;
};

/// Circuit-level depolarizing noise. Each single-qubit gate is followed by a
/// uniformly random non-identity Pauli with probability p1, each two-qubit
/// gate by one of the 15 non-identity Pauli pairs with probability p2, and
/// each measured bit flips with probability p_meas.
struct NoiseModel {
    double p1 = 0.0;
    double p2 = 0.0;
    double p_meas = 0.0;
    double p_prep = 0.0;
    bool include_idle = false;

    /// Error rates from the device calibration averages: 1 - fidelity for
    /// 1Q (99.05%), 2Q (98.75%) and readout (99.32%).
    static NoiseModel calibrated();

    /// Throws UsageError if any probability lies outside [0, 1].
    void validate() const;
    bool noiseless() const { return p1 == 0 && p2 == 0 && p_meas == 0 && p_prep == 0; }
};

}  // namespace ft422

#endif
