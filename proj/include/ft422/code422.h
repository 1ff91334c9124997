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

#ifndef FT422_CODE422_H
#define FT422_CODE422_H

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ft422/circuit.h"
#include "ft422/simcore.h"

namespace ft422 {

// The [[4,2,2]] code: stabilizers XXXX and ZZZZ on qubits q1..q4.
//
// Two logical operator conventions are supported. Both read the measured
// bits the same way (the ZZII and ZIZI parities) and differ only in what
// those bits are called and which physical strings implement which gates:
//
//   paper:         X1 = ZZII, Z1 = XIXI, X2 = XXII, Z2 = ZIZI
//   conventional:  X1 = XIXI, Z1 = ZZII, X2 = XXII, Z2 = ZIZI

enum class Dictionary { Paper, Conventional };

std::string_view dictionary_name(Dictionary d);
Dictionary parse_dictionary(std::string_view name);

/// 2^n x 2^n matrix of a Pauli string such as "XIXI" (first char = q1).
Matrix pauli_string_matrix(std::string_view paulis);

/// Projector onto the +1 eigenspace of XXXX and ZZZZ.
Matrix codespace_projector();

struct LabeledState {
    std::string label;
    StateVector state;
};

/// Paper: |+0>, |+1>, |-0>, |-1> (first logical qubit in the X basis).
/// Conventional: |00>, |01>, |10>, |11>, found by projecting onto the joint
/// +1 eigenspace of the stabilizers and logical Zs, then applying logical Xs.
std::array<LabeledState, 4> logical_basis(Dictionary d);

/// 16x4 isometry whose columns encode the logical computational basis
/// |00>, |01>, |10>, |11> (first logical qubit high) for this dictionary.
Matrix logical_encoder(Dictionary d);

/// Even parity, i.e. a possible codeword outcome.
bool accept(std::string_view bits);

struct LogicalOutcome {
    int first = 0;   // ZZII parity: X1 (paper) or Z1 (conventional)
    int second = 0;  // ZIZI parity: Z2 under both
    std::string str() const { return std::to_string(first) + std::to_string(second); }
    bool operator==(const LogicalOutcome &) const = default;
};

/// Throws RejectedOutcome for odd parity, UsageError for a bad length.
LogicalOutcome decode(std::string_view bits, Dictionary d = Dictionary::Paper);

/// Names of the two decoded observables, e.g. {"X1", "Z2"}.
std::pair<std::string, std::string> outcome_observables(Dictionary d);

/// A logical gate and how the dictionary implements it: either one or more
/// transversal physical gate strings, or a relabeling of two physical qubits.
struct TransversalEntry {
    std::string label;
    /// Alternatives; each lists the single-qubit gates on q1..q4 in time order.
    std::vector<std::array<std::vector<GateKind>, 4>> physical;
    std::optional<std::pair<int, int>> relabel;
    /// 4x4 action on the logical computational basis.
    Matrix logical;

    std::string physical_text() const;
};

const std::vector<TransversalEntry> &dictionary_entries(Dictionary d);
/// Throws UsageError for an unknown label.
const TransversalEntry &dictionary_entry(std::string_view label, Dictionary d);

/// Physical ops for one logical gate. A relabeling entry emits no ops and
/// reports the swapped pair instead.
struct Fragment {
    std::vector<GateOp> ops;
    std::optional<std::pair<int, int>> relabel;
};

Fragment transversal_circuit(std::string_view label, Dictionary d, Segment segment = Segment::Logic);

struct EntryCheck {
    std::string label;
    std::string physical;
    bool passed = false;
    double leakage = 0.0;   // max |(1 - P) U P|
    double residual = 0.0;  // phase-fitted distance to the logical matrix
};

/// Checks that a 16x16 physical unitary preserves the codespace and acts as
/// `logical` (up to global phase) on the dictionary's logical basis.
EntryCheck check_logical_action(const Matrix &physical, const Matrix &logical, Dictionary d, double tol);

/// Verifies every physical alternative of one entry.
EntryCheck verify_entry(std::string_view label, Dictionary d, double tol);
bool verify_dictionary_entry(std::string_view label, Dictionary d, double tol);
std::vector<EntryCheck> verify_dictionary(Dictionary d, double tol);

}  // namespace ft422

#endif
