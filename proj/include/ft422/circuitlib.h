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

#ifndef FT422_CIRCUITLIB_H
#define FT422_CIRCUITLIB_H

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ft422/circuit.h"
#include "ft422/code422.h"
#include "ft422/simcore.h"

namespace ft422 {

/// The four one-bit functions an oracle can hide.
enum class Oracle { F0, Fx, F1x, F1 };

inline constexpr std::array<Oracle, 4> kAllOracles = {Oracle::F0, Oracle::Fx, Oracle::F1x, Oracle::F1};

std::string_view oracle_name(Oracle o);  // "f0", "fx", "f1x", "f1"
Oracle parse_oracle(std::string_view name);
bool is_constant(Oracle o);

/// Deutsch-Jozsa on two qubits. q1 is the oracle target, q2 the query qubit
/// whose measurement is the answer (1 = constant, 0 = balanced).
Circuit bare_dj(Oracle o);

/// Encoded Deutsch-Jozsa on the [[4,2,2]] code: Bell-pair preparation of the
/// logical |++>, Y on q2 and q4, transversal oracle, H on every qubit (a
/// logical swap), then measure all. The answer is the first decoded bit.
Circuit encoded_dj(Oracle o);

/// The same protocol written in trapped-ion native gates.
Circuit native_encoded_dj(Oracle o);

/// Oracle bodies on their own (no barriers, no measurement), segment Oracle.
Circuit bare_oracle(Oracle o);
Circuit encoded_oracle(Oracle o);
Circuit native_oracle(Oracle o);

enum class EntangledId { A, B, C, D, E, F, G, H };

inline constexpr std::array<EntangledId, 8> kAllEntangled = {EntangledId::A, EntangledId::B, EntangledId::C,
                                                             EntangledId::D, EntangledId::E, EntangledId::F,
                                                             EntangledId::G, EntangledId::H};

std::string_view entangled_name(EntangledId id);  // "A" ... "H"
EntangledId parse_entangled(std::string_view name);

/// Two-qubit target state of each entangled-state circuit, as tabulated.
StateVector entangled_target_state(EntangledId id);

/// Bare: 2-qubit preparation followed by the unitary word. Encoded: 4-qubit
/// version built from the conventional dictionary; qubit relabelings are
/// folded into the readout order instead of being executed.
Circuit entangled_circuit(EntangledId id, bool encoded);

/// Turns a measured bitstring (readout order) into a logical label, or
/// nullopt if the shot is discarded.
struct Decoder {
    bool encoded = false;
    Dictionary dictionary = Dictionary::Paper;
    /// Bare: measured positions forming the label.
    std::vector<int> bare_positions;
    /// Encoded: report only the first decoded bit.
    bool answer_only = false;

    std::optional<std::string> label(std::string_view bits) const;
    /// Every label this decoder can produce, lexicographic.
    std::vector<std::string> labels() const;
};

/// Accepted, renormalized logical distribution (every label present) plus the
/// total accepted probability. If nothing is accepted the distribution is
/// all zeros.
struct LogicalDistribution {
    Distribution probabilities;
    double accept_probability = 0.0;
};

LogicalDistribution logical_distribution(const Distribution &measured, const Decoder &decoder);

/// A named circuit with its readout rule and the ideal logical distribution.
struct Protocol {
    std::string name;
    Circuit circuit;
    Decoder decoder;
    Distribution ideal;
};

Protocol bare_dj_protocol(Oracle o);
Protocol encoded_dj_protocol(Oracle o, bool native = false);
Protocol entangled_protocol(EntangledId id, bool encoded);

/// Catalog names: bare-dj:<oracle>, encoded-dj:<oracle>,
/// encoded-dj-native:<oracle>, entangled:<A-H>:bare, entangled:<A-H>:encoded.
std::vector<std::string> catalog_names();
/// Throws UsageError for an unknown name.
Protocol lookup_protocol(std::string_view name);

}  // namespace ft422

#endif
