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

#ifndef FT422_CIRCUIT_H
#define FT422_CIRCUIT_H

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ft422/turns.h"

namespace ft422 {

enum class GateKind {
    X,
    Y,
    Z,
    H,
    S,
    Sdg,
    CNOT,
    CZ,
    SWAP,
    GPI,   // trapped-ion G_pi(alpha)
    GPI2,  // trapped-ion G_pi/2(alpha)
    MS,    // Molmer-Sorensen MS(0, 0)
    Barrier,
    MeasureAll,
};

/// Which party / phase of the protocol an op belongs to. Barriers delimit
/// segments and nothing is ever merged across them.
enum class Segment { Prep, Logic, Oracle, Readout };

std::string_view gate_name(GateKind kind);
GateKind parse_gate_kind(std::string_view name);
std::string_view segment_name(Segment segment);
Segment parse_segment(std::string_view name);

/// Number of qubits a gate acts on; 0 for Barrier and MeasureAll.
int gate_arity(GateKind kind);
bool is_unitary_gate(GateKind kind);
bool takes_angle(GateKind kind);

struct GateOp {
    GateKind kind = GateKind::Barrier;
    std::vector<int> qubits;
    Segment segment = Segment::Prep;
    std::optional<Turns> angle;  // present iff kind is GPI or GPI2

    bool operator==(const GateOp &) const = default;
};

/// An ordered gate list on n qubits. Qubit 0 is "q1" in ket notation and is
/// the most significant bit of every basis label.
///
/// The readout order lists which physical qubit supplies each measured bit;
/// it is the identity unless a builder folded qubit relabelings into it.
class Circuit {
   public:
    Circuit(std::string name, int n_qubits);

    /// Validates and appends. Throws UsageError on bad arity, out-of-range or
    /// repeated qubits, a misplaced angle, or anything after MeasureAll.
    void append(GateOp op);

    void gate(GateKind kind, std::vector<int> qubits, Segment segment);
    void gate(GateKind kind, Turns angle, std::vector<int> qubits, Segment segment);
    void barrier(Segment segment);
    void measure_all();

    const std::string &name() const { return name_; }
    void set_name(std::string name) { name_ = std::move(name); }
    int n_qubits() const { return n_qubits_; }
    const std::vector<GateOp> &ops() const { return ops_; }
    bool measured() const;

    const std::vector<int> &readout_order() const { return readout_order_; }
    void set_readout_order(std::vector<int> order);

    /// Number of ops that are neither barriers nor measurements.
    std::size_t gate_count() const;

   private:
    std::string name_;
    int n_qubits_;
    std::vector<GateOp> ops_;
    std::vector<int> readout_order_;
};

/// Copy of `circuit` without its MeasureAll, for unitary comparisons.
Circuit strip_measurement(const Circuit &circuit);

}  // namespace ft422

#endif
