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

#include "ft422/circuit.h"

#include <algorithm>
#include <array>
#include <utility>

#include "ft422/errors.h"

namespace ft422 {

namespace {

constexpr std::array<std::pair<GateKind, std::string_view>, 14> kGateNames = {{
    {GateKind::X, "X"},
    {GateKind::Y, "Y"},
    {GateKind::Z, "Z"},
    {GateKind::H, "H"},
    {GateKind::S, "S"},
    {GateKind::Sdg, "Sdg"},
    {GateKind::CNOT, "CNOT"},
    {GateKind::CZ, "CZ"},
    {GateKind::SWAP, "SWAP"},
    {GateKind::GPI, "GPI"},
    {GateKind::GPI2, "GPI2"},
    {GateKind::MS, "MS"},
    {GateKind::Barrier, "Barrier"},
    {GateKind::MeasureAll, "MeasureAll"},
}};

constexpr std::array<std::pair<Segment, std::string_view>, 4> kSegmentNames = {{
    {Segment::Prep, "prep"},
    {Segment::Logic, "logic"},
    {Segment::Oracle, "oracle"},
    {Segment::Readout, "readout"},
}};

}  // namespace

std::string_view gate_name(GateKind kind) {
    for (const auto &[k, name] : kGateNames) {
        if (k == kind) {
            return name;
        }
    }
    return "?";
}

GateKind parse_gate_kind(std::string_view name) {
    for (const auto &[k, n] : kGateNames) {
        if (n == name) {
            return k;
        }
    }
    throw UsageError("unknown gate kind '" + std::string(name) + "'");
}

std::string_view segment_name(Segment segment) {
    for (const auto &[s, name] : kSegmentNames) {
        if (s == segment) {
            return name;
        }
    }
    return "?";
}

Segment parse_segment(std::string_view name) {
    for (const auto &[s, n] : kSegmentNames) {
        if (n == name) {
            return s;
        }
    }
    throw UsageError("unknown segment '" + std::string(name) + "'");
}

int gate_arity(GateKind kind) {
    switch (kind) {
        case GateKind::CNOT:
        case GateKind::CZ:
        case GateKind::SWAP:
        case GateKind::MS:
            return 2;
        case GateKind::Barrier:
        case GateKind::MeasureAll:
            return 0;
        default:
            return 1;
    }
}

bool is_unitary_gate(GateKind kind) { return kind != GateKind::Barrier && kind != GateKind::MeasureAll; }

bool takes_angle(GateKind kind) { return kind == GateKind::GPI || kind == GateKind::GPI2; }

Circuit::Circuit(std::string name, int n_qubits) : name_(std::move(name)), n_qubits_(n_qubits) {
    if (n_qubits < 1 || n_qubits > 6) {
        throw UsageError("circuits must have between 1 and 6 qubits");
    }
    for (int q = 0; q < n_qubits; q++) {
        readout_order_.push_back(q);
    }
}

void Circuit::append(GateOp op) {
    if (measured()) {
        throw UsageError("no ops may follow MeasureAll");
    }
    if (takes_angle(op.kind) != op.angle.has_value()) {
        throw UsageError(std::string(gate_name(op.kind)) +
                         (op.angle ? " does not take an angle" : " requires an angle"));
    }
    if (static_cast<int>(op.qubits.size()) != gate_arity(op.kind)) {
        throw UsageError(std::string(gate_name(op.kind)) + " acts on " + std::to_string(gate_arity(op.kind)) +
                         " qubit(s), got " + std::to_string(op.qubits.size()));
    }
    for (std::size_t i = 0; i < op.qubits.size(); i++) {
        int q = op.qubits[i];
        if (q < 0 || q >= n_qubits_) {
            throw UsageError("qubit index " + std::to_string(q) + " out of range for " +
                             std::to_string(n_qubits_) + "-qubit circuit");
        }
        for (std::size_t j = 0; j < i; j++) {
            if (op.qubits[j] == q) {
                throw UsageError("repeated qubit " + std::to_string(q) + " in " + std::string(gate_name(op.kind)));
            }
        }
    }
    ops_.push_back(std::move(op));
}

void Circuit::gate(GateKind kind, std::vector<int> qubits, Segment segment) {
    append(GateOp{kind, std::move(qubits), segment, std::nullopt});
}

void Circuit::gate(GateKind kind, Turns angle, std::vector<int> qubits, Segment segment) {
    append(GateOp{kind, std::move(qubits), segment, angle});
}

void Circuit::barrier(Segment segment) { append(GateOp{GateKind::Barrier, {}, segment, std::nullopt}); }

void Circuit::measure_all() { append(GateOp{GateKind::MeasureAll, {}, Segment::Readout, std::nullopt}); }

bool Circuit::measured() const { return !ops_.empty() && ops_.back().kind == GateKind::MeasureAll; }

void Circuit::set_readout_order(std::vector<int> order) {
    std::vector<int> sorted = order;
    std::sort(sorted.begin(), sorted.end());
    if (static_cast<int>(sorted.size()) != n_qubits_) {
        throw UsageError("readout order must list every qubit once");
    }
    for (int q = 0; q < n_qubits_; q++) {
        if (sorted[q] != q) {
            throw UsageError("readout order must be a permutation of the qubits");
        }
    }
    readout_order_ = std::move(order);
}

std::size_t Circuit::gate_count() const {
    return static_cast<std::size_t>(
        std::count_if(ops_.begin(), ops_.end(), [](const GateOp &op) { return is_unitary_gate(op.kind); }));
}

Circuit strip_measurement(const Circuit &circuit) {
    Circuit out(circuit.name(), circuit.n_qubits());
    for (const auto &op : circuit.ops()) {
        if (op.kind != GateKind::MeasureAll) {
            out.append(op);
        }
    }
    out.set_readout_order(circuit.readout_order());
    return out;
}

}  // namespace ft422
