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

#include "ft422/code422.h"

#include <cmath>
#include <numbers>
#include <unsupported/Eigen/KroneckerProduct>

#include "ft422/errors.h"

namespace ft422 {

std::string_view dictionary_name(Dictionary d) { return d == Dictionary::Paper ? "paper" : "conventional"; }

Dictionary parse_dictionary(std::string_view name) {
    if (name == "paper") {
        return Dictionary::Paper;
    }
    if (name == "conventional") {
        return Dictionary::Conventional;
    }
    throw UsageError("unknown dictionary '" + std::string(name) + "' (expected paper or conventional)");
}

Matrix pauli_string_matrix(std::string_view paulis) {
    Matrix m = Matrix::Identity(1, 1);
    for (char c : paulis) {
        Pauli p;
        switch (c) {
            case 'I':
                p = Pauli::I;
                break;
            case 'X':
                p = Pauli::X;
                break;
            case 'Y':
                p = Pauli::Y;
                break;
            case 'Z':
                p = Pauli::Z;
                break;
            default:
                throw UsageError("bad Pauli character '" + std::string(1, c) + "'");
        }
        m = Eigen::kroneckerProduct(m, pauli_matrix(p)).eval();
    }
    return m;
}

namespace {

Matrix plus_projector(const Matrix &g) { return 0.5 * (Matrix::Identity(g.rows(), g.cols()) + g); }

struct Operators {
    const char *x1;
    const char *z1;
    const char *x2;
    const char *z2;
};

Operators operators_of(Dictionary d) {
    if (d == Dictionary::Paper) {
        return {"ZZII", "XIXI", "XXII", "ZIZI"};
    }
    return {"XIXI", "ZZII", "XXII", "ZIZI"};
}

StateVector ket_pair(std::string_view a, std::string_view b) {
    const double r = 1.0 / std::numbers::sqrt2;
    std::vector<Complex> amps(16, Complex{0, 0});
    amps[std::stoul(std::string(a), nullptr, 2)] = r;
    amps[std::stoul(std::string(b), nullptr, 2)] = r;
    return StateVector(4, std::move(amps));
}

/// First nonzero projection of a computational basis vector, normalized and
/// phased so its leading amplitude is real and positive.
Eigen::VectorXcd first_projection(const Matrix &projector) {
    for (Eigen::Index i = 0; i < projector.cols(); i++) {
        Eigen::VectorXcd v = projector.col(i);
        double norm = v.norm();
        if (norm > 1e-6) {
            v /= norm;
            for (Eigen::Index j = 0; j < v.size(); j++) {
                if (std::abs(v(j)) > 1e-9) {
                    v *= std::conj(v(j)) / std::abs(v(j));
                    break;
                }
            }
            return v;
        }
    }
    throw std::logic_error("projector is zero");
}

Matrix logical_gate(const char *which) {
    std::string name(which);
    Matrix x = gate_matrix(GateKind::X);
    Matrix z = gate_matrix(GateKind::Z);
    Matrix h = gate_matrix(GateKind::H);
    Matrix id2 = Matrix::Identity(2, 2);
    if (name == "II") {
        return Matrix::Identity(4, 4);
    }
    if (name == "XI") {
        return Eigen::kroneckerProduct(x, id2).eval();
    }
    if (name == "IX") {
        return Eigen::kroneckerProduct(id2, x).eval();
    }
    if (name == "ZI") {
        return Eigen::kroneckerProduct(z, id2).eval();
    }
    if (name == "IZ") {
        return Eigen::kroneckerProduct(id2, z).eval();
    }
    if (name == "CNOT12") {
        return gate_matrix(GateKind::CNOT);
    }
    if (name == "CNOT21") {
        int q[2] = {1, 0};
        return embed(gate_matrix(GateKind::CNOT), q, 2);
    }
    if (name == "SWAP12") {
        return gate_matrix(GateKind::SWAP);
    }
    if (name == "SWAP12.HH") {
        return gate_matrix(GateKind::SWAP) * Eigen::kroneckerProduct(h, h).eval();
    }
    if (name == "CZ") {
        return gate_matrix(GateKind::CZ);
    }
    throw std::logic_error("no logical matrix for " + name);
}

using Layer = std::array<std::vector<GateKind>, 4>;

Layer pauli_layer(std::string_view paulis) {
    Layer layer;
    for (int q = 0; q < 4; q++) {
        switch (paulis[q]) {
            case 'X':
                layer[q] = {GateKind::X};
                break;
            case 'Y':
                layer[q] = {GateKind::Y};
                break;
            case 'Z':
                layer[q] = {GateKind::Z};
                break;
            default:
                break;
        }
    }
    return layer;
}

TransversalEntry gates_entry(const char *label, std::vector<Layer> physical) {
    return TransversalEntry{label, std::move(physical), std::nullopt, logical_gate(label)};
}

TransversalEntry relabel_entry(const char *label, int a, int b) {
    return TransversalEntry{label, {}, std::make_pair(a, b), logical_gate(label)};
}

std::vector<TransversalEntry> build_paper() {
    using G = GateKind;
    const Layer all_h = {{{G::H}, {G::H}, {G::H}, {G::H}}};
    // S on the outer qubits, Z then S on the inner two.
    const Layer cnot21 = {{{G::S}, {G::Z, G::S}, {G::Z, G::S}, {G::S}}};
    return {
        gates_entry("II", {pauli_layer("XXXX"), pauli_layer("ZZZZ")}),
        gates_entry("XI", {pauli_layer("ZZII")}),
        gates_entry("ZI", {pauli_layer("XIXI")}),
        gates_entry("IX", {pauli_layer("XXII")}),
        gates_entry("IZ", {pauli_layer("ZIZI")}),
        gates_entry("CNOT21", {cnot21}),
        gates_entry("SWAP12", {all_h}),
    };
}

std::vector<TransversalEntry> build_conventional() {
    using G = GateKind;
    const Layer all_h = {{{G::H}, {G::H}, {G::H}, {G::H}}};
    // The phase gate "P" of this convention is S.
    const Layer cz = {{{G::S}, {G::Z, G::S}, {G::Z, G::S}, {G::S}}};
    return {
        gates_entry("II", {pauli_layer("XXXX"), pauli_layer("ZZZZ")}),
        gates_entry("XI", {pauli_layer("XIXI")}),
        gates_entry("IX", {pauli_layer("XXII")}),
        gates_entry("ZI", {pauli_layer("ZZII")}),
        gates_entry("IZ", {pauli_layer("ZIZI")}),
        gates_entry("SWAP12.HH", {all_h}),
        gates_entry("CZ", {cz}),
        relabel_entry("CNOT12", 0, 1),
        relabel_entry("CNOT21", 0, 2),
        relabel_entry("SWAP12", 1, 2),
    };
}

Matrix layer_unitary(const Layer &layer) {
    Matrix total = Matrix::Identity(16, 16);
    for (int q = 0; q < 4; q++) {
        for (GateKind k : layer[q]) {
            int qs[1] = {q};
            total = embed(gate_matrix(k), qs, 4) * total;
        }
    }
    return total;
}

std::string layer_text(const Layer &layer) {
    std::string out;
    for (int q = 0; q < 4; q++) {
        if (q) {
            out += " x ";
        }
        if (layer[q].empty()) {
            out += "I";
        }
        for (GateKind k : layer[q]) {
            out += gate_name(k);
        }
    }
    return out;
}

}  // namespace

Matrix codespace_projector() {
    return plus_projector(pauli_string_matrix("XXXX")) * plus_projector(pauli_string_matrix("ZZZZ"));
}

std::array<LabeledState, 4> logical_basis(Dictionary d) {
    if (d == Dictionary::Paper) {
        return {{
            {"+0", ket_pair("0000", "1111")},
            {"+1", ket_pair("1100", "0011")},
            {"-0", ket_pair("1010", "0101")},
            {"-1", ket_pair("0110", "1001")},
        }};
    }
    Operators ops = operators_of(d);
    Matrix projector = codespace_projector() * plus_projector(pauli_string_matrix(ops.z1)) *
                       plus_projector(pauli_string_matrix(ops.z2));
    Eigen::VectorXcd zero = first_projection(projector);
    Matrix x1 = pauli_string_matrix(ops.x1);
    Matrix x2 = pauli_string_matrix(ops.x2);
    return {{
        {"00", StateVector::from_eigen(zero)},
        {"01", StateVector::from_eigen(x2 * zero)},
        {"10", StateVector::from_eigen(x1 * zero)},
        {"11", StateVector::from_eigen(x1 * x2 * zero)},
    }};
}

Matrix logical_encoder(Dictionary d) {
    auto basis = logical_basis(d);
    Matrix enc(16, 4);
    if (d == Dictionary::Paper) {
        // |a b> = (|+b> + (-1)^a |-b>) / sqrt2
        const double r = 1.0 / std::numbers::sqrt2;
        for (int a = 0; a < 2; a++) {
            for (int b = 0; b < 2; b++) {
                double sign = a ? -1.0 : 1.0;
                enc.col(2 * a + b) = r * (basis[b].state.to_eigen() + sign * basis[2 + b].state.to_eigen());
            }
        }
        return enc;
    }
    for (int i = 0; i < 4; i++) {
        enc.col(i) = basis[i].state.to_eigen();
    }
    return enc;
}

bool accept(std::string_view bits) {
    if (bits.size() != 4) {
        throw UsageError("[[4,2,2]] outcomes have 4 bits, got '" + std::string(bits) + "'");
    }
    int ones = 0;
    for (char c : bits) {
        if (c != '0' && c != '1') {
            throw UsageError("outcome must be binary: '" + std::string(bits) + "'");
        }
        ones += c == '1';
    }
    return ones % 2 == 0;
}

LogicalOutcome decode(std::string_view bits, Dictionary) {
    if (!accept(bits)) {
        throw RejectedOutcome("odd-parity outcome '" + std::string(bits) + "' is outside the codespace");
    }
    int b1 = bits[0] - '0';
    int b2 = bits[1] - '0';
    int b3 = bits[2] - '0';
    return {b1 ^ b2, b1 ^ b3};
}

std::pair<std::string, std::string> outcome_observables(Dictionary d) {
    if (d == Dictionary::Paper) {
        return {"X1", "Z2"};
    }
    return {"Z1", "Z2"};
}

std::string TransversalEntry::physical_text() const {
    if (relabel) {
        return "SWAP" + std::to_string(relabel->first + 1) + std::to_string(relabel->second + 1) + " (relabel)";
    }
    std::string out;
    for (std::size_t i = 0; i < physical.size(); i++) {
        if (i) {
            out += ", ";
        }
        out += layer_text(physical[i]);
    }
    return out;
}

const std::vector<TransversalEntry> &dictionary_entries(Dictionary d) {
    static const std::vector<TransversalEntry> paper = build_paper();
    static const std::vector<TransversalEntry> conventional = build_conventional();
    return d == Dictionary::Paper ? paper : conventional;
}

const TransversalEntry &dictionary_entry(std::string_view label, Dictionary d) {
    for (const auto &e : dictionary_entries(d)) {
        if (e.label == label) {
            return e;
        }
    }
    throw UsageError("dictionary '" + std::string(dictionary_name(d)) + "' has no logical gate '" +
                     std::string(label) + "'");
}

Fragment transversal_circuit(std::string_view label, Dictionary d, Segment segment) {
    const TransversalEntry &e = dictionary_entry(label, d);
    Fragment frag;
    if (e.relabel) {
        frag.relabel = e.relabel;
        return frag;
    }
    const Layer &layer = e.physical.front();
    for (int q = 0; q < 4; q++) {
        for (GateKind k : layer[q]) {
            frag.ops.push_back(GateOp{k, {q}, segment, std::nullopt});
        }
    }
    return frag;
}

EntryCheck check_logical_action(const Matrix &physical, const Matrix &logical, Dictionary d, double tol) {
    EntryCheck check;
    Matrix p = codespace_projector();
    Matrix complement = Matrix::Identity(16, 16) - p;
    check.leakage = (complement * physical * p).cwiseAbs().maxCoeff();
    Matrix enc = logical_encoder(d);
    Matrix restricted = enc.adjoint() * physical * enc;
    check.residual = phase_residual(restricted, logical);
    check.passed = check.leakage <= tol && check.residual <= tol;
    return check;
}

EntryCheck verify_entry(std::string_view label, Dictionary d, double tol) {
    const TransversalEntry &e = dictionary_entry(label, d);
    std::vector<Matrix> physicals;
    if (e.relabel) {
        int q[2] = {e.relabel->first, e.relabel->second};
        physicals.push_back(embed(gate_matrix(GateKind::SWAP), q, 4));
    }
    for (const auto &layer : e.physical) {
        physicals.push_back(layer_unitary(layer));
    }
    EntryCheck total{e.label, e.physical_text(), true, 0.0, 0.0};
    for (const auto &u : physicals) {
        EntryCheck c = check_logical_action(u, e.logical, d, tol);
        total.passed = total.passed && c.passed;
        total.leakage = std::max(total.leakage, c.leakage);
        total.residual = std::max(total.residual, c.residual);
    }
    return total;
}

bool verify_dictionary_entry(std::string_view label, Dictionary d, double tol) {
    return verify_entry(label, d, tol).passed;
}

std::vector<EntryCheck> verify_dictionary(Dictionary d, double tol) {
    std::vector<EntryCheck> out;
    for (const auto &e : dictionary_entries(d)) {
        out.push_back(verify_entry(e.label, d, tol));
    }
    return out;
}

}  // namespace ft422
