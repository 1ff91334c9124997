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

#include "ft422/circuitlib.h"

#include <cmath>
#include <numbers>

#include "ft422/errors.h"

namespace ft422 {

namespace {

constexpr std::array<std::string_view, 4> kOracleNames = {"f0", "fx", "f1x", "f1"};

std::string label_of(std::size_t value, std::size_t width) {
    std::string s(width, '0');
    for (std::size_t j = 0; j < width; j++) {
        if (value & (std::size_t{1} << (width - 1 - j))) {
            s[j] = '1';
        }
    }
    return s;
}

}  // namespace

std::string_view oracle_name(Oracle o) { return kOracleNames[static_cast<int>(o)]; }

Oracle parse_oracle(std::string_view name) {
    for (Oracle o : kAllOracles) {
        if (oracle_name(o) == name) {
            return o;
        }
    }
    throw UsageError("unknown oracle '" + std::string(name) + "' (expected f0, fx, f1x or f1)");
}

bool is_constant(Oracle o) { return o == Oracle::F0 || o == Oracle::F1; }

// --- oracles ---

namespace {

void append_bare_oracle(Circuit &c, Oracle o) {
    const auto seg = Segment::Oracle;
    switch (o) {
        case Oracle::F0:
            break;
        case Oracle::Fx:
            c.gate(GateKind::CNOT, {1, 0}, seg);
            break;
        case Oracle::F1x:
            c.gate(GateKind::X, {0}, seg);
            c.gate(GateKind::CNOT, {1, 0}, seg);
            break;
        case Oracle::F1:
            c.gate(GateKind::X, {0}, seg);
            break;
    }
}

void append_encoded_oracle(Circuit &c, Oracle o) {
    using G = GateKind;
    const auto seg = Segment::Oracle;
    switch (o) {
        case Oracle::F0:
            break;
        case Oracle::Fx:
            for (auto &op : transversal_circuit("CNOT21", Dictionary::Paper, seg).ops) {
                c.append(op);
            }
            break;
        case Oracle::F1x:
            c.gate(G::Z, {0}, seg);
            c.gate(G::S, {0}, seg);
            c.gate(G::S, {1}, seg);
            c.gate(G::Z, {2}, seg);
            c.gate(G::S, {2}, seg);
            c.gate(G::S, {3}, seg);
            break;
        case Oracle::F1:
            for (auto &op : transversal_circuit("XI", Dictionary::Paper, seg).ops) {
                c.append(op);
            }
            break;
    }
}

void append_native_oracle(Circuit &c, Oracle o) {
    using G = GateKind;
    const auto seg = Segment::Oracle;
    auto second_layer = [&](std::array<Turns, 4> angles) {
        for (int q = 0; q < 4; q++) {
            c.gate(G::GPI, Turns(0, 1), {q}, seg);
        }
        for (int q = 0; q < 4; q++) {
            c.gate(G::GPI, angles[q], {q}, seg);
        }
    };
    switch (o) {
        case Oracle::F0:
            break;
        case Oracle::Fx:
            second_layer({Turns(1, 8), Turns(3, 8), Turns(3, 8), Turns(1, 8)});
            break;
        case Oracle::F1x:
            second_layer({Turns(3, 8), Turns(1, 8), Turns(3, 8), Turns(1, 8)});
            break;
        case Oracle::F1:
            c.gate(G::GPI, Turns(1, 2), {0}, seg);
            c.gate(G::GPI, Turns(1, 2), {1}, seg);
            c.gate(G::GPI, Turns(1, 4), {0}, seg);
            c.gate(G::GPI, Turns(1, 4), {1}, seg);
            break;
    }
}

}  // namespace

Circuit bare_oracle(Oracle o) {
    Circuit c("bare-oracle:" + std::string(oracle_name(o)), 2);
    append_bare_oracle(c, o);
    return c;
}

Circuit encoded_oracle(Oracle o) {
    Circuit c("encoded-oracle:" + std::string(oracle_name(o)), 4);
    append_encoded_oracle(c, o);
    return c;
}

Circuit native_oracle(Oracle o) {
    Circuit c("native-oracle:" + std::string(oracle_name(o)), 4);
    append_native_oracle(c, o);
    return c;
}

// --- Deutsch-Jozsa ---

Circuit bare_dj(Oracle o) {
    using G = GateKind;
    Circuit c("bare-dj:" + std::string(oracle_name(o)), 2);
    c.gate(G::X, {0}, Segment::Prep);
    c.gate(G::X, {1}, Segment::Prep);
    c.gate(G::H, {0}, Segment::Prep);
    c.gate(G::H, {1}, Segment::Prep);
    c.barrier(Segment::Prep);
    append_bare_oracle(c, o);
    c.barrier(Segment::Oracle);
    c.gate(G::H, {1}, Segment::Readout);
    c.measure_all();
    return c;
}

Circuit encoded_dj(Oracle o) {
    using G = GateKind;
    Circuit c("encoded-dj:" + std::string(oracle_name(o)), 4);
    // Two Bell pairs (q1,q2) and (q3,q4) = logical |++>.
    c.gate(G::H, {1}, Segment::Prep);
    c.gate(G::H, {3}, Segment::Prep);
    c.gate(G::CNOT, {1, 0}, Segment::Prep);
    c.gate(G::CNOT, {3, 2}, Segment::Prep);
    // Y2 Y4 is logical Z1 Z2 up to a stabilizer: |++> -> |-->.
    c.gate(G::Y, {1}, Segment::Prep);
    c.gate(G::Y, {3}, Segment::Prep);
    c.barrier(Segment::Prep);
    append_encoded_oracle(c, o);
    c.barrier(Segment::Oracle);
    for (int q = 0; q < 4; q++) {
        c.gate(G::H, {q}, Segment::Readout);
    }
    c.measure_all();
    return c;
}

Circuit native_encoded_dj(Oracle o) {
    using G = GateKind;
    Circuit c("encoded-dj-native:" + std::string(oracle_name(o)), 4);
    const Turns zero(0, 1);
    const Turns quarter(1, 4);
    const Turns half(1, 2);
    c.gate(G::GPI, zero, {1}, Segment::Prep);
    c.gate(G::GPI, zero, {3}, Segment::Prep);
    c.gate(G::MS, {0, 1}, Segment::Prep);
    c.gate(G::MS, {2, 3}, Segment::Prep);
    for (int q = 0; q < 4; q++) {
        c.gate(G::GPI2, half, {q}, Segment::Prep);
    }
    c.gate(G::GPI2, quarter, {1}, Segment::Prep);
    c.gate(G::GPI2, quarter, {3}, Segment::Prep);
    c.barrier(Segment::Prep);
    append_native_oracle(c, o);
    c.barrier(Segment::Oracle);
    for (int q = 0; q < 4; q++) {
        c.gate(G::GPI2, quarter, {q}, Segment::Readout);
    }
    for (int q = 0; q < 4; q++) {
        c.gate(G::GPI, zero, {q}, Segment::Readout);
    }
    c.measure_all();
    return c;
}

// --- entangled states ---

std::string_view entangled_name(EntangledId id) {
    static constexpr std::array<std::string_view, 8> names = {"A", "B", "C", "D", "E", "F", "G", "H"};
    return names[static_cast<int>(id)];
}

EntangledId parse_entangled(std::string_view name) {
    for (EntangledId id : kAllEntangled) {
        if (entangled_name(id) == name) {
            return id;
        }
    }
    throw UsageError("unknown entangled circuit '" + std::string(name) + "' (expected A-H)");
}

StateVector entangled_target_state(EntangledId id) {
    const double r = 1.0 / std::numbers::sqrt2;
    using V = std::vector<Complex>;
    // Amplitudes of |00>, |01>, |10>, |11>.
    switch (id) {
        case EntangledId::A:
            return StateVector(2, V{r, 0, 0, r});
        case EntangledId::B:
            return StateVector(2, V{r, 0, 0, -r});
        case EntangledId::C:
            return StateVector(2, V{0, r, r, 0});
        case EntangledId::D:
            return StateVector(2, V{0, -r, r, 0});
        case EntangledId::E:
            return StateVector(2, V{0.5, 0.5, 0.5, -0.5});
        case EntangledId::F:
            return StateVector(2, V{0.5, -0.5, 0.5, 0.5});
        case EntangledId::G:
            return StateVector(2, V{0.5, 0.5, -0.5, 0.5});
        case EntangledId::H:
            return StateVector(2, V{0.5, -0.5, -0.5, -0.5});
    }
    throw UsageError("unknown entangled circuit");
}

namespace {

// One step of a two-qubit unitary word. Tensor factors are written with the
// left factor acting on the second ket position, so "Z x I" is Z on
// position 1; this is the only reading under which every tabulated final
// state comes out right.
enum class WordGate { X, Z, HH, CZ };

struct WordStep {
    WordGate gate;
    int position = 0;
};

bool starts_from_bell(EntangledId id) {
    return id == EntangledId::A || id == EntangledId::B || id == EntangledId::C || id == EntangledId::D;
}

std::vector<WordStep> unitary_word(EntangledId id) {
    using W = WordGate;
    switch (id) {
        case EntangledId::A:
            return {};
        case EntangledId::B:  // I x Z
            return {{W::Z, 0}};
        case EntangledId::C:  // X x I
            return {{W::X, 1}};
        case EntangledId::D:  // I x ZX
            return {{W::X, 0}, {W::Z, 0}};
        case EntangledId::E:  // CZ . H x H
            return {{W::HH}, {W::CZ}};
        case EntangledId::F:  // CZ . Z x I . H x H
            return {{W::HH}, {W::Z, 1}, {W::CZ}};
        case EntangledId::G:  // CZ . I x Z . H x H
            return {{W::HH}, {W::Z, 0}, {W::CZ}};
        case EntangledId::H:  // X x I . CZ . H x H . X x I
            return {{W::X, 1}, {W::HH}, {W::CZ}, {W::X, 1}};
    }
    return {};
}

/// Emits logical gates through the conventional dictionary, tracking
/// relabelings as a position -> physical qubit map.
class EncodedBuilder {
   public:
    explicit EncodedBuilder(Circuit &c) : circuit_(c), position_(4) {
        for (int q = 0; q < 4; q++) {
            position_[q] = q;
        }
    }

    void logical(std::string_view label, Segment segment) {
        Fragment frag = transversal_circuit(label, Dictionary::Conventional, segment);
        for (auto op : frag.ops) {
            for (int &q : op.qubits) {
                q = position_[q];
            }
            circuit_.append(std::move(op));
        }
        if (frag.relabel) {
            std::swap(position_[frag.relabel->first], position_[frag.relabel->second]);
        }
    }

    void finish() {
        circuit_.measure_all();
        circuit_.set_readout_order(position_);
    }

   private:
    Circuit &circuit_;
    std::vector<int> position_;
};

}  // namespace

Circuit entangled_circuit(EntangledId id, bool encoded) {
    using G = GateKind;
    const std::string name =
        "entangled:" + std::string(entangled_name(id)) + (encoded ? ":encoded" : ":bare");
    const auto word = unitary_word(id);

    if (!encoded) {
        Circuit c(name, 2);
        if (starts_from_bell(id)) {
            c.gate(G::H, {0}, Segment::Prep);
            c.gate(G::CNOT, {0, 1}, Segment::Prep);
        }
        c.barrier(Segment::Prep);
        for (const auto &step : word) {
            switch (step.gate) {
                case WordGate::X:
                    c.gate(G::X, {step.position}, Segment::Logic);
                    break;
                case WordGate::Z:
                    c.gate(G::Z, {step.position}, Segment::Logic);
                    break;
                case WordGate::HH:
                    c.gate(G::H, {0}, Segment::Logic);
                    c.gate(G::H, {1}, Segment::Logic);
                    break;
                case WordGate::CZ:
                    c.gate(G::CZ, {0, 1}, Segment::Logic);
                    break;
            }
        }
        c.measure_all();
        return c;
    }

    Circuit c(name, 4);
    EncodedBuilder builder(c);
    if (starts_from_bell(id)) {
        // Bell pairs give logical |0>|+>; the relabeling CNOT21 turns that
        // into the logical Bell state.
        c.gate(G::H, {1}, Segment::Prep);
        c.gate(G::H, {3}, Segment::Prep);
        c.gate(G::CNOT, {1, 0}, Segment::Prep);
        c.gate(G::CNOT, {3, 2}, Segment::Prep);
        builder.logical("CNOT21", Segment::Prep);
    } else {
        // Logical |00> = (|0000> + |1111>)/sqrt2, a GHZ state. No
        // dictionary gate reaches it from the Bell-pair state.
        c.gate(G::H, {0}, Segment::Prep);
        c.gate(G::CNOT, {0, 1}, Segment::Prep);
        c.gate(G::CNOT, {0, 2}, Segment::Prep);
        c.gate(G::CNOT, {0, 3}, Segment::Prep);
    }
    c.barrier(Segment::Prep);
    for (const auto &step : word) {
        switch (step.gate) {
            case WordGate::X:
                builder.logical(step.position == 0 ? "XI" : "IX", Segment::Logic);
                break;
            case WordGate::Z:
                builder.logical(step.position == 0 ? "ZI" : "IZ", Segment::Logic);
                break;
            case WordGate::HH:
                // H^{x4} is SWAP12 . (H x H); undo the swap by relabeling.
                builder.logical("SWAP12.HH", Segment::Logic);
                builder.logical("SWAP12", Segment::Logic);
                break;
            case WordGate::CZ:
                builder.logical("CZ", Segment::Logic);
                break;
        }
    }
    builder.finish();
    return c;
}

// --- decoding ---

std::optional<std::string> Decoder::label(std::string_view bits) const {
    if (!encoded) {
        std::string out;
        for (int pos : bare_positions) {
            if (pos < 0 || static_cast<std::size_t>(pos) >= bits.size()) {
                throw UsageError("decoder position out of range for '" + std::string(bits) + "'");
            }
            out += bits[pos];
        }
        return out;
    }
    if (!accept(bits)) {
        return std::nullopt;
    }
    LogicalOutcome o = decode(bits, dictionary);
    return answer_only ? std::to_string(o.first) : o.str();
}

std::vector<std::string> Decoder::labels() const {
    std::size_t width = encoded ? (answer_only ? 1 : 2) : bare_positions.size();
    std::vector<std::string> out;
    for (std::size_t v = 0; v < (std::size_t{1} << width); v++) {
        out.push_back(label_of(v, width));
    }
    return out;
}

LogicalDistribution logical_distribution(const Distribution &measured, const Decoder &decoder) {
    LogicalDistribution out;
    for (const auto &l : decoder.labels()) {
        out.probabilities[l] = 0.0;
    }
    for (const auto &[bits, p] : measured) {
        if (auto l = decoder.label(bits)) {
            out.probabilities[*l] += p;
            out.accept_probability += p;
        }
    }
    if (out.accept_probability > 0) {
        for (auto &[l, p] : out.probabilities) {
            p /= out.accept_probability;
        }
    }
    return out;
}

// --- protocols ---

namespace {

Distribution answer_distribution(Oracle o) {
    bool constant = is_constant(o);
    return {{"0", constant ? 0.0 : 1.0}, {"1", constant ? 1.0 : 0.0}};
}

}  // namespace

Protocol bare_dj_protocol(Oracle o) {
    Decoder d;
    d.bare_positions = {1};
    Circuit c = bare_dj(o);
    std::string name = c.name();
    return Protocol{std::move(name), std::move(c), d, answer_distribution(o)};
}

Protocol encoded_dj_protocol(Oracle o, bool native) {
    Decoder d;
    d.encoded = true;
    d.dictionary = Dictionary::Paper;
    d.answer_only = true;
    Circuit c = native ? native_encoded_dj(o) : encoded_dj(o);
    std::string name = c.name();
    return Protocol{std::move(name), std::move(c), d, answer_distribution(o)};
}

Protocol entangled_protocol(EntangledId id, bool encoded) {
    Decoder d;
    if (encoded) {
        d.encoded = true;
        d.dictionary = Dictionary::Conventional;
    } else {
        d.bare_positions = {0, 1};
    }
    Distribution ideal;
    StateVector target = entangled_target_state(id);
    for (std::size_t i = 0; i < 4; i++) {
        ideal[label_of(i, 2)] = std::norm(target.amplitude(i));
    }
    Circuit c = entangled_circuit(id, encoded);
    std::string name = c.name();
    return Protocol{std::move(name), std::move(c), d, std::move(ideal)};
}

std::vector<std::string> catalog_names() {
    std::vector<std::string> out;
    for (const char *family : {"bare-dj:", "encoded-dj:", "encoded-dj-native:"}) {
        for (Oracle o : kAllOracles) {
            out.push_back(family + std::string(oracle_name(o)));
        }
    }
    for (EntangledId id : kAllEntangled) {
        out.push_back("entangled:" + std::string(entangled_name(id)) + ":bare");
        out.push_back("entangled:" + std::string(entangled_name(id)) + ":encoded");
    }
    return out;
}

Protocol lookup_protocol(std::string_view name) {
    auto rest_after = [&](std::string_view prefix) -> std::optional<std::string_view> {
        if (name.substr(0, prefix.size()) == prefix) {
            return name.substr(prefix.size());
        }
        return std::nullopt;
    };
    try {
        if (auto r = rest_after("bare-dj:")) {
            return bare_dj_protocol(parse_oracle(*r));
        }
        if (auto r = rest_after("encoded-dj-native:")) {
            return encoded_dj_protocol(parse_oracle(*r), true);
        }
        if (auto r = rest_after("encoded-dj:")) {
            return encoded_dj_protocol(parse_oracle(*r), false);
        }
        if (auto r = rest_after("entangled:")) {
            auto colon = r->find(':');
            if (colon != std::string_view::npos) {
                auto variant = r->substr(colon + 1);
                if (variant == "bare" || variant == "encoded") {
                    return entangled_protocol(parse_entangled(r->substr(0, colon)), variant == "encoded");
                }
            }
        }
    } catch (const UsageError &) {
    }
    throw UsageError("unknown circuit '" + std::string(name) + "' (see `ft422 list`)");
}

}  // namespace ft422
