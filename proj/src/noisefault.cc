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

#include "ft422/noisefault.h"

#include <cmath>

#include "ft422/errors.h"

namespace ft422 {

char pauli_char(Pauli p) {
    constexpr char chars[4] = {'I', 'X', 'Y', 'Z'};
    return chars[static_cast<int>(p)];
}

std::string PauliFault::describe() const {
    std::string qubits;
    for (std::size_t i = 0; i < location.qubits.size(); i++) {
        qubits += (i ? ",q" : "q") + std::to_string(location.qubits[i] + 1);
    }
    std::string paulis_text;
    for (Pauli p : paulis) {
        paulis_text += pauli_char(p);
    }
    switch (location.kind) {
        case LocationKind::Gate:
            return "gate#" + std::to_string(location.op_index) + "(" + qubits + "):" + paulis_text;
        case LocationKind::Idle:
            return "idle#" + std::to_string(location.op_index) + "(" + qubits + "):" + paulis_text;
        case LocationKind::Prep:
            return "prep(" + qubits + ")";
        case LocationKind::PreMeasure:
            return "premeasure(" + qubits + ")";
    }
    return "?";
}

NoiseModel NoiseModel::calibrated() {
    NoiseModel m;
    m.p1 = 0.0095;     // 1 - 0.9905
    m.p2 = 0.0125;     // 1 - 0.9875
    m.p_meas = 0.0068; // 1 - 0.9932
    return m;
}

void NoiseModel::validate() const {
    auto check = [](double p, const char *name) {
        if (!(p >= 0.0 && p <= 1.0)) {
            throw UsageError(std::string("probability ") + name + " must lie in [0, 1]");
        }
    };
    check(p1, "p1");
    check(p2, "p2");
    check(p_meas, "p_meas");
    check(p_prep, "p_prep");
}

std::vector<FaultLocation> fault_locations(const Circuit &circuit, LocationOptions options) {
    std::vector<FaultLocation> out;
    const int n = circuit.n_qubits();
    if (options.include_prep) {
        for (int q = 0; q < n; q++) {
            out.push_back({LocationKind::Prep, 0, {q}});
        }
    }
    const auto &ops = circuit.ops();
    for (std::size_t i = 0; i < ops.size(); i++) {
        if (is_unitary_gate(ops[i].kind)) {
            out.push_back({LocationKind::Gate, i, ops[i].qubits});
        } else if (ops[i].kind == GateKind::Barrier && options.include_idle) {
            for (int q = 0; q < n; q++) {
                out.push_back({LocationKind::Idle, i, {q}});
            }
        }
    }
    if (circuit.measured()) {
        for (int q : circuit.readout_order()) {
            out.push_back({LocationKind::PreMeasure, ops.size() - 1, {q}});
        }
    }
    return out;
}

std::vector<FaultLocation> fault_locations(const Circuit &circuit, const NoiseModel &model) {
    return fault_locations(circuit, LocationOptions::from_model(model));
}

std::vector<std::vector<Pauli>> nonidentity_paulis(int arity) {
    if (arity < 1 || arity > 2) {
        throw UsageError("Pauli alphabets are defined for 1 or 2 qubits");
    }
    std::vector<std::vector<Pauli>> out;
    const int count = arity == 1 ? 4 : 16;
    for (int code = 1; code < count; code++) {
        if (arity == 1) {
            out.push_back({static_cast<Pauli>(code)});
        } else {
            out.push_back({static_cast<Pauli>(code / 4), static_cast<Pauli>(code % 4)});
        }
    }
    return out;
}

std::vector<PauliFault> enumerate_single_faults(const Circuit &circuit, LocationOptions options) {
    std::vector<PauliFault> out;
    for (const auto &loc : fault_locations(circuit, options)) {
        if (loc.kind == LocationKind::Prep || loc.kind == LocationKind::PreMeasure) {
            out.push_back({loc, {Pauli::X}});
            continue;
        }
        for (auto &paulis : nonidentity_paulis(loc.arity())) {
            out.push_back({loc, std::move(paulis)});
        }
    }
    return out;
}

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

double location_probability(const FaultLocation &loc, const NoiseModel &model) {
    switch (loc.kind) {
        case LocationKind::Gate:
            return loc.arity() == 2 ? model.p2 : model.p1;
        case LocationKind::Idle:
            return model.p1;
        case LocationKind::Prep:
            return model.p_prep;
        case LocationKind::PreMeasure:
            return model.p_meas;
    }
    return 0.0;
}

}  // namespace

ShotRng shot_stream(std::uint64_t seed, std::uint64_t shot) {
    return ShotRng(splitmix64(splitmix64(seed) ^ splitmix64(shot + 0x632BE59BD9B4E019ULL)));
}

double uniform01(ShotRng &rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

std::uint64_t uniform_below(ShotRng &rng, std::uint64_t n) {
    if (n == 0) {
        throw UsageError("uniform_below needs a positive bound");
    }
    const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % n);
    std::uint64_t x;
    do {
        x = rng();
    } while (x >= limit);
    return x % n;
}

std::vector<PauliFault> sample_fault_set(const std::vector<FaultLocation> &locations, const NoiseModel &model,
                                         ShotRng &rng) {
    std::vector<PauliFault> out;
    for (const auto &loc : locations) {
        double p = location_probability(loc, model);
        if (p <= 0.0) {
            continue;
        }
        if (uniform01(rng) >= p) {
            continue;
        }
        if (loc.kind == LocationKind::Prep || loc.kind == LocationKind::PreMeasure) {
            out.push_back({loc, {Pauli::X}});
            continue;
        }
        // Pauli code in 1..4^arity-1, decoded most significant qubit first.
        const std::uint64_t alphabet = loc.arity() == 2 ? 15 : 3;
        const std::uint64_t code = 1 + uniform_below(rng, alphabet);
        std::vector<Pauli> paulis;
        if (loc.arity() == 2) {
            paulis = {static_cast<Pauli>(code / 4), static_cast<Pauli>(code % 4)};
        } else {
            paulis = {static_cast<Pauli>(code)};
        }
        out.push_back({loc, std::move(paulis)});
    }
    return out;
}

std::vector<PauliFault> sample_fault_set(const Circuit &circuit, const NoiseModel &model, ShotRng &rng) {
    model.validate();
    return sample_fault_set(fault_locations(circuit, model), model, rng);
}

double expected_fault_count(const std::vector<FaultLocation> &locations, const NoiseModel &model) {
    double total = 0.0;
    for (const auto &loc : locations) {
        total += location_probability(loc, model);
    }
    return total;
}

}  // namespace ft422
