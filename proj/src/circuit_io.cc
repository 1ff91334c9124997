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

#include "ft422/circuit_io.h"

#include <sstream>

#include "ft422/errors.h"

namespace ft422 {

namespace {

std::string turns_text(const Turns &t) { return std::to_string(t.num()) + "/" + std::to_string(t.den()); }

}  // namespace

nlohmann::json circuit_to_json(const Circuit &circuit) {
    nlohmann::json j;
    j["name"] = circuit.name();
    j["n_qubits"] = circuit.n_qubits();
    j["readout_order"] = circuit.readout_order();
    j["ops"] = nlohmann::json::array();
    for (const auto &op : circuit.ops()) {
        nlohmann::json o;
        o["kind"] = std::string(gate_name(op.kind));
        o["qubits"] = op.qubits;
        o["segment"] = std::string(segment_name(op.segment));
        if (op.angle) {
            o["param_turns"] = turns_text(*op.angle);
        }
        j["ops"].push_back(std::move(o));
    }
    return j;
}

Circuit circuit_from_json(const nlohmann::json &j) {
    try {
        Circuit c(j.at("name").get<std::string>(), j.at("n_qubits").get<int>());
        for (const auto &o : j.at("ops")) {
            GateOp op;
            op.kind = parse_gate_kind(o.at("kind").get<std::string>());
            op.qubits = o.at("qubits").get<std::vector<int>>();
            op.segment = parse_segment(o.at("segment").get<std::string>());
            if (o.contains("param_turns")) {
                op.angle = Turns::parse(o.at("param_turns").get<std::string>());
            }
            c.append(std::move(op));
        }
        if (j.contains("readout_order")) {
            c.set_readout_order(j.at("readout_order").get<std::vector<int>>());
        }
        return c;
    } catch (const nlohmann::json::exception &e) {
        throw UsageError(std::string("malformed circuit JSON: ") + e.what());
    }
}

std::string circuit_to_text(const Circuit &circuit) {
    std::ostringstream os;
    os << "# " << circuit.name() << " (" << circuit.n_qubits() << " qubits)\n";
    for (const auto &op : circuit.ops()) {
        if (op.kind == GateKind::Barrier) {
            os << "barrier\n";
            continue;
        }
        if (op.kind == GateKind::MeasureAll) {
            os << "measure";
            for (int q : circuit.readout_order()) {
                os << " q" << q + 1;
            }
            os << '\n';
            continue;
        }
        os << gate_name(op.kind);
        if (op.angle) {
            os << '(' << turns_text(*op.angle) << ')';
        }
        for (int q : op.qubits) {
            os << " q" << q + 1;
        }
        os << "  ; " << segment_name(op.segment) << '\n';
    }
    return os.str();
}

}  // namespace ft422
