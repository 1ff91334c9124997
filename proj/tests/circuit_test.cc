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

#include "doctest.h"
#include "ft422/circuit_io.h"
#include "ft422/circuitlib.h"
#include "ft422/errors.h"

using namespace ft422;

TEST_CASE("append validates arity, range, distinctness and angles") {
    Circuit c("t", 3);
    CHECK_THROWS_AS(c.gate(GateKind::CNOT, {0}, Segment::Prep), UsageError);
    CHECK_THROWS_AS(c.gate(GateKind::H, {3}, Segment::Prep), UsageError);
    CHECK_THROWS_AS(c.gate(GateKind::H, {-1}, Segment::Prep), UsageError);
    CHECK_THROWS_AS(c.gate(GateKind::CZ, {1, 1}, Segment::Prep), UsageError);
    CHECK_THROWS_AS(c.gate(GateKind::GPI, {0}, Segment::Prep), UsageError);
    CHECK_THROWS_AS(c.gate(GateKind::H, Turns(1, 4), {0}, Segment::Prep), UsageError);
    c.gate(GateKind::GPI2, Turns(1, 4), {2}, Segment::Prep);
    c.gate(GateKind::MS, {0, 1}, Segment::Prep);
    c.barrier(Segment::Oracle);
    c.measure_all();
    CHECK(c.measured());
    CHECK(c.gate_count() == 2);
    CHECK_THROWS_AS(c.gate(GateKind::X, {0}, Segment::Readout), UsageError);
    CHECK_THROWS_AS(c.measure_all(), UsageError);
}

TEST_CASE("qubit count limits") {
    CHECK_THROWS_AS(Circuit("t", 0), UsageError);
    CHECK_THROWS_AS(Circuit("t", 7), UsageError);
    CHECK_NOTHROW(Circuit("t", 6));
}

TEST_CASE("readout order must be a permutation") {
    Circuit c("t", 3);
    CHECK(c.readout_order() == std::vector<int>{0, 1, 2});
    c.set_readout_order({2, 0, 1});
    CHECK(c.readout_order() == std::vector<int>{2, 0, 1});
    CHECK_THROWS_AS(c.set_readout_order({0, 0, 1}), UsageError);
    CHECK_THROWS_AS(c.set_readout_order({0, 1}), UsageError);
}

TEST_CASE("names round-trip") {
    for (auto k : {GateKind::X, GateKind::Sdg, GateKind::SWAP, GateKind::GPI2, GateKind::MS, GateKind::Barrier,
                   GateKind::MeasureAll}) {
        CHECK(parse_gate_kind(gate_name(k)) == k);
    }
    for (auto s : {Segment::Prep, Segment::Logic, Segment::Oracle, Segment::Readout}) {
        CHECK(parse_segment(segment_name(s)) == s);
    }
    CHECK(segment_name(Segment::Oracle) == "oracle");
    CHECK_THROWS_AS(parse_gate_kind("TOFFOLI"), UsageError);
    CHECK_THROWS_AS(parse_segment("alice"), UsageError);
}

TEST_CASE("strip_measurement drops only the measurement") {
    Circuit c = bare_dj(Oracle::F1);
    Circuit u = strip_measurement(c);
    CHECK_FALSE(u.measured());
    CHECK(u.ops().size() + 1 == c.ops().size());
    CHECK(u.gate_count() == c.gate_count());
}

TEST_CASE("circuit JSON round-trips every catalog circuit") {
    for (const auto &name : catalog_names()) {
        CAPTURE(name);
        Circuit c = lookup_protocol(name).circuit;
        nlohmann::json j = circuit_to_json(c);
        Circuit back = circuit_from_json(j);
        CHECK(back.name() == c.name());
        CHECK(back.n_qubits() == c.n_qubits());
        CHECK(back.ops() == c.ops());
        CHECK(back.readout_order() == c.readout_order());
        CHECK(circuit_to_json(back).dump() == j.dump());
    }
}

TEST_CASE("circuit JSON keeps exact angles and explicit barriers") {
    nlohmann::json j = circuit_to_json(native_encoded_dj(Oracle::Fx));
    int barriers = 0;
    bool saw_three_eighths = false;
    for (const auto &op : j["ops"]) {
        if (op["kind"] == "Barrier") {
            barriers++;
            CHECK(op["qubits"].empty());
        }
        if (op.contains("param_turns") && op["param_turns"] == "3/8") {
            saw_three_eighths = true;
        }
    }
    CHECK(barriers == 2);
    CHECK(saw_three_eighths);
}

TEST_CASE("malformed circuit JSON is a usage error") {
    CHECK_THROWS_AS(circuit_from_json(nlohmann::json::parse(R"({"name":"x"})")), UsageError);
    CHECK_THROWS_AS(circuit_from_json(nlohmann::json::parse(
                        R"({"name":"x","n_qubits":1,"ops":[{"kind":"CNOT","qubits":[0],"segment":"prep"}]})")),
                    UsageError);
    CHECK_THROWS_AS(circuit_from_json(nlohmann::json::parse(
                        R"({"name":"x","n_qubits":1,"ops":[{"kind":"GPI","qubits":[0],"segment":"prep","param_turns":"x"}]})")),
                    UsageError);
}

TEST_CASE("text export lists one op per line with 1-based qubits") {
    std::string t = circuit_to_text(bare_dj(Oracle::Fx));
    CHECK(t.find("# bare-dj:fx (2 qubits)\n") == 0);
    CHECK(t.find("CNOT q2 q1  ; oracle\n") != std::string::npos);
    CHECK(t.find("barrier\n") != std::string::npos);
    CHECK(t.find("measure q1 q2\n") != std::string::npos);
}
