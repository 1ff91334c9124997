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

#include "ft422/ftverify.h"

#include "doctest.h"
#include "ft422/errors.h"

using namespace ft422;

namespace {

// Index of the first op matching kind and qubits, searching from `from`.
std::size_t find_op(const Circuit &c, GateKind kind, std::vector<int> qubits, std::size_t from = 0) {
    for (std::size_t i = from; i < c.ops().size(); i++) {
        if (c.ops()[i].kind == kind && c.ops()[i].qubits == qubits) {
            return i;
        }
    }
    FAIL("op not found");
    return 0;
}

std::size_t second_barrier(const Circuit &c) {
    std::size_t first = find_op(c, GateKind::Barrier, {});
    return find_op(c, GateKind::Barrier, {}, first + 1);
}

FaultVerdict classify(const Protocol &p, PauliFault f) { return classify_fault(p.circuit, f, p.decoder, p.ideal); }

}  // namespace

TEST_CASE("named single faults") {
    Protocol f0 = encoded_dj_protocol(Oracle::F0);
    const Circuit &c = f0.circuit;
    std::size_t readout = second_barrier(c);

    // Z on q1 just before measurement: harmless.
    std::size_t h1 = find_op(c, GateKind::H, {0}, readout);
    FaultVerdict z = classify(f0, {{LocationKind::Gate, h1, {0}}, {Pauli::Z}});
    CHECK(z.classification == Verdict::Harmless);
    CHECK(z.accept_probability == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(z.error_probability < 1e-12);

    // X on q3 after the oracle: every outcome has odd parity.
    std::size_t h3 = find_op(c, GateKind::H, {2}, readout);
    FaultVerdict x = classify(f0, {{LocationKind::Gate, h3, {2}}, {Pauli::X}});
    CHECK(x.classification == Verdict::Detected);
    CHECK(x.accept_probability == 0.0);

    // XX on the prep CNOT q4 -> q3 of the fx circuit.
    Protocol fx = encoded_dj_protocol(Oracle::Fx);
    std::size_t cnot = find_op(fx.circuit, GateKind::CNOT, {3, 2});
    FaultVerdict xx = classify(fx, {{LocationKind::Gate, cnot, {3, 2}}, {Pauli::X, Pauli::X}});
    CHECK(xx.classification != Verdict::LogicalError);
}

TEST_CASE("invalid faults are rejected") {
    Protocol p = encoded_dj_protocol(Oracle::F0);
    CHECK_THROWS_AS(classify(p, {{LocationKind::Gate, 0, {0}}, {Pauli::X}}), UsageError);  // op 0 acts on q2
    CHECK_THROWS_AS(classify(p, {{LocationKind::Gate, 999, {0}}, {Pauli::X}}), UsageError);
    CHECK_THROWS_AS(classify(p, {{LocationKind::Gate, 0, {1}}, {Pauli::X, Pauli::Z}}), UsageError);
    Circuit unmeasured = strip_measurement(p.circuit);
    CHECK_THROWS_AS(classify_fault(unmeasured, {{LocationKind::Gate, 0, {1}}, {Pauli::X}}, p.decoder, p.ideal),
                    UsageError);
}

TEST_CASE("every encoded DJ circuit is fault-tolerant") {
    const std::size_t clifford[] = {58, 76, 76, 64};
    const std::size_t native[] = {82, 106, 106, 94};
    for (std::size_t i = 0; i < kAllOracles.size(); i++) {
        for (bool nat : {false, true}) {
            Protocol p = encoded_dj_protocol(kAllOracles[i], nat);
            CAPTURE(p.name);
            FtReport r = verify_fault_tolerance(p);
            CHECK(r.total == (nat ? native : clifford)[i]);
            CHECK(r.detected + r.harmless + r.logical_errors == r.total);
            CHECK(r.logical_errors == 0);
            CHECK(r.fault_tolerant());
            CHECK_FALSE(r.worst.has_value());

            FtReport with_prep = verify_fault_tolerance(p, LocationOptions{true, true});
            CHECK(with_prep.total > r.total);
            CHECK(with_prep.fault_tolerant());
        }
    }
}

TEST_CASE("encoded entangled circuits are fault-tolerant") {
    for (EntangledId id : kAllEntangled) {
        Protocol p = entangled_protocol(id, true);
        CAPTURE(p.name);
        CHECK(verify_fault_tolerance(p).fault_tolerant());
    }
}

TEST_CASE("bare DJ circuits are not fault-tolerant") {
    for (Oracle o : kAllOracles) {
        Protocol p = bare_dj_protocol(o);
        FtReport r = verify_fault_tolerance(p);
        CAPTURE(p.name);
        CHECK(r.logical_errors > 0);
        REQUIRE(r.worst.has_value());
        CHECK(r.worst->error_probability > 0.4);
    }
    Protocol f0 = bare_dj_protocol(Oracle::F0);
    std::size_t last = f0.circuit.ops().size() - 1;
    // A readout flip of the answer qubit is a witness.
    FaultVerdict flip = classify(f0, {{LocationKind::PreMeasure, last, {1}}, {Pauli::X}});
    CHECK(flip.classification == Verdict::LogicalError);
    CHECK(flip.error_probability == doctest::Approx(1.0));
    // The answer qubit holds |-> until its final H: X only changes a sign, Z flips the answer.
    std::size_t prep_h = find_op(f0.circuit, GateKind::H, {1});
    FaultVerdict x = classify(f0, {{LocationKind::Gate, prep_h, {1}}, {Pauli::X}});
    CHECK(x.classification == Verdict::Harmless);
    FaultVerdict z = classify(f0, {{LocationKind::Gate, prep_h, {1}}, {Pauli::Z}});
    CHECK(z.classification == Verdict::LogicalError);
}

TEST_CASE("X and Y faults in the readout segment are detected") {
    for (Oracle o : kAllOracles) {
        for (bool nat : {false, true}) {
            Protocol p = encoded_dj_protocol(o, nat);
            CAPTURE(p.name);
            FtReport r = verify_fault_tolerance(p);
            for (const auto &v : r.verdicts) {
                const auto &loc = v.fault.location;
                if (loc.kind == LocationKind::PreMeasure) {
                    CHECK(v.classification == Verdict::Detected);
                }
                if (loc.kind != LocationKind::Gate || p.circuit.ops()[loc.op_index].segment != Segment::Readout) {
                    continue;
                }
                if (v.fault.paulis[0] != Pauli::Z) {
                    CHECK(v.classification == Verdict::Detected);
                }
            }
        }
    }
}

TEST_CASE("single Z faults after preparation are never logical errors") {
    for (Oracle o : kAllOracles) {
        Protocol p = encoded_dj_protocol(o);
        CAPTURE(p.name);
        std::size_t readout = second_barrier(p.circuit);
        std::size_t last_h = 0;
        for (std::size_t i = readout; i < p.circuit.ops().size(); i++) {
            if (p.circuit.ops()[i].kind == GateKind::H) {
                last_h = i;
            }
        }
        for (const auto &v : verify_fault_tolerance(p).verdicts) {
            const auto &loc = v.fault.location;
            if (loc.kind != LocationKind::Gate || loc.arity() != 1 || v.fault.paulis[0] != Pauli::Z) {
                continue;
            }
            if (p.circuit.ops()[loc.op_index].segment == Segment::Prep) {
                continue;
            }
            CHECK(v.classification != Verdict::LogicalError);
            if (loc.op_index > readout) {
                // After its readout H a Z fault is diagonal and invisible.
                CHECK(v.classification == Verdict::Harmless);
                CHECK(v.accept_probability == doctest::Approx(1.0).epsilon(1e-12));
            } else {
                // Earlier it becomes an X at readout.
                CHECK(v.classification == Verdict::Detected);
            }
        }
        CHECK(last_h > readout);
    }
}

TEST_CASE("verdicts do not depend on the thread count") {
    Protocol p = encoded_dj_protocol(Oracle::F1x, true);
    FtReport serial = verify_fault_tolerance(p, {}, 1);
    FtReport parallel = verify_fault_tolerance(p, {}, 8);
    REQUIRE(serial.verdicts.size() == parallel.verdicts.size());
    for (std::size_t i = 0; i < serial.verdicts.size(); i++) {
        CHECK(serial.verdicts[i].fault == parallel.verdicts[i].fault);
        CHECK(serial.verdicts[i].classification == parallel.verdicts[i].classification);
        CHECK(serial.verdicts[i].accept_probability == parallel.verdicts[i].accept_probability);
    }
}

TEST_CASE("tolerances") {
    CHECK(logical_error_tolerance({{"1", 1.0}}) == 1e-12);
    CHECK(logical_error_tolerance({{"00", 0.5}, {"11", 0.5}}) == 1e-10);
    CHECK(verdict_name(Verdict::LogicalError) == "LogicalError");
}
