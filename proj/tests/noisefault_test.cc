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
#include <set>

#include "doctest.h"
#include "ft422/circuitlib.h"
#include "ft422/errors.h"

using namespace ft422;

namespace {

struct Tally {
    int one = 0, two = 0, premeasure = 0, prep = 0, idle = 0;
};

Tally tally(const std::vector<FaultLocation> &locs) {
    Tally t;
    for (const auto &l : locs) {
        switch (l.kind) {
            case LocationKind::Gate:
                (l.arity() == 2 ? t.two : t.one)++;
                break;
            case LocationKind::PreMeasure:
                t.premeasure++;
                break;
            case LocationKind::Prep:
                t.prep++;
                break;
            case LocationKind::Idle:
                t.idle++;
                break;
        }
    }
    return t;
}

}  // namespace

TEST_CASE("calibrated model") {
    NoiseModel m = NoiseModel::calibrated();
    CHECK(m.p1 == 0.0095);
    CHECK(m.p2 == 0.0125);
    CHECK(m.p_meas == 0.0068);
    CHECK(m.p_prep == 0.0);
    CHECK_FALSE(m.include_idle);
    CHECK_NOTHROW(m.validate());
    m.p2 = 1.5;
    CHECK_THROWS_AS(m.validate(), UsageError);
    m.p2 = -0.1;
    CHECK_THROWS_AS(m.validate(), UsageError);
    m.p2 = std::nan("");
    CHECK_THROWS_AS(m.validate(), UsageError);
}

TEST_CASE("location counts") {
    Tally e = tally(fault_locations(encoded_dj(Oracle::F0)));
    CHECK(e.one == 8);
    CHECK(e.two == 2);
    CHECK(e.premeasure == 4);
    CHECK(e.prep + e.idle == 0);

    Tally b = tally(fault_locations(bare_dj(Oracle::Fx)));
    CHECK(b.one == 5);
    CHECK(b.two == 1);
    CHECK(b.premeasure == 2);

    Circuit empty("m", 4);
    empty.measure_all();
    CHECK(fault_locations(empty).size() == 4);

    Tally p = tally(fault_locations(encoded_dj(Oracle::F0), LocationOptions{true, true}));
    CHECK(p.prep == 4);
    CHECK(p.idle == 8);  // two barriers, four qubits

    NoiseModel m;
    m.p_prep = 0.01;
    CHECK(tally(fault_locations(encoded_dj(Oracle::F0), m)).prep == 4);
}

TEST_CASE("Pauli alphabets") {
    CHECK(nonidentity_paulis(1).size() == 3);
    auto two = nonidentity_paulis(2);
    REQUIRE(two.size() == 15);
    CHECK(two.front() == std::vector<Pauli>{Pauli::I, Pauli::X});
    CHECK(two.back() == std::vector<Pauli>{Pauli::Z, Pauli::Z});
    CHECK_THROWS_AS(nonidentity_paulis(3), UsageError);
}

TEST_CASE("single-fault enumeration sizes") {
    Circuit h("h", 1);
    h.gate(GateKind::H, {0}, Segment::Prep);
    h.measure_all();
    CHECK(enumerate_single_faults(h).size() == 4);

    const std::size_t clifford[] = {58, 76, 76, 64};
    const std::size_t native[] = {82, 106, 106, 94};
    for (std::size_t i = 0; i < kAllOracles.size(); i++) {
        CAPTURE(oracle_name(kAllOracles[i]));
        CHECK(enumerate_single_faults(encoded_dj(kAllOracles[i])).size() == clifford[i]);
        CHECK(enumerate_single_faults(native_encoded_dj(kAllOracles[i])).size() == native[i]);
    }
}

TEST_CASE("enumeration has no duplicates and is arity weighted") {
    for (const auto &name : catalog_names()) {
        CAPTURE(name);
        Circuit c = lookup_protocol(name).circuit;
        for (LocationOptions opts : {LocationOptions{}, LocationOptions{true, true}}) {
            auto faults = enumerate_single_faults(c, opts);
            std::size_t expected = 0;
            for (const auto &l : fault_locations(c, opts)) {
                bool flip = l.kind == LocationKind::Prep || l.kind == LocationKind::PreMeasure;
                expected += flip ? 1 : (l.arity() == 2 ? 15 : 3);
            }
            CHECK(faults.size() == expected);
            std::set<std::string> seen;
            for (const auto &f : faults) {
                seen.insert(f.describe());
            }
            CHECK(seen.size() == faults.size());
        }
    }
}

TEST_CASE("fault descriptions") {
    PauliFault g{{LocationKind::Gate, 3, {2, 1}}, {Pauli::X, Pauli::Z}};
    CHECK(g.describe() == "gate#3(q3,q2):XZ");
    PauliFault m{{LocationKind::PreMeasure, 9, {0}}, {Pauli::X}};
    CHECK(m.describe() == "premeasure(q1)");
}

TEST_CASE("zero model never faults") {
    Circuit c = encoded_dj(Oracle::Fx);
    for (std::uint64_t s = 0; s < 200; s++) {
        ShotRng rng = shot_stream(1, s);
        CHECK(sample_fault_set(c, NoiseModel{}, rng).empty());
    }
}

TEST_CASE("shot streams are reproducible and distinct") {
    ShotRng a = shot_stream(42, 7), b = shot_stream(42, 7), c = shot_stream(42, 8), d = shot_stream(43, 7);
    auto x = a();
    CHECK(x == b());
    CHECK(x != c());
    CHECK(x != d());
}

TEST_CASE("uniform draws over the Pauli alphabet pass a chi-square test") {
    Circuit c("g", 1);
    c.gate(GateKind::H, {0}, Segment::Prep);
    NoiseModel m;
    m.p1 = 1.0;
    const int n = 3000;
    int counts[4] = {0, 0, 0, 0};
    for (int s = 0; s < n; s++) {
        ShotRng rng = shot_stream(17, s);
        auto faults = sample_fault_set(c, m, rng);
        REQUIRE(faults.size() == 1);
        counts[static_cast<int>(faults[0].paulis[0])]++;
    }
    CHECK(counts[0] == 0);
    double chi2 = 0;
    for (int k = 1; k < 4; k++) {
        double e = n / 3.0;
        chi2 += (counts[k] - e) * (counts[k] - e) / e;
    }
    CHECK(chi2 < 13.816);  // df = 2, p = 0.001
}

TEST_CASE("two-qubit draws cover all fifteen Paulis") {
    Circuit c("g", 2);
    c.gate(GateKind::CNOT, {0, 1}, Segment::Prep);
    NoiseModel m;
    m.p2 = 1.0;
    std::set<std::vector<Pauli>> seen;
    for (int s = 0; s < 600; s++) {
        ShotRng rng = shot_stream(3, s);
        auto faults = sample_fault_set(c, m, rng);
        REQUIRE(faults.size() == 1);
        CHECK(faults[0].paulis != std::vector<Pauli>{Pauli::I, Pauli::I});
        seen.insert(faults[0].paulis);
    }
    CHECK(seen.size() == 15);
}

TEST_CASE("mean fault count matches linearity of expectation") {
    Circuit c = encoded_dj(Oracle::F0);
    NoiseModel m = NoiseModel::calibrated();
    auto locs = fault_locations(c, m);
    double expected = expected_fault_count(locs, m);
    CHECK(expected == doctest::Approx(8 * 0.0095 + 2 * 0.0125 + 4 * 0.0068).epsilon(1e-12));
    CHECK(expected == doctest::Approx(0.1282).epsilon(1e-12));

    double variance = 0;
    for (const auto &l : locs) {
        double p = l.kind == LocationKind::PreMeasure ? m.p_meas : (l.arity() == 2 ? m.p2 : m.p1);
        variance += p * (1 - p);
    }
    const int n = 200000;
    double total = 0;
    for (int s = 0; s < n; s++) {
        ShotRng rng = shot_stream(8, s);
        total += static_cast<double>(sample_fault_set(locs, m, rng).size());
    }
    double mean = total / n;
    CHECK(std::abs(mean - expected) < 3 * std::sqrt(variance / n));
}
