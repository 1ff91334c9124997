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

#include "ft422/simcore.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <thread>

#include "ft422/errors.h"
#include "ft422/noisefault.h"

namespace ft422 {

namespace {

constexpr Complex kI{0.0, 1.0};

/// e^{2 pi i t}, exact for quarter turns.
Complex turn_phase(const Turns &t) {
    std::int64_t den = t.den();
    if (4 % den == 0) {
        std::int64_t quarter = ((t.num() * (4 / den)) % 4 + 4) % 4;
        constexpr Complex table[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
        return table[quarter];
    }
    return std::polar(1.0, 2.0 * std::numbers::pi * t.to_double());
}

Matrix mat2(Complex a, Complex b, Complex c, Complex d) {
    Matrix m(2, 2);
    m << a, b, c, d;
    return m;
}

std::size_t bit_of(int qubit, int n_qubits) { return std::size_t{1} << (n_qubits - 1 - qubit); }

}  // namespace

Matrix gate_matrix(GateKind kind, std::optional<Turns> angle) {
    const double r = 1.0 / std::numbers::sqrt2;
    if (takes_angle(kind) && !angle) {
        throw UsageError(std::string(gate_name(kind)) + " requires an angle");
    }
    switch (kind) {
        case GateKind::X:
            return mat2(0, 1, 1, 0);
        case GateKind::Y:
            return mat2(0, -kI, kI, 0);
        case GateKind::Z:
            return mat2(1, 0, 0, -1);
        case GateKind::H:
            return mat2(r, r, r, -r);
        case GateKind::S:
            return mat2(1, 0, 0, kI);
        case GateKind::Sdg:
            return mat2(1, 0, 0, -kI);
        case GateKind::GPI: {
            Complex e = turn_phase(*angle);
            return mat2(0, std::conj(e), e, 0);
        }
        case GateKind::GPI2: {
            Complex e = turn_phase(*angle);
            return mat2(r, -kI * std::conj(e) * r, -kI * e * r, r);
        }
        case GateKind::CNOT: {
            Matrix m = Matrix::Zero(4, 4);
            m(0, 0) = m(1, 1) = m(2, 3) = m(3, 2) = 1;
            return m;
        }
        case GateKind::CZ: {
            Matrix m = Matrix::Identity(4, 4);
            m(3, 3) = -1;
            return m;
        }
        case GateKind::SWAP: {
            Matrix m = Matrix::Zero(4, 4);
            m(0, 0) = m(1, 2) = m(2, 1) = m(3, 3) = 1;
            return m;
        }
        case GateKind::MS: {
            Matrix m = Matrix::Zero(4, 4);
            m(0, 0) = m(1, 1) = m(2, 2) = m(3, 3) = r;
            m(0, 3) = m(1, 2) = m(2, 1) = m(3, 0) = -kI * r;
            return m;
        }
        case GateKind::Barrier:
        case GateKind::MeasureAll:
            break;
    }
    throw UsageError(std::string(gate_name(kind)) + " has no matrix");
}

Matrix gate_matrix(const GateOp &op) { return gate_matrix(op.kind, op.angle); }

Matrix pauli_matrix(Pauli p) {
    switch (p) {
        case Pauli::X:
            return gate_matrix(GateKind::X);
        case Pauli::Y:
            return gate_matrix(GateKind::Y);
        case Pauli::Z:
            return gate_matrix(GateKind::Z);
        case Pauli::I:
            break;
    }
    return Matrix::Identity(2, 2);
}

// --- StateVector ---

StateVector::StateVector(int n_qubits) : n_qubits_(n_qubits) {
    if (n_qubits < 1 || n_qubits > 6) {
        throw UsageError("state vectors support 1 to 6 qubits");
    }
    amps_.assign(std::size_t{1} << n_qubits, Complex{0, 0});
    amps_[0] = 1;
}

StateVector::StateVector(int n_qubits, std::vector<Complex> amplitudes)
    : n_qubits_(n_qubits), amps_(std::move(amplitudes)) {
    if (n_qubits < 1 || n_qubits > 6 || amps_.size() != (std::size_t{1} << n_qubits)) {
        throw UsageError("amplitude count does not match qubit count");
    }
}

StateVector StateVector::basis(std::string_view bits) {
    StateVector s(static_cast<int>(bits.size()));
    std::size_t index = 0;
    for (char c : bits) {
        if (c != '0' && c != '1') {
            throw UsageError("basis label must be binary");
        }
        index = (index << 1) | static_cast<std::size_t>(c == '1');
    }
    s.amps_[0] = 0;
    s.amps_[index] = 1;
    return s;
}

Complex StateVector::amplitude(std::string_view bits) const {
    if (static_cast<int>(bits.size()) != n_qubits_) {
        throw UsageError("basis label length does not match qubit count");
    }
    std::size_t index = 0;
    for (char c : bits) {
        if (c != '0' && c != '1') {
            throw UsageError("basis label must be binary");
        }
        index = (index << 1) | static_cast<std::size_t>(c == '1');
    }
    return amps_[index];
}

double StateVector::norm_squared() const {
    double total = 0;
    for (const auto &a : amps_) {
        total += std::norm(a);
    }
    return total;
}

Complex StateVector::inner(const StateVector &other) const {
    if (other.n_qubits_ != n_qubits_) {
        throw UsageError("inner product of states with different qubit counts");
    }
    Complex total = 0;
    for (std::size_t i = 0; i < amps_.size(); i++) {
        total += std::conj(amps_[i]) * other.amps_[i];
    }
    return total;
}

void StateVector::apply(const Matrix &u, std::span<const int> qubits) {
    const std::size_t k = qubits.size();
    const std::size_t sub = std::size_t{1} << k;
    if (static_cast<std::size_t>(u.rows()) != sub || static_cast<std::size_t>(u.cols()) != sub) {
        throw UsageError("matrix size does not match qubit list");
    }
    std::vector<std::size_t> masks(k);
    std::size_t all = 0;
    for (std::size_t j = 0; j < k; j++) {
        if (qubits[j] < 0 || qubits[j] >= n_qubits_) {
            throw UsageError("qubit index out of range");
        }
        masks[j] = bit_of(qubits[j], n_qubits_);
        if (all & masks[j]) {
            throw UsageError("repeated qubit in apply");
        }
        all |= masks[j];
    }
    // offsets[r] is the register index contribution of local basis row r.
    std::vector<std::size_t> offsets(sub, 0);
    for (std::size_t r = 0; r < sub; r++) {
        for (std::size_t j = 0; j < k; j++) {
            if (r & (std::size_t{1} << (k - 1 - j))) {
                offsets[r] |= masks[j];
            }
        }
    }
    std::vector<Complex> in(sub);
    for (std::size_t base = 0; base < amps_.size(); base++) {
        if (base & all) {
            continue;
        }
        for (std::size_t r = 0; r < sub; r++) {
            in[r] = amps_[base | offsets[r]];
        }
        for (std::size_t r = 0; r < sub; r++) {
            Complex acc = 0;
            for (std::size_t c = 0; c < sub; c++) {
                acc += u(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) * in[c];
            }
            amps_[base | offsets[r]] = acc;
        }
    }
}

void StateVector::apply_pauli(Pauli p, int qubit) {
    if (p == Pauli::I) {
        return;
    }
    int q[1] = {qubit};
    apply(pauli_matrix(p), q);
}

Eigen::VectorXcd StateVector::to_eigen() const {
    Eigen::VectorXcd v(static_cast<Eigen::Index>(amps_.size()));
    for (std::size_t i = 0; i < amps_.size(); i++) {
        v(static_cast<Eigen::Index>(i)) = amps_[i];
    }
    return v;
}

StateVector StateVector::from_eigen(const Eigen::VectorXcd &v) {
    std::vector<Complex> amps(v.data(), v.data() + v.size());
    int n = 0;
    while ((std::size_t{1} << n) < amps.size()) {
        n++;
    }
    return StateVector(n, std::move(amps));
}

// --- circuit execution ---

void validate_fault(const Circuit &circuit, const PauliFault &fault) {
    const auto &loc = fault.location;
    if (fault.paulis.size() != loc.qubits.size() || loc.qubits.empty()) {
        throw UsageError("fault " + fault.describe() + ": Pauli count does not match location support");
    }
    for (int q : loc.qubits) {
        if (q < 0 || q >= circuit.n_qubits()) {
            throw UsageError("fault " + fault.describe() + ": qubit out of range");
        }
    }
    switch (loc.kind) {
        case LocationKind::Gate: {
            if (loc.op_index >= circuit.ops().size()) {
                throw UsageError("fault " + fault.describe() + ": op index out of range");
            }
            const GateOp &op = circuit.ops()[loc.op_index];
            if (!is_unitary_gate(op.kind) || op.qubits != loc.qubits) {
                throw UsageError("fault " + fault.describe() + ": location does not match the op's qubits");
            }
            if (std::all_of(fault.paulis.begin(), fault.paulis.end(), [](Pauli p) { return p == Pauli::I; })) {
                throw UsageError("fault " + fault.describe() + ": identity is not a fault");
            }
            break;
        }
        case LocationKind::Idle: {
            if (loc.op_index >= circuit.ops().size() || circuit.ops()[loc.op_index].kind != GateKind::Barrier ||
                loc.qubits.size() != 1 || fault.paulis[0] == Pauli::I) {
                throw UsageError("fault " + fault.describe() + ": idle faults sit on a barrier, one qubit");
            }
            break;
        }
        case LocationKind::Prep:
        case LocationKind::PreMeasure:
            if (loc.qubits.size() != 1 || fault.paulis[0] != Pauli::X) {
                throw UsageError("fault " + fault.describe() + ": flips are single-qubit X");
            }
            break;
    }
}

StateVector apply_circuit(const Circuit &circuit, StateVector state, std::span<const PauliFault> faults) {
    if (state.n_qubits() != circuit.n_qubits()) {
        throw UsageError("state has " + std::to_string(state.n_qubits()) + " qubits but circuit has " +
                         std::to_string(circuit.n_qubits()));
    }
    for (const auto &f : faults) {
        validate_fault(circuit, f);
    }
    auto inject = [&](const PauliFault &f) {
        for (std::size_t j = 0; j < f.paulis.size(); j++) {
            state.apply_pauli(f.paulis[j], f.location.qubits[j]);
        }
    };
    for (const auto &f : faults) {
        if (f.location.kind == LocationKind::Prep) {
            inject(f);
        }
    }
    const auto &ops = circuit.ops();
    for (std::size_t i = 0; i < ops.size(); i++) {
        if (is_unitary_gate(ops[i].kind)) {
            state.apply(gate_matrix(ops[i]), ops[i].qubits);
        }
        for (const auto &f : faults) {
            bool here = (f.location.kind == LocationKind::Gate || f.location.kind == LocationKind::Idle) &&
                        f.location.op_index == i;
            if (here) {
                inject(f);
            }
        }
    }
    for (const auto &f : faults) {
        if (f.location.kind == LocationKind::PreMeasure) {
            inject(f);
        }
    }
    return state;
}

StateVector apply_circuit(const Circuit &circuit, StateVector initial, const PauliFault &fault) {
    return apply_circuit(circuit, std::move(initial), std::span<const PauliFault>(&fault, 1));
}

namespace {

/// Marginal probabilities indexed by the integer whose bits are `qubits` in
/// listed order (first = high bit), floored at kProbabilityFloor.
std::vector<double> marginal_probabilities(const StateVector &state, std::span<const int> qubits) {
    const int n = state.n_qubits();
    const std::size_t k = qubits.size();
    std::vector<double> probs(std::size_t{1} << k, 0.0);
    for (std::size_t i = 0; i < state.dimension(); i++) {
        double p = std::norm(state.amplitude(i));
        if (p == 0) {
            continue;
        }
        std::size_t key = 0;
        for (std::size_t j = 0; j < k; j++) {
            key = (key << 1) | static_cast<std::size_t>((i & bit_of(qubits[j], n)) != 0);
        }
        probs[key] += p;
    }
    for (auto &p : probs) {
        if (p <= kProbabilityFloor) {
            p = 0;
        }
    }
    return probs;
}

std::string bits_of(std::size_t value, std::size_t width) {
    std::string s(width, '0');
    for (std::size_t j = 0; j < width; j++) {
        if (value & (std::size_t{1} << (width - 1 - j))) {
            s[j] = '1';
        }
    }
    return s;
}

void check_measured_qubits(std::span<const int> qubits, int n) {
    if (qubits.empty()) {
        throw UsageError("outcome distribution needs at least one qubit");
    }
    for (std::size_t i = 0; i < qubits.size(); i++) {
        if (qubits[i] < 0 || qubits[i] >= n) {
            throw UsageError("measured qubit out of range");
        }
        for (std::size_t j = 0; j < i; j++) {
            if (qubits[i] == qubits[j]) {
                throw UsageError("measured qubits must be distinct");
            }
        }
    }
}

}  // namespace

Distribution outcome_distribution(const StateVector &state, std::span<const int> qubits) {
    check_measured_qubits(qubits, state.n_qubits());
    auto probs = marginal_probabilities(state, qubits);
    Distribution out;
    for (std::size_t key = 0; key < probs.size(); key++) {
        if (probs[key] > 0) {
            out[bits_of(key, qubits.size())] = probs[key];
        }
    }
    return out;
}

Distribution measured_distribution(const Circuit &circuit, std::span<const PauliFault> faults) {
    StateVector out = apply_circuit(circuit, StateVector(circuit.n_qubits()), faults);
    return outcome_distribution(out, circuit.readout_order());
}

std::uint64_t OutcomeCounts::at(const std::string &bits) const {
    auto it = counts.find(bits);
    return it == counts.end() ? 0 : it->second;
}

// --- sampling ---

namespace {

/// Cumulative-sum inversion over lexicographically ordered outcomes.
std::size_t invert(const std::vector<double> &cumulative, double u) {
    auto it = std::upper_bound(cumulative.begin(), cumulative.end(), u);
    if (it == cumulative.end()) {
        // u landed in rounding slack above the total: take the last outcome
        // that carries probability.
        std::size_t i = cumulative.size() - 1;
        while (i > 0 && cumulative[i] == cumulative[i - 1]) {
            i--;
        }
        return i;
    }
    return static_cast<std::size_t>(it - cumulative.begin());
}

std::vector<double> cumulative_of(const std::vector<double> &probs) {
    std::vector<double> cum(probs.size());
    double acc = 0;
    for (std::size_t i = 0; i < probs.size(); i++) {
        acc += probs[i];
        cum[i] = acc;
    }
    return cum;
}

}  // namespace

OutcomeCounts sample_shots(const Circuit &circuit, std::uint64_t shots, const std::optional<NoiseModel> &noise,
                           std::uint64_t seed, SamplingOptions options) {
    if (!circuit.measured()) {
        throw UsageError("circuit '" + circuit.name() + "' has no MeasureAll");
    }
    if (shots == 0) {
        throw UsageError("shots must be at least 1");
    }
    if (noise) {
        noise->validate();
    }
    const int n = circuit.n_qubits();
    const auto &readout = circuit.readout_order();
    const std::size_t n_outcomes = std::size_t{1} << n;

    StateVector ideal_state = apply_circuit(circuit, StateVector(n));
    const std::vector<double> ideal_cum = cumulative_of(marginal_probabilities(ideal_state, readout));

    std::vector<FaultLocation> locations;
    if (noise) {
        locations = fault_locations(circuit, *noise);
    }
    // Bit mask of a PreMeasure flip on physical qubit q, in readout index space.
    std::vector<std::size_t> flip_mask(n, 0);
    for (int pos = 0; pos < n; pos++) {
        flip_mask[readout[pos]] = std::size_t{1} << (n - 1 - pos);
    }

    unsigned threads = options.threads ? options.threads : std::max(1u, std::thread::hardware_concurrency());
    threads = static_cast<unsigned>(std::min<std::uint64_t>(threads, shots));
    std::vector<std::vector<std::uint64_t>> partial(threads, std::vector<std::uint64_t>(n_outcomes, 0));

    auto run_range = [&](unsigned worker, std::uint64_t begin, std::uint64_t end) {
        auto &tally = partial[worker];
        std::vector<PauliFault> state_faults;
        for (std::uint64_t shot = begin; shot < end; shot++) {
            ShotRng rng = shot_stream(seed, shot);
            // The outcome draw comes first so that a zero-probability model
            // reproduces the noiseless stream exactly.
            double u = uniform01(rng);
            std::size_t flips = 0;
            state_faults.clear();
            if (noise) {
                for (auto &f : sample_fault_set(locations, *noise, rng)) {
                    if (f.location.kind == LocationKind::PreMeasure) {
                        flips ^= flip_mask[f.location.qubits[0]];
                    } else {
                        state_faults.push_back(std::move(f));
                    }
                }
            }
            std::size_t outcome;
            if (state_faults.empty()) {
                outcome = invert(ideal_cum, u);
            } else {
                StateVector s = apply_circuit(circuit, StateVector(n), state_faults);
                outcome = invert(cumulative_of(marginal_probabilities(s, readout)), u);
            }
            tally[outcome ^ flips]++;
        }
    };

    if (threads == 1) {
        run_range(0, 0, shots);
    } else {
        std::vector<std::thread> pool;
        std::uint64_t chunk = (shots + threads - 1) / threads;
        for (unsigned w = 0; w < threads; w++) {
            std::uint64_t begin = std::min<std::uint64_t>(shots, w * chunk);
            std::uint64_t end = std::min<std::uint64_t>(shots, begin + chunk);
            pool.emplace_back(run_range, w, begin, end);
        }
        for (auto &t : pool) {
            t.join();
        }
    }

    OutcomeCounts result;
    result.shots = shots;
    for (std::size_t key = 0; key < n_outcomes; key++) {
        std::uint64_t total = 0;
        for (const auto &p : partial) {
            total += p[key];
        }
        if (total > 0) {
            result.counts[bits_of(key, static_cast<std::size_t>(n))] = total;
        }
    }
    return result;
}

// --- unitaries ---

Matrix embed(const Matrix &u, std::span<const int> qubits, int n_qubits) {
    const std::size_t dim = std::size_t{1} << n_qubits;
    Matrix out(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
    for (std::size_t col = 0; col < dim; col++) {
        std::vector<Complex> amps(dim, Complex{0, 0});
        amps[col] = 1;
        StateVector s(n_qubits, std::move(amps));
        s.apply(u, qubits);
        for (std::size_t row = 0; row < dim; row++) {
            out(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(col)) = s.amplitude(row);
        }
    }
    return out;
}

Matrix circuit_unitary(const Circuit &circuit) {
    if (circuit.n_qubits() > 5) {
        throw UsageError("circuit_unitary supports at most 5 qubits");
    }
    const Eigen::Index dim = Eigen::Index{1} << circuit.n_qubits();
    Matrix total = Matrix::Identity(dim, dim);
    for (const auto &op : circuit.ops()) {
        if (op.kind == GateKind::MeasureAll) {
            throw UsageError("circuit_unitary: circuit '" + circuit.name() + "' contains a measurement");
        }
        if (op.kind == GateKind::Barrier) {
            continue;
        }
        total = embed(gate_matrix(op), op.qubits, circuit.n_qubits()) * total;
    }
    return total;
}

double phase_residual(const Matrix &u, const Matrix &v) {
    if (u.rows() != u.cols() || v.rows() != v.cols()) {
        throw UsageError("phase comparison needs square matrices");
    }
    if (u.rows() != v.rows()) {
        throw UsageError("phase comparison needs matrices of equal size");
    }
    Matrix overlap = v.adjoint() * u;
    Eigen::Index r = 0;
    Eigen::Index c = 0;
    double biggest = overlap.cwiseAbs().maxCoeff(&r, &c);
    if (biggest == 0) {
        return std::numeric_limits<double>::infinity();
    }
    Complex phase = overlap(r, c) / biggest;
    return (u - phase * v).cwiseAbs().maxCoeff();
}

bool phase_equivalent(const Matrix &u, const Matrix &v, double tol) { return phase_residual(u, v) <= tol; }

bool is_unitary(const Matrix &u, double tol) {
    if (u.rows() != u.cols()) {
        return false;
    }
    Matrix id = Matrix::Identity(u.rows(), u.cols());
    return (u.adjoint() * u - id).cwiseAbs().maxCoeff() <= tol;
}

}  // namespace ft422
