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

#ifndef FT422_SIMCORE_H
#define FT422_SIMCORE_H

#include <Eigen/Dense>
#include <complex>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ft422/circuit.h"
#include "ft422/fault.h"

namespace ft422 {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;

/// Bitstring -> probability. Keys are '0'/'1' strings, leftmost character
/// first in the requested qubit order.
using Distribution = std::map<std::string, double>;

/// Probabilities at or below this are treated as exactly zero.
inline constexpr double kProbabilityFloor = 1e-12;

/// Exact unitary for a gate kind; 2x2 or 4x4. For two-qubit gates the first
/// listed qubit is the high bit of the matrix index (so CNOT's control is
/// first). Throws UsageError for Barrier/MeasureAll or a missing angle.
Matrix gate_matrix(GateKind kind, std::optional<Turns> angle = std::nullopt);
Matrix gate_matrix(const GateOp &op);

Matrix pauli_matrix(Pauli p);

/// Dense 2^n amplitude vector, qubit 0 as the most significant bit.
class StateVector {
   public:
    /// |0...0> on n qubits.
    explicit StateVector(int n_qubits);
    StateVector(int n_qubits, std::vector<Complex> amplitudes);

    /// Computational basis state from a bit label such as "0110".
    static StateVector basis(std::string_view bits);

    int n_qubits() const { return n_qubits_; }
    std::size_t dimension() const { return amps_.size(); }
    const std::vector<Complex> &amplitudes() const { return amps_; }
    Complex amplitude(std::size_t index) const { return amps_[index]; }
    Complex amplitude(std::string_view bits) const;

    double norm_squared() const;
    Complex inner(const StateVector &other) const;  // <this|other>

    /// Applies a 2^k x 2^k matrix to the listed qubits (first = high bit).
    void apply(const Matrix &u, std::span<const int> qubits);
    void apply_pauli(Pauli p, int qubit);

    Eigen::VectorXcd to_eigen() const;
    static StateVector from_eigen(const Eigen::VectorXcd &v);

   private:
    int n_qubits_;
    std::vector<Complex> amps_;
};

/// Runs the circuit's unitary ops in order (barriers and MeasureAll are
/// no-ops). Each fault's Pauli is applied right after its location; a
/// PreMeasure flip is applied as X after the last op, which is equivalent to
/// flipping the measured bit.
StateVector apply_circuit(const Circuit &circuit, StateVector initial, std::span<const PauliFault> faults = {});
StateVector apply_circuit(const Circuit &circuit, StateVector initial, const PauliFault &fault);

/// Throws UsageError if the fault does not fit the circuit.
void validate_fault(const Circuit &circuit, const PauliFault &fault);

/// Exact marginal over `qubits` (listed order = key character order).
/// Entries at or below kProbabilityFloor are zeroed and omitted.
Distribution outcome_distribution(const StateVector &state, std::span<const int> qubits);

/// Distribution of the circuit's MeasureAll bits (in readout order) for an
/// |0...0> input and the given faults.
Distribution measured_distribution(const Circuit &circuit, std::span<const PauliFault> faults = {});

/// Shot counts over measured bitstrings.
struct OutcomeCounts {
    std::map<std::string, std::uint64_t> counts;
    std::uint64_t shots = 0;

    std::uint64_t at(const std::string &bits) const;
    bool operator==(const OutcomeCounts &) const = default;
};

struct SamplingOptions {
    /// Worker threads; 0 means std::thread::hardware_concurrency().
    unsigned threads = 0;
};

/// Samples `shots` independent runs of a measured circuit. With noise, each
/// shot draws its own fault set from a substream keyed by (seed, shot index),
/// so the result does not depend on the thread count.
OutcomeCounts sample_shots(const Circuit &circuit, std::uint64_t shots, const std::optional<NoiseModel> &noise,
                           std::uint64_t seed, SamplingOptions options = {});

/// Product of op matrices on n <= 5 qubits; barriers ignored. Throws
/// UsageError if the circuit contains MeasureAll.
Matrix circuit_unitary(const Circuit &circuit);

/// Embeds a k-qubit matrix on the listed qubits of an n-qubit register.
Matrix embed(const Matrix &u, std::span<const int> qubits, int n_qubits);

/// min over phi of max |u - e^{i phi} v|, with phi read off the
/// largest-magnitude entry of v^dagger u.
double phase_residual(const Matrix &u, const Matrix &v);
bool phase_equivalent(const Matrix &u, const Matrix &v, double tol);

bool is_unitary(const Matrix &u, double tol);

}  // namespace ft422

#endif
