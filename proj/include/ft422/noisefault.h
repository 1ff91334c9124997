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

#ifndef FT422_NOISEFAULT_H
#define FT422_NOISEFAULT_H

#include <cstdint>
#include <random>
#include <vector>

#include "ft422/circuit.h"
#include "ft422/fault.h"

namespace ft422 {

/// Which optional location classes to include. Gate and PreMeasure
/// locations are always present.
struct LocationOptions {
    bool include_prep = false;
    bool include_idle = false;

    static LocationOptions from_model(const NoiseModel &model) { return {model.p_prep > 0, model.include_idle}; }
};

/// Every place a fault may occur, in circuit order: Prep(q) for each qubit,
/// then one Gate location per unitary op (and Idle(q) at each barrier), then
/// PreMeasure(q) per measured qubit.
std::vector<FaultLocation> fault_locations(const Circuit &circuit, LocationOptions options = {});
std::vector<FaultLocation> fault_locations(const Circuit &circuit, const NoiseModel &model);

/// The 3 (one qubit) or 15 (two qubit) non-identity Paulis, lexicographic in
/// I < X < Y < Z with the first qubit most significant.
std::vector<std::vector<Pauli>> nonidentity_paulis(int arity);

/// Every single fault: 3 per one-qubit location, 15 per two-qubit location,
/// 1 per Prep/PreMeasure flip. Ordered by location, then Pauli.
std::vector<PauliFault> enumerate_single_faults(const Circuit &circuit, LocationOptions options = {});

using ShotRng = std::mt19937_64;

/// Independent generator for one shot, derived from (seed, shot index).
ShotRng shot_stream(std::uint64_t seed, std::uint64_t shot);

/// Uniform double in [0, 1) built from the top 53 bits, so results do not
/// depend on the standard library's distribution implementation.
double uniform01(ShotRng &rng);
/// Uniform integer in [0, n).
std::uint64_t uniform_below(ShotRng &rng, std::uint64_t n);

/// Draws an independent fault set: each location faults with its class
/// probability, choosing a uniform non-identity Pauli on fault. Any number of
/// faults may occur together.
std::vector<PauliFault> sample_fault_set(const std::vector<FaultLocation> &locations, const NoiseModel &model,
                                         ShotRng &rng);
std::vector<PauliFault> sample_fault_set(const Circuit &circuit, const NoiseModel &model, ShotRng &rng);

/// Expected number of faults per shot under `model`.
double expected_fault_count(const std::vector<FaultLocation> &locations, const NoiseModel &model);

}  // namespace ft422

#endif
