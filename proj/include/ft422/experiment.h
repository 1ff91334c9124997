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

#ifndef FT422_EXPERIMENT_H
#define FT422_EXPERIMENT_H

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ft422/circuitlib.h"
#include "ft422/simcore.h"
#include "json.hpp"

namespace ft422 {

/// Two-sided 99% normal quantile.
inline constexpr double kZ99 = 2.576;

/// Shot count of a single hardware run.
inline constexpr std::uint64_t kDefaultShots = 4096;

/// Half the L1 distance. Both distributions must have the same label set and
/// sum to 1 within 1e-10.
double statistical_distance(const Distribution &ideal, const Distribution &observed);

/// Post-selected [[4,2,2]] statistics of a four-qubit counts table.
struct LogicalMarginals {
    std::uint64_t shots = 0;
    std::uint64_t accepted = 0;
    double post_selection_ratio = 0.0;
    /// "00", "01", "10", "11" -> renormalized probability.
    std::map<std::string, double> buckets;
    double r0 = 0.0;  // first decoded bit = 0
    double r1 = 0.0;
};

/// Throws AllRejected if no shot has even parity.
LogicalMarginals logical_marginals(const OutcomeCounts &counts, Dictionary d = Dictionary::Paper);

/// sigma_D = 0.5 * sqrt(sum_i p_i (1 - p_i) / N). Throws UsageError if N = 0.
double standard_error(std::span<const double> probabilities, std::uint64_t n);
double standard_error(const Distribution &observed, std::uint64_t n);
double paired_sigma(double sigma_a, double sigma_b);

/// (d_enc - d_bare) / d_bare; nullopt when d_bare is 0.
std::optional<double> noise_reduction(double d_enc, double d_bare);

/// Outcome of sampling one protocol.
struct RunReport {
    std::string circuit;
    std::uint64_t shots = 0;
    std::uint64_t accepted = 0;
    double post_selection_ratio = 0.0;
    Distribution ideal;
    Distribution observed;
    double distance = 0.0;
    double sigma = 0.0;
    OutcomeCounts counts;
};

struct RunOptions {
    std::uint64_t shots = kDefaultShots;
    NoiseModel noise;
    std::uint64_t seed = 0;
    unsigned threads = 0;
};

/// Samples and scores one protocol. The effective seed is derived from
/// options.seed and the circuit name, so every circuit in a batch has its
/// own stream. Throws AllRejected if every shot is discarded.
RunReport run_protocol(const Protocol &protocol, const RunOptions &options);

/// Scores an existing counts table against a protocol's ideal.
RunReport score_counts(const Protocol &protocol, const OutcomeCounts &counts);

struct ComparisonRow {
    std::string circuit;
    std::uint64_t shots = 0;
    std::uint64_t accepted = 0;
    double post_selection_ratio = 0.0;
    double d_bare = 0.0;
    double sigma_bare = 0.0;
    double d_enc = 0.0;
    double sigma_enc = 0.0;
    double diff = 0.0;
    double sigma_diff = 0.0;
    std::optional<double> reduction;  // fraction; negative means less noise

    /// diff + 2.576 sigma_diff < 0
    bool significant_improvement() const { return diff + kZ99 * sigma_diff < 0; }
};

/// Builds a row from two scored runs.
ComparisonRow make_row(std::string circuit, const RunReport &bare, const RunReport &encoded);
/// Builds a row from published distances and uncertainties.
ComparisonRow make_row(std::string circuit, double d_bare, double sigma_bare, double d_enc, double sigma_enc);

struct ComparisonTable {
    std::vector<ComparisonRow> rows;
    /// Cross-row summary: mean distances, reduction of the means, and
    /// sigmas combined as sqrt(sum sigma^2) / n.
    ComparisonRow average;
};

ComparisonTable summarize(std::vector<ComparisonRow> rows);

struct CompareOptions {
    std::uint64_t shots = kDefaultShots;
    NoiseModel noise;
    std::uint64_t seed = 0;
    unsigned threads = 0;
    /// Use the trapped-ion native encoded circuits.
    bool native = false;
};

/// Bare vs encoded Deutsch-Jozsa for each oracle.
ComparisonTable compare_all(std::span<const Oracle> oracles, const CompareOptions &options);
/// Bare vs encoded preparation of each entangled state.
ComparisonTable compare_entangled(std::span<const EntangledId> ids, const CompareOptions &options);

struct SweepPoint {
    NoiseModel noise;
    ComparisonTable table;
};

/// One compare_all per noise model; each point reuses the same seed.
std::vector<SweepPoint> sweep(std::span<const NoiseModel> grid, std::span<const Oracle> oracles,
                              const CompareOptions &options);

/// Comparison columns, in order.
const std::vector<std::string> &comparison_columns();

/// Fixed-point with 5 decimals; "NA" for a missing reduction.
std::string to_csv(const ComparisonTable &table);
nlohmann::json to_json(const ComparisonTable &table);
std::string sweep_to_csv(const std::vector<SweepPoint> &points);
nlohmann::json sweep_to_json(const std::vector<SweepPoint> &points);
std::string run_to_csv(const RunReport &report);
nlohmann::json run_to_json(const RunReport &report);

/// "%.5f"
std::string fixed5(double value);

}  // namespace ft422

#endif
