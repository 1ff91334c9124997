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

// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any
// criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <unsupported/Eigen/KroneckerProduct>
#include <vector>

#include "cli.h"
#include "ft422/circuitlib.h"
#include "ft422/code422.h"
#include "ft422/experiment.h"
#include "ft422/ftverify.h"

using namespace ft422;

namespace {

// Pinned tolerances and budgets.
constexpr double kExactTol = 1e-12;
constexpr double kDictionaryTol = 1e-10;
constexpr double kNativeTol = 1e-9;
constexpr double kBellTol = 1e-10;
constexpr double kPctTol = 0.5;        // percentage points
constexpr double kSigmaTol = 0.00001;
constexpr double kRatioLow = 0.90;
constexpr double kRatioHigh = 0.999;
constexpr std::uint64_t kComparisonShots = 40960;
constexpr std::uint64_t kComparisonSeed = 20240917;
constexpr double kBudget1 = 1.0;   // seconds
constexpr double kBudget4 = 30.0;
constexpr double kBudget6 = 60.0;

struct Outcome {
    bool pass = true;
    std::vector<std::string> notes;

    void require(bool ok, const std::string &what) {
        if (!ok) {
            pass = false;
            notes.push_back(what);
        }
    }
};

bool same_distribution(const Distribution &a, const Distribution &b, double tol) {
    for (const auto &[k, p] : a) {
        auto it = b.find(k);
        if (std::abs(p - (it == b.end() ? 0.0 : it->second)) > tol) {
            return false;
        }
    }
    for (const auto &[k, p] : b) {
        if (!a.count(k) && std::abs(p) > tol) {
            return false;
        }
    }
    return true;
}

Distribution answer(Oracle o) { return {{"0", is_constant(o) ? 0.0 : 1.0}, {"1", is_constant(o) ? 1.0 : 0.0}}; }

std::string fmt(const char *f, double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, f, v);
    return buf;
}

double overlap(const Eigen::VectorXcd &a, const Eigen::VectorXcd &b) { return std::abs(a.dot(b)); }

// Reads physical qubit order[i] as position i.
Eigen::VectorXcd reorder(const StateVector &s, const std::vector<int> &order) {
    const int n = s.n_qubits();
    Eigen::VectorXcd out = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(s.dimension()));
    for (std::size_t idx = 0; idx < s.dimension(); idx++) {
        std::size_t permuted = 0;
        for (int i = 0; i < n; i++) {
            permuted |= ((idx >> (n - 1 - order[i])) & 1u) << (n - 1 - i);
        }
        out(static_cast<Eigen::Index>(permuted)) = s.amplitude(idx);
    }
    return out;
}

// 1. Ideal outputs.
Outcome ideal_outputs() {
    Outcome r;
    for (Oracle o : kAllOracles) {
        Protocol bare = bare_dj_protocol(o);
        LogicalDistribution b = logical_distribution(measured_distribution(bare.circuit), bare.decoder);
        r.require(same_distribution(b.probabilities, answer(o), kExactTol), bare.name + " answer");
        for (bool native : {false, true}) {
            Protocol p = encoded_dj_protocol(o, native);
            LogicalDistribution e = logical_distribution(measured_distribution(p.circuit), p.decoder);
            r.require(same_distribution(e.probabilities, answer(o), kExactTol), p.name + " answer");
            r.require(std::abs(e.accept_probability - 1.0) <= kExactTol, p.name + " post-selection ratio");
        }
    }
    return r;
}

// 2. Dictionary verification.
Outcome dictionaries() {
    Outcome r;
    auto paper = verify_dictionary(Dictionary::Paper, kDictionaryTol);
    r.require(paper.size() == 7, "paper dictionary has " + std::to_string(paper.size()) + " entries");
    for (Dictionary d : {Dictionary::Paper, Dictionary::Conventional}) {
        for (const auto &c : verify_dictionary(d, kDictionaryTol)) {
            r.require(c.passed, std::string(dictionary_name(d)) + " " + c.label);
        }
    }
    return r;
}

// 3. Native equivalence.
Outcome native_equivalence() {
    Outcome r;
    double worst = 0;
    for (Oracle o : kAllOracles) {
        double oracle = phase_residual(circuit_unitary(native_oracle(o)), circuit_unitary(encoded_oracle(o)));
        double full = phase_residual(circuit_unitary(strip_measurement(native_encoded_dj(o))),
                                     circuit_unitary(strip_measurement(encoded_dj(o))));
        worst = std::max({worst, oracle, full});
        r.require(oracle <= kNativeTol, std::string(oracle_name(o)) + " oracle residual " + fmt("%.2e", oracle));
        r.require(full <= kNativeTol, std::string(oracle_name(o)) + " circuit residual " + fmt("%.2e", full));
    }
    r.notes.push_back("worst residual " + fmt("%.2e", worst));
    return r;
}

// 4. Fault-tolerance check.
Outcome fault_tolerance() {
    Outcome r;
    std::size_t faults = 0;
    for (Oracle o : kAllOracles) {
        for (bool native : {false, true}) {
            FtReport rep = verify_fault_tolerance(encoded_dj_protocol(o, native));
            faults += rep.total;
            r.require(rep.logical_errors == 0,
                      rep.circuit + ": " + std::to_string(rep.logical_errors) + " LogicalError verdicts");
        }
        FtReport bare = verify_fault_tolerance(bare_dj_protocol(o));
        r.require(bare.logical_errors > 0, bare.circuit + " has no LogicalError witness");
    }
    r.notes.push_back(std::to_string(faults) + " encoded single faults classified");
    return r;
}

// 5. Analysis pipeline on the published distances.
Outcome published_pipeline() {
    Outcome r;
    struct Row {
        const char *name;
        double d_bare, s_bare, d_enc, s_enc;
    };
    const Row rows[] = {{"f0", 0.01929, 0.00152, 0.00178, 0.00048},
                        {"fx", 0.00317, 0.00062, 0.00128, 0.00040},
                        {"f1x", 0.00513, 0.00078, 0.00076, 0.00031},
                        {"f1", 0.01782, 0.00146, 0.00129, 0.00040}};
    std::vector<ComparisonRow> table;
    for (const auto &row : rows) {
        table.push_back(make_row(row.name, row.d_bare, row.s_bare, row.d_enc, row.s_enc));
    }
    ComparisonTable t = summarize(table);
    double f0 = 100 * *table[0].reduction;
    double avg = 100 * *t.average.reduction;
    r.require(std::abs(f0 - (-90.8)) <= kPctTol, "f0 reduction " + fmt("%.3f%%", f0));
    r.require(std::abs(avg - (-88.75)) <= kPctTol, "average reduction " + fmt("%.3f%%", avg));
    r.require(std::abs(avg - (-88.7)) <= kPctTol, "average vs published " + fmt("%.3f%%", avg));
    double q = 0.01929;
    double probs[] = {q, 1 - q};
    double sigma = standard_error(probs, 4096);
    r.require(std::abs(sigma - 0.00152) <= kSigmaTol, "sigma " + fmt("%.6f", sigma));
    r.notes.push_back("f0 " + fmt("%.2f%%", f0) + ", average " + fmt("%.2f%%", avg) + ", sigma " +
                      fmt("%.5f", sigma));
    return r;
}

// 6. Simulated comparison at the calibrated noise level.
Outcome simulated_comparison() {
    Outcome r;
    CompareOptions opts;
    opts.shots = kComparisonShots;
    opts.noise = NoiseModel::calibrated();
    opts.seed = kComparisonSeed;
    ComparisonTable t = compare_all(kAllOracles, opts);
    for (const auto &row : t.rows) {
        r.require(row.significant_improvement(), row.circuit + " diff " + fixed5(row.diff) + " +/- " +
                                                     fixed5(row.sigma_diff) + " not significant");
        bool in_range = row.post_selection_ratio >= kRatioLow && row.post_selection_ratio <= kRatioHigh;
        r.require(in_range, row.circuit + " post-selection ratio " + fixed5(row.post_selection_ratio) +
                                " outside [" + fmt("%.3f", kRatioLow) + ", " + fmt("%.3f", kRatioHigh) + "]");
    }
    if (r.pass) {
        r.notes.push_back("average reduction " + fixed5(100 * *t.average.reduction) + "%");
    }
    return r;
}

// 7. Entangled states and the Bell identity.
Outcome entangled_states() {
    Outcome r;
    Matrix enc = logical_encoder(Dictionary::Conventional);
    for (EntangledId id : kAllEntangled) {
        const std::string name(entangled_name(id));
        Eigen::VectorXcd target = entangled_target_state(id).to_eigen();

        Circuit bare = entangled_circuit(id, false);
        double fb = overlap(apply_circuit(bare, StateVector(2)).to_eigen(), target);
        r.require(std::abs(fb - 1.0) <= kExactTol, name + " bare state overlap " + fmt("%.3e", 1 - fb));

        Circuit encoded = entangled_circuit(id, true);
        Eigen::VectorXcd logical = enc.adjoint() * reorder(apply_circuit(encoded, StateVector(4)), encoded.readout_order());
        double fe = overlap(logical, target);
        r.require(std::abs(fe - 1.0) <= kExactTol, name + " encoded logical overlap " + fmt("%.3e", 1 - fe));

        Protocol pb = entangled_protocol(id, false);
        Protocol pe = entangled_protocol(id, true);
        LogicalDistribution lb = logical_distribution(measured_distribution(pb.circuit), pb.decoder);
        LogicalDistribution le = logical_distribution(measured_distribution(pe.circuit), pe.decoder);
        r.require(same_distribution(lb.probabilities, pb.ideal, kExactTol), name + " bare distribution");
        r.require(same_distribution(le.probabilities, pb.ideal, kExactTol), name + " encoded distribution");
        r.require(std::abs(le.accept_probability - 1.0) <= kExactTol, name + " encoded post-selection");
    }

    Eigen::VectorXcd bell = Eigen::VectorXcd::Zero(4);
    bell(0) = bell(3) = 1 / std::sqrt(2.0);
    std::mt19937_64 rng(1996);
    std::uniform_int_distribution<int> num(0, 4095);
    auto random_unitary = [&] {
        Matrix u = Matrix::Identity(2, 2);
        for (int k = 0; k < 3; k++) {
            u = gate_matrix(GateKind::GPI, Turns(num(rng), 4096)) * gate_matrix(GateKind::GPI2, Turns(num(rng), 4096)) * u;
        }
        return u;
    };
    double worst = 0;
    for (int i = 0; i < 100; i++) {
        Matrix u1 = random_unitary(), u2 = random_unitary();
        Eigen::VectorXcd lhs = Eigen::kroneckerProduct(u1, u2).eval() * bell;
        Eigen::VectorXcd rhs =
            Eigen::kroneckerProduct(Matrix::Identity(2, 2), (u2 * u1.transpose()).eval()).eval() * bell;
        worst = std::max(worst, (lhs - rhs).cwiseAbs().maxCoeff());
    }
    r.require(worst <= kBellTol, "Bell identity residual " + fmt("%.2e", worst));
    return r;
}

// 8. Determinism of the compare subcommand.
Outcome determinism() {
    Outcome r;
    auto compare = [](const std::string &threads) {
        std::ostringstream out, err;
        int code = cli::run({"ft422", "compare", "--shots", "4096", "--seed", "7", "--threads", threads}, out, err);
        return std::make_pair(code, out.str());
    };
    auto a = compare("1");
    auto b = compare("1");
    auto c = compare("4");
    r.require(a.first == 0 && b.first == 0 && c.first == 0, "compare exited nonzero");
    r.require(!a.second.empty(), "compare produced no output");
    r.require(a.second == b.second, "two runs differ");
    r.require(a.second == c.second, "thread counts 1 and 4 differ");
    return r;
}

}  // namespace

int main() {
    struct Criterion {
        int id;
        const char *title;
        std::function<Outcome()> run;
        double budget;  // seconds; 0 means none
    };
    const Criterion criteria[] = {
        {1, "ideal outputs", ideal_outputs, kBudget1},
        {2, "dictionary verification", dictionaries, 0},
        {3, "native equivalence", native_equivalence, 0},
        {4, "single-fault tolerance", fault_tolerance, kBudget4},
        {5, "published-number pipeline", published_pipeline, 0},
        {6, "simulated comparison", simulated_comparison, kBudget6},
        {7, "entangled states", entangled_states, 0},
        {8, "determinism", determinism, 0},
    };

    int failures = 0;
    for (const auto &c : criteria) {
        auto start = std::chrono::steady_clock::now();
        Outcome o = c.run();
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (c.budget > 0 && secs > c.budget) {
            o.pass = false;
            o.notes.push_back("took " + fmt("%.2f s", secs) + ", budget " + fmt("%.0f s", c.budget));
        }
        std::string detail;
        for (const auto &n : o.notes) {
            detail += (detail.empty() ? "" : "; ") + n;
        }
        std::printf("%s  criterion %d: %s (%.2f s)%s%s\n", o.pass ? "PASS" : "FAIL", c.id, c.title, secs,
                    detail.empty() ? "" : " - ", detail.c_str());
        failures += !o.pass;
    }
    std::printf("%d of %zu criteria passed\n", static_cast<int>(std::size(criteria)) - failures, std::size(criteria));
    return failures == 0 ? 0 : 1;
}
