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

#include "ft422/experiment.h"

#include <cmath>
#include <cstdio>
#include <sstream>

#include "ft422/errors.h"

namespace ft422 {

double statistical_distance(const Distribution &ideal, const Distribution &observed) {
    if (ideal.size() != observed.size()) {
        throw UsageError("statistical distance needs matching outcome sets");
    }
    double sum_ideal = 0.0;
    double sum_observed = 0.0;
    double l1 = 0.0;
    for (const auto &[label, p] : ideal) {
        auto it = observed.find(label);
        if (it == observed.end()) {
            throw UsageError("outcome '" + label + "' missing from observed distribution");
        }
        sum_ideal += p;
        sum_observed += it->second;
        l1 += std::abs(p - it->second);
    }
    if (std::abs(sum_ideal - 1.0) > 1e-10 || std::abs(sum_observed - 1.0) > 1e-10) {
        throw UsageError("statistical distance needs normalized distributions");
    }
    return 0.5 * l1;
}

LogicalMarginals logical_marginals(const OutcomeCounts &counts, Dictionary d) {
    LogicalMarginals m;
    m.shots = counts.shots;
    std::map<std::string, std::uint64_t> bucket_counts = {{"00", 0}, {"01", 0}, {"10", 0}, {"11", 0}};
    for (const auto &[bits, n] : counts.counts) {
        if (accept(bits)) {
            bucket_counts[decode(bits, d).str()] += n;
            m.accepted += n;
        }
    }
    if (m.accepted == 0) {
        throw AllRejected("all " + std::to_string(counts.shots) + " shots were rejected by post-selection");
    }
    m.post_selection_ratio = counts.shots ? static_cast<double>(m.accepted) / static_cast<double>(counts.shots) : 0;
    for (const auto &[label, n] : bucket_counts) {
        m.buckets[label] = static_cast<double>(n) / static_cast<double>(m.accepted);
    }
    m.r0 = m.buckets["00"] + m.buckets["01"];
    m.r1 = m.buckets["10"] + m.buckets["11"];
    return m;
}

double standard_error(std::span<const double> probabilities, std::uint64_t n) {
    if (n == 0) {
        throw UsageError("standard error needs at least one accepted shot");
    }
    double variance = 0.0;
    for (double p : probabilities) {
        variance += p * (1.0 - p) / static_cast<double>(n);
    }
    return 0.5 * std::sqrt(variance);
}

double standard_error(const Distribution &observed, std::uint64_t n) {
    std::vector<double> probs;
    for (const auto &[label, p] : observed) {
        probs.push_back(p);
    }
    return standard_error(probs, n);
}

double paired_sigma(double sigma_a, double sigma_b) { return std::sqrt(sigma_a * sigma_a + sigma_b * sigma_b); }

std::optional<double> noise_reduction(double d_enc, double d_bare) {
    if (d_bare == 0.0) {
        return std::nullopt;
    }
    return (d_enc - d_bare) / d_bare;
}

namespace {

std::uint64_t fnv1a(std::string_view text) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : text) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

}  // namespace

RunReport score_counts(const Protocol &protocol, const OutcomeCounts &counts) {
    RunReport r;
    r.circuit = protocol.name;
    r.shots = counts.shots;
    r.ideal = protocol.ideal;
    r.counts = counts;
    std::map<std::string, std::uint64_t> tally;
    for (const auto &l : protocol.decoder.labels()) {
        tally[l] = 0;
    }
    for (const auto &[bits, n] : counts.counts) {
        if (auto l = protocol.decoder.label(bits)) {
            tally[*l] += n;
            r.accepted += n;
        }
    }
    if (r.accepted == 0) {
        throw AllRejected("all " + std::to_string(counts.shots) + " shots of '" + protocol.name +
                          "' were rejected by post-selection");
    }
    r.post_selection_ratio = static_cast<double>(r.accepted) / static_cast<double>(r.shots);
    for (const auto &[l, n] : tally) {
        r.observed[l] = static_cast<double>(n) / static_cast<double>(r.accepted);
    }
    r.distance = statistical_distance(r.ideal, r.observed);
    r.sigma = standard_error(r.observed, r.accepted);
    return r;
}

RunReport run_protocol(const Protocol &protocol, const RunOptions &options) {
    options.noise.validate();
    std::uint64_t seed = options.seed ^ fnv1a(protocol.name);
    auto counts = sample_shots(protocol.circuit, options.shots, options.noise, seed, {options.threads});
    return score_counts(protocol, counts);
}

ComparisonRow make_row(std::string circuit, double d_bare, double sigma_bare, double d_enc, double sigma_enc) {
    ComparisonRow row;
    row.circuit = std::move(circuit);
    row.d_bare = d_bare;
    row.sigma_bare = sigma_bare;
    row.d_enc = d_enc;
    row.sigma_enc = sigma_enc;
    row.diff = d_enc - d_bare;
    row.sigma_diff = paired_sigma(sigma_bare, sigma_enc);
    row.reduction = noise_reduction(d_enc, d_bare);
    return row;
}

ComparisonRow make_row(std::string circuit, const RunReport &bare, const RunReport &encoded) {
    ComparisonRow row = make_row(std::move(circuit), bare.distance, bare.sigma, encoded.distance, encoded.sigma);
    row.shots = encoded.shots;
    row.accepted = encoded.accepted;
    row.post_selection_ratio = encoded.post_selection_ratio;
    return row;
}

ComparisonTable summarize(std::vector<ComparisonRow> rows) {
    ComparisonTable table;
    table.rows = std::move(rows);
    ComparisonRow &avg = table.average;
    avg.circuit = "average";
    const double n = static_cast<double>(table.rows.size());
    if (table.rows.empty()) {
        return table;
    }
    double var_bare = 0;
    double var_enc = 0;
    double var_diff = 0;
    for (const auto &r : table.rows) {
        avg.shots += r.shots;
        avg.accepted += r.accepted;
        avg.post_selection_ratio += r.post_selection_ratio / n;
        avg.d_bare += r.d_bare / n;
        avg.d_enc += r.d_enc / n;
        var_bare += r.sigma_bare * r.sigma_bare;
        var_enc += r.sigma_enc * r.sigma_enc;
        var_diff += r.sigma_diff * r.sigma_diff;
    }
    avg.sigma_bare = std::sqrt(var_bare) / n;
    avg.sigma_enc = std::sqrt(var_enc) / n;
    avg.diff = avg.d_enc - avg.d_bare;
    avg.sigma_diff = std::sqrt(var_diff) / n;
    avg.reduction = noise_reduction(avg.d_enc, avg.d_bare);
    return table;
}

ComparisonTable compare_all(std::span<const Oracle> oracles, const CompareOptions &options) {
    if (options.shots == 0) {
        throw UsageError("shots must be at least 1");
    }
    RunOptions run{options.shots, options.noise, options.seed, options.threads};
    std::vector<ComparisonRow> rows;
    for (Oracle o : oracles) {
        auto bare = run_protocol(bare_dj_protocol(o), run);
        auto enc = run_protocol(encoded_dj_protocol(o, options.native), run);
        rows.push_back(make_row(std::string(oracle_name(o)), bare, enc));
    }
    return summarize(std::move(rows));
}

ComparisonTable compare_entangled(std::span<const EntangledId> ids, const CompareOptions &options) {
    if (options.shots == 0) {
        throw UsageError("shots must be at least 1");
    }
    RunOptions run{options.shots, options.noise, options.seed, options.threads};
    std::vector<ComparisonRow> rows;
    for (EntangledId id : ids) {
        auto bare = run_protocol(entangled_protocol(id, false), run);
        auto enc = run_protocol(entangled_protocol(id, true), run);
        rows.push_back(make_row(std::string(entangled_name(id)), bare, enc));
    }
    return summarize(std::move(rows));
}

std::vector<SweepPoint> sweep(std::span<const NoiseModel> grid, std::span<const Oracle> oracles,
                              const CompareOptions &options) {
    if (grid.empty()) {
        throw UsageError("sweep needs at least one grid point");
    }
    std::vector<SweepPoint> out;
    for (const auto &model : grid) {
        CompareOptions point = options;
        point.noise = model;
        out.push_back({model, compare_all(oracles, point)});
    }
    return out;
}

// --- formatting ---

std::string fixed5(double value) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.5f", value);
    std::string s(buf);
    if (s == "-0.00000") {
        s = "0.00000";
    }
    return s;
}

const std::vector<std::string> &comparison_columns() {
    static const std::vector<std::string> columns = {
        "circuit", "shots",     "accepted", "post_selection_ratio", "D_bare",       "sigma_bare",
        "D_enc",   "sigma_enc", "diff",     "sigma_diff",           "reduction_pct"};
    return columns;
}

namespace {

std::string join_header(const std::vector<std::string> &prefix) {
    std::string out;
    for (const auto &c : prefix) {
        out += c + ",";
    }
    const auto &cols = comparison_columns();
    for (std::size_t i = 0; i < cols.size(); i++) {
        out += (i ? "," : "") + cols[i];
    }
    return out + "\n";
}

std::string csv_row(const ComparisonRow &r) {
    std::ostringstream os;
    os << r.circuit << ',' << r.shots << ',' << r.accepted << ',' << fixed5(r.post_selection_ratio) << ','
       << fixed5(r.d_bare) << ',' << fixed5(r.sigma_bare) << ',' << fixed5(r.d_enc) << ',' << fixed5(r.sigma_enc)
       << ',' << fixed5(r.diff) << ',' << fixed5(r.sigma_diff) << ','
       << (r.reduction ? fixed5(100.0 * *r.reduction) : std::string("NA"));
    return os.str();
}

nlohmann::json row_json(const ComparisonRow &r) {
    nlohmann::json j;
    j["circuit"] = r.circuit;
    j["shots"] = r.shots;
    j["accepted"] = r.accepted;
    j["post_selection_ratio"] = r.post_selection_ratio;
    j["D_bare"] = r.d_bare;
    j["sigma_bare"] = r.sigma_bare;
    j["D_enc"] = r.d_enc;
    j["sigma_enc"] = r.sigma_enc;
    j["diff"] = r.diff;
    j["sigma_diff"] = r.sigma_diff;
    j["reduction_pct"] = r.reduction ? nlohmann::json(100.0 * *r.reduction) : nlohmann::json(nullptr);
    return j;
}

std::string noise_prefix(const NoiseModel &m) { return fixed5(m.p1) + "," + fixed5(m.p2) + "," + fixed5(m.p_meas) + ","; }

}  // namespace

std::string to_csv(const ComparisonTable &table) {
    std::string out = join_header({});
    for (const auto &r : table.rows) {
        out += csv_row(r) + "\n";
    }
    out += csv_row(table.average) + "\n";
    return out;
}

nlohmann::json to_json(const ComparisonTable &table) {
    nlohmann::json j;
    j["rows"] = nlohmann::json::array();
    for (const auto &r : table.rows) {
        j["rows"].push_back(row_json(r));
    }
    j["average"] = row_json(table.average);
    return j;
}

std::string sweep_to_csv(const std::vector<SweepPoint> &points) {
    std::string out = join_header({"p1", "p2", "p_meas"});
    for (const auto &pt : points) {
        for (const auto &r : pt.table.rows) {
            out += noise_prefix(pt.noise) + csv_row(r) + "\n";
        }
        out += noise_prefix(pt.noise) + csv_row(pt.table.average) + "\n";
    }
    return out;
}

nlohmann::json sweep_to_json(const std::vector<SweepPoint> &points) {
    nlohmann::json j = nlohmann::json::array();
    for (const auto &pt : points) {
        nlohmann::json p = to_json(pt.table);
        p["p1"] = pt.noise.p1;
        p["p2"] = pt.noise.p2;
        p["p_meas"] = pt.noise.p_meas;
        j.push_back(std::move(p));
    }
    return j;
}

std::string run_to_csv(const RunReport &r) {
    std::ostringstream os;
    os << "circuit,shots,accepted,post_selection_ratio,D,sigma_D";
    for (const auto &[label, p] : r.ideal) {
        os << ",P_" << label << ",O_" << label;
    }
    os << '\n'
       << r.circuit << ',' << r.shots << ',' << r.accepted << ',' << fixed5(r.post_selection_ratio) << ','
       << fixed5(r.distance) << ',' << fixed5(r.sigma);
    for (const auto &[label, p] : r.ideal) {
        os << ',' << fixed5(p) << ',' << fixed5(r.observed.at(label));
    }
    os << '\n';
    return os.str();
}

nlohmann::json run_to_json(const RunReport &r) {
    nlohmann::json j;
    j["circuit"] = r.circuit;
    j["shots"] = r.shots;
    j["accepted"] = r.accepted;
    j["post_selection_ratio"] = r.post_selection_ratio;
    j["D"] = r.distance;
    j["sigma_D"] = r.sigma;
    j["ideal"] = r.ideal;
    j["observed"] = r.observed;
    j["counts"] = r.counts.counts;
    return j;
}

}  // namespace ft422
