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

#include <algorithm>
#include <atomic>
#include <cmath>
#include <thread>

#include "ft422/errors.h"

namespace ft422 {

std::string_view verdict_name(Verdict v) {
    switch (v) {
        case Verdict::Detected:
            return "Detected";
        case Verdict::Harmless:
            return "Harmless";
        case Verdict::LogicalError:
            return "LogicalError";
    }
    return "?";
}

double logical_error_tolerance(const Distribution &ideal) {
    bool deterministic = std::any_of(ideal.begin(), ideal.end(), [](const auto &kv) { return kv.second == 1.0; });
    return deterministic ? kProbabilityFloor : 1e-10;
}

Distribution ideal_logical_distribution(const Circuit &circuit, const Decoder &decoder) {
    return logical_distribution(measured_distribution(circuit), decoder).probabilities;
}

FaultVerdict classify_fault(const Circuit &circuit, const PauliFault &fault, const Decoder &decoder,
                            const Distribution &ideal) {
    if (!circuit.measured()) {
        throw UsageError("circuit '" + circuit.name() + "' has no MeasureAll");
    }
    auto measured = measured_distribution(circuit, std::span<const PauliFault>(&fault, 1));
    auto logical = logical_distribution(measured, decoder);

    FaultVerdict v{fault, logical.accept_probability, 0.0, Verdict::Detected};
    if (logical.accept_probability <= kProbabilityFloor) {
        v.accept_probability = 0.0;
        return v;
    }
    double tv = 0.0;
    for (const auto &[label, p] : logical.probabilities) {
        auto it = ideal.find(label);
        tv += std::abs(p - (it == ideal.end() ? 0.0 : it->second));
    }
    v.error_probability = 0.5 * tv;
    v.classification =
        v.error_probability > logical_error_tolerance(ideal) ? Verdict::LogicalError : Verdict::Harmless;
    return v;
}

FtReport verify_fault_tolerance(const Circuit &circuit, const Decoder &decoder, const Distribution &ideal,
                                LocationOptions options, unsigned threads) {
    const auto faults = enumerate_single_faults(circuit, options);
    FtReport report;
    report.circuit = circuit.name();
    report.total = faults.size();
    report.verdicts.resize(faults.size());

    unsigned workers = threads ? threads : std::max(1u, std::thread::hardware_concurrency());
    workers = static_cast<unsigned>(std::min<std::size_t>(workers, std::max<std::size_t>(1, faults.size())));
    std::atomic<std::size_t> next{0};
    auto work = [&] {
        for (std::size_t i = next++; i < faults.size(); i = next++) {
            report.verdicts[i] = classify_fault(circuit, faults[i], decoder, ideal);
        }
    };
    if (workers <= 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < workers; w++) {
            pool.emplace_back(work);
        }
        for (auto &t : pool) {
            t.join();
        }
    }

    for (const auto &v : report.verdicts) {
        switch (v.classification) {
            case Verdict::Detected:
                report.detected++;
                break;
            case Verdict::Harmless:
                report.harmless++;
                break;
            case Verdict::LogicalError:
                report.logical_errors++;
                if (!report.worst || v.error_probability > report.worst->error_probability) {
                    report.worst = v;
                }
                break;
        }
    }
    return report;
}

FtReport verify_fault_tolerance(const Protocol &protocol, LocationOptions options, unsigned threads) {
    return verify_fault_tolerance(protocol.circuit, protocol.decoder, protocol.ideal, options, threads);
}

}  // namespace ft422
