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

#include "cli.h"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>

#include "CLI11.hpp"
#include "ft422/circuit_io.h"
#include "ft422/circuitlib.h"
#include "ft422/code422.h"
#include "ft422/errors.h"
#include "ft422/experiment.h"
#include "ft422/ftverify.h"
#include "json.hpp"

namespace ft422::cli {

namespace {

using nlohmann::json;

constexpr double kTransversalTol = 1e-10;
constexpr std::size_t kMaxWitnesses = 5;

struct NoiseFlags {
    NoiseModel model = NoiseModel::calibrated();

    void attach(CLI::App *sub) {
        sub->add_option("--p1", model.p1, "single-qubit gate error probability")->capture_default_str();
        sub->add_option("--p2", model.p2, "two-qubit gate error probability")->capture_default_str();
        sub->add_option("--pm", model.p_meas, "readout flip probability")->capture_default_str();
        sub->add_option("--pprep", model.p_prep, "preparation flip probability")->capture_default_str();
        sub->add_flag("--include-idle", model.include_idle, "add idle locations at barriers");
    }
};

struct Sink {
    std::string path;
    std::string format;
};

void emit(const Sink &sink, const std::string &text, std::ostream &out) {
    if (sink.path.empty()) {
        out << text;
        return;
    }
    std::ofstream f(sink.path, std::ios::binary | std::ios::trunc);
    if (!f) {
        throw UsageError("cannot write output file '" + sink.path + "'");
    }
    f << text;
    f.close();
    if (!f) {
        throw UsageError("failed writing output file '" + sink.path + "'");
    }
}

std::string sci(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2e", v);
    return buf;
}

// verify-transversal --------------------------------------------------------

int verify_transversal(const std::string &dictionary, const Sink &sink, std::ostream &out) {
    std::vector<Dictionary> dicts;
    if (dictionary == "all") {
        dicts = {Dictionary::Paper, Dictionary::Conventional};
    } else {
        dicts = {parse_dictionary(dictionary)};
    }
    std::vector<std::pair<Dictionary, EntryCheck>> rows;
    for (Dictionary d : dicts) {
        for (auto &c : verify_dictionary(d, kTransversalTol)) {
            rows.emplace_back(d, std::move(c));
        }
    }
    bool ok = std::all_of(rows.begin(), rows.end(), [](const auto &r) { return r.second.passed; });

    std::ostringstream os;
    if (sink.format == "json") {
        json j;
        j["tolerance"] = kTransversalTol;
        j["passed"] = ok;
        j["entries"] = json::array();
        for (const auto &[d, c] : rows) {
            j["entries"].push_back({{"dictionary", std::string(dictionary_name(d))},
                                    {"label", c.label},
                                    {"physical", c.physical},
                                    {"passed", c.passed},
                                    {"leakage", c.leakage},
                                    {"residual", c.residual}});
        }
        os << j.dump(2) << '\n';
    } else if (sink.format == "csv") {
        os << "dictionary,label,physical,verdict,leakage,residual\n";
        for (const auto &[d, c] : rows) {
            os << dictionary_name(d) << ',' << c.label << ',' << c.physical << ',' << (c.passed ? "PASS" : "FAIL")
               << ',' << sci(c.leakage) << ',' << sci(c.residual) << '\n';
        }
    } else {
        for (const auto &[d, c] : rows) {
            char line[160];
            std::snprintf(line, sizeof line, "%-4s  %-12s %-10s %-22s leak=%s resid=%s\n", c.passed ? "PASS" : "FAIL",
                          std::string(dictionary_name(d)).c_str(), c.label.c_str(), c.physical.c_str(),
                          sci(c.leakage).c_str(), sci(c.residual).c_str());
            os << line;
        }
        os << (ok ? "all entries pass" : "some entries FAIL") << " (tol " << sci(kTransversalTol) << ")\n";
    }
    emit(sink, os.str(), out);
    return ok ? kExitOk : kExitCheckFailed;
}

// verify-ft -----------------------------------------------------------------

json verdict_json(const FaultVerdict &v) {
    return {{"fault", v.fault.describe()},
            {"accept_probability", v.accept_probability},
            {"error_probability", v.error_probability},
            {"classification", std::string(verdict_name(v.classification))}};
}

json report_json(const FtReport &r, LocationOptions opts) {
    json j{{"circuit", r.circuit},
           {"include_prep", opts.include_prep},
           {"include_idle", opts.include_idle},
           {"total", r.total},
           {"detected", r.detected},
           {"harmless", r.harmless},
           {"logical_error", r.logical_errors},
           {"fault_tolerant", r.fault_tolerant()}};
    j["worst"] = r.worst ? verdict_json(*r.worst) : json(nullptr);
    json w = json::array();
    for (const auto &v : r.verdicts) {
        if (v.classification == Verdict::LogicalError) {
            w.push_back(verdict_json(v));
        }
    }
    j["logical_errors"] = std::move(w);
    return j;
}

int verify_ft(const std::vector<std::string> &names, const NoiseModel &model, unsigned threads, const Sink &sink,
              std::ostream &out) {
    model.validate();
    LocationOptions primary = LocationOptions::from_model(model);
    LocationOptions other = primary;
    other.include_prep = !primary.include_prep;

    struct Entry {
        FtReport main;
        FtReport alt;
    };
    std::vector<Entry> entries;
    for (const auto &name : names) {
        Protocol p = lookup_protocol(name);
        entries.push_back({verify_fault_tolerance(p, primary, threads), verify_fault_tolerance(p, other, threads)});
    }
    bool ok = std::all_of(entries.begin(), entries.end(), [](const Entry &e) { return e.main.fault_tolerant(); });

    std::ostringstream os;
    if (sink.format == "json") {
        json j;
        j["fault_tolerant"] = ok;
        j["reports"] = json::array();
        for (const auto &e : entries) {
            json r = report_json(e.main, primary);
            r["alternate"] = report_json(e.alt, other);
            j["reports"].push_back(std::move(r));
        }
        os << j.dump(2) << '\n';
    } else if (sink.format == "csv") {
        os << "circuit,include_prep,include_idle,total,detected,harmless,logical_error,fault_tolerant\n";
        for (const auto &e : entries) {
            for (const auto &[r, o] : {std::pair{&e.main, primary}, std::pair{&e.alt, other}}) {
                os << r->circuit << ',' << o.include_prep << ',' << o.include_idle << ',' << r->total << ','
                   << r->detected << ',' << r->harmless << ',' << r->logical_errors << ','
                   << (r->fault_tolerant() ? 1 : 0) << '\n';
            }
        }
    } else {
        for (const auto &e : entries) {
            const FtReport &r = e.main;
            os << r.circuit << ": " << r.total << " single faults"
               << (primary.include_prep ? " (with prep flips)" : "") << "\n"
               << "  Detected      " << r.detected << "\n"
               << "  Harmless      " << r.harmless << "\n"
               << "  LogicalError  " << r.logical_errors << "\n";
            std::size_t shown = 0;
            for (const auto &v : r.verdicts) {
                if (v.classification == Verdict::LogicalError && shown++ < kMaxWitnesses) {
                    os << "    witness " << v.fault.describe() << "  accept=" << fixed5(v.accept_probability)
                       << " error=" << fixed5(v.error_probability) << "\n";
                }
            }
            os << "  " << (r.fault_tolerant() ? "FAULT-TOLERANT" : "NOT FAULT-TOLERANT") << "\n";
            os << "  " << (other.include_prep ? "with" : "without") << " prep flips: " << e.alt.total
               << " faults, " << e.alt.logical_errors << " LogicalError\n";
        }
    }
    emit(sink, os.str(), out);
    return ok ? kExitOk : kExitCheckFailed;
}

// experiments ---------------------------------------------------------------

int run_one(const std::string &name, std::uint64_t shots, std::uint64_t seed, unsigned threads,
            const NoiseModel &model, const Sink &sink, std::ostream &out) {
    model.validate();
    Protocol p = lookup_protocol(name);
    RunOptions opts;
    opts.shots = shots;
    opts.noise = model;
    opts.seed = seed;
    opts.threads = threads;
    RunReport r = run_protocol(p, opts);
    emit(sink, sink.format == "json" ? run_to_json(r).dump(2) + "\n" : run_to_csv(r), out);
    return kExitOk;
}

int compare(const std::string &set, bool native, std::uint64_t shots, std::uint64_t seed, unsigned threads,
            const NoiseModel &model, const Sink &sink, std::ostream &out) {
    model.validate();
    CompareOptions opts;
    opts.shots = shots;
    opts.noise = model;
    opts.seed = seed;
    opts.threads = threads;
    opts.native = native;
    ComparisonTable table = set == "entangled" ? compare_entangled(kAllEntangled, opts) : compare_all(kAllOracles, opts);
    emit(sink, sink.format == "json" ? to_json(table).dump(2) + "\n" : to_csv(table), out);
    return kExitOk;
}

int run_sweep(const std::vector<double> &p1s, const std::vector<double> &p2s, const std::vector<double> &pms,
              const std::vector<std::string> &oracle_names, const NoiseModel &base, bool native, std::uint64_t shots,
              std::uint64_t seed, unsigned threads, const Sink &sink, std::ostream &out) {
    std::vector<NoiseModel> grid;
    for (double a : p1s.empty() ? std::vector<double>{base.p1} : p1s) {
        for (double b : p2s.empty() ? std::vector<double>{base.p2} : p2s) {
            for (double c : pms.empty() ? std::vector<double>{base.p_meas} : pms) {
                NoiseModel m = base;
                m.p1 = a;
                m.p2 = b;
                m.p_meas = c;
                m.validate();
                grid.push_back(m);
            }
        }
    }
    std::vector<Oracle> oracles;
    for (const auto &n : oracle_names) {
        oracles.push_back(parse_oracle(n));
    }
    if (oracles.empty()) {
        oracles.assign(kAllOracles.begin(), kAllOracles.end());
    }
    CompareOptions opts;
    opts.shots = shots;
    opts.seed = seed;
    opts.threads = threads;
    opts.native = native;
    auto points = sweep(grid, oracles, opts);
    emit(sink, sink.format == "json" ? sweep_to_json(points).dump(2) + "\n" : sweep_to_csv(points), out);
    return kExitOk;
}

int export_circuit(const std::string &name, const Sink &sink, std::ostream &out) {
    Protocol p = lookup_protocol(name);
    emit(sink, sink.format == "text" ? circuit_to_text(p.circuit) : circuit_to_json(p.circuit).dump(2) + "\n", out);
    return kExitOk;
}

int list_catalog(const Sink &sink, std::ostream &out) {
    auto names = catalog_names();
    std::ostringstream os;
    if (sink.format == "json") {
        os << json(names).dump(2) << '\n';
    } else {
        for (const auto &n : names) {
            os << n << '\n';
        }
    }
    emit(sink, os.str(), out);
    return kExitOk;
}

CLI::Option *add_format(CLI::App *sub, std::string &target, std::vector<std::string> choices) {
    target = choices.front();
    return sub->add_option("--format", target, "output format")->check(CLI::IsMember(choices))->capture_default_str();
}

}  // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"Encoded Deutsch-Jozsa toolkit on the [[4,2,2]] code", "ft422"};
    app.require_subcommand(1);

    Sink sink;
    NoiseFlags noise;
    std::string circuit;
    std::vector<std::string> circuits;
    std::string dictionary = "paper";
    std::string set = "dj";
    std::uint64_t shots = kDefaultShots;
    std::uint64_t seed = kDefaultSeed;
    unsigned threads = 0;
    bool native = false;
    std::vector<double> p1s, p2s, pms;
    std::vector<std::string> oracles;
    std::map<CLI::App *, std::string> formats;

    auto add_out = [&](CLI::App *sub) { sub->add_option("--out", sink.path, "write to this file instead of stdout"); };
    auto add_run_opts = [&](CLI::App *sub) {
        sub->add_option("--shots", shots, "shots per circuit")->check(CLI::PositiveNumber)->capture_default_str();
        sub->add_option("--seed", seed, "master seed")->capture_default_str();
        sub->add_option("--threads", threads, "worker threads (0 = hardware)")->capture_default_str();
    };

    auto *vt = app.add_subcommand("verify-transversal", "check the transversal gate dictionaries");
    vt->add_option("--dictionary", dictionary, "paper | conventional | all")
        ->check(CLI::IsMember({"paper", "conventional", "all"}))
        ->capture_default_str();
    add_format(vt, formats[vt], {"text", "json", "csv"});
    add_out(vt);

    auto *vf = app.add_subcommand("verify-ft", "exhaustive single-fault check");
    vf->add_option("--circuit", circuits, "catalog name (repeatable)")->required();
    vf->add_option("--threads", threads, "worker threads (0 = hardware)");
    noise.attach(vf);
    add_format(vf, formats[vf], {"text", "json", "csv"});
    add_out(vf);

    auto *rn = app.add_subcommand("run", "sample one circuit");
    rn->add_option("--circuit", circuit, "catalog name")->required();
    add_run_opts(rn);
    noise.attach(rn);
    add_format(rn, formats[rn], {"csv", "json"});
    add_out(rn);

    auto *cp = app.add_subcommand("compare", "bare vs encoded comparison table");
    cp->add_option("--set", set, "dj | entangled")->check(CLI::IsMember({"dj", "entangled"}))->capture_default_str();
    cp->add_flag("--native", native, "use the native-gate encoded circuits");
    add_run_opts(cp);
    noise.attach(cp);
    add_format(cp, formats[cp], {"csv", "json"});
    add_out(cp);

    auto *sw = app.add_subcommand("sweep", "comparison over a noise grid");
    sw->add_option("--p1", p1s, "p1 grid (comma separated)")->delimiter(',');
    sw->add_option("--p2", p2s, "p2 grid (comma separated)")->delimiter(',');
    sw->add_option("--pm", pms, "readout grid (comma separated)")->delimiter(',');
    sw->add_option("--pprep", noise.model.p_prep, "preparation flip probability");
    sw->add_flag("--include-idle", noise.model.include_idle, "add idle locations at barriers");
    sw->add_option("--oracles", oracles, "subset of f0,fx,f1x,f1")->delimiter(',');
    sw->add_flag("--native", native, "use the native-gate encoded circuits");
    add_run_opts(sw);
    add_format(sw, formats[sw], {"csv", "json"});
    add_out(sw);

    auto *ex = app.add_subcommand("export", "write a catalog circuit");
    ex->add_option("--circuit", circuit, "catalog name")->required();
    add_format(ex, formats[ex], {"json", "text"});
    add_out(ex);

    auto *ls = app.add_subcommand("list", "list catalog circuit names");
    add_format(ls, formats[ls], {"text", "json"});
    add_out(ls);

    std::vector<std::string> rev(args.rbegin(), args.rend());
    if (!rev.empty()) {
        rev.pop_back();  // program name
    }
    try {
        app.parse(rev);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp &e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError &e) {
        app.exit(e, out, err);
        return kExitUsage;
    }

    for (auto &[sub, fmt] : formats) {
        if (*sub) {
            sink.format = fmt;
        }
    }

    try {
        if (*vt) {
            return verify_transversal(dictionary, sink, out);
        }
        if (*vf) {
            return verify_ft(circuits, noise.model, threads, sink, out);
        }
        if (*rn) {
            return run_one(circuit, shots, seed, threads, noise.model, sink, out);
        }
        if (*cp) {
            return compare(set, native, shots, seed, threads, noise.model, sink, out);
        }
        if (*sw) {
            return run_sweep(p1s, p2s, pms, oracles, noise.model, native, shots, seed, threads, sink, out);
        }
        if (*ex) {
            return export_circuit(circuit, sink, out);
        }
        if (*ls) {
            return list_catalog(sink, out);
        }
    } catch (const UsageError &e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception &e) {
        err << "error: " << e.what() << '\n';
        return kExitCheckFailed;
    }
    return kExitUsage;
}

}  // namespace ft422::cli
