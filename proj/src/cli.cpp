// Copyright 2026 The qtele Authors
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

#include "qtele/cli.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cstdio>
#include <exception>
#include <fstream>
#include <ostream>
#include <sstream>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "qtele/errors.hpp"
#include "qtele/resources.hpp"
#include "qtele/serialize.hpp"
#include "qtele/verify.hpp"

namespace qtele::cli {

namespace {

std::string fmt_double(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

double parse_double(std::string_view token) {
    double value = 0.0;
    const auto *first = token.data();
    const auto *last = token.data() + token.size();
    const auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last) {
        throw ParseError("'" + std::string(token) + "' is not a number");
    }
    return value;
}

int parse_int(std::string_view token) {
    int value = 0;
    const auto *last = token.data() + token.size();
    const auto [ptr, ec] = std::from_chars(token.data(), last, value);
    if (ec != std::errc{} || ptr != last) {
        throw ParseError("'" + std::string(token) + "' is not an integer");
    }
    return value;
}

struct TrialResult {
    std::optional<TeleportTranscript> transcript;
    std::exception_ptr error;
};

TrialResult run_trial(const RunConfig &config, const RunOptions &options,
                      std::size_t index) {
    TrialResult r;
    try {
        const std::uint64_t s = trial_seed(config.seed, index);
        Rng rng(s);
        const CoefficientSet c =
            config.coefficients ? *config.coefficients : CoefficientSet::random(rng);
        const TeleportMode mode = config.forced_outcome
                                      ? TeleportMode::forced(*config.forced_outcome)
                                      : TeleportMode::sampled(rng);
        auto t = run_end_to_end(c, mode, options);
        t.seed = s;
        t.trial = index;
        r.transcript = std::move(t);
    } catch (...) {
        r.error = std::current_exception();
    }
    return r;
}

std::vector<TrialResult> run_trials(const RunConfig &config,
                                    const RunOptions &options) {
    std::vector<TrialResult> results(config.trials);
    const unsigned workers = std::max(
        1U, std::min<unsigned>(config.threads, static_cast<unsigned>(config.trials)));
    if (workers == 1) {
        for (std::size_t i = 0; i < config.trials; ++i) {
            results[i] = run_trial(config, options, i);
        }
        return results;
    }
    std::atomic<std::size_t> next{0};
    {
        std::vector<std::jthread> pool;
        for (unsigned w = 0; w < workers; ++w) {
            pool.emplace_back([&] {
                for (std::size_t i = next++; i < config.trials; i = next++) {
                    results[i] = run_trial(config, options, i);
                }
            });
        }
    }
    return results;
}

void write_csv_header(std::ostream &out) {
    out << "trial,seed,alpha_re,alpha_im,beta_re,beta_im,gamma_re,gamma_im,"
           "delta_re,delta_im,outcome_first,outcome_second,correction_b1,"
           "correction_b2,classical_bits_sent,outcome_probability,fidelity_2q,"
           "fidelity_8q,variant,channel\n";
}

void write_csv_row(std::ostream &out, const TeleportTranscript &t) {
    out << (t.trial ? std::to_string(*t.trial) : "") << ','
        << (t.seed ? std::to_string(*t.seed) : "");
    for (const auto &z : t.coefficients.values()) {
        out << ',' << fmt_double(z.real()) << ',' << fmt_double(z.imag());
    }
    out << ',' << to_string(t.outcome.first) << ',' << to_string(t.outcome.second)
        << ',' << to_string(t.correction.on_b1) << ','
        << to_string(t.correction.on_b2) << ',' << t.classical_bits_sent << ','
        << fmt_double(t.outcome_probability) << ',' << fmt_double(t.fidelity_2q)
        << ',' << fmt_double(t.fidelity_8q) << ',' << to_string(t.variant) << ','
        << t.channel << '\n';
}

void write_text_row(std::ostream &out, const TeleportTranscript &t) {
    char fid[64];
    std::snprintf(fid, sizeof fid, "%.15f", t.fidelity_8q);
    out << "trial " << (t.trial ? *t.trial : 0) << "  seed "
        << (t.seed ? *t.seed : 0) << "  outcome " << to_string(t.outcome)
        << "  correction " << to_string(t.correction.on_b1) << ","
        << to_string(t.correction.on_b2) << "  bits " << t.classical_bits_sent
        << "  fidelity_8q " << fid << '\n';
}

bool passes(const TeleportTranscript &t) {
    return t.fidelity_8q >= 1.0 - kFidelityTolerance &&
           t.fidelity_2q >= 1.0 - kFidelityTolerance;
}

// Aggregates per-coefficient-set reports into one, keeping per-case maxima.
IdentityReport merge_reports(const std::string &name,
                             const std::vector<IdentityReport> &parts) {
    IdentityReport merged;
    merged.identity_name = name;
    merged.holds = true;
    std::vector<BranchDeviation> worst;
    for (const auto &p : parts) {
        merged.max_deviation = std::max(merged.max_deviation, p.max_deviation);
        merged.holds = merged.holds && p.holds;
        if (worst.empty()) {
            worst = p.details;
        } else {
            for (std::size_t i = 0; i < worst.size() && i < p.details.size(); ++i) {
                worst[i].deviation = std::max(worst[i].deviation, p.details[i].deviation);
            }
        }
    }
    merged.details = std::move(worst);
    merged.verdict = merged.holds ? "holds" : "fails";
    if (!parts.empty()) {
        merged.notes = parts.front().notes;
    }
    merged.notes.push_back("maximum over " + std::to_string(parts.size()) +
                           " coefficient sets");
    return merged;
}

std::vector<CoefficientSet> verify_batch(const VerifyConfig &config) {
    std::vector<CoefficientSet> sets{
        CoefficientSet::from_values(1.0, 0.0, 0.0, 0.0),
        CoefficientSet::from_values(0.5, 0.5, 0.5, 0.5)};
    Rng rng(config.seed);
    for (std::size_t k = 0; k < config.batch; ++k) {
        sets.push_back(CoefficientSet::random(rng));
    }
    return sets;
}

void print_report_line(std::ostream &out, bool pass, const IdentityReport &r) {
    out << (pass ? "PASS  " : "FAIL  ") << r.identity_name << ": " << r.verdict
        << " (max deviation " << fmt_double(r.max_deviation);
    if (r.relabeled_deviation) {
        out << ", after relabeling " << fmt_double(*r.relabeled_deviation);
    }
    out << ")\n";
    for (const auto &note : r.notes) {
        out << "      " << note << '\n';
    }
}

} // namespace

OutputFormat parse_format(std::string_view text) {
    if (text == "json") {
        return OutputFormat::Json;
    }
    if (text == "csv") {
        return OutputFormat::Csv;
    }
    if (text == "text") {
        return OutputFormat::Text;
    }
    throw ParseError("unknown format '" + std::string(text) +
                     "' (expected json, csv or text)");
}

CoefficientSet parse_coefficients(std::string_view text) {
    std::vector<double> values;
    std::size_t start = 0;
    while (start <= text.size()) {
        const auto comma = text.find(',', start);
        const auto end = comma == std::string_view::npos ? text.size() : comma;
        values.push_back(parse_double(text.substr(start, end - start)));
        if (comma == std::string_view::npos) {
            break;
        }
        start = comma + 1;
    }
    if (values.size() != 8) {
        throw ParseError("--coeffs takes 8 reals (re,im for alpha..delta), got " +
                         std::to_string(values.size()));
    }
    return CoefficientSet::from_values({values[0], values[1]}, {values[2], values[3]},
                                       {values[4], values[5]}, {values[6], values[7]});
}

std::pair<int, int> parse_n_range(std::string_view text) {
    const auto dots = text.find("..");
    if (dots == std::string_view::npos) {
        throw ParseError("range '" + std::string(text) + "' must look like 1..8");
    }
    const int lo = parse_int(text.substr(0, dots));
    const int hi = parse_int(text.substr(dots + 2));
    if (lo < 1 || hi < lo) {
        throw ParseError("range '" + std::string(text) + "' needs 1 <= lo <= hi");
    }
    return {lo, hi};
}

int cmd_run(const RunConfig &config, std::ostream &out, std::ostream &err) {
    if (config.trials < 1) {
        err << "error: --trials must be at least 1\n";
        return kInvalidInput;
    }
    if (config.forced_outcome && config.trials > 1 && !config.repeat_forced) {
        err << "error: --force-outcome with --trials > 1 replays one branch; "
               "pass --repeat-forced to confirm\n";
        return kInvalidInput;
    }
    RunOptions options;
    options.variant = config.variant;
    options.channel =
        ChannelSpec::two_bell_pairs(config.channel.first, config.channel.second);

    const auto results = run_trials(config, options);
    for (const auto &r : results) {
        if (!r.error) {
            continue;
        }
        try {
            std::rethrow_exception(r.error);
        } catch (const ZeroProbabilityOutcome &e) {
            err << "error: " << e.what() << '\n';
            return kImpossibleOutcome;
        } catch (const InvalidCoefficients &e) {
            err << "error: " << e.what() << '\n';
            return kInvalidInput;
        } catch (const FactorizationError &e) {
            err << "error: " << e.what() << '\n';
            return kVerificationFailure;
        } catch (const std::exception &e) {
            err << "error: " << e.what() << '\n';
            return kVerificationFailure;
        }
    }

    bool all_pass = true;
    switch (config.format) {
    case OutputFormat::Json: {
        Json arr = Json::array();
        for (const auto &r : results) {
            arr.push_back(to_json(*r.transcript));
        }
        out << arr.dump(2) << '\n';
        break;
    }
    case OutputFormat::Csv:
        write_csv_header(out);
        for (const auto &r : results) {
            write_csv_row(out, *r.transcript);
        }
        break;
    case OutputFormat::Text:
        for (const auto &r : results) {
            write_text_row(out, *r.transcript);
        }
        break;
    }
    std::size_t failures = 0;
    for (const auto &r : results) {
        if (!passes(*r.transcript)) {
            ++failures;
        }
    }
    all_pass = failures == 0;
    if (config.format == OutputFormat::Text) {
        out << results.size() - failures << "/" << results.size()
            << " trials reached fidelity 1\n";
    }

    if (config.dump_state) {
        Json dump = Json::array();
        for (const auto &r : results) {
            Json entry;
            entry["trial"] = *r.transcript->trial;
            entry["seed"] = *r.transcript->seed;
            entry["state"] = to_json(*r.transcript->output_state);
            dump.push_back(std::move(entry));
        }
        std::ofstream file(*config.dump_state);
        if (!file) {
            err << "error: cannot write " << *config.dump_state << '\n';
            return kInvalidInput;
        }
        file << dump.dump(2) << '\n';
    }
    if (!all_pass) {
        err << failures << " trial(s) fell below fidelity 1 - 1e-10\n";
        return kVerificationFailure;
    }
    return kSuccess;
}

int cmd_verify(const VerifyConfig &config, std::ostream &out, std::ostream &) {
    CorrectionTable table = decomposition_correction_table();
    if (config.corrupt_branch) {
        table = corrupt_branch(table, *config.corrupt_branch);
    }
    std::optional<CorrectionTable> override_table;
    if (config.corrupt_branch) {
        override_table = table;
    }

    std::vector<IdentityReport> readings;
    bool folding_ok = true;
    for (FoldingReading r : kFoldingReadings) {
        readings.push_back(check_folding_identity(r, config.seed));
        folding_ok = folding_ok && readings.back().verdict == expected_verdict(r);
    }

    const auto batch = verify_batch(config);
    std::vector<IdentityReport> decomposition;
    std::vector<IdentityReport> exhaustive;
    for (const auto &c : batch) {
        decomposition.push_back(check_branch_decomposition(c, table));
        exhaustive.push_back(exhaustive_outcome_oracle(c, override_table));
    }
    const auto branches = merge_reports("bell-branch-decomposition", decomposition);
    const auto oracle = merge_reports("exhaustive-outcomes", exhaustive);
    const bool all_ok = folding_ok && branches.holds && oracle.holds;

    if (config.format == OutputFormat::Json) {
        Json folding;
        folding["identity"] = "folding-stage";
        folding["holds"] = folding_ok;
        folding["verdict"] = folding_ok ? "as-expected" : "unexpected";
        Json rs = Json::array();
        for (std::size_t i = 0; i < readings.size(); ++i) {
            Json j = to_json(readings[i]);
            j["expected_verdict"] = expected_verdict(kFoldingReadings[i]);
            rs.push_back(std::move(j));
        }
        folding["readings"] = std::move(rs);
        Json arr = Json::array({folding, to_json(branches), to_json(oracle)});
        out << arr.dump(2) << '\n';
    } else {
        for (std::size_t i = 0; i < readings.size(); ++i) {
            print_report_line(out, readings[i].verdict == expected_verdict(kFoldingReadings[i]),
                              readings[i]);
        }
        print_report_line(out, branches.holds, branches);
        print_report_line(out, oracle.holds, oracle);
        out << (all_ok ? "all identities verified\n" : "verification FAILED\n");
    }
    return all_ok ? kSuccess : kVerificationFailure;
}

int cmd_resources(const ResourcesConfig &config, std::ostream &out,
                  std::ostream &) {
    const std::vector<ResourceReport> reports{
        audit(Scheme::ZhaoCluster, config.variant),
        audit(Scheme::TwoBellPairs, config.variant)};
    switch (config.format) {
    case OutputFormat::Json: {
        Json j;
        Json schemes = Json::array();
        for (const auto &r : reports) {
            schemes.push_back(to_json(r));
        }
        j["schemes"] = std::move(schemes);
        Json table = Json::array();
        for (int n = config.n_lo; n <= config.n_hi; ++n) {
            table.push_back({{"n_unknown", n},
                             {"min_bell_pairs", min_bell_pairs(n)},
                             {"halved_log_formula", halved_log_formula(n)}});
        }
        j["min_bell_pairs"] = std::move(table);
        out << j.dump(2) << '\n';
        break;
    }
    case OutputFormat::Csv: {
        out << "scheme,channel_qubits,bell_pairs,classical_bits,sender_cnot,"
               "sender_swap,receiver_cnot,receiver_swap,min_bell_pairs\n";
        auto count = [](const std::map<std::string, int> &m, const char *k) {
            auto it = m.find(k);
            return it == m.end() ? 0 : it->second;
        };
        for (const auto &r : reports) {
            out << r.scheme_name << ',' << r.channel_qubits << ',' << r.bell_pairs
                << ',' << (r.classical_bits ? std::to_string(*r.classical_bits) : "")
                << ',' << count(r.sender_gates, "CNOT") << ','
                << count(r.sender_gates, "SWAP") << ','
                << count(r.receiver_gates, "CNOT") << ','
                << count(r.receiver_gates, "SWAP") << ','
                << r.min_bell_pairs_required << '\n';
        }
        out << '\n' << "n_unknown,min_bell_pairs,halved_log_formula\n";
        for (int n = config.n_lo; n <= config.n_hi; ++n) {
            out << n << ',' << min_bell_pairs(n) << ','
                << fmt_double(halved_log_formula(n)) << '\n';
        }
        break;
    }
    case OutputFormat::Text:
        out << render_comparison_table(reports) << '\n'
            << render_min_pairs_table(config.n_lo, config.n_hi);
        break;
    }
    return kSuccess;
}

int run_main(int argc, const char *const *argv, std::ostream &out,
             std::ostream &err) {
    CLI::App app{"Teleport the four-coefficient 8-qubit state over two Bell "
                 "pairs, verify the identities behind it, and report its "
                 "resource cost.",
                 "qtele"};
    app.require_subcommand(1);

    std::uint64_t seed = 1;
    std::string format;
    std::string variant = "two-cnot";
    std::string channel = "phi+:phi+";
    app.add_option("--seed", seed, "base seed; trial i uses seed + i");
    app.add_option("--format", format, "json, csv or text");
    app.add_option("--variant", variant, "two-cnot or paper-literal");
    app.add_option("--channel", channel, "Bell pair labels, e.g. phi+:phi+");

    auto *run = app.add_subcommand("run", "simulate teleportation runs");
    run->fallthrough();
    std::string coeffs;
    bool random = false;
    std::size_t trials = 1;
    std::string force;
    bool repeat_forced = false;
    std::string dump_state;
    unsigned threads = 1;
    auto *coeffs_opt =
        run->add_option("--coeffs", coeffs, "8 reals: re,im of alpha..delta");
    auto *random_opt =
        run->add_flag("--random", random, "fresh random coefficients per trial");
    coeffs_opt->excludes(random_opt);
    run->add_option("--trials", trials, "number of trials");
    run->add_option("--force-outcome", force, "force the outcome, e.g. phi+:psi-");
    run->add_flag("--repeat-forced", repeat_forced,
                  "allow a forced outcome with several trials");
    run->add_option("--dump-state", dump_state,
                    "write each rebuilt 8-qubit state to this JSON file");
    run->add_option("--threads", threads, "worker threads");

    auto *verify = app.add_subcommand("verify", "check the algebraic identities");
    verify->fallthrough();
    bool verify_json = false;
    std::size_t corrupt = 0;
    std::size_t batch = 100;
    verify->add_flag("--json", verify_json, "same as --format json");
    auto *corrupt_opt = verify->add_option(
        "--corrupt-branch", corrupt, "mutation hook: corrupt one table entry");
    verify->add_option("--batch", batch, "random coefficient sets per check");

    auto *resources = app.add_subcommand("resources", "compare channel resources");
    resources->fallthrough();
    std::string n_range = "1..8";
    resources->add_option("--n-range", n_range, "range of n, e.g. 1..8");
    bool report = false;
    resources->add_flag("--report", report, "aligned plain-text tables");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        out << app.help();
        return kSuccess;
    } catch (const CLI::CallForAllHelp &e) {
        out << app.help("", CLI::AppFormatMode::All);
        return kSuccess;
    } catch (const CLI::ParseError &e) {
        err << "error: " << e.what() << '\n';
        return kInvalidInput;
    }

    try {
        const auto variant_v = parse_compression_variant(variant);
        const auto channel_spec = parse_channel(channel);
        if (channel_spec.kind() != ChannelKind::TwoBellPairs) {
            (void)build_channel(channel_spec);
            throw ParseError("channel '" + channel_spec.name() +
                             "' is not a pair of Bell states; run needs four "
                             "channel qubits A1, B1, A2, B2");
        }
        const BellOutcome channel_v{channel_spec.first(), channel_spec.second()};
        if (run->parsed()) {
            RunConfig config;
            if (!coeffs.empty()) {
                config.coefficients = parse_coefficients(coeffs);
            }
            config.seed = seed;
            config.trials = trials;
            if (!force.empty()) {
                config.forced_outcome = parse_bell_outcome(force);
            }
            config.repeat_forced = repeat_forced;
            config.variant = variant_v;
            config.channel = channel_v;
            config.format = format.empty() ? OutputFormat::Json : parse_format(format);
            if (!dump_state.empty()) {
                config.dump_state = dump_state;
            }
            config.threads = threads;
            return cmd_run(config, out, err);
        }
        if (verify->parsed()) {
            VerifyConfig config;
            config.seed = seed;
            config.batch = batch;
            config.format = verify_json ? OutputFormat::Json
                            : format.empty() ? OutputFormat::Text
                                             : parse_format(format);
            if (corrupt_opt->count() > 0) {
                if (corrupt >= 16) {
                    throw ParseError("--corrupt-branch takes 0..15");
                }
                config.corrupt_branch = corrupt;
            }
            return cmd_verify(config, out, err);
        }
        ResourcesConfig config;
        std::tie(config.n_lo, config.n_hi) = parse_n_range(n_range);
        config.variant = variant_v;
        config.format = report || format.empty() ? OutputFormat::Text
                                                 : parse_format(format);
        return cmd_resources(config, out, err);
    } catch (const ParseError &e) {
        err << "error: " << e.what() << '\n';
        return kInvalidInput;
    } catch (const InvalidCoefficients &e) {
        err << "error: " << e.what() << '\n';
        return kInvalidInput;
    } catch (const ConstructibilityError &e) {
        err << "error: " << e.what() << '\n';
        return kInvalidInput;
    }
}

} // namespace qtele::cli
