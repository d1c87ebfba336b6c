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


#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "qtele/cli.hpp"
#include "qtele/errors.hpp"
#include "qtele/serialize.hpp"

namespace qtele {
namespace {

struct Invocation {
    int code;
    std::string out;
    std::string err;
};

Invocation invoke(std::vector<std::string> args) {
    args.insert(args.begin(), "qtele");
    std::vector<const char *> argv;
    for (const auto &a : args) {
        argv.push_back(a.c_str());
    }
    std::ostringstream out;
    std::ostringstream err;
    const int code = cli::run_main(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

TEST(CliRun, ForcedTrivialRun) {
    const auto r = invoke({"run", "--coeffs", "1,0,0,0,0,0,0,0", "--force-outcome", "phi+:phi+"});
    ASSERT_EQ(r.code, cli::kSuccess) << r.err;
    const auto j = Json::parse(r.out);
    ASSERT_EQ(j.size(), 1U);
    EXPECT_DOUBLE_EQ(j[0]["fidelity_8q"].get<double>(), 1.0);
    EXPECT_TRUE(j[0]["forced"].get<bool>());
    EXPECT_EQ(j[0]["outcome"], Json::parse(R"(["phi+","phi+"])"));
}

TEST(CliRun, ThousandRandomTrials) {
    const auto r = invoke({"run", "--random", "--seed", "7", "--trials", "1000"});
    ASSERT_EQ(r.code, cli::kSuccess) << r.err;
    const auto j = Json::parse(r.out);
    ASSERT_EQ(j.size(), 1000U);
    for (const auto &t : j) {
        EXPECT_GE(t["fidelity_8q"].get<double>(), 1.0 - 1e-10);
        EXPECT_EQ(t["classical_bits_sent"].get<int>(), 4);
    }
}

TEST(CliRun, InvalidInputs) {
    EXPECT_EQ(invoke({"run", "--coeffs", "1,0,0,0,0,0,0,1"}).code, cli::kInvalidInput);
    EXPECT_EQ(invoke({"run", "--coeffs", "1,0,0"}).code, cli::kInvalidInput);
    EXPECT_EQ(invoke({"run", "--coeffs", "1,0,0,0,0,0,0,0", "--random"}).code,
              cli::kInvalidInput);
    EXPECT_EQ(invoke({"run", "--force-outcome", "phi+"}).code, cli::kInvalidInput);
    EXPECT_EQ(invoke({"--format", "xml", "run"}).code, cli::kInvalidInput);
    EXPECT_EQ(invoke({"--variant", "three-cnot", "run"}).code, cli::kInvalidInput);
    EXPECT_EQ(invoke({"frobnicate"}).code, cli::kInvalidInput);
    EXPECT_EQ(invoke({}).code, cli::kInvalidInput);
}

TEST(CliRun, HelpExitsZero) {
    const auto r = invoke({"--help"});
    EXPECT_EQ(r.code, cli::kSuccess);
    EXPECT_NE(r.out.find("run"), std::string::npos);
}

TEST(CliRun, ForcedOutcomeNeedsExplicitRepeat) {
    EXPECT_EQ(invoke({"run", "--random", "--trials", "3", "--force-outcome", "psi+:phi-"}).code,
              cli::kInvalidInput);
    const auto r = invoke({"run", "--random", "--trials", "3", "--force-outcome", "psi+:phi-",
                           "--repeat-forced"});
    ASSERT_EQ(r.code, cli::kSuccess) << r.err;
    for (const auto &t : Json::parse(r.out)) {
        EXPECT_EQ(t["outcome"], Json::parse(R"(["psi+","phi-"])"));
    }
}

TEST(CliRun, LiteralVariantIsAVerificationFailure) {
    EXPECT_EQ(invoke({"--variant", "paper-literal", "run", "--random"}).code,
              cli::kVerificationFailure);
}

TEST(CliRun, OtherChannels) {
    const auto r = invoke({"--channel", "psi-:phi-", "run", "--random", "--trials", "20"});
    ASSERT_EQ(r.code, cli::kSuccess) << r.err;
    for (const auto &t : Json::parse(r.out)) {
        EXPECT_EQ(t["channel"].get<std::string>(), "psi-:phi-");
        EXPECT_GE(t["fidelity_8q"].get<double>(), 1.0 - 1e-10);
    }
}

TEST(CliRun, UnpreparableChannels) {
    const auto weighted = invoke({"--channel", "zhao-weighted", "run", "--random"});
    EXPECT_EQ(weighted.code, cli::kInvalidInput);
    EXPECT_NE(weighted.err.find("unknown"), std::string::npos);
    EXPECT_EQ(invoke({"--channel", "zhao-cluster", "run", "--random"}).code, cli::kInvalidInput);
}

TEST(CliRun, DeterministicAcrossInvocationsAndThreads) {
    const std::vector<std::string> base{"run", "--random", "--seed", "7", "--trials", "100"};
    const auto a = invoke(base);
    const auto b = invoke(base);
    auto threaded = base;
    threaded.insert(threaded.end(), {"--threads", "4"});
    const auto c = invoke(threaded);
    EXPECT_EQ(a.out, b.out);
    EXPECT_EQ(a.out, c.out);
}

TEST(CliRun, ReplayFromSeedAndTrial) {
    // each transcript records its own derived seed next to its trial index
    const auto batch = Json::parse(invoke({"run", "--random", "--seed", "40", "--trials", "6"}).out);
    for (const auto &t : batch) {
        const auto seed = t["seed"].get<std::uint64_t>();
        const auto trial = t["trial"].get<std::uint64_t>();
        EXPECT_EQ(seed, cli::trial_seed(40, trial));
        auto single = Json::parse(
            invoke({"run", "--random", "--seed", std::to_string(seed), "--trials", "1"}).out)[0];
        single["trial"] = trial;
        EXPECT_EQ(single.dump(), t.dump());
    }
}

TEST(CliRun, CsvHeaderAndRows) {
    const auto r = invoke({"--format", "csv", "run", "--random", "--trials", "3"});
    ASSERT_EQ(r.code, cli::kSuccess);
    std::istringstream in(r.out);
    std::string header;
    std::getline(in, header);
    EXPECT_EQ(header, "trial,seed,alpha_re,alpha_im,beta_re,beta_im,gamma_re,gamma_im,"
                      "delta_re,delta_im,outcome_first,outcome_second,correction_b1,"
                      "correction_b2,classical_bits_sent,outcome_probability,fidelity_2q,"
                      "fidelity_8q,variant,channel");
    int rows = 0;
    for (std::string line; std::getline(in, line);) {
        ++rows;
    }
    EXPECT_EQ(rows, 3);
}

TEST(CliRun, DumpState) {
    const auto path = (std::filesystem::temp_directory_path() / "qtele_dump_test.json").string();
    const auto r = invoke({"run", "--random", "--trials", "2", "--dump-state", path});
    ASSERT_EQ(r.code, cli::kSuccess) << r.err;
    std::ifstream in(path);
    const auto j = Json::parse(in);
    ASSERT_EQ(j.size(), 2U);
    const auto s = state_from_json(j[1]["state"]);
    EXPECT_EQ(s.labels(), output_register());
    EXPECT_NEAR(s.norm_squared(), 1.0, 1e-12);
    std::filesystem::remove(path);
}

TEST(Serialization, TranscriptRoundTrip) {
    Rng rng(81);
    for (int k = 0; k < 20; ++k) {
        auto t = run_end_to_end(CoefficientSet::random(rng), TeleportMode::sampled(rng));
        t.seed = 1234;
        t.trial = static_cast<std::uint64_t>(k);
        const auto j = to_json(t);
        const auto back = transcript_from_json(Json::parse(j.dump()));
        EXPECT_EQ(to_json(back).dump(), j.dump());
        EXPECT_EQ(back.outcome, t.outcome);
        EXPECT_EQ(back.coefficients.values(), t.coefficients.values());
    }
}

TEST(Serialization, StateRoundTripIsExact) {
    Rng rng(82);
    const auto t = run_end_to_end(CoefficientSet::random(rng), TeleportMode::sampled(rng));
    const auto back = state_from_json(Json::parse(to_json(*t.output_state).dump()));
    EXPECT_EQ(back, *t.output_state);
    EXPECT_THROW(state_from_json(Json::parse(R"({"labels":["a"]})")), ParseError);
}

TEST(CliVerify, DefaultPasses) {
    const auto r = invoke({"verify", "--json", "--batch", "10"});
    ASSERT_EQ(r.code, cli::kSuccess) << r.err;
    const auto j = Json::parse(r.out);
    ASSERT_EQ(j.size(), 3U);
    EXPECT_EQ(j[0]["identity"], "folding-stage");
    for (const auto &rep : j) {
        EXPECT_TRUE(rep["holds"].get<bool>()) << rep["identity"];
    }
}

TEST(CliVerify, CorruptionFails) {
    EXPECT_EQ(invoke({"verify", "--corrupt-branch", "3", "--batch", "5"}).code,
              cli::kVerificationFailure);
    EXPECT_EQ(invoke({"verify", "--corrupt-branch", "16"}).code, cli::kInvalidInput);
}

TEST(CliVerify, TextMentionsEveryReading) {
    const auto r = invoke({"verify", "--batch", "5"});
    ASSERT_EQ(r.code, cli::kSuccess);
    for (const char *word : {"two-cnot", "rightmost-first", "left-to-right",
                             "holds-up-to-relabeling", "fails"}) {
        EXPECT_NE(r.out.find(word), std::string::npos) << word;
    }
}

TEST(CliResources, DefaultText) {
    const auto r = invoke({"resources"});
    ASSERT_EQ(r.code, cli::kSuccess);
    EXPECT_NE(r.out.find("zhao-cluster"), std::string::npos);
    EXPECT_NE(r.out.find("two-bell-pairs"), std::string::npos);
    EXPECT_EQ(invoke({"resources", "--report"}).out, r.out);
}

TEST(CliResources, CsvRange) {
    const auto r = invoke({"--format", "csv", "resources", "--n-range", "1..8"});
    ASSERT_EQ(r.code, cli::kSuccess);
    const auto pos = r.out.find("n_unknown,min_bell_pairs,halved_log_formula\n");
    ASSERT_NE(pos, std::string::npos);
    std::istringstream in(r.out.substr(pos));
    std::string line;
    std::getline(in, line);
    std::vector<std::string> column;
    while (std::getline(in, line)) {
        const auto a = line.find(',');
        const auto b = line.find(',', a + 1);
        column.push_back(line.substr(a + 1, b - a - 1));
    }
    EXPECT_EQ(column, (std::vector<std::string>{"0", "1", "2", "2", "3", "3", "3", "3"}));
}

TEST(CliResources, Json) {
    const auto r = invoke({"--format", "json", "resources", "--n-range", "2..4"});
    ASSERT_EQ(r.code, cli::kSuccess);
    EXPECT_TRUE(Json::accept(r.out));
    EXPECT_EQ(invoke({"resources", "--n-range", "0..3"}).code, cli::kInvalidInput);
    EXPECT_EQ(invoke({"resources", "--n-range", "5..2"}).code, cli::kInvalidInput);
}

} // namespace
} // namespace qtele
