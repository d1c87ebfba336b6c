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

// Acceptance checks. Prints one PASS/FAIL line per criterion and exits
// nonzero if any fail. argv[1] is the path of the qtele executable.

#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <iostream>
#include <sstream>
#include <string>
#include <type_traits>

#include "qtele/errors.hpp"
#include "qtele/protocol.hpp"
#include "qtele/resources.hpp"
#include "qtele/verify.hpp"
#include "test_support.hpp"

namespace {

using namespace qtele;

struct Outcome {
    bool pass;
    std::string detail;
};

std::string fmt(double v) {
    std::ostringstream os;
    os.precision(3);
    os << v;
    return os.str();
}

Outcome end_to_end() {
    const auto start = std::chrono::steady_clock::now();
    double worst = 1.0;
    for (std::uint64_t trial = 0; trial < 1000; ++trial) {
        Rng rng(1000 + trial);
        const auto c = CoefficientSet::random(rng);
        worst = std::min(worst, run_end_to_end(c, TeleportMode::sampled(rng)).fidelity_8q);
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return {worst >= 1.0 - 1e-10 && secs < 10.0,
            "max 1 - fidelity_8q " + fmt(1.0 - worst) + ", " + fmt(secs) + " s"};
}

Outcome exhaustive_branches() {
    double worst_fid = 0.0;
    double worst_prob = 0.0;
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        Rng rng(seed);
        const auto c = CoefficientSet::random(rng);
        const auto psi = two_qubit_state(c);
        const auto target = relabeled(psi, {{"a", "B1"}, {"c", "B2"}});
        for (std::size_t k = 0; k < 16; ++k) {
            const auto r = teleport_two_qubit(psi, TeleportMode::forced(BellOutcome::from_index(k)));
            worst_fid = std::max(worst_fid, std::abs(1.0 - fidelity(r.bob, target)));
            worst_prob = std::max(worst_prob, std::abs(r.joint_probability() - 1.0 / 16.0));
        }
    }
    return {worst_fid <= 1e-10 && worst_prob <= 1e-12,
            "max |1-F| " + fmt(worst_fid) + ", max |p-1/16| " + fmt(worst_prob)};
}

Outcome decomposition() {
    double worst = 0.0;
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        Rng rng(seed);
        worst = std::max(worst, check_branch_decomposition(CoefficientSet::random(rng)).max_deviation);
    }
    const auto uniform = CoefficientSet::from_values(0.5, 0.5, 0.5, 0.5);
    double weakest = 1e300;
    for (std::size_t k = 0; k < 16; ++k) {
        weakest = std::min(weakest,
                           check_branch_decomposition(uniform, corrupt_branch(decomposition_correction_table(), k))
                               .max_deviation);
    }
    return {worst < 1e-12 && weakest > 0.1,
            "max deviation " + fmt(worst) + ", smallest mutated deviation " + fmt(weakest)};
}

Outcome folding_stage() {
    const auto two = check_folding_identity(FoldingReading::TwoCnot);
    const auto rf = check_folding_identity(FoldingReading::RightmostFirst);
    const auto lr = check_folding_identity(FoldingReading::LeftToRight);
    const bool pass = two.verdict == "holds" && two.max_deviation < 1e-12 &&
                      rf.verdict == "fails" && lr.verdict == "holds-up-to-relabeling" &&
                      lr.relabeled_deviation && *lr.relabeled_deviation < 1e-12;
    return {pass, "two-cnot " + two.verdict + " (" + fmt(two.max_deviation) + "), rightmost-first " +
                      rf.verdict + ", left-to-right " + lr.verdict};
}

Outcome stage_one() {
    const std::array<std::string, 4> abcd{"0000", "0010", "1101", "1111"};
    double worst = 0.0;
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        Rng rng(seed);
        const auto c = CoefficientSet::random(rng);
        const auto out = apply_circuit(encode_input(c), fanout_stage());
        std::vector<Amplitude> expected(256);
        for (std::size_t k = 0; k < 4; ++k) {
            expected[testing::place_bits(abcd[k] + "0000")] = c.values()[k];
        }
        worst = std::max(worst, testing::max_abs_diff(out.amplitudes(), expected));
    }
    return {worst <= 1e-12, "max amplitude deviation " + fmt(worst)};
}

Outcome resources() {
    const auto two = audit(Scheme::TwoBellPairs);
    const auto zhao = audit(Scheme::ZhaoCluster);
    const auto text = render_comparison_table({zhao, two});
    const bool pass = two.bell_pairs == 2 && two.channel_qubits == 4 &&
                      two.classical_bits == 4 && zhao.channel_qubits == 6 &&
                      min_bell_pairs(4) == 2 && min_bell_pairs(2) == 1 &&
                      text.find("log2(ceil(n/2)) gives 1") != std::string::npos;
    return {pass, "two pairs {" + std::to_string(two.bell_pairs) + " pairs, " +
                      std::to_string(two.channel_qubits) + " qubits, " +
                      std::to_string(two.classical_bits.value_or(-1)) + " bits}, cluster " +
                      std::to_string(zhao.channel_qubits) + " qubits"};
}

// build_channel and ChannelSpec accept nothing that carries coefficients.
static_assert(std::is_invocable_v<decltype(&build_channel), const ChannelSpec &>);
static_assert(!std::is_invocable_v<decltype(&build_channel), const ChannelSpec &,
                                   const CoefficientSet &>);
static_assert(!std::is_constructible_v<ChannelSpec, CoefficientSet>);

Outcome constructibility() {
    try {
        (void)build_channel(ChannelSpec::zhao_coefficient_weighted());
    } catch (const ConstructibilityError &e) {
        return {true, std::string("ConstructibilityError: ") + e.what()};
    }
    return {false, "coefficient-dependent channel was built"};
}

Outcome statistics() {
    constexpr int kRuns = 16000;
    Rng rng(2024);
    const auto c = CoefficientSet::random(rng);
    std::array<int, 16> counts{};
    for (int i = 0; i < kRuns; ++i) {
        ++counts[run_end_to_end(c, TeleportMode::sampled(rng)).outcome.index()];
    }
    const double p = 1.0 / 16.0;
    const double sigma = std::sqrt(kRuns * p * (1.0 - p));
    double worst = 0.0;
    for (int n : counts) {
        worst = std::max(worst, std::abs(n - kRuns * p) / sigma);
    }
    return {worst <= 4.0, "largest deviation " + fmt(worst) + " sigma"};
}

std::pair<int, std::string> capture(const std::string &command) {
    std::string out;
    FILE *pipe = popen(command.c_str(), "r");
    if (pipe == nullptr) {
        return {-1, out};
    }
    std::array<char, 65536> buf{};
    std::size_t n = 0;
    while ((n = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) {
        out.append(buf.data(), n);
    }
    return {pclose(pipe), out};
}

Outcome determinism(const std::string &exe) {
    const std::string cmd = "'" + exe + "' run --random --seed 7 --trials 100 --format json";
    const auto a = capture(cmd);
    const auto b = capture(cmd);
    const bool pass = a.first == 0 && b.first == 0 && !a.second.empty() && a.second == b.second;
    return {pass, std::to_string(a.second.size()) + " bytes, " +
                      (a.second == b.second ? "identical" : "different")};
}

} // namespace

int main(int argc, char **argv) {
    if (argc < 2) {
        std::cerr << "usage: acceptance <path-to-qtele>\n";
        return 2;
    }
    struct Criterion {
        const char *name;
        Outcome result;
    };
    const Criterion results[] = {
        {"1 end-to-end fidelity, 1000 sampled runs", end_to_end()},
        {"2 exhaustive branches, 100 sets x 16 outcomes", exhaustive_branches()},
        {"3 Bell-branch decomposition and mutation", decomposition()},
        {"4 folding-stage readings", folding_stage()},
        {"5 fan-out stage intermediate", stage_one()},
        {"6 resource audit", resources()},
        {"7 channel constructibility", constructibility()},
        {"8 outcome statistics, 16000 runs", statistics()},
        {"9 CLI determinism", determinism(argv[1])},
    };
    int failed = 0;
    for (const auto &c : results) {
        std::cout << (c.result.pass ? "PASS" : "FAIL") << "  AC" << c.name << ": "
                  << c.result.detail << '\n';
        failed += c.result.pass ? 0 : 1;
    }
    std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " failed")
              << '\n';
    return failed == 0 ? 0 : 1;
}
