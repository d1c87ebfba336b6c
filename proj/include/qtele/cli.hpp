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

/**
 * @file
 * Command implementations behind the `qtele` executable: run, verify and
 * resources. They write to caller-supplied streams and return the process
 * exit code, so tests can drive them without spawning a process.
 */

#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <utility>

#include "qtele/bell.hpp"
#include "qtele/protocol.hpp"

namespace qtele::cli {

enum ExitCode : int {
    kSuccess = 0,
    kVerificationFailure = 1,
    kInvalidInput = 2,
    kImpossibleOutcome = 3,
};

enum class OutputFormat { Json, Csv, Text };

OutputFormat parse_format(std::string_view text);

struct RunConfig {
    /// Empty means draw fresh random coefficients per trial.
    std::optional<CoefficientSet> coefficients;
    std::uint64_t seed = 1;
    std::size_t trials = 1;
    std::optional<BellOutcome> forced_outcome;
    /// Allows forced_outcome together with trials > 1.
    bool repeat_forced = false;
    CompressionVariant variant = CompressionVariant::TwoCnot;
    BellOutcome channel{BellLabel::PhiPlus, BellLabel::PhiPlus};
    OutputFormat format = OutputFormat::Json;
    std::optional<std::string> dump_state;
    unsigned threads = 1;
};

struct VerifyConfig {
    std::uint64_t seed = 1;
    /// Random coefficient sets per batch check.
    std::size_t batch = 100;
    OutputFormat format = OutputFormat::Text;
    std::optional<std::size_t> corrupt_branch;
};

struct ResourcesConfig {
    int n_lo = 1;
    int n_hi = 8;
    CompressionVariant variant = CompressionVariant::TwoCnot;
    OutputFormat format = OutputFormat::Text;
};

/// Eight comma-separated reals, (re, im) for alpha..delta. Throws
/// ParseError or InvalidCoefficients.
CoefficientSet parse_coefficients(std::string_view text);

/// "lo..hi" with 1 <= lo <= hi. Throws ParseError.
std::pair<int, int> parse_n_range(std::string_view text);

/// Trial i of a run draws from an Rng seeded with seed + i.
constexpr std::uint64_t trial_seed(std::uint64_t seed, std::size_t trial) {
    return seed + static_cast<std::uint64_t>(trial);
}

int cmd_run(const RunConfig &config, std::ostream &out, std::ostream &err);
int cmd_verify(const VerifyConfig &config, std::ostream &out, std::ostream &err);
int cmd_resources(const ResourcesConfig &config, std::ostream &out,
                  std::ostream &err);

/// Parses argv and dispatches to a command.
int run_main(int argc, const char *const *argv, std::ostream &out,
             std::ostream &err);

} // namespace qtele::cli
