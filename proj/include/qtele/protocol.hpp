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
 * The full pipeline: encode the four-coefficient 8-qubit state, compress it
 * onto (a, c), teleport those two qubits over two Bell pairs, and rebuild
 * the 8-qubit state on Bob's side. Also models the six-qubit cluster
 * channels and whether they can be prepared at all.
 */

#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "qtele/bell.hpp"
#include "qtele/circuit.hpp"
#include "qtele/statevector.hpp"

namespace qtele {

/// Inputs within this distance of unit norm are rescaled; others rejected.
inline constexpr double kAutoNormalizeTolerance = 1e-6;

/// The unknown amplitudes alpha, beta, gamma, delta. Always normalized.
class CoefficientSet {
  public:
    /// Throws InvalidCoefficients for a norm further than
    /// kAutoNormalizeTolerance from 1 (including zero and non-finite).
    static CoefficientSet from_values(Amplitude alpha, Amplitude beta,
                                      Amplitude gamma, Amplitude delta);

    /// Haar-like random draw: eight Gaussian reals, normalized.
    static CoefficientSet random(Rng &rng);

    [[nodiscard]] Amplitude alpha() const noexcept { return values_[0]; }
    [[nodiscard]] Amplitude beta() const noexcept { return values_[1]; }
    [[nodiscard]] Amplitude gamma() const noexcept { return values_[2]; }
    [[nodiscard]] Amplitude delta() const noexcept { return values_[3]; }
    [[nodiscard]] const std::array<Amplitude, 4> &values() const noexcept {
        return values_;
    }

  private:
    explicit CoefficientSet(std::array<Amplitude, 4> v) : values_(v) {}
    std::array<Amplitude, 4> values_;
};

/// Basis strings carrying alpha..delta in the 8-qubit input.
inline constexpr std::array<std::string_view, 4> kInputSupport{
    "00000000", "00100000", "11011111", "11111111"};

/// a..h
Register input_register();
/// A1, B1, A2, B2
Register channel_register();
/// B1, B, B2, D, E, F, G, H: where the rebuilt state lives.
Register output_register();

/// Maps a..h onto output_register() element by element.
std::map<QubitLabel, QubitLabel> input_to_output_labels();

/// alpha|00000000> + beta|00100000> + gamma|11011111> + delta|11111111>.
StateVector encode_input(const CoefficientSet &c);

/// alpha|00> + beta|01> + gamma|10> + delta|11> on (a, c).
StateVector two_qubit_state(const CoefficientSet &c);

enum class CompressionVariant {
    /// CNOT a->b then CNOT a->d after the fan-out stage.
    TwoCnot,
    /// The gate string CNOT_{a->d} CNOT_{a->b} SWAP_{bc} taken as an
    /// operator product: SWAP b,c acts first.
    PaperLiteral,
};

std::string_view to_string(CompressionVariant v) noexcept;
CompressionVariant parse_compression_variant(std::string_view text);

/// CNOT a->e, a->f, a->g, a->h: clears e..h in all four input terms.
Circuit fanout_stage();

/// The variant's second stage on a..h.
Circuit folding_stage(CompressionVariant v);

/// fanout_stage() followed by folding_stage(v), on a..h.
Circuit compression_circuit(CompressionVariant v);

struct Compressed {
    /// Factor on (a, c).
    StateVector psi2;
    /// Factor on (b, d, e, f, g, h); |000000> for a correct compression.
    StateVector residual;
};

/// Throws InputFamilyError unless `state` lives on a..h with support inside
/// kInputSupport.
void require_input_family(const StateVector &state);

/**
 * Applies compression_circuit(v) and splits off (a, c). Throws
 * InputFamilyError for inputs outside the family, FactorizationError when
 * (a, c) does not factor out or the remainder is not |000000>.
 */
Compressed compress(const StateVector &state8, CompressionVariant v);

enum class ChannelKind {
    TwoBellPairs,
    /// Equal-weight cluster on qubits 1..6.
    ZhaoCluster,
    /// Same support, but weighted by the unknown input coefficients.
    ZhaoCoefficientWeighted,
};

/// One ket of a channel written as a sum of basis terms. The weight is a
/// number, or the name of a coefficient the definition depends on.
struct ChannelTerm {
    std::string bits;
    std::variant<Amplitude, std::string> weight;
};

class ChannelSpec {
  public:
    static ChannelSpec two_bell_pairs(BellLabel first, BellLabel second);
    static ChannelSpec zhao_cluster();
    static ChannelSpec zhao_coefficient_weighted();

    [[nodiscard]] ChannelKind kind() const noexcept { return kind_; }
    /// Pair on (A1, B1); meaningful for TwoBellPairs only.
    [[nodiscard]] BellLabel first() const noexcept { return first_; }
    /// Pair on (A2, B2); meaningful for TwoBellPairs only.
    [[nodiscard]] BellLabel second() const noexcept { return second_; }
    /// Basis-term definition for the six-qubit kinds; empty otherwise.
    [[nodiscard]] const std::vector<ChannelTerm> &terms() const noexcept {
        return terms_;
    }
    /// True when any amplitude refers to an unknown coefficient.
    [[nodiscard]] bool parameter_dependence() const noexcept;
    [[nodiscard]] std::size_t num_qubits() const noexcept;
    /// "phi+:phi+", "zhao-cluster" or "zhao-weighted".
    [[nodiscard]] std::string name() const;

  private:
    ChannelSpec(ChannelKind kind, BellLabel first, BellLabel second,
                std::vector<ChannelTerm> terms)
        : kind_(kind), first_(first), second_(second),
          terms_(std::move(terms)) {}

    ChannelKind kind_;
    BellLabel first_;
    BellLabel second_;
    std::vector<ChannelTerm> terms_;
};

/// "phi+:psi-" style text for a two-Bell-pair channel.
ChannelSpec parse_channel(std::string_view text);

/**
 * Prepares the channel state. Takes no coefficients: a definition that
 * needs them throws ConstructibilityError.
 */
StateVector build_channel(const ChannelSpec &spec);

/// Born sampling from a caller-owned generator, or a forced outcome.
class TeleportMode {
  public:
    static TeleportMode sampled(Rng &rng) { return TeleportMode(std::ref(rng)); }
    static TeleportMode forced(BellOutcome o) { return TeleportMode(o); }

    [[nodiscard]] bool is_forced() const noexcept {
        return std::holds_alternative<BellOutcome>(mode_);
    }
    [[nodiscard]] BellOutcome forced_outcome() const {
        return std::get<BellOutcome>(mode_);
    }
    [[nodiscard]] Rng &rng() const {
        return std::get<std::reference_wrapper<Rng>>(mode_).get();
    }

  private:
    explicit TeleportMode(std::variant<std::reference_wrapper<Rng>, BellOutcome> m)
        : mode_(m) {}
    std::variant<std::reference_wrapper<Rng>, BellOutcome> mode_;
};

struct TeleportOptions {
    ChannelSpec channel =
        ChannelSpec::two_bell_pairs(BellLabel::PhiPlus, BellLabel::PhiPlus);
    /// Replaces the channel's correction table (mutation testing).
    std::optional<CorrectionTable> table_override;
};

/// Two Bell measurements, each worth two classical bits.
inline constexpr int kClassicalBitsPerRun = 4;
inline constexpr int kBellPairsPerRun = 2;

struct TeleportResult {
    /// Corrected state on (B1, B2).
    StateVector bob;
    /// Bob's state before the correction was applied.
    StateVector bob_uncorrected;
    BellOutcome outcome;
    PauliCorrection correction;
    double probability_first;
    /// Conditional on the first outcome.
    double probability_second;
    [[nodiscard]] double joint_probability() const noexcept {
        return probability_first * probability_second;
    }
    int classical_bits_sent = kClassicalBitsPerRun;
};

/**
 * Teleports `psi2` on {a, c}. Measures (a, A1) first, then (c, A2), then
 * corrects (B1, B2). Throws ConstructibilityError for channels that cannot
 * be prepared, Error for channels that are not two Bell pairs, and
 * ZeroProbabilityOutcome for impossible forced outcomes.
 */
TeleportResult teleport_two_qubit(const StateVector &psi2,
                                  const TeleportMode &mode,
                                  const TeleportOptions &options = {});

/**
 * Rebuilds the 8-qubit state from Bob's (B1, B2): adjoins |000000> on
 * B, D..H and runs the inverse of compression_circuit(v) with a..h renamed
 * to output_register().
 */
StateVector reconstruct(const StateVector &bob, CompressionVariant v);

struct RunOptions {
    CompressionVariant variant = CompressionVariant::TwoCnot;
    ChannelSpec channel =
        ChannelSpec::two_bell_pairs(BellLabel::PhiPlus, BellLabel::PhiPlus);
    std::optional<CorrectionTable> table_override;
};

struct TeleportTranscript {
    CoefficientSet coefficients;
    BellOutcome outcome;
    PauliCorrection correction;
    int classical_bits_sent = kClassicalBitsPerRun;
    int bell_pairs_used = kBellPairsPerRun;
    double outcome_probability = 0.0;
    double fidelity_2q = 0.0;
    double fidelity_8q = 0.0;
    bool forced = false;
    std::optional<std::uint64_t> seed{};
    std::optional<std::uint64_t> trial{};
    CompressionVariant variant = CompressionVariant::TwoCnot;
    std::string channel{};
    /// Rebuilt state on output_register().
    std::optional<StateVector> output_state{};
};

/// encode -> compress -> teleport -> reconstruct. seed and trial are left
/// for the caller to fill.
TeleportTranscript run_end_to_end(const CoefficientSet &c,
                                  const TeleportMode &mode,
                                  const RunOptions &options = {});

} // namespace qtele
