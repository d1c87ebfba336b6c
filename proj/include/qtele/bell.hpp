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
 * Bell basis states, projective Bell measurement, and the table mapping a
 * two-pair Bell outcome to the receiver's Pauli correction.
 */

#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <variant>

#include "qtele/kernels.hpp"
#include "qtele/statevector.hpp"

namespace qtele {

/// Serialization order is fixed: phi+, phi-, psi+, psi-.
enum class BellLabel : std::uint8_t {
    PhiPlus = 0,
    PhiMinus = 1,
    PsiPlus = 2,
    PsiMinus = 3,
};

inline constexpr std::array<BellLabel, 4> kBellLabels{
    BellLabel::PhiPlus, BellLabel::PhiMinus, BellLabel::PsiPlus,
    BellLabel::PsiMinus};

/// "phi+", "phi-", "psi+", "psi-".
std::string_view to_string(BellLabel label) noexcept;
BellLabel parse_bell_label(std::string_view text);

/// Result of measuring (a, A1) and then (c, A2).
struct BellOutcome {
    BellLabel first = BellLabel::PhiPlus;
    BellLabel second = BellLabel::PhiPlus;

    /// 4 * first + second, in [0, 16).
    [[nodiscard]] constexpr std::size_t index() const noexcept {
        return 4 * static_cast<std::size_t>(first) +
               static_cast<std::size_t>(second);
    }
    static constexpr BellOutcome from_index(std::size_t k) noexcept {
        return {static_cast<BellLabel>((k >> 2) & 3U),
                static_cast<BellLabel>(k & 3U)};
    }

    friend bool operator==(const BellOutcome &, const BellOutcome &) = default;
};

/// "phi+:psi-".
std::string to_string(BellOutcome outcome);
BellOutcome parse_bell_outcome(std::string_view text);

/**
 * Receiver-side Pauli operator. The numeric value packs (x, z) bits as
 * 2*x + z, so products up to phase are XOR.
 */
enum class Pauli : std::uint8_t { I = 0, Z = 1, X = 2, iY = 3 };

/// "I", "Z", "X", "iY".
std::string_view to_string(Pauli p) noexcept;
Pauli parse_pauli(std::string_view text);

/// iY is stored as the matrix i*Y = [[0, 1], [-1, 0]].
kernels::Mat2 pauli_matrix(Pauli p);

struct PauliCorrection {
    Pauli on_b1 = Pauli::I;
    Pauli on_b2 = Pauli::I;

    friend bool operator==(const PauliCorrection &,
                           const PauliCorrection &) = default;
};

/// Indexed by BellOutcome::index().
using CorrectionTable = std::array<PauliCorrection, 16>;

/// Table for the phi+ (x) phi+ channel: phi+ -> I, phi- -> Z, psi+ -> X,
/// psi- -> iY, first label onto B1 and second onto B2.
const CorrectionTable &standard_correction_table() noexcept;

PauliCorrection correction_for(BellOutcome outcome);

/**
 * Table for a channel made of Bell pairs `first` on (A1, B1) and `second`
 * on (A2, B2). Each such pair is (I (x) P) phi+ for a Pauli P on Bob's
 * side, so the standard correction is composed with P (XOR of the packed
 * bits, phase dropped).
 */
CorrectionTable correction_table_for_channel(BellLabel first, BellLabel second);

/// Bell state on (q1, q2). Throws LabelError when q1 == q2.
StateVector bell_state(BellLabel label, const QubitLabel &q1,
                       const QubitLabel &q2);

using Rng = std::mt19937_64;

/// Uniform double in [0, 1) from the top 53 bits of one draw.
double uniform01(Rng &rng) noexcept;

/// Born-rule sampling from a caller-owned generator, or a forced branch.
class MeasureMode {
  public:
    static MeasureMode sampled(Rng &rng) { return MeasureMode(std::ref(rng)); }
    static MeasureMode forced(BellLabel label) { return MeasureMode(label); }

    [[nodiscard]] bool is_forced() const noexcept {
        return std::holds_alternative<BellLabel>(mode_);
    }
    [[nodiscard]] BellLabel forced_label() const {
        return std::get<BellLabel>(mode_);
    }
    [[nodiscard]] Rng &rng() const {
        return std::get<std::reference_wrapper<Rng>>(mode_).get();
    }

  private:
    explicit MeasureMode(std::variant<std::reference_wrapper<Rng>, BellLabel> m)
        : mode_(m) {}
    std::variant<std::reference_wrapper<Rng>, BellLabel> mode_;
};

/// Outcome probability below which a forced branch is rejected.
inline constexpr double kZeroProbability = 1e-12;

struct BellMeasurement {
    BellLabel label;
    /// Born probability before collapse.
    double probability;
    /// Renormalized post-measurement state with q1, q2 removed; empty when
    /// no qubits remain.
    std::optional<StateVector> collapsed;
};

/// Born probabilities of the four Bell outcomes on (q1, q2).
std::array<double, 4> bell_probabilities(const StateVector &state,
                                         const QubitLabel &q1,
                                         const QubitLabel &q2);

/**
 * Projects (q1, q2) onto a Bell state and removes the pair from the
 * register. Throws ZeroProbabilityOutcome when a forced label has
 * probability <= kZeroProbability.
 */
BellMeasurement bell_measure(const StateVector &state, const QubitLabel &q1,
                             const QubitLabel &q2, const MeasureMode &mode);

StateVector apply_correction(const StateVector &state, PauliCorrection corr,
                             const QubitLabel &b1, const QubitLabel &b2);

} // namespace qtele
