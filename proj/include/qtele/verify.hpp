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
 * Brute-force checks of the algebraic identities the protocol relies on.
 *
 * The Bell-branch expansion is rebuilt term by term from a fixed
 * 16-row table and compared with the directly formed six-qubit state; it
 * never goes through teleport_two_qubit. The folding-stage check evaluates
 * the three ways the gate string can be read and names a verdict for each.
 */

#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qtele/bell.hpp"
#include "qtele/circuit.hpp"
#include "qtele/protocol.hpp"

namespace qtele {

/// An identity holds when its largest deviation is below this.
inline constexpr double kIdentityTolerance = 1e-10;

/// Probability tolerance for the 1/16 branch weights.
inline constexpr double kBranchProbabilityTolerance = 1e-12;

struct BranchDeviation {
    std::string branch;
    double deviation = 0.0;
};

struct IdentityReport {
    std::string identity_name;
    double max_deviation = 0.0;
    bool holds = false;
    /// "holds", "fails" or "holds-up-to-relabeling".
    std::string verdict;
    /// Deviation after relabeling, when a relabeled comparison was made.
    std::optional<double> relabeled_deviation;
    std::vector<BranchDeviation> details;
    std::vector<std::string> notes;
};

/// One term of the expansion: Bell labels on (a, A1) and (c, A2), and the operator
/// pair written next to |psi>_{B1 B2}.
struct DecompositionTerm {
    BellLabel on_a_A1;
    BellLabel on_c_A2;
    Pauli on_b1;
    Pauli on_b2;
};

/// The sixteen terms, ordered by BellOutcome::index().
const std::array<DecompositionTerm, 16> &branch_decomposition_table() noexcept;

/// branch_decomposition_table() as a CorrectionTable indexed by BellOutcome.
CorrectionTable decomposition_correction_table();

/// Copy of `table` with entry k replaced by entry 15 - k, which differs from
/// it by iY on both receiver qubits.
CorrectionTable corrupt_branch(CorrectionTable table, std::size_t k);

/// Scalar attached to every term so that both sides have unit norm.
inline constexpr double kBranchWeight = 0.25;

/**
 * Compares |psi>_{ac} (x) phi+_{A1B1} (x) phi+_{A2B2} with the sixteen-term
 * sum over `table`, amplitude by amplitude on (a, c, A1, B1, A2, B2).
 *
 * Each term is weighted by kBranchWeight, and its receiver factor is
 * (U1 (x) U2)^dagger |psi>: the state that the listed correction maps back
 * to |psi>. For I, X, Z the adjoint is the operator itself; for iY it is
 * -iY. details holds one entry per term: the deviation between the term and
 * the projection of the left-hand side onto that Bell pair.
 */
IdentityReport check_branch_decomposition(
    const CoefficientSet &c,
    const CorrectionTable &table = decomposition_correction_table());

/// Largest deviation when each receiver factor is taken to be
/// (U1 (x) U2)|psi> verbatim instead of the adjoint.
double literal_operator_deviation(const CoefficientSet &c);

/// The three ways to read CNOT_{a->d} CNOT_{a->b} SWAP_{bc}.
enum class FoldingReading {
    /// Drop the SWAP; the two CNOTs commute.
    TwoCnot,
    /// Operator product: SWAP b,c acts first.
    RightmostFirst,
    /// As written, left factor first: SWAP b,c acts last.
    LeftToRight,
};

inline constexpr std::array<FoldingReading, 3> kFoldingReadings{
    FoldingReading::TwoCnot, FoldingReading::RightmostFirst, FoldingReading::LeftToRight};

std::string_view to_string(FoldingReading r) noexcept;

/// The reading's gates on (a, b, c, d), in diagram order.
Circuit folding_circuit(FoldingReading r);

/// Verdict each reading is expected to get.
std::string_view expected_verdict(FoldingReading r) noexcept;

/**
 * Applies the reading's circuit to
 * alpha|0000> + beta|0010> + gamma|1101> + delta|1111> on (a, b, c, d) for
 * the four basis coefficient sets and `random_sets` seeded random ones, and
 * compares with (alpha, beta, gamma, delta) on (a, c) times |00> on (b, d).
 * A failing reading is retried with (a, b) holding the pair.
 */
IdentityReport check_folding_identity(FoldingReading r, std::uint64_t seed = 5,
                                  std::size_t random_sets = 20);

/**
 * Teleports two_qubit_state(c) once per forced outcome. Every branch must
 * have probability 1/16 within kBranchProbabilityTolerance and corrected
 * fidelity within kIdentityTolerance of 1.
 */
IdentityReport
exhaustive_outcome_oracle(const CoefficientSet &c,
                          std::optional<CorrectionTable> table = std::nullopt);

} // namespace qtele
