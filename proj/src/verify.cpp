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

#include "qtele/verify.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "qtele/errors.hpp"

namespace qtele {

namespace {

using B = BellLabel;
using P = Pauli;

// Bell pair from its two-term ket expansion over (q1, q2).
StateVector bell_ket(BellLabel label, const QubitLabel &q1, const QubitLabel &q2) {
    const double s = 1.0 / std::sqrt(2.0);
    std::vector<Amplitude> amps(4, 0.0);
    switch (label) {
    case B::PhiPlus:
        amps[basis_index("00")] = s;
        amps[basis_index("11")] = s;
        break;
    case B::PhiMinus:
        amps[basis_index("00")] = s;
        amps[basis_index("11")] = -s;
        break;
    case B::PsiPlus:
        amps[basis_index("01")] = s;
        amps[basis_index("10")] = s;
        break;
    case B::PsiMinus:
        amps[basis_index("01")] = s;
        amps[basis_index("10")] = -s;
        break;
    }
    return StateVector({q1, q2}, std::move(amps));
}

kernels::Mat2 adjoint(const kernels::Mat2 &m) {
    return {std::conj(m[0]), std::conj(m[2]), std::conj(m[1]), std::conj(m[3])};
}

const Register &decomposition_register() {
    static const Register r{"a", "c", "A1", "B1", "A2", "B2"};
    return r;
}

StateVector receiver_factor(const CoefficientSet &c, PauliCorrection ops,
                            bool take_adjoint) {
    StateVector psi = relabeled(two_qubit_state(c), {{"a", "B1"}, {"c", "B2"}});
    const auto m1 = pauli_matrix(ops.on_b1);
    const auto m2 = pauli_matrix(ops.on_b2);
    psi.apply_matrix("B1", take_adjoint ? adjoint(m1) : m1);
    psi.apply_matrix("B2", take_adjoint ? adjoint(m2) : m2);
    return psi;
}

StateVector branch_lhs(const CoefficientSet &c) {
    return tensor(tensor(two_qubit_state(c), bell_ket(B::PhiPlus, "A1", "B1")),
                  bell_ket(B::PhiPlus, "A2", "B2"));
}

struct BranchComparison {
    double max_deviation = 0.0;
    std::vector<BranchDeviation> branches;
};

BranchComparison compare_branches(const CoefficientSet &c, const CorrectionTable &table,
                          bool take_adjoint) {
    const auto lhs = branch_lhs(c);
    const Register sender_first{"a", "A1", "c", "A2", "B1", "B2"};
    const auto lhs_grouped = permute_to(lhs, sender_first);

    std::vector<Amplitude> rhs(lhs.dimension(), 0.0);
    BranchComparison out;
    for (std::size_t k = 0; k < 16; ++k) {
        const auto o = BellOutcome::from_index(k);
        const auto pair = tensor(bell_ket(o.first, "a", "A1"),
                                 bell_ket(o.second, "c", "A2"));
        const auto bob = receiver_factor(c, table[k], take_adjoint);
        const auto term = permute_to(tensor(pair, bob), decomposition_register());
        for (std::size_t i = 0; i < rhs.size(); ++i) {
            rhs[i] += kBranchWeight * term[i];
        }

        // project the left-hand side onto this Bell pair
        double branch_dev = 0.0;
        for (std::size_t y = 0; y < 4; ++y) {
            Amplitude projected = 0.0;
            for (std::size_t x = 0; x < 16; ++x) {
                projected += std::conj(pair[x]) * lhs_grouped[x * 4 + y];
            }
            branch_dev = std::max(branch_dev,
                                  std::abs(projected - kBranchWeight * bob[y]));
        }
        out.branches.push_back({to_string(o), branch_dev});
    }
    for (std::size_t i = 0; i < rhs.size(); ++i) {
        out.max_deviation = std::max(out.max_deviation, std::abs(lhs[i] - rhs[i]));
    }
    return out;
}

StateVector chi_state(const CoefficientSet &c) {
    std::vector<Amplitude> amps(16, 0.0);
    amps[basis_index("0000")] = c.alpha();
    amps[basis_index("0010")] = c.beta();
    amps[basis_index("1101")] = c.gamma();
    amps[basis_index("1111")] = c.delta();
    return StateVector(register_from_chars("abcd"), std::move(amps));
}

// (alpha, beta, gamma, delta) on `pair` times |00> on the other two qubits
StateVector folded_target(const CoefficientSet &c, const Register &pair,
                          const Register &cleared) {
    const auto &v = c.values();
    const StateVector two(pair, {v.begin(), v.end()});
    return permute_to(tensor(two, make_basis_state(cleared, "00")),
                      register_from_chars("abcd"));
}

std::vector<CoefficientSet> folding_inputs(std::uint64_t seed, std::size_t random_sets) {
    std::vector<CoefficientSet> sets;
    for (std::size_t k = 0; k < 4; ++k) {
        std::array<Amplitude, 4> v{};
        v[k] = 1.0;
        sets.push_back(CoefficientSet::from_values(v[0], v[1], v[2], v[3]));
    }
    Rng rng(seed);
    for (std::size_t k = 0; k < random_sets; ++k) {
        sets.push_back(CoefficientSet::random(rng));
    }
    return sets;
}

std::string coefficient_name(std::size_t k) {
    static const char *names[] = {"alpha", "beta", "gamma", "delta"};
    return k < 4 ? std::string("basis ") + names[k]
                 : "random #" + std::to_string(k - 4);
}

} // namespace

const std::array<DecompositionTerm, 16> &branch_decomposition_table() noexcept {
    static const std::array<DecompositionTerm, 16> terms{{
        {B::PhiPlus, B::PhiPlus, P::I, P::I},
        {B::PhiPlus, B::PhiMinus, P::I, P::Z},
        {B::PhiPlus, B::PsiPlus, P::I, P::X},
        {B::PhiPlus, B::PsiMinus, P::I, P::iY},
        {B::PhiMinus, B::PhiPlus, P::Z, P::I},
        {B::PhiMinus, B::PhiMinus, P::Z, P::Z},
        {B::PhiMinus, B::PsiPlus, P::Z, P::X},
        {B::PhiMinus, B::PsiMinus, P::Z, P::iY},
        {B::PsiPlus, B::PhiPlus, P::X, P::I},
        {B::PsiPlus, B::PhiMinus, P::X, P::Z},
        {B::PsiPlus, B::PsiPlus, P::X, P::X},
        {B::PsiPlus, B::PsiMinus, P::X, P::iY},
        {B::PsiMinus, B::PhiPlus, P::iY, P::I},
        {B::PsiMinus, B::PhiMinus, P::iY, P::Z},
        {B::PsiMinus, B::PsiPlus, P::iY, P::X},
        {B::PsiMinus, B::PsiMinus, P::iY, P::iY},
    }};
    return terms;
}

CorrectionTable decomposition_correction_table() {
    CorrectionTable table{};
    for (const auto &t : branch_decomposition_table()) {
        table[BellOutcome{t.on_a_A1, t.on_c_A2}.index()] = {t.on_b1, t.on_b2};
    }
    return table;
}

CorrectionTable corrupt_branch(CorrectionTable table, std::size_t k) {
    if (k >= table.size()) {
        throw Error("branch index " + std::to_string(k) + " outside [0, 16)");
    }
    table[k] = table[15 - k];
    return table;
}

IdentityReport check_branch_decomposition(const CoefficientSet &c,
                                       const CorrectionTable &table) {
    const auto cmp = compare_branches(c, table, true);
    IdentityReport r;
    r.identity_name = "bell-branch-decomposition";
    r.max_deviation = cmp.max_deviation;
    r.holds = r.max_deviation < kIdentityTolerance;
    r.verdict = r.holds ? "holds" : "fails";
    r.details = cmp.branches;
    r.notes.push_back("each of the 16 terms carries weight 1/4 (unit norm on "
                      "both sides)");
    r.notes.push_back("receiver factor of a term is (U1 x U2)^dagger |psi>, the "
                      "state its correction maps back to |psi>; literal "
                      "(U1 x U2)|psi> deviates by " +
                      std::to_string(compare_branches(c, table, false).max_deviation) +
                      " through the sign of iY on psi- branches");
    return r;
}

double literal_operator_deviation(const CoefficientSet &c) {
    return compare_branches(c, decomposition_correction_table(), false).max_deviation;
}

std::string_view to_string(FoldingReading r) noexcept {
    switch (r) {
    case FoldingReading::TwoCnot:
        return "two-cnot";
    case FoldingReading::RightmostFirst:
        return "rightmost-first";
    case FoldingReading::LeftToRight:
        return "left-to-right";
    }
    return "?";
}

Circuit folding_circuit(FoldingReading r) {
    // factors as written: CNOT_{a->d} CNOT_{a->b} SWAP_{bc}
    const std::vector<GateOp> factors{GateOp::cnot("a", "d"),
                                      GateOp::cnot("a", "b"),
                                      GateOp::swap("b", "c")};
    const Register abcd = register_from_chars("abcd");
    switch (r) {
    case FoldingReading::TwoCnot:
        return from_operator_product(abcd, {factors[0], factors[1]});
    case FoldingReading::RightmostFirst:
        return from_operator_product(abcd, factors);
    case FoldingReading::LeftToRight: {
        Circuit c(abcd);
        for (const auto &op : factors) {
            c.append(op);
        }
        return c;
    }
    }
    throw Error("unknown reading");
}

std::string_view expected_verdict(FoldingReading r) noexcept {
    switch (r) {
    case FoldingReading::TwoCnot:
        return "holds";
    case FoldingReading::RightmostFirst:
        return "fails";
    case FoldingReading::LeftToRight:
        return "holds-up-to-relabeling";
    }
    return "?";
}

IdentityReport check_folding_identity(FoldingReading r, std::uint64_t seed,
                                  std::size_t random_sets) {
    const Circuit circuit = folding_circuit(r);
    const auto inputs = folding_inputs(seed, random_sets);
    IdentityReport report;
    report.identity_name = "folding-stage/" + std::string(to_string(r));
    double direct = 0.0;
    double swapped = 0.0;
    for (std::size_t k = 0; k < inputs.size(); ++k) {
        const auto out = apply_circuit(chi_state(inputs[k]), circuit);
        const double d = max_deviation(out, folded_target(inputs[k], {"a", "c"}, {"b", "d"}));
        const double s = max_deviation(out, folded_target(inputs[k], {"a", "b"}, {"c", "d"}));
        direct = std::max(direct, d);
        swapped = std::max(swapped, s);
        report.details.push_back({coefficient_name(k), d});
    }
    report.max_deviation = direct;
    report.holds = direct < kIdentityTolerance;
    if (report.holds) {
        report.verdict = "holds";
    } else {
        report.relabeled_deviation = swapped;
        report.verdict =
            swapped < kIdentityTolerance ? "holds-up-to-relabeling" : "fails";
    }
    std::string gates;
    for (const auto &op : circuit.ops()) {
        gates += (gates.empty() ? "" : " ") + to_string(op);
    }
    report.notes.push_back("diagram order: " + gates);
    if (report.verdict == "holds-up-to-relabeling") {
        report.notes.push_back("the pair lands on (a,b) with (c,d) cleared "
                               "instead of on (a,c)");
    }
    return report;
}

IdentityReport exhaustive_outcome_oracle(const CoefficientSet &c,
                                         std::optional<CorrectionTable> table) {
    IdentityReport report;
    report.identity_name = "exhaustive-outcomes";
    const auto psi = two_qubit_state(c);
    const auto expected = relabeled(psi, {{"a", "B1"}, {"c", "B2"}});
    TeleportOptions options;
    options.table_override = table;
    bool all_ok = true;
    std::size_t passed = 0;
    for (std::size_t k = 0; k < 16; ++k) {
        const auto o = BellOutcome::from_index(k);
        const auto result =
            teleport_two_qubit(psi, TeleportMode::forced(o), options);
        const double p_dev = std::abs(result.joint_probability() - 1.0 / 16.0);
        const double f_dev = 1.0 - fidelity(expected, result.bob);
        const bool ok = p_dev <= kBranchProbabilityTolerance &&
                        f_dev < kIdentityTolerance;
        passed += ok ? 1 : 0;
        all_ok = all_ok && ok;
        const double dev = std::max(p_dev, f_dev);
        report.max_deviation = std::max(report.max_deviation, dev);
        report.details.push_back({to_string(o), dev});
    }
    report.holds = all_ok && report.max_deviation < kIdentityTolerance;
    report.verdict = report.holds ? "holds" : "fails";
    report.notes.push_back(std::to_string(passed) + "/16 branches pass");
    return report;
}

} // namespace qtele
