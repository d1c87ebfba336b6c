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

#include "qtele/bell.hpp"

#include <cmath>
#include <string>

#include "qtele/errors.hpp"

namespace qtele {

namespace {

// Bell vectors over |q1 q2> = 00, 01, 10, 11.
std::array<Amplitude, 4> bell_vector(BellLabel label) {
    const double s = 1.0 / std::sqrt(2.0);
    switch (label) {
    case BellLabel::PhiPlus:
        return {s, 0.0, 0.0, s};
    case BellLabel::PhiMinus:
        return {s, 0.0, 0.0, -s};
    case BellLabel::PsiPlus:
        return {0.0, s, s, 0.0};
    case BellLabel::PsiMinus:
        return {0.0, s, -s, 0.0};
    }
    return {};
}

struct PairProjection {
    Register rest;
    // amplitude-by-amplitude <B_k|_{q1 q2} psi> for each label k
    std::array<std::vector<Amplitude>, 4> branches;
};

PairProjection project_pair(const StateVector &state, const QubitLabel &q1,
                            const QubitLabel &q2) {
    if (q1 == q2) {
        throw LabelError("Bell measurement needs two distinct qubits, got '" +
                         q1.name() + "' twice");
    }
    const std::size_t m1 = std::size_t{1} << state.bit(q1);
    const std::size_t m2 = std::size_t{1} << state.bit(q2);

    PairProjection out;
    for (const auto &q : state.labels()) {
        if (q != q1 && q != q2) {
            out.rest.push_back(q);
        }
    }
    const std::size_t rest_dim = state.dimension() / 4;
    std::array<std::array<Amplitude, 4>, 4> conj_bell;
    for (std::size_t k = 0; k < 4; ++k) {
        const auto b = bell_vector(kBellLabels[k]);
        for (std::size_t x = 0; x < 4; ++x) {
            conj_bell[k][x] = std::conj(b[x]);
        }
        out.branches[k].assign(rest_dim, 0.0);
    }
    const auto amps = state.amplitudes();
    // indices with both pair bits clear enumerate the rest register in order
    std::size_t r = 0;
    for (std::size_t base = 0; base < amps.size(); ++base) {
        if ((base & (m1 | m2)) != 0) {
            continue;
        }
        const std::array<Amplitude, 4> local{
            amps[base], amps[base | m2], amps[base | m1], amps[base | m1 | m2]};
        for (std::size_t k = 0; k < 4; ++k) {
            Amplitude acc = 0.0;
            for (std::size_t x = 0; x < 4; ++x) {
                acc += conj_bell[k][x] * local[x];
            }
            out.branches[k][r] = acc;
        }
        ++r;
    }
    return out;
}

double squared_norm(const std::vector<Amplitude> &v) {
    return kernels::active().norm_squared(v);
}

} // namespace

std::string_view to_string(BellLabel label) noexcept {
    switch (label) {
    case BellLabel::PhiPlus:
        return "phi+";
    case BellLabel::PhiMinus:
        return "phi-";
    case BellLabel::PsiPlus:
        return "psi+";
    case BellLabel::PsiMinus:
        return "psi-";
    }
    return "?";
}

BellLabel parse_bell_label(std::string_view text) {
    for (BellLabel label : kBellLabels) {
        if (text == to_string(label)) {
            return label;
        }
    }
    throw ParseError("unknown Bell label '" + std::string(text) +
                     "' (expected phi+, phi-, psi+ or psi-)");
}

std::string to_string(BellOutcome outcome) {
    return std::string(to_string(outcome.first)) + ":" +
           std::string(to_string(outcome.second));
}

BellOutcome parse_bell_outcome(std::string_view text) {
    const auto colon = text.find(':');
    if (colon == std::string_view::npos) {
        throw ParseError("Bell outcome '" + std::string(text) +
                         "' must look like phi+:psi-");
    }
    return {parse_bell_label(text.substr(0, colon)),
            parse_bell_label(text.substr(colon + 1))};
}

std::string_view to_string(Pauli p) noexcept {
    switch (p) {
    case Pauli::I:
        return "I";
    case Pauli::Z:
        return "Z";
    case Pauli::X:
        return "X";
    case Pauli::iY:
        return "iY";
    }
    return "?";
}

Pauli parse_pauli(std::string_view text) {
    for (Pauli p : {Pauli::I, Pauli::Z, Pauli::X, Pauli::iY}) {
        if (text == to_string(p)) {
            return p;
        }
    }
    throw ParseError("unknown Pauli '" + std::string(text) + "'");
}

kernels::Mat2 pauli_matrix(Pauli p) {
    using C = kernels::Complex;
    switch (p) {
    case Pauli::I:
        return {C{1}, C{0}, C{0}, C{1}};
    case Pauli::Z:
        return {C{1}, C{0}, C{0}, C{-1}};
    case Pauli::X:
        return {C{0}, C{1}, C{1}, C{0}};
    case Pauli::iY:
        return {C{0}, C{1}, C{-1}, C{0}};
    }
    return {};
}

const CorrectionTable &standard_correction_table() noexcept {
    static const CorrectionTable table = [] {
        CorrectionTable t{};
        for (std::size_t k = 0; k < 16; ++k) {
            const auto o = BellOutcome::from_index(k);
            // phi+ -> I, phi- -> Z, psi+ -> X, psi- -> iY share their codes
            t[k] = {static_cast<Pauli>(o.first), static_cast<Pauli>(o.second)};
        }
        return t;
    }();
    return table;
}

PauliCorrection correction_for(BellOutcome outcome) {
    return standard_correction_table()[outcome.index()];
}

CorrectionTable correction_table_for_channel(BellLabel first,
                                             BellLabel second) {
    CorrectionTable t = standard_correction_table();
    const auto f = static_cast<std::uint8_t>(first);
    const auto s = static_cast<std::uint8_t>(second);
    for (auto &entry : t) {
        entry.on_b1 = static_cast<Pauli>(static_cast<std::uint8_t>(entry.on_b1) ^ f);
        entry.on_b2 = static_cast<Pauli>(static_cast<std::uint8_t>(entry.on_b2) ^ s);
    }
    return t;
}

StateVector bell_state(BellLabel label, const QubitLabel &q1,
                       const QubitLabel &q2) {
    if (q1 == q2) {
        throw LabelError("Bell state needs two distinct qubits, got '" +
                         q1.name() + "' twice");
    }
    const auto b = bell_vector(label);
    return StateVector::normalized({q1, q2}, {b.begin(), b.end()});
}

double uniform01(Rng &rng) noexcept {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

std::array<double, 4> bell_probabilities(const StateVector &state,
                                         const QubitLabel &q1,
                                         const QubitLabel &q2) {
    const auto proj = project_pair(state, q1, q2);
    std::array<double, 4> p{};
    for (std::size_t k = 0; k < 4; ++k) {
        p[k] = squared_norm(proj.branches[k]);
    }
    return p;
}

BellMeasurement bell_measure(const StateVector &state, const QubitLabel &q1,
                             const QubitLabel &q2, const MeasureMode &mode) {
    auto proj = project_pair(state, q1, q2);
    std::array<double, 4> p{};
    for (std::size_t k = 0; k < 4; ++k) {
        p[k] = squared_norm(proj.branches[k]);
    }

    std::size_t chosen = 0;
    if (mode.is_forced()) {
        chosen = static_cast<std::size_t>(mode.forced_label());
        if (p[chosen] <= kZeroProbability) {
            throw ZeroProbabilityOutcome(
                "Bell outcome " + std::string(to_string(mode.forced_label())) +
                " on (" + q1.name() + "," + q2.name() + ") has probability " +
                std::to_string(p[chosen]));
        }
    } else {
        const double u = uniform01(mode.rng());
        double cumulative = 0.0;
        chosen = 4;
        for (std::size_t k = 0; k < 4; ++k) {
            cumulative += p[k];
            if (p[k] > kZeroProbability && u < cumulative) {
                chosen = k;
                break;
            }
        }
        if (chosen == 4) {
            // roundoff pushed u past the final cumulative sum
            for (std::size_t k = 4; k-- > 0;) {
                if (p[k] > kZeroProbability) {
                    chosen = k;
                    break;
                }
            }
        }
    }

    BellMeasurement out{kBellLabels[chosen], p[chosen], std::nullopt};
    if (!proj.rest.empty()) {
        out.collapsed = StateVector::normalized(std::move(proj.rest),
                                                std::move(proj.branches[chosen]));
    }
    return out;
}

StateVector apply_correction(const StateVector &state, PauliCorrection corr,
                             const QubitLabel &b1, const QubitLabel &b2) {
    StateVector out = state;
    out.apply_matrix(b1, pauli_matrix(corr.on_b1));
    out.apply_matrix(b2, pauli_matrix(corr.on_b2));
    return out;
}

} // namespace qtele
