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

#include "qtele/protocol.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "qtele/errors.hpp"

namespace qtele {

namespace {

std::map<QubitLabel, QubitLabel> invert(const std::map<QubitLabel, QubitLabel> &m) {
    std::map<QubitLabel, QubitLabel> out;
    for (const auto &[k, v] : m) {
        out.emplace(v, k);
    }
    return out;
}

double gaussian(Rng &rng) {
    // Box-Muller on our own uniform draws keeps sequences portable
    const double u1 = 1.0 - uniform01(rng);
    const double u2 = uniform01(rng);
    return std::sqrt(-2.0 * std::log(u1)) *
           std::cos(2.0 * std::numbers::pi * u2);
}

const std::map<QubitLabel, QubitLabel> &ac_to_bob() {
    static const std::map<QubitLabel, QubitLabel> m{{"a", "B1"}, {"c", "B2"}};
    return m;
}

} // namespace

CoefficientSet CoefficientSet::from_values(Amplitude alpha, Amplitude beta,
                                           Amplitude gamma, Amplitude delta) {
    std::array<Amplitude, 4> v{alpha, beta, gamma, delta};
    double norm_sq = 0.0;
    for (const auto &z : v) {
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
            throw InvalidCoefficients("coefficients must be finite");
        }
        norm_sq += std::norm(z);
    }
    const double norm = std::sqrt(norm_sq);
    if (std::abs(norm - 1.0) > kAutoNormalizeTolerance) {
        throw InvalidCoefficients(
            "|alpha|^2+|beta|^2+|gamma|^2+|delta|^2 = " +
            std::to_string(norm_sq) + " is not 1 within tolerance");
    }
    // already-normalized input is kept bit for bit so transcripts reload exactly
    if (std::abs(norm_sq - 1.0) > kNormTolerance) {
        for (auto &z : v) {
            z /= norm;
        }
    }
    return CoefficientSet(v);
}

CoefficientSet CoefficientSet::random(Rng &rng) {
    std::array<Amplitude, 4> v;
    double norm_sq = 0.0;
    do {
        norm_sq = 0.0;
        for (auto &z : v) {
            const double re = gaussian(rng);
            const double im = gaussian(rng);
            z = {re, im};
            norm_sq += std::norm(z);
        }
    } while (norm_sq < 1e-300);
    const double norm = std::sqrt(norm_sq);
    // already-normalized input is kept bit for bit so transcripts reload exactly
    if (std::abs(norm_sq - 1.0) > kNormTolerance) {
        for (auto &z : v) {
            z /= norm;
        }
    }
    return CoefficientSet(v);
}

Register input_register() { return register_from_chars("abcdefgh"); }

Register channel_register() { return {"A1", "B1", "A2", "B2"}; }

Register output_register() { return {"B1", "B", "B2", "D", "E", "F", "G", "H"}; }

std::map<QubitLabel, QubitLabel> input_to_output_labels() {
    const Register in = input_register();
    const Register out = output_register();
    std::map<QubitLabel, QubitLabel> m;
    for (std::size_t i = 0; i < in.size(); ++i) {
        m.emplace(in[i], out[i]);
    }
    return m;
}

StateVector encode_input(const CoefficientSet &c) {
    std::vector<Amplitude> amps(std::size_t{1} << 8);
    for (std::size_t k = 0; k < kInputSupport.size(); ++k) {
        amps[basis_index(kInputSupport[k])] = c.values()[k];
    }
    return StateVector(input_register(), std::move(amps));
}

StateVector two_qubit_state(const CoefficientSet &c) {
    const auto &v = c.values();
    return StateVector({"a", "c"}, {v.begin(), v.end()});
}

std::string_view to_string(CompressionVariant v) noexcept {
    switch (v) {
    case CompressionVariant::TwoCnot:
        return "two-cnot";
    case CompressionVariant::PaperLiteral:
        return "paper-literal";
    }
    return "?";
}

CompressionVariant parse_compression_variant(std::string_view text) {
    if (text == "two-cnot") {
        return CompressionVariant::TwoCnot;
    }
    if (text == "paper-literal") {
        return CompressionVariant::PaperLiteral;
    }
    throw ParseError("unknown variant '" + std::string(text) +
                     "' (expected two-cnot or paper-literal)");
}

Circuit fanout_stage() {
    Circuit c(input_register());
    for (const char *target : {"e", "f", "g", "h"}) {
        c.append(GateOp::cnot("a", target));
    }
    return c;
}

Circuit folding_stage(CompressionVariant v) {
    switch (v) {
    case CompressionVariant::TwoCnot: {
        Circuit c(input_register());
        c.append(GateOp::cnot("a", "b")).append(GateOp::cnot("a", "d"));
        return c;
    }
    case CompressionVariant::PaperLiteral:
        return from_operator_product(input_register(),
                                     {GateOp::cnot("a", "d"),
                                      GateOp::cnot("a", "b"),
                                      GateOp::swap("b", "c")});
    }
    throw Error("unknown compression variant");
}

Circuit compression_circuit(CompressionVariant v) {
    Circuit c = fanout_stage();
    const Circuit folding = folding_stage(v);
    for (const auto &op : folding.ops()) {
        c.append(op);
    }
    return c;
}

void require_input_family(const StateVector &state) {
    if (state.labels() != input_register()) {
        throw InputFamilyError("input must be on qubits [a,b,c,d,e,f,g,h], got [" +
                               join_labels(state.labels()) + "]");
    }
    std::array<std::size_t, 4> support{};
    for (std::size_t k = 0; k < 4; ++k) {
        support[k] = basis_index(kInputSupport[k]);
    }
    const auto amps = state.amplitudes();
    for (std::size_t i = 0; i < amps.size(); ++i) {
        const bool allowed =
            std::find(support.begin(), support.end(), i) != support.end();
        if (!allowed && std::abs(amps[i]) > kNormTolerance) {
            throw InputFamilyError("amplitude at basis index " +
                                   std::to_string(i) +
                                   " lies outside the four-term support");
        }
    }
}

Compressed compress(const StateVector &state8, CompressionVariant v) {
    require_input_family(state8);
    const auto folded = apply_circuit(state8, compression_circuit(v));
    auto split = product_check(folded, {"a", "c"});
    if (!split.is_product) {
        throw FactorizationError(
            "variant " + std::string(to_string(v)) +
            " leaves (a,c) entangled with the rest (residual " +
            std::to_string(split.residual) + ")");
    }
    const auto zeros = make_basis_state(split.rest->labels(), "000000");
    if (fidelity(*split.rest, zeros) < 1.0 - kFidelityTolerance) {
        throw FactorizationError("variant " + std::string(to_string(v)) +
                                 " does not return b,d,e,f,g,h to |000000>");
    }
    Compressed out{std::move(*split.factor), std::move(*split.rest)};
    return out;
}

bool ChannelSpec::parameter_dependence() const noexcept {
    return std::any_of(terms_.begin(), terms_.end(), [](const ChannelTerm &t) {
        return std::holds_alternative<std::string>(t.weight);
    });
}

std::size_t ChannelSpec::num_qubits() const noexcept {
    return kind_ == ChannelKind::TwoBellPairs ? 4 : terms_.front().bits.size();
}

std::string ChannelSpec::name() const {
    switch (kind_) {
    case ChannelKind::TwoBellPairs:
        return std::string(to_string(first_)) + ":" +
               std::string(to_string(second_));
    case ChannelKind::ZhaoCluster:
        return "zhao-cluster";
    case ChannelKind::ZhaoCoefficientWeighted:
        return "zhao-weighted";
    }
    return "?";
}

ChannelSpec ChannelSpec::two_bell_pairs(BellLabel first, BellLabel second) {
    return ChannelSpec(ChannelKind::TwoBellPairs, first, second, {});
}

ChannelSpec ChannelSpec::zhao_cluster() {
    return ChannelSpec(ChannelKind::ZhaoCluster, BellLabel::PhiPlus,
                       BellLabel::PhiPlus,
                       {{"000000", Amplitude{0.5}},
                        {"001001", Amplitude{0.5}},
                        {"110110", Amplitude{0.5}},
                        {"111111", Amplitude{0.5}}});
}

ChannelSpec ChannelSpec::zhao_coefficient_weighted() {
    return ChannelSpec(ChannelKind::ZhaoCoefficientWeighted, BellLabel::PhiPlus,
                       BellLabel::PhiPlus,
                       {{"000000", std::string("alpha")},
                        {"001001", std::string("beta")},
                        {"110110", std::string("gamma")},
                        {"111111", std::string("delta")}});
}

ChannelSpec parse_channel(std::string_view text) {
    if (text == "zhao-cluster") {
        return ChannelSpec::zhao_cluster();
    }
    if (text == "zhao-weighted") {
        return ChannelSpec::zhao_coefficient_weighted();
    }
    const auto pair = parse_bell_outcome(text);
    return ChannelSpec::two_bell_pairs(pair.first, pair.second);
}

StateVector build_channel(const ChannelSpec &spec) {
    if (spec.kind() == ChannelKind::TwoBellPairs) {
        return tensor(bell_state(spec.first(), "A1", "B1"),
                      bell_state(spec.second(), "A2", "B2"));
    }
    std::vector<std::string> unknowns;
    for (const auto &term : spec.terms()) {
        if (const auto *symbol = std::get_if<std::string>(&term.weight)) {
            unknowns.push_back(*symbol);
        }
    }
    if (!unknowns.empty()) {
        std::string names;
        for (std::size_t i = 0; i < unknowns.size(); ++i) {
            names += (i == 0 ? "" : ", ") + unknowns[i];
        }
        throw ConstructibilityError(
            "channel '" + spec.name() +
            "' cannot be prepared: its amplitudes depend on the coefficients " +
            names + " of the state to be teleported, which are unknown");
    }
    const std::size_t n = spec.num_qubits();
    Register labels;
    for (std::size_t i = 1; i <= n; ++i) {
        labels.emplace_back(std::to_string(i));
    }
    std::vector<Amplitude> amps(std::size_t{1} << n);
    for (const auto &term : spec.terms()) {
        amps[basis_index(term.bits)] += std::get<Amplitude>(term.weight);
    }
    return StateVector(std::move(labels), std::move(amps));
}

TeleportResult teleport_two_qubit(const StateVector &psi2,
                                  const TeleportMode &mode,
                                  const TeleportOptions &options) {
    const auto &channel = options.channel;
    if (channel.parameter_dependence()) {
        (void)build_channel(channel); // throws ConstructibilityError
    }
    if (channel.kind() != ChannelKind::TwoBellPairs) {
        throw Error("channel '" + channel.name() +
                    "' is not a pair of Bell states; only two-Bell-pair "
                    "teleportation is supported");
    }
    if (psi2.num_qubits() != 2) {
        throw DimensionError("teleport_two_qubit expects a 2-qubit state on "
                             "(a,c), got [" + join_labels(psi2.labels()) + "]");
    }
    const auto sender = permute_to(psi2, {"a", "c"});
    const auto combined = tensor(sender, build_channel(channel));

    auto measure_mode = [&](BellLabel forced) {
        return mode.is_forced() ? MeasureMode::forced(forced)
                                : MeasureMode::sampled(mode.rng());
    };
    const BellOutcome wanted =
        mode.is_forced() ? mode.forced_outcome() : BellOutcome{};
    const auto first = bell_measure(combined, "a", "A1", measure_mode(wanted.first));
    const auto second =
        bell_measure(*first.collapsed, "c", "A2", measure_mode(wanted.second));

    const BellOutcome outcome{first.label, second.label};
    const CorrectionTable table =
        options.table_override
            ? *options.table_override
            : correction_table_for_channel(channel.first(), channel.second());
    const PauliCorrection corr = table[outcome.index()];
    auto uncorrected = permute_to(*second.collapsed, {"B1", "B2"});
    auto bob = apply_correction(uncorrected, corr, "B1", "B2");
    return TeleportResult{std::move(bob),      std::move(uncorrected),
                          outcome,             corr,
                          first.probability,   second.probability,
                          kClassicalBitsPerRun};
}

StateVector reconstruct(const StateVector &bob, CompressionVariant v) {
    if (bob.num_qubits() != 2) {
        throw DimensionError("reconstruct expects Bob's (B1,B2), got [" +
                             join_labels(bob.labels()) + "]");
    }
    const auto pair = permute_to(bob, {"B1", "B2"});
    const auto ancillas = make_basis_state({"B", "D", "E", "F", "G", "H"}, "000000");
    const auto joined = permute_to(tensor(pair, ancillas), output_register());
    const Circuit unfold =
        compression_circuit(v).inverse().relabeled(input_to_output_labels());
    return apply_circuit(joined, unfold);
}

TeleportTranscript run_end_to_end(const CoefficientSet &c,
                                  const TeleportMode &mode,
                                  const RunOptions &options) {
    const auto input = encode_input(c);
    const auto compressed = compress(input, options.variant);
    TeleportOptions topts{options.channel, options.table_override};
    const auto sent = teleport_two_qubit(compressed.psi2, mode, topts);
    auto output = reconstruct(sent.bob, options.variant);

    TeleportTranscript t{c, sent.outcome, sent.correction};
    t.classical_bits_sent = sent.classical_bits_sent;
    t.bell_pairs_used = kBellPairsPerRun;
    t.outcome_probability = sent.joint_probability();
    t.fidelity_2q = fidelity(relabeled(compressed.psi2, ac_to_bob()), sent.bob);
    t.fidelity_8q =
        fidelity(input, relabeled(output, invert(input_to_output_labels())));
    t.forced = mode.is_forced();
    t.variant = options.variant;
    t.channel = options.channel.name();
    t.output_state = std::move(output);
    return t;
}

} // namespace qtele
