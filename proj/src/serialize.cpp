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

#include "qtele/serialize.hpp"

#include "qtele/errors.hpp"

namespace qtele {

namespace {

Json complex_pair(Amplitude z) { return Json::array({z.real(), z.imag()}); }

Amplitude complex_from(const Json &j) {
    if (!j.is_array() || j.size() != 2) {
        throw ParseError("complex value must be [re, im]");
    }
    return {j.at(0).get<double>(), j.at(1).get<double>()};
}

} // namespace

Json to_json(const StateVector &state) {
    Json labels = Json::array();
    for (const auto &q : state.labels()) {
        labels.push_back(q.name());
    }
    Json amps = Json::array();
    for (const auto &z : state.amplitudes()) {
        amps.push_back(complex_pair(z));
    }
    Json j;
    j["labels"] = std::move(labels);
    j["amplitudes"] = std::move(amps);
    return j;
}

namespace {

StateVector state_from_json_unchecked(const Json &j) {
    Register labels;
    for (const auto &q : j.at("labels")) {
        labels.emplace_back(q.get<std::string>());
    }
    std::vector<Amplitude> amps;
    for (const auto &z : j.at("amplitudes")) {
        amps.push_back(complex_from(z));
    }
    return StateVector(std::move(labels), std::move(amps));
}

} // namespace

StateVector state_from_json(const Json &j) {
    try {
        return state_from_json_unchecked(j);
    } catch (const Json::exception &e) {
        throw ParseError(std::string("malformed state: ") + e.what());
    }
}

Json to_json(const CoefficientSet &c) {
    Json j = Json::array();
    for (const auto &z : c.values()) {
        j.push_back(complex_pair(z));
    }
    return j;
}

Json to_json(const TeleportTranscript &t) {
    Json j;
    j["coefficients"] = to_json(t.coefficients);
    j["outcome"] = Json::array({to_string(t.outcome.first), to_string(t.outcome.second)});
    j["correction"] =
        Json::array({to_string(t.correction.on_b1), to_string(t.correction.on_b2)});
    j["classical_bits_sent"] = t.classical_bits_sent;
    j["bell_pairs_used"] = t.bell_pairs_used;
    j["outcome_probability"] = t.outcome_probability;
    j["fidelity_2q"] = t.fidelity_2q;
    j["fidelity_8q"] = t.fidelity_8q;
    j["forced"] = t.forced;
    j["seed"] = t.seed ? Json(*t.seed) : Json(nullptr);
    j["trial"] = t.trial ? Json(*t.trial) : Json(nullptr);
    j["variant"] = to_string(t.variant);
    j["channel"] = t.channel;
    return j;
}

namespace {

TeleportTranscript transcript_from_json_unchecked(const Json &j) {
    const auto &coeffs = j.at("coefficients");
    if (!coeffs.is_array() || coeffs.size() != 4) {
        throw ParseError("coefficients must hold four [re, im] pairs");
    }
    const auto c = CoefficientSet::from_values(
        complex_from(coeffs[0]), complex_from(coeffs[1]), complex_from(coeffs[2]),
        complex_from(coeffs[3]));
    const auto &o = j.at("outcome");
    const auto &k = j.at("correction");
    TeleportTranscript t{
        c,
        {parse_bell_label(o.at(0).get<std::string>()),
         parse_bell_label(o.at(1).get<std::string>())},
        {parse_pauli(k.at(0).get<std::string>()),
         parse_pauli(k.at(1).get<std::string>())}};
    t.classical_bits_sent = j.at("classical_bits_sent").get<int>();
    t.bell_pairs_used = j.at("bell_pairs_used").get<int>();
    t.outcome_probability = j.at("outcome_probability").get<double>();
    t.fidelity_2q = j.at("fidelity_2q").get<double>();
    t.fidelity_8q = j.at("fidelity_8q").get<double>();
    t.forced = j.at("forced").get<bool>();
    if (!j.at("seed").is_null()) {
        t.seed = j.at("seed").get<std::uint64_t>();
    }
    if (!j.at("trial").is_null()) {
        t.trial = j.at("trial").get<std::uint64_t>();
    }
    t.variant = parse_compression_variant(j.at("variant").get<std::string>());
    t.channel = j.at("channel").get<std::string>();
    return t;
}

} // namespace

TeleportTranscript transcript_from_json(const Json &j) {
    try {
        return transcript_from_json_unchecked(j);
    } catch (const Json::exception &e) {
        throw ParseError(std::string("malformed transcript: ") + e.what());
    }
}

Json to_json(const IdentityReport &r) {
    Json j;
    j["identity"] = r.identity_name;
    j["verdict"] = r.verdict;
    j["holds"] = r.holds;
    j["max_deviation"] = r.max_deviation;
    if (r.relabeled_deviation) {
        j["relabeled_deviation"] = *r.relabeled_deviation;
    }
    Json details = Json::array();
    for (const auto &d : r.details) {
        details.push_back({{"case", d.branch}, {"deviation", d.deviation}});
    }
    j["details"] = std::move(details);
    j["notes"] = r.notes;
    return j;
}

Json to_json(const ResourceReport &r) {
    Json j;
    j["scheme"] = r.scheme_name;
    j["channel_qubits"] = r.channel_qubits;
    j["bell_pairs"] = r.bell_pairs;
    j["product_channel"] = r.product_channel;
    j["classical_bits"] = r.classical_bits ? Json(*r.classical_bits) : Json(nullptr);
    j["sender_gates"] = r.sender_gates;
    j["receiver_gates"] = r.receiver_gates;
    j["correction_gates"] = r.correction_gates;
    j["n_unknown_coefficients"] = r.n_unknown_coefficients;
    j["min_bell_pairs_required"] = r.min_bell_pairs_required;
    j["notes"] = r.notes;
    return j;
}

} // namespace qtele
