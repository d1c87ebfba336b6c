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

#include "qtele/resources.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <iomanip>
#include <sstream>

#include "qtele/errors.hpp"

namespace qtele {

namespace {

std::map<std::string, int> named_counts(const Circuit &c) {
    std::map<std::string, int> out;
    for (const auto &[kind, count] : c.gate_counts()) {
        out[std::string(to_string(kind))] = static_cast<int>(count);
    }
    return out;
}

std::string format_counts(const std::map<std::string, int> &counts) {
    if (counts.empty()) {
        return "-";
    }
    std::string out;
    for (const auto &[name, n] : counts) {
        out += (out.empty() ? "" : " ") + name + "=" + std::to_string(n);
    }
    return out;
}

std::string format_double(double v) {
    std::ostringstream os;
    os << std::setprecision(6) << v;
    return os.str();
}

std::string render_rows(const std::vector<std::vector<std::string>> &rows) {
    std::vector<std::size_t> widths;
    for (const auto &row : rows) {
        widths.resize(std::max(widths.size(), row.size()), 0);
        for (std::size_t i = 0; i < row.size(); ++i) {
            widths[i] = std::max(widths[i], row[i].size());
        }
    }
    std::ostringstream os;
    for (const auto &row : rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i + 1 == row.size()) {
                os << row[i] << '\n';
            } else {
                os << std::left << std::setw(static_cast<int>(widths[i])) << row[i]
                   << "  ";
            }
        }
    }
    return os.str();
}

} // namespace

std::string_view to_string(Scheme s) noexcept {
    switch (s) {
    case Scheme::ZhaoCluster:
        return "zhao-cluster";
    case Scheme::TwoBellPairs:
        return "two-bell-pairs";
    }
    return "?";
}

int min_bell_pairs(int n_unknown) {
    if (n_unknown < 1) {
        throw Error("number of unknown coefficients must be >= 1, got " +
                    std::to_string(n_unknown));
    }
    const auto n = static_cast<unsigned>(n_unknown);
    return static_cast<int>(std::bit_width(n - 1));
}

double halved_log_formula(int n_unknown) {
    if (n_unknown < 1) {
        throw Error("number of unknown coefficients must be >= 1, got " +
                    std::to_string(n_unknown));
    }
    return std::log2(static_cast<double>((n_unknown + 1) / 2));
}

ResourceReport audit(Scheme scheme, CompressionVariant variant) {
    ResourceReport r;
    r.scheme_name = std::string(to_string(scheme));
    r.n_unknown_coefficients = 4;
    r.min_bell_pairs_required = min_bell_pairs(r.n_unknown_coefficients);
    switch (scheme) {
    case Scheme::ZhaoCluster:
        r.channel_qubits =
            static_cast<int>(ChannelSpec::zhao_cluster().num_qubits());
        r.bell_pairs = 0;
        r.product_channel = false;
        r.notes.push_back("six-qubit cluster channel; not a product of Bell "
                          "pairs, classical cost and gates not modeled");
        break;
    case Scheme::TwoBellPairs: {
        const auto spec =
            ChannelSpec::two_bell_pairs(BellLabel::PhiPlus, BellLabel::PhiPlus);
        r.channel_qubits = static_cast<int>(spec.num_qubits());
        r.bell_pairs = kBellPairsPerRun;
        r.product_channel = true;
        r.classical_bits = kClassicalBitsPerRun;
        const Circuit sender = compression_circuit(variant);
        r.sender_gates = named_counts(sender);
        r.receiver_gates = named_counts(sender.inverse());
        r.correction_gates = 2;
        r.notes.push_back("compression variant " +
                          std::string(to_string(variant)));
        break;
    }
    }
    r.notes.push_back(
        "lower bound ceil(log2 n) = " + std::to_string(r.min_bell_pairs_required) +
        " at n = 4; the formula log2(ceil(n/2)) gives " +
        format_double(halved_log_formula(r.n_unknown_coefficients)) +
        ", below the two pairs a two-qubit carrier needs");
    return r;
}

bool saturation_check(const TeleportTranscript &t) {
    return t.bell_pairs_used == min_bell_pairs(4) &&
           t.fidelity_8q >= 1.0 - kFidelityTolerance;
}

std::string render_comparison_table(const std::vector<ResourceReport> &reports) {
    std::vector<std::vector<std::string>> rows{
        {"scheme", "channel_qubits", "bell_pairs", "classical_bits",
         "sender_gates", "receiver_gates", "min_bell_pairs"}};
    for (const auto &r : reports) {
        rows.push_back({r.scheme_name, std::to_string(r.channel_qubits),
                        r.product_channel ? std::to_string(r.bell_pairs) : "n/a",
                        r.classical_bits ? std::to_string(*r.classical_bits)
                                         : "unknown",
                        format_counts(r.sender_gates),
                        format_counts(r.receiver_gates),
                        std::to_string(r.min_bell_pairs_required)});
    }
    std::string out = render_rows(rows);
    std::vector<std::string> seen;
    for (const auto &r : reports) {
        for (const auto &note : r.notes) {
            if (std::find(seen.begin(), seen.end(), note) == seen.end()) {
                seen.push_back(note);
                out += "note: " + note + "\n";
            }
        }
    }
    return out;
}

std::string render_min_pairs_table(int lo, int hi) {
    std::vector<std::vector<std::string>> rows{
        {"n_unknown", "min_bell_pairs", "log2(ceil(n/2))"}};
    for (int n = lo; n <= hi; ++n) {
        rows.push_back({std::to_string(n), std::to_string(min_bell_pairs(n)),
                        format_double(halved_log_formula(n))});
    }
    return render_rows(rows);
}

} // namespace qtele
