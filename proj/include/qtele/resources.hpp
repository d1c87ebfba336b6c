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

#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qtele/protocol.hpp"

namespace qtele {

enum class Scheme { ZhaoCluster, TwoBellPairs };

std::string_view to_string(Scheme s) noexcept;

struct ResourceReport {
    std::string scheme_name;
    int channel_qubits = 0;
    /// 0 when the channel is not a product of Bell pairs.
    int bell_pairs = 0;
    bool product_channel = false;
    /// Empty when the scheme's classical cost is not modeled.
    std::optional<int> classical_bits;
    /// Local gates on the sender side, by kind name.
    std::map<std::string, int> sender_gates;
    std::map<std::string, int> receiver_gates;
    /// Upper bound on single-qubit correction gates per run.
    int correction_gates = 0;
    int n_unknown_coefficients = 4;
    int min_bell_pairs_required = 0;
    std::vector<std::string> notes;
};

/// ceil(log2 n): qubits, hence Bell pairs, needed to carry n unknown
/// amplitudes. Throws Error for n < 1.
int min_bell_pairs(int n_unknown);

/// log2(ceil(n / 2)). Kept only to show how it differs from
/// min_bell_pairs. Throws Error for n < 1.
double halved_log_formula(int n_unknown);

/// Resource summary of a scheme; gate counts come from the actual circuits
/// for `variant`.
ResourceReport audit(Scheme scheme,
                     CompressionVariant variant = CompressionVariant::TwoCnot);

/// True iff the run used exactly min_bell_pairs(4) pairs and reached
/// fidelity_8q >= 1 - kFidelityTolerance.
bool saturation_check(const TeleportTranscript &t);

/// Aligned plain-text comparison of the given reports.
std::string render_comparison_table(const std::vector<ResourceReport> &reports);

/// Aligned table of n, ceil(log2 n) and log2(ceil(n/2)) for n in [lo, hi].
std::string render_min_pairs_table(int lo, int hi);

} // namespace qtele
