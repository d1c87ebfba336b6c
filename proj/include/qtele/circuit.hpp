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

#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "qtele/kernels.hpp"
#include "qtele/labels.hpp"

namespace qtele {

enum class GateKind { CNOT, SWAP, H, X, Y, Z, I };

std::string_view to_string(GateKind kind) noexcept;

/// Number of operands the gate kind takes (2 for CNOT/SWAP, 1 otherwise).
std::size_t arity(GateKind kind) noexcept;

/// Matrix of a single-qubit gate kind. Throws for CNOT/SWAP.
kernels::Mat2 single_qubit_matrix(GateKind kind);

/// One gate with its operands. For CNOT the operands are (control, target).
class GateOp {
  public:
    GateOp(GateKind kind, std::vector<QubitLabel> operands);

    static GateOp cnot(QubitLabel control, QubitLabel target) {
        return GateOp(GateKind::CNOT, {std::move(control), std::move(target)});
    }
    static GateOp swap(QubitLabel a, QubitLabel b) {
        return GateOp(GateKind::SWAP, {std::move(a), std::move(b)});
    }
    static GateOp single(GateKind kind, QubitLabel q) {
        return GateOp(kind, {std::move(q)});
    }

    [[nodiscard]] GateKind kind() const noexcept { return kind_; }
    [[nodiscard]] const std::vector<QubitLabel> &operands() const noexcept {
        return operands_;
    }

    friend bool operator==(const GateOp &, const GateOp &) = default;

  private:
    GateKind kind_;
    std::vector<QubitLabel> operands_;
};

/// "CNOT(a->b)", "SWAP(b,c)", "H(a)".
std::string to_string(const GateOp &op);

/**
 * Ordered gate list over a declared register. Gates apply in list order:
 * ops()[0] acts first, as in a circuit diagram read left to right.
 */
class Circuit {
  public:
    explicit Circuit(Register qubits);

    /// Throws LabelError if an operand is not in the declared register.
    Circuit &append(GateOp op);

    [[nodiscard]] const Register &qubits() const noexcept { return qubits_; }
    [[nodiscard]] const std::vector<GateOp> &ops() const noexcept {
        return ops_;
    }
    [[nodiscard]] std::size_t size() const noexcept { return ops_.size(); }
    [[nodiscard]] bool empty() const noexcept { return ops_.empty(); }

    /// Gate order reversed. Every supported gate is its own inverse.
    [[nodiscard]] Circuit inverse() const;

    /// Same gates with every label passed through `mapping`. Labels absent
    /// from the mapping are kept.
    [[nodiscard]] Circuit
    relabeled(const std::map<QubitLabel, QubitLabel> &mapping) const;

    [[nodiscard]] std::map<GateKind, std::size_t> gate_counts() const;

  private:
    Register qubits_;
    std::vector<GateOp> ops_;
};

/**
 * Converts an operator product written in algebraic order (rightmost factor
 * acts first) into diagram order.
 */
Circuit from_operator_product(Register qubits, std::vector<GateOp> factors);

} // namespace qtele
