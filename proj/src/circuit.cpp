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

#include "qtele/circuit.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "qtele/errors.hpp"

namespace qtele {

Register register_from_chars(std::string_view names) {
    Register out;
    out.reserve(names.size());
    for (char c : names) {
        out.emplace_back(std::string(1, c));
    }
    return out;
}

void require_unique(const Register &labels) {
    std::set<QubitLabel> seen;
    for (const auto &q : labels) {
        if (!seen.insert(q).second) {
            throw LabelError("duplicate qubit label '" + q.name() + "'");
        }
    }
}

std::string join_labels(const Register &labels) {
    std::string out;
    for (std::size_t i = 0; i < labels.size(); ++i) {
        if (i != 0) {
            out += ',';
        }
        out += labels[i].name();
    }
    return out;
}

std::string_view to_string(GateKind kind) noexcept {
    switch (kind) {
    case GateKind::CNOT:
        return "CNOT";
    case GateKind::SWAP:
        return "SWAP";
    case GateKind::H:
        return "H";
    case GateKind::X:
        return "X";
    case GateKind::Y:
        return "Y";
    case GateKind::Z:
        return "Z";
    case GateKind::I:
        return "I";
    }
    return "?";
}

std::size_t arity(GateKind kind) noexcept {
    return (kind == GateKind::CNOT || kind == GateKind::SWAP) ? 2 : 1;
}

kernels::Mat2 single_qubit_matrix(GateKind kind) {
    using C = kernels::Complex;
    const double r = 1.0 / std::sqrt(2.0);
    switch (kind) {
    case GateKind::H:
        return {C{r}, C{r}, C{r}, C{-r}};
    case GateKind::X:
        return {C{0}, C{1}, C{1}, C{0}};
    case GateKind::Y:
        return {C{0}, C{0, -1}, C{0, 1}, C{0}};
    case GateKind::Z:
        return {C{1}, C{0}, C{0}, C{-1}};
    case GateKind::I:
        return {C{1}, C{0}, C{0}, C{1}};
    case GateKind::CNOT:
    case GateKind::SWAP:
        break;
    }
    throw Error(std::string(to_string(kind)) + " is not a single-qubit gate");
}

GateOp::GateOp(GateKind kind, std::vector<QubitLabel> operands)
    : kind_(kind), operands_(std::move(operands)) {
    if (operands_.size() != arity(kind_)) {
        throw LabelError(std::string(to_string(kind_)) + " takes " +
                         std::to_string(arity(kind_)) + " operand(s), got " +
                         std::to_string(operands_.size()));
    }
    if (operands_.size() == 2 && operands_[0] == operands_[1]) {
        throw LabelError(std::string(to_string(kind_)) +
                         " operands must be distinct, got '" +
                         operands_[0].name() + "' twice");
    }
}

std::string to_string(const GateOp &op) {
    std::string out(to_string(op.kind()));
    const auto &q = op.operands();
    if (op.kind() == GateKind::CNOT) {
        return out + "(" + q[0].name() + "->" + q[1].name() + ")";
    }
    out += '(';
    out += join_labels(q);
    out += ')';
    return out;
}

Circuit::Circuit(Register qubits) : qubits_(std::move(qubits)) {
    require_unique(qubits_);
}

Circuit &Circuit::append(GateOp op) {
    for (const auto &q : op.operands()) {
        if (std::find(qubits_.begin(), qubits_.end(), q) == qubits_.end()) {
            throw LabelError("gate " + to_string(op) + " uses '" + q.name() +
                             "', which is not in the circuit register");
        }
    }
    ops_.push_back(std::move(op));
    return *this;
}

Circuit Circuit::inverse() const {
    Circuit out(qubits_);
    out.ops_.assign(ops_.rbegin(), ops_.rend());
    return out;
}

Circuit
Circuit::relabeled(const std::map<QubitLabel, QubitLabel> &mapping) const {
    auto map_one = [&](const QubitLabel &q) {
        auto it = mapping.find(q);
        return it == mapping.end() ? q : it->second;
    };
    Register qubits;
    qubits.reserve(qubits_.size());
    for (const auto &q : qubits_) {
        qubits.push_back(map_one(q));
    }
    Circuit out(std::move(qubits));
    for (const auto &op : ops_) {
        std::vector<QubitLabel> operands;
        for (const auto &q : op.operands()) {
            operands.push_back(map_one(q));
        }
        out.append(GateOp(op.kind(), std::move(operands)));
    }
    return out;
}

std::map<GateKind, std::size_t> Circuit::gate_counts() const {
    std::map<GateKind, std::size_t> counts;
    for (const auto &op : ops_) {
        ++counts[op.kind()];
    }
    return counts;
}

Circuit from_operator_product(Register qubits, std::vector<GateOp> factors) {
    Circuit out(std::move(qubits));
    for (auto it = factors.rbegin(); it != factors.rend(); ++it) {
        out.append(*it);
    }
    return out;
}

} // namespace qtele
