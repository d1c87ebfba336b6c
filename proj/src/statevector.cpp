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

#include "qtele/statevector.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <string>

#include "qtele/errors.hpp"

namespace qtele {

namespace {

void check_register_size(std::size_t n) {
    if (n == 0 || n > kMaxQubits) {
        throw DimensionError("register size " + std::to_string(n) +
                             " outside [1, " + std::to_string(kMaxQubits) +
                             "]");
    }
}

void check_shape(const Register &labels, const std::vector<Amplitude> &amps) {
    check_register_size(labels.size());
    require_unique(labels);
    const std::size_t expected = std::size_t{1} << labels.size();
    if (amps.size() != expected) {
        throw DimensionError("expected " + std::to_string(expected) +
                             " amplitudes for " +
                             std::to_string(labels.size()) +
                             " qubits, got " + std::to_string(amps.size()));
    }
    for (const Amplitude &z : amps) {
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
            throw NormalizationError("non-finite amplitude");
        }
    }
}

std::vector<Amplitude> aligned_amplitudes(const StateVector &reference,
                                          const StateVector &other) {
    if (other.labels() == reference.labels()) {
        return {other.amplitudes().begin(), other.amplitudes().end()};
    }
    const auto aligned = permute_to(other, reference.labels());
    return {aligned.amplitudes().begin(), aligned.amplitudes().end()};
}

} // namespace

StateVector::StateVector(Register labels, std::vector<Amplitude> amps)
    : labels_(std::move(labels)), amps_(std::move(amps)) {
    check_shape(labels_, amps_);
    const double norm = kernels::active().norm_squared(amps_);
    if (std::abs(norm - 1.0) > kNormTolerance) {
        throw NormalizationError("squared norm " + std::to_string(norm) +
                                 " is not 1");
    }
}

StateVector StateVector::normalized(Register labels,
                                    std::vector<Amplitude> amps) {
    check_shape(labels, amps);
    const double norm = std::sqrt(kernels::active().norm_squared(amps));
    if (!(norm > 0.0) || !std::isfinite(norm)) {
        throw NormalizationError("cannot normalize a zero vector");
    }
    for (Amplitude &z : amps) {
        z /= norm;
    }
    return StateVector(std::move(labels), std::move(amps));
}

bool StateVector::contains(const QubitLabel &q) const noexcept {
    return std::find(labels_.begin(), labels_.end(), q) != labels_.end();
}

std::size_t StateVector::position(const QubitLabel &q) const {
    auto it = std::find(labels_.begin(), labels_.end(), q);
    if (it == labels_.end()) {
        throw LabelError("qubit '" + q.name() + "' not in register [" +
                         join_labels(labels_) + "]");
    }
    return static_cast<std::size_t>(it - labels_.begin());
}

unsigned StateVector::bit(const QubitLabel &q) const {
    return static_cast<unsigned>(labels_.size() - 1 - position(q));
}

double StateVector::norm_squared() const {
    return kernels::active().norm_squared(amps_);
}

void StateVector::apply(const GateOp &op) {
    const auto &kern = kernels::active();
    const auto &q = op.operands();
    switch (op.kind()) {
    case GateKind::CNOT:
        kern.apply_controlled(amps_, bit(q[0]), bit(q[1]),
                              single_qubit_matrix(GateKind::X));
        return;
    case GateKind::SWAP:
        kern.swap_bits(amps_, bit(q[0]), bit(q[1]));
        return;
    case GateKind::I:
        (void)bit(q[0]);
        return;
    default:
        kern.apply_matrix(amps_, bit(q[0]), single_qubit_matrix(op.kind()));
        return;
    }
}

void StateVector::apply_matrix(const QubitLabel &q, const kernels::Mat2 &m) {
    kernels::active().apply_matrix(amps_, bit(q), m);
}

void StateVector::multiply_phase(Amplitude phase) {
    for (Amplitude &z : amps_) {
        z *= phase;
    }
}

std::size_t basis_index(std::string_view bits) {
    if (bits.size() > kMaxQubits) {
        throw DimensionError("bitstring longer than " +
                             std::to_string(kMaxQubits));
    }
    std::size_t index = 0;
    for (char c : bits) {
        if (c != '0' && c != '1') {
            throw DimensionError("bitstring may contain only 0 and 1, got '" +
                                 std::string(bits) + "'");
        }
        index = (index << 1) | static_cast<std::size_t>(c - '0');
    }
    return index;
}

StateVector make_basis_state(Register labels, std::string_view bits) {
    if (bits.size() != labels.size()) {
        throw DimensionError("bitstring '" + std::string(bits) + "' has " +
                             std::to_string(bits.size()) + " bits for " +
                             std::to_string(labels.size()) + " qubits");
    }
    check_register_size(labels.size());
    require_unique(labels);
    std::vector<Amplitude> amps(std::size_t{1} << labels.size());
    amps[basis_index(bits)] = 1.0;
    return StateVector(std::move(labels), std::move(amps));
}

StateVector apply_gate(const StateVector &state, const GateOp &op) {
    StateVector out = state;
    out.apply(op);
    return out;
}

StateVector apply_circuit(const StateVector &state, const Circuit &c) {
    for (const auto &op : c.ops()) {
        for (const auto &q : op.operands()) {
            (void)state.position(q);
        }
    }
    StateVector out = state;
    for (const auto &op : c.ops()) {
        out.apply(op);
    }
    return out;
}

StateVector tensor(const StateVector &first, const StateVector &second) {
    for (const auto &q : second.labels()) {
        if (first.contains(q)) {
            throw LabelError("tensor operands share qubit '" + q.name() + "'");
        }
    }
    Register labels = first.labels();
    labels.insert(labels.end(), second.labels().begin(), second.labels().end());
    check_register_size(labels.size());

    const auto a = first.amplitudes();
    const auto b = second.amplitudes();
    std::vector<Amplitude> amps(a.size() * b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < b.size(); ++j) {
            amps[i * b.size() + j] = a[i] * b[j];
        }
    }
    return StateVector(StateVector::Unchecked{}, std::move(labels),
                       std::move(amps));
}

StateVector permute_to(const StateVector &state, const Register &order) {
    const std::size_t n = state.num_qubits();
    if (order.size() != n) {
        throw LabelError("[" + join_labels(order) +
                         "] is not a permutation of [" +
                         join_labels(state.labels()) + "]");
    }
    require_unique(order);
    // source_bit[k]: bit of the old index that becomes bit k of the new one
    std::vector<unsigned> source_bit(n);
    for (std::size_t p = 0; p < n; ++p) {
        if (!state.contains(order[p])) {
            throw LabelError("[" + join_labels(order) +
                             "] is not a permutation of [" +
                             join_labels(state.labels()) + "]");
        }
        source_bit[n - 1 - p] = state.bit(order[p]);
    }
    const auto src = state.amplitudes();
    std::vector<Amplitude> amps(src.size());
    for (std::size_t old_index = 0; old_index < src.size(); ++old_index) {
        std::size_t new_index = 0;
        for (std::size_t k = 0; k < n; ++k) {
            new_index |= ((old_index >> source_bit[k]) & 1U) << k;
        }
        amps[new_index] = src[old_index];
    }
    return StateVector(StateVector::Unchecked{}, order, std::move(amps));
}

StateVector relabeled(const StateVector &state,
                      const std::map<QubitLabel, QubitLabel> &mapping) {
    Register labels;
    labels.reserve(state.num_qubits());
    for (const auto &q : state.labels()) {
        auto it = mapping.find(q);
        labels.push_back(it == mapping.end() ? q : it->second);
    }
    require_unique(labels);
    return StateVector(StateVector::Unchecked{}, std::move(labels),
                       {state.amplitudes().begin(), state.amplitudes().end()});
}

Amplitude inner_product(const StateVector &a, const StateVector &b) {
    const auto aligned = aligned_amplitudes(a, b);
    return kernels::active().inner_product(a.amplitudes(), aligned);
}

double fidelity(const StateVector &a, const StateVector &b) {
    return std::clamp(std::norm(inner_product(a, b)), 0.0, 1.0);
}

double max_deviation(const StateVector &a, const StateVector &b) {
    const auto aligned = aligned_amplitudes(a, b);
    double worst = 0.0;
    for (std::size_t i = 0; i < aligned.size(); ++i) {
        worst = std::max(worst, std::abs(a.amplitudes()[i] - aligned[i]));
    }
    return worst;
}

Factorization product_check(const StateVector &state, const Register &part) {
    if (part.empty() || part.size() >= state.num_qubits()) {
        throw LabelError("product_check needs a nonempty proper subset of [" +
                         join_labels(state.labels()) + "], got [" +
                         join_labels(part) + "]");
    }
    require_unique(part);
    for (const auto &q : part) {
        (void)state.position(q);
    }
    Register rest;
    for (const auto &q : state.labels()) {
        if (std::find(part.begin(), part.end(), q) == part.end()) {
            rest.push_back(q);
        }
    }
    Register order = part;
    order.insert(order.end(), rest.begin(), rest.end());
    const auto grouped = permute_to(state, order);
    const auto m = grouped.amplitudes();

    // view as a (2^|part|) x (2^|rest|) matrix; product iff rank one
    const std::size_t rows = std::size_t{1} << part.size();
    const std::size_t cols = std::size_t{1} << rest.size();
    std::size_t best = 0;
    for (std::size_t k = 1; k < m.size(); ++k) {
        if (std::abs(m[k]) > std::abs(m[best])) {
            best = k;
        }
    }
    const std::size_t pivot_col = best % cols;

    std::vector<Amplitude> u(rows);
    double col_norm = 0.0;
    for (std::size_t i = 0; i < rows; ++i) {
        u[i] = m[i * cols + pivot_col];
        col_norm += std::norm(u[i]);
    }
    col_norm = std::sqrt(col_norm);
    for (auto &z : u) {
        z /= col_norm;
    }
    std::vector<Amplitude> v(cols);
    for (std::size_t j = 0; j < cols; ++j) {
        Amplitude acc = 0.0;
        for (std::size_t i = 0; i < rows; ++i) {
            acc += std::conj(u[i]) * m[i * cols + j];
        }
        v[j] = acc;
    }
    double residual = 0.0;
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < cols; ++j) {
            residual = std::max(residual, std::abs(m[i * cols + j] - u[i] * v[j]));
        }
    }

    Factorization out;
    out.residual = residual;
    out.is_product = residual < kFidelityTolerance;
    if (out.is_product) {
        out.factor = StateVector::normalized(part, std::move(u));
        out.rest = StateVector::normalized(std::move(rest), std::move(v));
    }
    return out;
}

} // namespace qtele
