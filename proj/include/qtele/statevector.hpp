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
 * Dense statevector over labeled qubits.
 *
 * The basis index uses labels()[0] as its most significant bit, so the
 * amplitude of |11011111> on register a..h lives at index 223.
 */

#pragma once

#include <complex>
#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "qtele/circuit.hpp"
#include "qtele/kernels.hpp"
#include "qtele/labels.hpp"

namespace qtele {

using Amplitude = std::complex<double>;

inline constexpr std::size_t kMaxQubits = 16;

/// Admissible deviation of the squared norm from 1.
inline constexpr double kNormTolerance = 1e-12;

/// Tolerance for factorization and fidelity assertions.
inline constexpr double kFidelityTolerance = 1e-10;

class StateVector {
  public:
    /**
     * Validates and takes ownership. Throws DimensionError when the
     * amplitude count is not 2^n or n is outside [1, kMaxQubits],
     * LabelError on repeated labels, NormalizationError on non-finite
     * amplitudes or a squared norm off by more than kNormTolerance.
     */
    StateVector(Register labels, std::vector<Amplitude> amps);

    /// Like the validating constructor, but rescales to unit norm first.
    /// Throws NormalizationError for a zero or non-finite vector.
    static StateVector normalized(Register labels, std::vector<Amplitude> amps);

    [[nodiscard]] std::size_t num_qubits() const noexcept {
        return labels_.size();
    }
    [[nodiscard]] std::size_t dimension() const noexcept { return amps_.size(); }
    [[nodiscard]] const Register &labels() const noexcept { return labels_; }
    [[nodiscard]] std::span<const Amplitude> amplitudes() const noexcept {
        return amps_;
    }
    [[nodiscard]] Amplitude operator[](std::size_t index) const {
        return amps_.at(index);
    }

    [[nodiscard]] bool contains(const QubitLabel &q) const noexcept;

    /// Position of `q` in labels(). Throws LabelError if absent.
    [[nodiscard]] std::size_t position(const QubitLabel &q) const;

    /// Bit of the basis index that stores qubit `q` (0 = least significant).
    [[nodiscard]] unsigned bit(const QubitLabel &q) const;

    [[nodiscard]] double norm_squared() const;

    /// In-place gate application on an owned copy.
    void apply(const GateOp &op);

    /// In-place application of an arbitrary 2x2 matrix to `q`. The caller
    /// is responsible for unitarity.
    void apply_matrix(const QubitLabel &q, const kernels::Mat2 &m);

    void multiply_phase(Amplitude phase);

    friend bool operator==(const StateVector &, const StateVector &) = default;

  private:
    struct Unchecked {};
    StateVector(Unchecked, Register labels, std::vector<Amplitude> amps)
        : labels_(std::move(labels)), amps_(std::move(amps)) {}

    friend StateVector tensor(const StateVector &, const StateVector &);
    friend StateVector permute_to(const StateVector &, const Register &);
    friend StateVector relabeled(const StateVector &,
                                 const std::map<QubitLabel, QubitLabel> &);

    Register labels_;
    std::vector<Amplitude> amps_;
};

/// Basis index of a bitstring such as "0110"; bits[0] is the MSB. Throws
/// DimensionError for characters other than 0/1 or more than kMaxQubits.
std::size_t basis_index(std::string_view bits);

/// |bits> on `labels`. Throws DimensionError on length mismatch,
/// LabelError on repeated labels.
StateVector make_basis_state(Register labels, std::string_view bits);

StateVector apply_gate(const StateVector &state, const GateOp &op);

/// Applies c.ops() in order. Throws LabelError if an operand is missing.
StateVector apply_circuit(const StateVector &state, const Circuit &c);

/// Kronecker product; labels of `first` come first. Throws LabelError on
/// overlapping labels.
StateVector tensor(const StateVector &first, const StateVector &second);

/// Reorders the register without changing the physical state.
StateVector permute_to(const StateVector &state, const Register &order);

/// Renames labels; amplitudes are untouched. Labels absent from the
/// mapping are kept.
StateVector relabeled(const StateVector &state,
                      const std::map<QubitLabel, QubitLabel> &mapping);

/// <a|b> after aligning b's register to a's. Throws LabelError when the
/// label sets differ.
Amplitude inner_product(const StateVector &a, const StateVector &b);

/// |<a|b>|^2, insensitive to global phase.
double fidelity(const StateVector &a, const StateVector &b);

/// Largest amplitude-wise |a_i - b_i| after aligning b to a's register.
double max_deviation(const StateVector &a, const StateVector &b);

struct Factorization {
    bool is_product = false;
    /// Largest amplitude deviation between the state and factor (x) rest.
    double residual = 0.0;
    /// Normalized factor on the requested qubits, in the requested order.
    std::optional<StateVector> factor;
    /// Normalized factor on the remaining qubits, in register order.
    std::optional<StateVector> rest;
};

/**
 * Tests whether `state` = factor(part) (x) rest within kFidelityTolerance.
 *
 * The factor carries the phase of the dominant column, the rest factor has
 * its largest entry real and positive. Throws LabelError unless `part` is a
 * nonempty proper subset of the register.
 */
Factorization product_check(const StateVector &state, const Register &part);

} // namespace qtele
