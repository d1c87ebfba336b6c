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

// Test-only helpers: random inputs and a dense-matrix reference that shares
// no code with the stride kernels.

#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <random>
#include <string>
#include <vector>

#include "qtele/bell.hpp"
#include "qtele/statevector.hpp"

namespace qtele::testing {

using Complex = std::complex<double>;
using Dense = std::vector<std::vector<Complex>>;

inline std::vector<Complex> random_amplitudes(std::size_t dim, Rng &rng) {
    std::normal_distribution<double> g;
    std::vector<Complex> v(dim);
    double norm = 0.0;
    for (auto &z : v) {
        z = {g(rng), g(rng)};
        norm += std::norm(z);
    }
    for (auto &z : v) {
        z /= std::sqrt(norm);
    }
    return v;
}

inline StateVector random_state(const Register &labels, Rng &rng) {
    return StateVector::normalized(
        labels, random_amplitudes(std::size_t{1} << labels.size(), rng));
}

inline Dense identity(std::size_t dim) {
    Dense m(dim, std::vector<Complex>(dim));
    for (std::size_t i = 0; i < dim; ++i) {
        m[i][i] = 1.0;
    }
    return m;
}

inline Dense kron(const Dense &a, const Dense &b) {
    const std::size_t n = a.size();
    const std::size_t m = b.size();
    Dense out(n * m, std::vector<Complex>(n * m));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < m; ++k)
                for (std::size_t l = 0; l < m; ++l)
                    out[i * m + k][j * m + l] = a[i][j] * b[k][l];
    return out;
}

inline Dense from_mat2(const kernels::Mat2 &m) {
    return {{m[0], m[1]}, {m[2], m[3]}};
}

/// Full-register matrix of a single-qubit operator on register position
/// `pos` (0 = most significant) of an n-qubit register.
inline Dense embed_single(const kernels::Mat2 &m, std::size_t pos, std::size_t n) {
    Dense out = {{1.0}};
    for (std::size_t k = 0; k < n; ++k) {
        out = kron(out, k == pos ? from_mat2(m) : identity(2));
    }
    return out;
}

/// Permutation matrix that maps basis index i to f(i).
template <class F> Dense permutation_matrix(std::size_t dim, F f) {
    Dense out(dim, std::vector<Complex>(dim));
    for (std::size_t i = 0; i < dim; ++i) {
        out[f(i)][i] = 1.0;
    }
    return out;
}

inline std::vector<Complex> multiply(const Dense &m, std::span<const Complex> v) {
    std::vector<Complex> out(m.size());
    for (std::size_t i = 0; i < m.size(); ++i) {
        for (std::size_t j = 0; j < v.size(); ++j) {
            out[i] += m[i][j] * v[j];
        }
    }
    return out;
}

/// Reference action of a gate on a register, via a full 2^n x 2^n matrix.
inline std::vector<Complex> dense_apply(const StateVector &s, const GateOp &op) {
    const std::size_t n = s.num_qubits();
    const std::size_t dim = s.dimension();
    const auto &q = op.operands();
    // register position p corresponds to index bit (n - 1 - p)
    auto bit_of = [&](const QubitLabel &l) { return n - 1 - s.position(l); };
    Dense m;
    switch (op.kind()) {
    case GateKind::CNOT: {
        const auto c = bit_of(q[0]);
        const auto t = bit_of(q[1]);
        m = permutation_matrix(dim, [&](std::size_t i) {
            return ((i >> c) & 1U) ? i ^ (std::size_t{1} << t) : i;
        });
        break;
    }
    case GateKind::SWAP: {
        const auto a = bit_of(q[0]);
        const auto b = bit_of(q[1]);
        m = permutation_matrix(dim, [&](std::size_t i) {
            const std::size_t ba = (i >> a) & 1U;
            const std::size_t bb = (i >> b) & 1U;
            std::size_t j = i & ~((std::size_t{1} << a) | (std::size_t{1} << b));
            return j | (ba << b) | (bb << a);
        });
        break;
    }
    default:
        m = embed_single(single_qubit_matrix(op.kind()), s.position(q[0]), n);
        break;
    }
    return multiply(m, s.amplitudes());
}

inline double max_abs_diff(std::span<const Complex> a, std::span<const Complex> b) {
    double worst = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        worst = std::max(worst, std::abs(a[i] - b[i]));
    }
    return worst;
}

/// Index of a basis bitstring by placing each bit individually.
inline std::size_t place_bits(const std::string &bits) {
    std::size_t index = 0;
    const std::size_t n = bits.size();
    for (std::size_t k = 0; k < n; ++k) {
        if (bits[k] == '1') {
            index += std::size_t{1} << (n - 1 - k);
        }
    }
    return index;
}

/// Classical action of CNOT/SWAP circuits on a bitstring indexed like the
/// register (character k is register position k).
inline std::string trace_bits(std::string bits, const Register &reg,
                              const Circuit &c) {
    auto pos = [&](const QubitLabel &l) {
        for (std::size_t k = 0; k < reg.size(); ++k) {
            if (reg[k] == l) {
                return k;
            }
        }
        return reg.size();
    };
    for (const auto &op : c.ops()) {
        const auto &q = op.operands();
        if (op.kind() == GateKind::CNOT) {
            if (bits[pos(q[0])] == '1') {
                char &t = bits[pos(q[1])];
                t = t == '1' ? '0' : '1';
            }
        } else if (op.kind() == GateKind::SWAP) {
            std::swap(bits[pos(q[0])], bits[pos(q[1])]);
        }
    }
    return bits;
}

} // namespace qtele::testing
