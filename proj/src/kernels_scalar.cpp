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

#include "qtele/kernels.hpp"

#include <cstdint>
#include <utility>

namespace qtele::kernels::scalar {

void apply_matrix(std::span<Complex> amps, unsigned target_bit, const Mat2 &m) {
    const std::size_t n = amps.size();
    const std::size_t stride = std::size_t{1} << target_bit;
    for (std::size_t base = 0; base < n; base += 2 * stride) {
        for (std::size_t j = 0; j < stride; ++j) {
            const std::size_t lo = base + j;
            const std::size_t hi = lo + stride;
            const Complex v0 = amps[lo];
            const Complex v1 = amps[hi];
            amps[lo] = m[0] * v0 + m[1] * v1;
            amps[hi] = m[2] * v0 + m[3] * v1;
        }
    }
}

void apply_controlled(std::span<Complex> amps, unsigned control_bit,
                      unsigned target_bit, const Mat2 &m) {
    const std::size_t n = amps.size();
    const std::size_t stride = std::size_t{1} << target_bit;
    const std::size_t control_mask = std::size_t{1} << control_bit;
    for (std::size_t base = 0; base < n; base += 2 * stride) {
        for (std::size_t j = 0; j < stride; ++j) {
            const std::size_t lo = base + j;
            if ((lo & control_mask) == 0) {
                continue;
            }
            const std::size_t hi = lo + stride;
            const Complex v0 = amps[lo];
            const Complex v1 = amps[hi];
            amps[lo] = m[0] * v0 + m[1] * v1;
            amps[hi] = m[2] * v0 + m[3] * v1;
        }
    }
}

void swap_bits(std::span<Complex> amps, unsigned bit_a, unsigned bit_b) {
    const std::size_t mask_a = std::size_t{1} << bit_a;
    const std::size_t mask_b = std::size_t{1} << bit_b;
    for (std::size_t i = 0; i < amps.size(); ++i) {
        // visit each exchanged pair once, from its (a=1, b=0) member
        if ((i & mask_a) != 0 && (i & mask_b) == 0) {
            std::swap(amps[i], amps[i ^ mask_a ^ mask_b]);
        }
    }
}

Complex inner_product(std::span<const Complex> a, std::span<const Complex> b) {
    double re = 0.0;
    double im = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        re += a[i].real() * b[i].real() + a[i].imag() * b[i].imag();
        im += a[i].real() * b[i].imag() - a[i].imag() * b[i].real();
    }
    return {re, im};
}

double norm_squared(std::span<const Complex> a) {
    double acc = 0.0;
    for (const Complex &z : a) {
        acc += z.real() * z.real() + z.imag() * z.imag();
    }
    return acc;
}

} // namespace qtele::kernels::scalar
