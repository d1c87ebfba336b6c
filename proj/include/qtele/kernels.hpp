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
 * Amplitude kernels for dense statevectors.
 *
 * Every kernel has a portable scalar reference implementation. On x86-64 an
 * AVX2 variant is compiled in a separate translation unit and selected at
 * runtime when the CPU supports it. The two variants must agree to within
 * double-precision roundoff; see tests/test_kernels.cpp.
 *
 * Bit positions count from the least significant bit of the basis index.
 */

#pragma once

#include <array>
#include <complex>
#include <cstddef>
#include <span>
#include <string_view>

namespace qtele::kernels {

using Complex = std::complex<double>;

/// Row-major 2x2 complex matrix.
using Mat2 = std::array<Complex, 4>;

/// Applies `m` to the qubit at `target_bit`.
using ApplyMatrixFn = void (*)(std::span<Complex> amps, unsigned target_bit,
                               const Mat2 &m);

/// Applies `m` to `target_bit` on the subspace where `control_bit` is 1.
using ApplyControlledFn = void (*)(std::span<Complex> amps,
                                   unsigned control_bit, unsigned target_bit,
                                   const Mat2 &m);

/// Exchanges the values of two bit positions in every basis index.
using SwapBitsFn = void (*)(std::span<Complex> amps, unsigned bit_a,
                            unsigned bit_b);

/// Returns sum_i conj(a_i) * b_i.
using InnerProductFn = Complex (*)(std::span<const Complex> a,
                                   std::span<const Complex> b);

/// Returns sum_i |a_i|^2.
using NormSquaredFn = double (*)(std::span<const Complex> a);

enum class Backend { Scalar, Avx2 };

struct KernelTable {
    Backend backend;
    std::string_view name;
    ApplyMatrixFn apply_matrix;
    ApplyControlledFn apply_controlled;
    SwapBitsFn swap_bits;
    InnerProductFn inner_product;
    NormSquaredFn norm_squared;
};

namespace scalar {
void apply_matrix(std::span<Complex> amps, unsigned target_bit, const Mat2 &m);
void apply_controlled(std::span<Complex> amps, unsigned control_bit,
                      unsigned target_bit, const Mat2 &m);
void swap_bits(std::span<Complex> amps, unsigned bit_a, unsigned bit_b);
Complex inner_product(std::span<const Complex> a, std::span<const Complex> b);
double norm_squared(std::span<const Complex> a);
} // namespace scalar

#if defined(QTELE_HAVE_AVX2)
namespace avx2 {
// Fall back to the scalar path internally when a stride is too small to
// fill a 256-bit register with two complex values.
void apply_matrix(std::span<Complex> amps, unsigned target_bit, const Mat2 &m);
void apply_controlled(std::span<Complex> amps, unsigned control_bit,
                      unsigned target_bit, const Mat2 &m);
void swap_bits(std::span<Complex> amps, unsigned bit_a, unsigned bit_b);
Complex inner_product(std::span<const Complex> a, std::span<const Complex> b);
double norm_squared(std::span<const Complex> a);
} // namespace avx2
#endif

const KernelTable &scalar_table() noexcept;

/// Returns the AVX2 table, or nullptr when it is not compiled in or the CPU
/// lacks AVX2.
const KernelTable *avx2_table() noexcept;

/**
 * The table used by StateVector operations. Resolved once on first use:
 * AVX2 when available, unless the environment variable QTELE_KERNELS is set
 * to "scalar".
 */
const KernelTable &active() noexcept;

} // namespace qtele::kernels
