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

// Compiled with -mavx2. Nothing in here may run before active() has checked
// the CPU.

#include "qtele/kernels.hpp"

#include <immintrin.h>

namespace qtele::kernels::avx2 {

namespace {

inline double *raw(std::span<Complex> amps) {
    return reinterpret_cast<double *>(amps.data());
}

inline const double *raw(std::span<const Complex> amps) {
    return reinterpret_cast<const double *>(amps.data());
}

struct BroadcastMat2 {
    __m256d re[4];
    __m256d im[4];

    explicit BroadcastMat2(const Mat2 &m) {
        for (int k = 0; k < 4; ++k) {
            re[k] = _mm256_set1_pd(m[k].real());
            im[k] = _mm256_set1_pd(m[k].imag());
        }
    }
};

// (mre + i mim) * v for the two complex values packed in v; same operation
// order as std::complex multiplication.
inline __m256d cmul(__m256d mre, __m256d mim, __m256d v) {
    const __m256d swapped = _mm256_permute_pd(v, 0b0101);
    return _mm256_addsub_pd(_mm256_mul_pd(mre, v), _mm256_mul_pd(mim, swapped));
}

inline void butterfly(double *lo, double *hi, const BroadcastMat2 &m) {
    const __m256d v0 = _mm256_loadu_pd(lo);
    const __m256d v1 = _mm256_loadu_pd(hi);
    const __m256d r0 = _mm256_add_pd(cmul(m.re[0], m.im[0], v0),
                                     cmul(m.re[1], m.im[1], v1));
    const __m256d r1 = _mm256_add_pd(cmul(m.re[2], m.im[2], v0),
                                     cmul(m.re[3], m.im[3], v1));
    _mm256_storeu_pd(lo, r0);
    _mm256_storeu_pd(hi, r1);
}

inline double horizontal_sum(__m256d v) {
    const __m128d lo = _mm256_castpd256_pd128(v);
    const __m128d hi = _mm256_extractf128_pd(v, 1);
    const __m128d s = _mm_add_pd(lo, hi);
    return _mm_cvtsd_f64(_mm_add_sd(s, _mm_unpackhi_pd(s, s)));
}

} // namespace

void apply_matrix(std::span<Complex> amps, unsigned target_bit, const Mat2 &m) {
    if (target_bit == 0) {
        scalar::apply_matrix(amps, target_bit, m);
        return;
    }
    const BroadcastMat2 bm(m);
    const std::size_t n = amps.size();
    const std::size_t stride = std::size_t{1} << target_bit;
    double *data = raw(amps);
    for (std::size_t base = 0; base < n; base += 2 * stride) {
        for (std::size_t j = 0; j < stride; j += 2) {
            const std::size_t lo = base + j;
            butterfly(data + 2 * lo, data + 2 * (lo + stride), bm);
        }
    }
}

void apply_controlled(std::span<Complex> amps, unsigned control_bit,
                      unsigned target_bit, const Mat2 &m) {
    if (target_bit == 0 || control_bit == 0) {
        scalar::apply_controlled(amps, control_bit, target_bit, m);
        return;
    }
    const BroadcastMat2 bm(m);
    const std::size_t n = amps.size();
    const std::size_t stride = std::size_t{1} << target_bit;
    const std::size_t control_mask = std::size_t{1} << control_bit;
    double *data = raw(amps);
    for (std::size_t base = 0; base < n; base += 2 * stride) {
        for (std::size_t j = 0; j < stride; j += 2) {
            const std::size_t lo = base + j;
            // lo is even and control_bit >= 1, so lo and lo+1 agree on it
            if ((lo & control_mask) == 0) {
                continue;
            }
            butterfly(data + 2 * lo, data + 2 * (lo + stride), bm);
        }
    }
}

void swap_bits(std::span<Complex> amps, unsigned bit_a, unsigned bit_b) {
    if (bit_a == 0 || bit_b == 0) {
        scalar::swap_bits(amps, bit_a, bit_b);
        return;
    }
    const std::size_t mask_a = std::size_t{1} << bit_a;
    const std::size_t mask_b = std::size_t{1} << bit_b;
    double *data = raw(amps);
    for (std::size_t i = 0; i < amps.size(); i += 2) {
        if ((i & mask_a) != 0 && (i & mask_b) == 0) {
            double *p = data + 2 * i;
            double *q = data + 2 * (i ^ mask_a ^ mask_b);
            const __m256d vp = _mm256_loadu_pd(p);
            const __m256d vq = _mm256_loadu_pd(q);
            _mm256_storeu_pd(p, vq);
            _mm256_storeu_pd(q, vp);
        }
    }
}

Complex inner_product(std::span<const Complex> a, std::span<const Complex> b) {
    const double *pa = raw(a);
    const double *pb = raw(b);
    __m256d acc_re = _mm256_setzero_pd(); // (ar*br, ai*bi) pairs
    __m256d acc_im = _mm256_setzero_pd(); // (ar*bi, ai*br) pairs
    std::size_t i = 0;
    for (; i + 2 <= a.size(); i += 2) {
        const __m256d va = _mm256_loadu_pd(pa + 2 * i);
        const __m256d vb = _mm256_loadu_pd(pb + 2 * i);
        acc_re = _mm256_add_pd(acc_re, _mm256_mul_pd(va, vb));
        acc_im = _mm256_add_pd(
            acc_im, _mm256_mul_pd(va, _mm256_permute_pd(vb, 0b0101)));
    }
    // fold the odd lanes: re = even + odd, im = even - odd
    const __m256d sign = _mm256_set_pd(-1.0, 1.0, -1.0, 1.0);
    double re = horizontal_sum(acc_re);
    double im = horizontal_sum(_mm256_mul_pd(acc_im, sign));
    for (; i < a.size(); ++i) {
        re += a[i].real() * b[i].real() + a[i].imag() * b[i].imag();
        im += a[i].real() * b[i].imag() - a[i].imag() * b[i].real();
    }
    return {re, im};
}

double norm_squared(std::span<const Complex> a) {
    const double *pa = raw(a);
    __m256d acc = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 2 <= a.size(); i += 2) {
        const __m256d v = _mm256_loadu_pd(pa + 2 * i);
        acc = _mm256_add_pd(acc, _mm256_mul_pd(v, v));
    }
    double total = horizontal_sum(acc);
    for (; i < a.size(); ++i) {
        total += std::norm(a[i]);
    }
    return total;
}

} // namespace qtele::kernels::avx2
