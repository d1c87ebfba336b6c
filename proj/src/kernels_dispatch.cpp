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

#include <cstdlib>
#include <string_view>

namespace qtele::kernels {

const KernelTable &scalar_table() noexcept {
    static constexpr KernelTable table{
        Backend::Scalar,       "scalar",
        &scalar::apply_matrix, &scalar::apply_controlled,
        &scalar::swap_bits,    &scalar::inner_product,
        &scalar::norm_squared,
    };
    return table;
}

const KernelTable *avx2_table() noexcept {
#if defined(QTELE_HAVE_AVX2)
    static constexpr KernelTable table{
        Backend::Avx2,       "avx2",
        &avx2::apply_matrix, &avx2::apply_controlled,
        &avx2::swap_bits,    &avx2::inner_product,
        &avx2::norm_squared,
    };
    static const bool supported = __builtin_cpu_supports("avx2") != 0;
    return supported ? &table : nullptr;
#else
    return nullptr;
#endif
}

namespace {

const KernelTable &resolve() noexcept {
    const char *requested = std::getenv("QTELE_KERNELS");
    if (requested != nullptr && std::string_view(requested) == "scalar") {
        return scalar_table();
    }
    if (const KernelTable *simd = avx2_table()) {
        return *simd;
    }
    return scalar_table();
}

} // namespace

const KernelTable &active() noexcept {
    static const KernelTable &table = resolve();
    return table;
}

} // namespace qtele::kernels
