// Copyright 2026 The qgc Authors
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

#include <algorithm>
#include <atomic>
#include <stdexcept>
#include <string>

#include "qgc/kernels.h"

namespace qgc::simd {

std::string_view isa_name(Isa isa) {
    return isa == Isa::Avx2 ? "avx2" : "scalar";
}

void gemm_scalar(const cplx *a, const cplx *b, cplx *c, std::size_t m, std::size_t k, std::size_t n) {
    std::fill(c, c + m * n, cplx{0.0, 0.0});
    for (std::size_t i = 0; i < m; ++i) {
        cplx *crow = c + i * n;
        for (std::size_t p = 0; p < k; ++p) {
            const cplx aip = a[i * k + p];
            if (aip == cplx{0.0, 0.0}) {
                continue;
            }
            const cplx *brow = b + p * n;
            for (std::size_t j = 0; j < n; ++j) {
                crow[j] += aip * brow[j];
            }
        }
    }
}

cplx dotc_scalar(const cplx *x, const cplx *y, std::size_t n) {
    cplx acc{0.0, 0.0};
    for (std::size_t i = 0; i < n; ++i) {
        acc += std::conj(x[i]) * y[i];
    }
    return acc;
}

void axpy_scalar(cplx alpha, const cplx *x, cplx *y, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) {
        y[i] += alpha * x[i];
    }
}

bool cpu_supports(Isa isa) {
    if (isa == Isa::Scalar) {
        return true;
    }
#if QGC_HAVE_AVX2_KERNELS && (defined(__GNUC__) || defined(__clang__))
    return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
    return false;
#endif
}

namespace {

Isa detect() {
    return cpu_supports(Isa::Avx2) ? Isa::Avx2 : Isa::Scalar;
}

std::atomic<Isa> &active() {
    static std::atomic<Isa> isa{detect()};
    return isa;
}

}  // namespace

Isa active_isa() {
    return active().load(std::memory_order_relaxed);
}

void set_active_isa(Isa isa) {
    if (!cpu_supports(isa)) {
        throw std::invalid_argument("CPU does not support " + std::string(isa_name(isa)) + " kernels");
    }
    active().store(isa, std::memory_order_relaxed);
}

void gemm(const cplx *a, const cplx *b, cplx *c, std::size_t m, std::size_t k, std::size_t n) {
#if QGC_HAVE_AVX2_KERNELS
    if (active_isa() == Isa::Avx2) {
        gemm_avx2(a, b, c, m, k, n);
        return;
    }
#endif
    gemm_scalar(a, b, c, m, k, n);
}

cplx dotc(const cplx *x, const cplx *y, std::size_t n) {
#if QGC_HAVE_AVX2_KERNELS
    if (active_isa() == Isa::Avx2) {
        return dotc_avx2(x, y, n);
    }
#endif
    return dotc_scalar(x, y, n);
}

void axpy(cplx alpha, const cplx *x, cplx *y, std::size_t n) {
#if QGC_HAVE_AVX2_KERNELS
    if (active_isa() == Isa::Avx2) {
        axpy_avx2(alpha, x, y, n);
        return;
    }
#endif
    axpy_scalar(alpha, x, y, n);
}

}  // namespace qgc::simd
