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

#pragma once

// Dense complex inner loops. Every kernel has a scalar reference
// implementation and, on x86-64, an AVX2+FMA variant; the dispatcher picks one
// at first use from CPUID. Complex arrays are interleaved (re, im) and
// row-major, matching std::complex<double> storage.

#include <complex>
#include <cstddef>
#include <string_view>

namespace qgc::simd {

using cplx = std::complex<double>;

enum class Isa { Scalar, Avx2 };

std::string_view isa_name(Isa isa);

/// Whether the running CPU (and this build) can execute `isa`.
bool cpu_supports(Isa isa);

/// ISA used by the dispatching entry points below.
Isa active_isa();

/// Forces the dispatcher onto `isa`. Throws std::invalid_argument when the CPU
/// cannot run it. Intended for equivalence tests and benchmarking.
void set_active_isa(Isa isa);

// c[m x n] = a[m x k] * b[k x n]
void gemm_scalar(const cplx *a, const cplx *b, cplx *c, std::size_t m, std::size_t k, std::size_t n);
// sum_i conj(x[i]) * y[i]
cplx dotc_scalar(const cplx *x, const cplx *y, std::size_t n);
// y[i] += alpha * x[i]
void axpy_scalar(cplx alpha, const cplx *x, cplx *y, std::size_t n);

#if defined(__x86_64__) || defined(_M_X64)
#define QGC_HAVE_AVX2_KERNELS 1
void gemm_avx2(const cplx *a, const cplx *b, cplx *c, std::size_t m, std::size_t k, std::size_t n);
cplx dotc_avx2(const cplx *x, const cplx *y, std::size_t n);
void axpy_avx2(cplx alpha, const cplx *x, cplx *y, std::size_t n);
#else
#define QGC_HAVE_AVX2_KERNELS 0
#endif

void gemm(const cplx *a, const cplx *b, cplx *c, std::size_t m, std::size_t k, std::size_t n);
cplx dotc(const cplx *x, const cplx *y, std::size_t n);
void axpy(cplx alpha, const cplx *x, cplx *y, std::size_t n);

}  // namespace qgc::simd
