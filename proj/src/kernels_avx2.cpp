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

#include "qgc/kernels.h"

#if QGC_HAVE_AVX2_KERNELS

#include <immintrin.h>

#include <cstring>

#define QGC_TARGET_AVX2 __attribute__((target("avx2,fma")))

namespace qgc::simd {

namespace {

// (ar + i ai) * (b0, b1) for two interleaved complex numbers in `b`.
QGC_TARGET_AVX2 inline __m256d cmul_broadcast(__m256d ar, __m256d ai, __m256d b) {
    const __m256d bswap = _mm256_permute_pd(b, 0x5);
    return _mm256_fmaddsub_pd(ar, b, _mm256_mul_pd(ai, bswap));
}

}  // namespace

QGC_TARGET_AVX2 void gemm_avx2(const cplx *a, const cplx *b, cplx *c, std::size_t m, std::size_t k, std::size_t n) {
    const double *ad = reinterpret_cast<const double *>(a);
    const double *bd = reinterpret_cast<const double *>(b);
    double *cd = reinterpret_cast<double *>(c);
    std::memset(cd, 0, sizeof(double) * 2 * m * n);
    const std::size_t n2 = n & ~std::size_t{1};
    for (std::size_t i = 0; i < m; ++i) {
        double *crow = cd + 2 * i * n;
        for (std::size_t p = 0; p < k; ++p) {
            const double re = ad[2 * (i * k + p)];
            const double im = ad[2 * (i * k + p) + 1];
            if (re == 0.0 && im == 0.0) {
                continue;
            }
            const __m256d ar = _mm256_set1_pd(re);
            const __m256d ai = _mm256_set1_pd(im);
            const double *brow = bd + 2 * p * n;
            std::size_t j = 0;
            for (; j < n2; j += 2) {
                const __m256d bv = _mm256_loadu_pd(brow + 2 * j);
                const __m256d cv = _mm256_loadu_pd(crow + 2 * j);
                _mm256_storeu_pd(crow + 2 * j, _mm256_add_pd(cv, cmul_broadcast(ar, ai, bv)));
            }
            if (j < n) {
                const double br = brow[2 * j];
                const double bi = brow[2 * j + 1];
                crow[2 * j] += re * br - im * bi;
                crow[2 * j + 1] += re * bi + im * br;
            }
        }
    }
}

QGC_TARGET_AVX2 cplx dotc_avx2(const cplx *x, const cplx *y, std::size_t n) {
    const double *xd = reinterpret_cast<const double *>(x);
    const double *yd = reinterpret_cast<const double *>(y);
    // re accumulates (xr*yr, xi*yi); im accumulates (xr*yi, xi*yr).
    __m256d acc_re = _mm256_setzero_pd();
    __m256d acc_im = _mm256_setzero_pd();
    const std::size_t n2 = n & ~std::size_t{1};
    std::size_t i = 0;
    for (; i < n2; i += 2) {
        const __m256d xv = _mm256_loadu_pd(xd + 2 * i);
        const __m256d yv = _mm256_loadu_pd(yd + 2 * i);
        acc_re = _mm256_fmadd_pd(xv, yv, acc_re);
        acc_im = _mm256_fmadd_pd(xv, _mm256_permute_pd(yv, 0x5), acc_im);
    }
    alignas(32) double re_lanes[4];
    alignas(32) double im_lanes[4];
    _mm256_store_pd(re_lanes, acc_re);
    _mm256_store_pd(im_lanes, acc_im);
    double re = (re_lanes[0] + re_lanes[1]) + (re_lanes[2] + re_lanes[3]);
    double im = (im_lanes[0] - im_lanes[1]) + (im_lanes[2] - im_lanes[3]);
    if (i < n) {
        const double xr = xd[2 * i];
        const double xi = xd[2 * i + 1];
        const double yr = yd[2 * i];
        const double yi = yd[2 * i + 1];
        re += xr * yr + xi * yi;
        im += xr * yi - xi * yr;
    }
    return {re, im};
}

QGC_TARGET_AVX2 void axpy_avx2(cplx alpha, const cplx *x, cplx *y, std::size_t n) {
    const double *xd = reinterpret_cast<const double *>(x);
    double *yd = reinterpret_cast<double *>(y);
    const double re = alpha.real();
    const double im = alpha.imag();
    const __m256d ar = _mm256_set1_pd(re);
    const __m256d ai = _mm256_set1_pd(im);
    const std::size_t n2 = n & ~std::size_t{1};
    std::size_t i = 0;
    for (; i < n2; i += 2) {
        const __m256d xv = _mm256_loadu_pd(xd + 2 * i);
        const __m256d yv = _mm256_loadu_pd(yd + 2 * i);
        _mm256_storeu_pd(yd + 2 * i, _mm256_add_pd(yv, cmul_broadcast(ar, ai, xv)));
    }
    if (i < n) {
        const double xr = xd[2 * i];
        const double xi = xd[2 * i + 1];
        yd[2 * i] += re * xr - im * xi;
        yd[2 * i + 1] += re * xi + im * xr;
    }
}

}  // namespace qgc::simd

#endif
