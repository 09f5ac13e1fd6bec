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

#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include "gtest/gtest.h"
#include "qgc/error.h"
#include "qgc/modlinalg.h"

using namespace qgc;

namespace {

ModMatrix random_matrix(std::mt19937_64 &rng, std::uint32_t d, std::size_t rows, std::size_t cols) {
    std::uniform_int_distribution<std::int64_t> pick(0, d - 1);
    std::vector<std::int64_t> e(rows * cols);
    for (auto &x : e) {
        x = pick(rng);
    }
    return ModMatrix(d, rows, cols, e);
}

// Test-only oracle: enumerate every h in Z_d^cols.
bool kernel_trivial_brute(const ModMatrix &m) {
    const std::uint32_t d = m.modulus();
    std::vector<std::uint32_t> h(m.cols(), 0);
    for (;;) {
        std::size_t pos = 0;
        while (pos < h.size() && ++h[pos] == d) {
            h[pos++] = 0;
        }
        if (pos == h.size()) {
            return true;
        }
        bool zero = true;
        for (std::size_t r = 0; r < m.rows() && zero; ++r) {
            std::uint64_t acc = 0;
            for (std::size_t c = 0; c < m.cols(); ++c) {
                acc += static_cast<std::uint64_t>(m(r, c)) * h[c];
            }
            zero = acc % d == 0;
        }
        if (zero) {
            return false;
        }
    }
}

std::int64_t det_int(std::vector<std::vector<std::int64_t>> a) {
    // Bareiss fraction-free elimination.
    const std::size_t n = a.size();
    std::int64_t sign = 1;
    std::int64_t prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k] == 0) {
            std::size_t s = k + 1;
            while (s < n && a[s][k] == 0) {
                ++s;
            }
            if (s == n) {
                return 0;
            }
            std::swap(a[k], a[s]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
            }
        }
        prev = a[k][k];
    }
    return sign * a[n - 1][n - 1];
}

}  // namespace

TEST(modlinalg, rank_examples) {
    EXPECT_EQ(rank_prime(ModMatrix::identity(2, 2)), 2u);
    EXPECT_EQ(rank_prime(ModMatrix(3, 3, 3)), 0u);
    const std::int64_t ones[] = {1, 1, 1, 1};
    EXPECT_EQ(rank_prime(ModMatrix(2, 2, 2, ones)), 1u);
}

TEST(modlinalg, rank_rejects_composite) {
    try {
        rank_prime(ModMatrix::identity(6, 2));
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.kind(), ErrorKind::CompositeModulus);
    }
}

TEST(modlinalg, entries_reduced) {
    const std::int64_t e[] = {-1, 7, 4, -9};
    const ModMatrix m(4, 2, 2, e);
    EXPECT_EQ(m(0, 0), 3u);
    EXPECT_EQ(m(0, 1), 3u);
    EXPECT_EQ(m(1, 0), 0u);
    EXPECT_EQ(m(1, 1), 3u);
    EXPECT_THROW(ModMatrix(4, 2, 3, e), Error);
}

TEST(modlinalg, kernel_examples) {
    const std::int64_t one[] = {1};
    const std::int64_t two[] = {2};
    const std::int64_t m6[] = {1, 0, 0, 1, 1, 1};
    EXPECT_TRUE(kernel_trivial(ModMatrix(2, 1, 1, one)));
    EXPECT_FALSE(kernel_trivial(ModMatrix(4, 1, 1, two)));
    EXPECT_TRUE(kernel_trivial(ModMatrix(6, 3, 2, m6)));
    EXPECT_TRUE(kernel_trivial(ModMatrix(5, 3, 0)));
    EXPECT_FALSE(kernel_trivial(ModMatrix::identity(5, 3).select(std::vector<std::size_t>{0, 1},
                                                                  std::vector<std::size_t>{0, 1, 2})));
}

TEST(modlinalg, smith_examples) {
    auto snf = [](std::size_t r, std::size_t c, std::vector<BigInt> e) { return smith_normal_form(r, c, e); };
    EXPECT_EQ(snf(2, 2, {1, 0, 0, 1}), (std::vector<BigInt>{1, 1}));
    EXPECT_EQ(snf(2, 2, {2, 0, 0, 4}), (std::vector<BigInt>{2, 4}));
    EXPECT_EQ(snf(2, 2, {2, 4, 6, 8}), (std::vector<BigInt>{2, 4}));
    EXPECT_EQ(snf(2, 2, {4, 0, 0, 6}), (std::vector<BigInt>{2, 12}));
    EXPECT_EQ(snf(2, 3, {0, 0, 0, 0, 0, 0}), (std::vector<BigInt>{0, 0}));
}

TEST(modlinalg, smith_properties) {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<std::int64_t> pick(-20, 20);
    for (int trial = 0; trial < 300; ++trial) {
        const std::size_t n = 1 + trial % 4;
        std::vector<BigInt> e(n * n);
        std::vector<std::vector<std::int64_t>> a(n, std::vector<std::int64_t>(n));
        std::int64_t g = 0;
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                a[i][j] = pick(rng);
                e[i * n + j] = a[i][j];
                g = std::gcd(g, a[i][j]);
            }
        }
        const auto f = smith_normal_form(n, n, e);
        ASSERT_EQ(f.size(), n);
        BigInt prod = 1;
        for (std::size_t i = 0; i < n; ++i) {
            EXPECT_GE(f[i], 0);
            prod *= f[i];
            if (i + 1 < n && f[i] != 0) {
                EXPECT_EQ(f[i + 1] % f[i], 0);
            }
            if (i + 1 < n && f[i] == 0) {
                EXPECT_EQ(f[i + 1], 0);
            }
        }
        EXPECT_EQ(prod, BigInt(std::abs(det_int(a))));
        EXPECT_EQ(f[0], BigInt(g));
    }
}

TEST(modlinalg, kernel_matches_brute_force) {
    std::mt19937_64 rng(3);
    const std::uint32_t moduli[] = {2, 3, 4, 5, 6, 7, 8, 9, 10, 12};
    int checked = 0;
    for (std::uint32_t d : moduli) {
        for (std::size_t cols = 1; cols <= 5; ++cols) {
            double span = 1;
            for (std::size_t c = 0; c < cols; ++c) {
                span *= d;
            }
            if (span > 1e4) {
                continue;
            }
            for (std::size_t rows = 1; rows <= 6; ++rows) {
                for (int rep = 0; rep < 12; ++rep) {
                    const ModMatrix m = random_matrix(rng, d, rows, cols);
                    ASSERT_EQ(kernel_trivial(m), kernel_trivial_brute(m)) << "d=" << d << " " << rows << "x" << cols;
                    ++checked;
                }
            }
        }
    }
    EXPECT_GT(checked, 1000);
}

TEST(modlinalg, kernel_agrees_with_rank_for_prime) {
    std::mt19937_64 rng(5);
    for (std::uint32_t d : {2u, 3u, 5u, 7u, 31u}) {
        for (int rep = 0; rep < 200; ++rep) {
            const ModMatrix m = random_matrix(rng, d, 1 + rep % 7, 1 + rep % 5);
            EXPECT_EQ(kernel_trivial(m), rank_prime(m) == m.cols());
            EXPECT_LE(rank_prime(m), std::min(m.rows(), m.cols()));
        }
    }
}

TEST(modlinalg, rank_invariant_under_row_operations) {
    std::mt19937_64 rng(9);
    for (std::uint32_t d : {2u, 3u, 5u, 11u}) {
        for (int rep = 0; rep < 200; ++rep) {
            const std::size_t rows = 2 + rep % 5;
            const std::size_t cols = 1 + rep % 6;
            const ModMatrix m = random_matrix(rng, d, rows, cols);
            const std::size_t base = rank_prime(m);

            std::vector<std::size_t> perm(rows);
            std::iota(perm.begin(), perm.end(), 0);
            std::shuffle(perm.begin(), perm.end(), rng);
            std::vector<std::size_t> all_cols(cols);
            std::iota(all_cols.begin(), all_cols.end(), 0);
            EXPECT_EQ(rank_prime(m.select(perm, all_cols)), base);

            ModMatrix scaled = m;
            const std::size_t r = rng() % rows;
            const std::uint32_t s = 1 + static_cast<std::uint32_t>(rng() % (d - 1));
            for (std::size_t c = 0; c < cols; ++c) {
                scaled.set(r, c, static_cast<std::int64_t>(m(r, c)) * s);
            }
            EXPECT_EQ(rank_prime(scaled), base);
        }
    }
}

TEST(modlinalg, is_prime_small) {
    const std::vector<std::uint64_t> primes = {2, 3, 5, 7, 11, 13, 97, 65537};
    for (auto p : primes) {
        EXPECT_TRUE(is_prime(p)) << p;
    }
    for (std::uint64_t c : {0ull, 1ull, 4ull, 6ull, 9ull, 91ull, 65535ull}) {
        EXPECT_FALSE(is_prime(c)) << c;
    }
}
