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

#include "qgc/modlinalg.h"

#include <algorithm>
#include <numeric>
#include <utility>

#include "qgc/error.h"

namespace qgc {

bool is_prime(std::uint64_t d) {
    if (d < 2) {
        return false;
    }
    for (std::uint64_t p = 2; p * p <= d; ++p) {
        if (d % p == 0) {
            return false;
        }
    }
    return true;
}

namespace {

std::uint32_t reduce(std::int64_t value, std::uint32_t modulus) {
    std::int64_t r = value % static_cast<std::int64_t>(modulus);
    if (r < 0) {
        r += modulus;
    }
    return static_cast<std::uint32_t>(r);
}

std::uint64_t inverse_mod_prime(std::uint64_t a, std::uint64_t p) {
    std::uint64_t result = 1;
    std::uint64_t base = a % p;
    std::uint64_t e = p - 2;
    while (e > 0) {
        if (e & 1) {
            result = result * base % p;
        }
        base = base * base % p;
        e >>= 1;
    }
    return result;
}

}  // namespace

ModMatrix::ModMatrix(std::uint32_t modulus, std::size_t rows, std::size_t cols)
    : modulus_(modulus), rows_(rows), cols_(cols), entries_(rows * cols, 0) {
    if (modulus < 2) {
        throw Error(ErrorKind::ParamOutOfRange, "modulus must be at least 2");
    }
}

ModMatrix::ModMatrix(std::uint32_t modulus, std::size_t rows, std::size_t cols, std::span<const std::int64_t> entries)
    : ModMatrix(modulus, rows, cols) {
    if (entries.size() != rows * cols) {
        throw Error(ErrorKind::DimensionMismatch, "entry count does not match rows * cols");
    }
    for (std::size_t k = 0; k < entries.size(); ++k) {
        entries_[k] = reduce(entries[k], modulus);
    }
}

ModMatrix ModMatrix::identity(std::uint32_t modulus, std::size_t size) {
    ModMatrix m(modulus, size, size);
    for (std::size_t k = 0; k < size; ++k) {
        m.entries_[k * size + k] = 1;
    }
    return m;
}

void ModMatrix::set(std::size_t r, std::size_t c, std::int64_t value) {
    entries_[r * cols_ + c] = reduce(value, modulus_);
}

ModMatrix ModMatrix::select(std::span<const std::size_t> row_ids, std::span<const std::size_t> col_ids) const {
    ModMatrix out(modulus_, row_ids.size(), col_ids.size());
    for (std::size_t r = 0; r < row_ids.size(); ++r) {
        for (std::size_t c = 0; c < col_ids.size(); ++c) {
            out.entries_[r * col_ids.size() + c] = entries_[row_ids[r] * cols_ + col_ids[c]];
        }
    }
    return out;
}

std::size_t rank_prime(const ModMatrix &m) {
    const std::uint64_t p = m.modulus();
    if (!is_prime(p)) {
        throw Error(ErrorKind::CompositeModulus, "rank over Z_" + std::to_string(p) + " requires a prime modulus");
    }
    const std::size_t rows = m.rows();
    const std::size_t cols = m.cols();
    std::vector<std::uint64_t> a(m.entries().begin(), m.entries().end());

    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t pivot = rank;
        while (pivot < rows && a[pivot * cols + c] == 0) {
            ++pivot;
        }
        if (pivot == rows) {
            continue;
        }
        if (pivot != rank) {
            std::swap_ranges(a.begin() + pivot * cols, a.begin() + (pivot + 1) * cols, a.begin() + rank * cols);
        }
        const std::uint64_t inv = inverse_mod_prime(a[rank * cols + c], p);
        for (std::size_t j = c; j < cols; ++j) {
            a[rank * cols + j] = a[rank * cols + j] * inv % p;
        }
        for (std::size_t r = rank + 1; r < rows; ++r) {
            const std::uint64_t factor = a[r * cols + c];
            if (factor == 0) {
                continue;
            }
            for (std::size_t j = c; j < cols; ++j) {
                a[r * cols + j] = (a[r * cols + j] + (p - factor) * a[rank * cols + j]) % p;
            }
        }
        ++rank;
    }
    return rank;
}

std::vector<BigInt> smith_normal_form(std::size_t rows, std::size_t cols, std::span<const BigInt> entries) {
    if (entries.size() != rows * cols) {
        throw Error(ErrorKind::DimensionMismatch, "entry count does not match rows * cols");
    }
    std::vector<BigInt> a(entries.begin(), entries.end());
    auto at = [&](std::size_t r, std::size_t c) -> BigInt & {
        return a[r * cols + c];
    };
    auto swap_rows = [&](std::size_t r1, std::size_t r2) {
        if (r1 != r2) {
            for (std::size_t c = 0; c < cols; ++c) {
                std::swap(at(r1, c), at(r2, c));
            }
        }
    };
    auto swap_cols = [&](std::size_t c1, std::size_t c2) {
        if (c1 != c2) {
            for (std::size_t r = 0; r < rows; ++r) {
                std::swap(at(r, c1), at(r, c2));
            }
        }
    };

    const std::size_t diag = std::min(rows, cols);
    std::vector<BigInt> factors(diag, 0);
    for (std::size_t t = 0; t < diag; ++t) {
        // Move the smallest non-zero entry of the trailing block to (t, t).
        bool found = false;
        std::size_t best_r = t;
        std::size_t best_c = t;
        for (std::size_t r = t; r < rows; ++r) {
            for (std::size_t c = t; c < cols; ++c) {
                if (at(r, c) != 0 && (!found || abs(at(r, c)) < abs(at(best_r, best_c)))) {
                    found = true;
                    best_r = r;
                    best_c = c;
                }
            }
        }
        if (!found) {
            break;
        }
        swap_rows(t, best_r);
        swap_cols(t, best_c);

        while (true) {
            bool clean = true;
            for (std::size_t r = t + 1; r < rows; ++r) {
                if (at(r, t) == 0) {
                    continue;
                }
                const BigInt q = at(r, t) / at(t, t);
                for (std::size_t c = t; c < cols; ++c) {
                    at(r, c) -= q * at(t, c);
                }
                if (at(r, t) != 0) {
                    clean = false;
                }
            }
            for (std::size_t c = t + 1; c < cols; ++c) {
                if (at(t, c) == 0) {
                    continue;
                }
                const BigInt q = at(t, c) / at(t, t);
                for (std::size_t r = t; r < rows; ++r) {
                    at(r, c) -= q * at(r, t);
                }
                if (at(t, c) != 0) {
                    clean = false;
                }
            }
            if (clean) {
                // Row and column are cleared; enforce divisibility of the rest.
                std::size_t bad_row = rows;
                for (std::size_t r = t + 1; r < rows && bad_row == rows; ++r) {
                    for (std::size_t c = t + 1; c < cols; ++c) {
                        if (at(r, c) % at(t, t) != 0) {
                            bad_row = r;
                            break;
                        }
                    }
                }
                if (bad_row == rows) {
                    break;
                }
                for (std::size_t c = t; c < cols; ++c) {
                    at(t, c) += at(bad_row, c);
                }
                continue;
            }
            // A remainder survived: bring the smallest one of row/column t to the pivot.
            std::size_t pr = t;
            std::size_t pc = t;
            for (std::size_t r = t + 1; r < rows; ++r) {
                if (at(r, t) != 0 && abs(at(r, t)) < abs(at(pr, pc))) {
                    pr = r;
                    pc = t;
                }
            }
            for (std::size_t c = t + 1; c < cols; ++c) {
                if (at(t, c) != 0 && abs(at(t, c)) < abs(at(pr, pc))) {
                    pr = t;
                    pc = c;
                }
            }
            swap_rows(t, pr);
            swap_cols(t, pc);
        }
        factors[t] = abs(at(t, t));
    }
    return factors;
}

std::vector<BigInt> smith_normal_form(const ModMatrix &m) {
    std::vector<BigInt> lifted(m.entries().begin(), m.entries().end());
    return smith_normal_form(m.rows(), m.cols(), lifted);
}

bool kernel_trivial(const ModMatrix &m) {
    if (m.cols() == 0) {
        return true;
    }
    if (m.rows() < m.cols()) {
        return false;
    }
    if (is_prime(m.modulus())) {
        return rank_prime(m) == m.cols();
    }
    const BigInt d = m.modulus();
    const std::vector<BigInt> factors = smith_normal_form(m);
    std::size_t nonzero = 0;
    for (const BigInt &s : factors) {
        if (s == 0) {
            continue;
        }
        ++nonzero;
        if (boost::multiprecision::gcd(s, d) != 1) {
            return false;
        }
    }
    return nonzero == m.cols();
}

}  // namespace qgc
