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

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace qgc {

using BigInt = boost::multiprecision::cpp_int;

bool is_prime(std::uint64_t d);

/// Rectangular matrix over the residue ring Z_d, row-major.
class ModMatrix {
   public:
    using value_type = std::uint32_t;

    ModMatrix() = default;
    ModMatrix(std::uint32_t modulus, std::size_t rows, std::size_t cols);
    /// Entries are reduced mod `modulus`; the count must equal rows * cols.
    ModMatrix(std::uint32_t modulus, std::size_t rows, std::size_t cols, std::span<const std::int64_t> entries);

    static ModMatrix identity(std::uint32_t modulus, std::size_t size);

    std::uint32_t modulus() const noexcept {
        return modulus_;
    }
    std::size_t rows() const noexcept {
        return rows_;
    }
    std::size_t cols() const noexcept {
        return cols_;
    }

    value_type operator()(std::size_t r, std::size_t c) const {
        return entries_[r * cols_ + c];
    }
    void set(std::size_t r, std::size_t c, std::int64_t value);

    std::span<const value_type> row(std::size_t r) const {
        return {entries_.data() + r * cols_, cols_};
    }
    std::span<const value_type> entries() const noexcept {
        return entries_;
    }

    /// Submatrix picking the listed rows and columns, in the order given.
    ModMatrix select(std::span<const std::size_t> row_ids, std::span<const std::size_t> col_ids) const;

    bool operator==(const ModMatrix &) const = default;

   private:
    std::uint32_t modulus_ = 2;
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<value_type> entries_;
};

/// Rank over GF(d). Throws CompositeModulus unless d is prime.
std::size_t rank_prime(const ModMatrix &m);

/// True iff M h == 0 (mod d) forces h == 0 (mod d). Prime d uses Gaussian
/// elimination; composite d goes through the Smith normal form of the lift.
bool kernel_trivial(const ModMatrix &m);

/// Diagonal of the Smith normal form of an integer matrix, min(rows, cols)
/// entries, non-negative, each dividing the next (zeros trail).
std::vector<BigInt> smith_normal_form(std::size_t rows, std::size_t cols, std::span<const BigInt> entries);
std::vector<BigInt> smith_normal_form(const ModMatrix &m);

}  // namespace qgc
