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

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace qgc {

using cplx = std::complex<double>;

/// Hard cap on stored amplitudes per dense operator. Operations that would
/// exceed it throw DimensionOverflow instead of switching representation.
std::size_t amplitude_cap();
void set_amplitude_cap(std::size_t cap);

/// Checks rows * cols against the cap without overflow.
void check_amplitude_budget(std::size_t rows, std::size_t cols);

/// Dense complex matrix, row-major. Vectors are n x 1 operators.
class DenseOperator {
   public:
    DenseOperator() = default;
    DenseOperator(std::size_t rows, std::size_t cols);
    DenseOperator(std::initializer_list<std::initializer_list<cplx>> rows);

    static DenseOperator identity(std::size_t n);
    static DenseOperator zeros(std::size_t rows, std::size_t cols) {
        return DenseOperator(rows, cols);
    }
    /// |basis_index><basis_index| on an n-dimensional space.
    static DenseOperator basis_projector(std::size_t n, std::size_t basis_index);

    std::size_t rows() const noexcept {
        return rows_;
    }
    std::size_t cols() const noexcept {
        return cols_;
    }
    bool square() const noexcept {
        return rows_ == cols_;
    }

    cplx &operator()(std::size_t r, std::size_t c) {
        return data_[r * cols_ + c];
    }
    const cplx &operator()(std::size_t r, std::size_t c) const {
        return data_[r * cols_ + c];
    }
    cplx *data() noexcept {
        return data_.data();
    }
    const cplx *data() const noexcept {
        return data_.data();
    }
    std::span<const cplx> values() const noexcept {
        return data_;
    }

    DenseOperator adjoint() const;
    DenseOperator transpose() const;
    cplx trace() const;

    DenseOperator &operator+=(const DenseOperator &other);
    DenseOperator &operator-=(const DenseOperator &other);
    DenseOperator &operator*=(cplx scale);
    /// this += alpha * other
    DenseOperator &add_scaled(cplx alpha, const DenseOperator &other);

    friend DenseOperator operator+(DenseOperator a, const DenseOperator &b) {
        return a += b;
    }
    friend DenseOperator operator-(DenseOperator a, const DenseOperator &b) {
        return a -= b;
    }
    friend DenseOperator operator*(DenseOperator a, cplx s) {
        return a *= s;
    }
    friend DenseOperator operator*(cplx s, DenseOperator a) {
        return a *= s;
    }
    friend DenseOperator operator*(const DenseOperator &a, const DenseOperator &b);

   private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<cplx> data_;
};

/// a^* b without materialising the adjoint of a separately.
DenseOperator adjoint_times(const DenseOperator &a, const DenseOperator &b);

/// Kronecker product; the left factor is the most significant index.
DenseOperator kron(const DenseOperator &a, const DenseOperator &b);

/// Column `c` as an n x 1 operator.
DenseOperator column(const DenseOperator &m, std::size_t c);

/// Largest |m_ij|.
double max_abs(const DenseOperator &m);
double max_abs_diff(const DenseOperator &a, const DenseOperator &b);

/// Largest |h_ij - conj(h_ji)|.
double hermiticity_defect(const DenseOperator &h);

struct HermitianEigen {
    std::vector<double> values;  // ascending
    DenseOperator vectors;       // unitary; column k pairs with values[k]
};

/// Cyclic complex Jacobi on the Hermitian part of `h`.
HermitianEigen hermitian_eigen(const DenseOperator &h);

/// Largest singular value.
double operator_norm(const DenseOperator &m);

/// Sum of singular values; for Hermitian input the sum of |eigenvalues|.
double trace_norm(const DenseOperator &m);

/// exp(-i t h) for Hermitian h.
DenseOperator unitary_exp(const DenseOperator &h, double t);

}  // namespace qgc
