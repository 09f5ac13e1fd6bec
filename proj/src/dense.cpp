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

#include "qgc/dense.h"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <numeric>

#include "qgc/error.h"
#include "qgc/kernels.h"

namespace qgc {

namespace {

std::atomic<std::size_t> g_amplitude_cap{std::size_t{1} << 20};

void require_same_shape(const DenseOperator &a, const DenseOperator &b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw Error(ErrorKind::DimensionMismatch, "operator shapes " + std::to_string(a.rows()) + "x" +
                                                      std::to_string(a.cols()) + " and " + std::to_string(b.rows()) +
                                                      "x" + std::to_string(b.cols()) + " differ");
    }
}

}  // namespace

std::size_t amplitude_cap() {
    return g_amplitude_cap.load(std::memory_order_relaxed);
}

void set_amplitude_cap(std::size_t cap) {
    g_amplitude_cap.store(cap, std::memory_order_relaxed);
}

void check_amplitude_budget(std::size_t rows, std::size_t cols) {
    const std::size_t cap = amplitude_cap();
    if (rows != 0 && cols > cap / rows) {
        throw Error(ErrorKind::DimensionOverflow, std::to_string(rows) + "x" + std::to_string(cols) +
                                                      " operator exceeds the cap of " + std::to_string(cap) +
                                                      " amplitudes");
    }
}

DenseOperator::DenseOperator(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols) {
    check_amplitude_budget(rows, cols);
    data_.assign(rows * cols, cplx{0.0, 0.0});
}

DenseOperator::DenseOperator(std::initializer_list<std::initializer_list<cplx>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto &row : rows) {
        if (row.size() != cols_) {
            throw Error(ErrorKind::DimensionMismatch, "ragged initializer");
        }
        data_.insert(data_.end(), row.begin(), row.end());
    }
}

DenseOperator DenseOperator::identity(std::size_t n) {
    DenseOperator out(n, n);
    for (std::size_t k = 0; k < n; ++k) {
        out(k, k) = 1.0;
    }
    return out;
}

DenseOperator DenseOperator::basis_projector(std::size_t n, std::size_t basis_index) {
    DenseOperator out(n, n);
    out(basis_index, basis_index) = 1.0;
    return out;
}

DenseOperator DenseOperator::adjoint() const {
    DenseOperator out(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) {
            out(c, r) = std::conj((*this)(r, c));
        }
    }
    return out;
}

DenseOperator DenseOperator::transpose() const {
    DenseOperator out(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) {
            out(c, r) = (*this)(r, c);
        }
    }
    return out;
}

cplx DenseOperator::trace() const {
    cplx acc{0.0, 0.0};
    for (std::size_t k = 0; k < std::min(rows_, cols_); ++k) {
        acc += (*this)(k, k);
    }
    return acc;
}

DenseOperator &DenseOperator::operator+=(const DenseOperator &other) {
    return add_scaled(1.0, other);
}

DenseOperator &DenseOperator::operator-=(const DenseOperator &other) {
    return add_scaled(-1.0, other);
}

DenseOperator &DenseOperator::operator*=(cplx scale) {
    for (cplx &v : data_) {
        v *= scale;
    }
    return *this;
}

DenseOperator &DenseOperator::add_scaled(cplx alpha, const DenseOperator &other) {
    require_same_shape(*this, other);
    simd::axpy(alpha, other.data(), data(), data_.size());
    return *this;
}

DenseOperator operator*(const DenseOperator &a, const DenseOperator &b) {
    if (a.cols() != b.rows()) {
        throw Error(ErrorKind::DimensionMismatch, "cannot multiply " + std::to_string(a.rows()) + "x" +
                                                      std::to_string(a.cols()) + " by " + std::to_string(b.rows()) +
                                                      "x" + std::to_string(b.cols()));
    }
    DenseOperator out(a.rows(), b.cols());
    simd::gemm(a.data(), b.data(), out.data(), a.rows(), a.cols(), b.cols());
    return out;
}

DenseOperator adjoint_times(const DenseOperator &a, const DenseOperator &b) {
    return a.adjoint() * b;
}

DenseOperator kron(const DenseOperator &a, const DenseOperator &b) {
    DenseOperator out(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t ar = 0; ar < a.rows(); ++ar) {
        for (std::size_t ac = 0; ac < a.cols(); ++ac) {
            const cplx s = a(ar, ac);
            if (s == cplx{0.0, 0.0}) {
                continue;
            }
            for (std::size_t br = 0; br < b.rows(); ++br) {
                cplx *dst = &out(ar * b.rows() + br, ac * b.cols());
                simd::axpy(s, &b(br, 0), dst, b.cols());
            }
        }
    }
    return out;
}

DenseOperator column(const DenseOperator &m, std::size_t c) {
    DenseOperator out(m.rows(), 1);
    for (std::size_t r = 0; r < m.rows(); ++r) {
        out(r, 0) = m(r, c);
    }
    return out;
}

double max_abs(const DenseOperator &m) {
    double best = 0.0;
    for (const cplx &v : m.values()) {
        best = std::max(best, std::abs(v));
    }
    return best;
}

double max_abs_diff(const DenseOperator &a, const DenseOperator &b) {
    require_same_shape(a, b);
    double best = 0.0;
    for (std::size_t k = 0; k < a.values().size(); ++k) {
        best = std::max(best, std::abs(a.values()[k] - b.values()[k]));
    }
    return best;
}

double hermiticity_defect(const DenseOperator &h) {
    if (!h.square()) {
        return std::numeric_limits<double>::infinity();
    }
    double best = 0.0;
    for (std::size_t r = 0; r < h.rows(); ++r) {
        for (std::size_t c = r; c < h.cols(); ++c) {
            best = std::max(best, std::abs(h(r, c) - std::conj(h(c, r))));
        }
    }
    return best;
}

HermitianEigen hermitian_eigen(const DenseOperator &h) {
    if (!h.square()) {
        throw Error(ErrorKind::DimensionMismatch, "eigendecomposition needs a square operator");
    }
    const std::size_t n = h.rows();
    DenseOperator a(n, n);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) {
            a(r, c) = 0.5 * (h(r, c) + std::conj(h(c, r)));
        }
    }
    DenseOperator v = DenseOperator::identity(n);

    auto off_norm = [&] {
        double s = 0.0;
        for (std::size_t r = 0; r < n; ++r) {
            for (std::size_t c = 0; c < n; ++c) {
                if (r != c) {
                    s += std::norm(a(r, c));
                }
            }
        }
        return std::sqrt(s);
    };
    double scale = 0.0;
    for (const cplx &x : a.values()) {
        scale += std::norm(x);
    }
    scale = std::sqrt(scale);
    const double tol = std::max(scale, 1e-300) * 1e-16;

    for (int sweep = 0; sweep < 100 && off_norm() > tol; ++sweep) {
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const double r = std::abs(a(p, q));
                if (r <= 1e-300) {
                    continue;
                }
                // Phase rotation makes a_pq real, then a real Jacobi rotation kills it.
                const cplx phase = std::conj(a(p, q)) / r;  // e^{-i phi}
                const double app = a(p, p).real();
                const double aqq = a(q, q).real();
                const double theta = (aqq - app) / (2.0 * r);
                const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                // 2x2 block of W = diag(1, e^{-i phi}) * [[c, s], [-s, c]].
                const cplx w00 = c;
                const cplx w01 = s;
                const cplx w10 = -s * phase;
                const cplx w11 = c * phase;
                for (std::size_t k = 0; k < n; ++k) {
                    const cplx akp = a(k, p);
                    const cplx akq = a(k, q);
                    a(k, p) = akp * w00 + akq * w10;
                    a(k, q) = akp * w01 + akq * w11;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    const cplx apk = a(p, k);
                    const cplx aqk = a(q, k);
                    a(p, k) = std::conj(w00) * apk + std::conj(w10) * aqk;
                    a(q, k) = std::conj(w01) * apk + std::conj(w11) * aqk;
                }
                a(p, q) = 0.0;
                a(q, p) = 0.0;
                a(p, p) = a(p, p).real();
                a(q, q) = a(q, q).real();
                for (std::size_t k = 0; k < n; ++k) {
                    const cplx vkp = v(k, p);
                    const cplx vkq = v(k, q);
                    v(k, p) = vkp * w00 + vkq * w10;
                    v(k, q) = vkp * w01 + vkq * w11;
                }
            }
        }
    }

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t x, std::size_t y) { return a(x, x).real() < a(y, y).real(); });
    HermitianEigen out{std::vector<double>(n), DenseOperator(n, n)};
    for (std::size_t k = 0; k < n; ++k) {
        out.values[k] = a(order[k], order[k]).real();
        for (std::size_t r = 0; r < n; ++r) {
            out.vectors(r, k) = v(r, order[k]);
        }
    }
    return out;
}

double operator_norm(const DenseOperator &m) {
    if (m.rows() == 0 || m.cols() == 0) {
        return 0.0;
    }
    const DenseOperator gram = m.cols() <= m.rows() ? adjoint_times(m, m) : m * m.adjoint();
    const HermitianEigen eig = hermitian_eigen(gram);
    return std::sqrt(std::max(0.0, eig.values.back()));
}

double trace_norm(const DenseOperator &m) {
    if (m.square() && hermiticity_defect(m) <= 1e-12 * std::max(1.0, max_abs(m))) {
        double acc = 0.0;
        for (double lambda : hermitian_eigen(m).values) {
            acc += std::abs(lambda);
        }
        return acc;
    }
    const DenseOperator gram = m.cols() <= m.rows() ? adjoint_times(m, m) : m * m.adjoint();
    double acc = 0.0;
    for (double lambda : hermitian_eigen(gram).values) {
        acc += std::sqrt(std::max(0.0, lambda));
    }
    return acc;
}

DenseOperator unitary_exp(const DenseOperator &h, double t) {
    const HermitianEigen eig = hermitian_eigen(h);
    const std::size_t n = h.rows();
    DenseOperator scaled = eig.vectors;
    for (std::size_t c = 0; c < n; ++c) {
        const cplx phase = std::polar(1.0, -t * eig.values[c]);
        for (std::size_t r = 0; r < n; ++r) {
            scaled(r, c) *= phase;
        }
    }
    return scaled * eig.vectors.adjoint();
}

}  // namespace qgc
