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

#include "qgc/qnum.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <sstream>

#include "qgc/error.h"
#include "qgc/kernels.h"

namespace qgc {

namespace {

std::size_t checked_power(std::size_t base, std::size_t exponent) {
    std::size_t out = 1;
    for (std::size_t k = 0; k < exponent; ++k) {
        check_amplitude_budget(out, base);
        out *= base;
    }
    return out;
}

// Weyl word with per-site exponents (a_s, b_s); site 0 is the most significant digit.
DenseOperator weyl_word(std::size_t d, std::span<const std::size_t> a, std::span<const std::size_t> b) {
    const std::size_t n = a.size();
    const std::size_t dim = checked_power(d, n);
    DenseOperator out(dim, dim);
    std::vector<cplx> roots(d);
    for (std::size_t k = 0; k < d; ++k) {
        roots[k] = std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(d));
    }
    for (std::size_t col = 0; col < dim; ++col) {
        std::size_t rest = col;
        std::size_t row = 0;
        std::size_t place = 1;
        std::size_t phase = 0;
        for (std::size_t s = n; s-- > 0;) {
            const std::size_t digit = rest % d;
            rest /= d;
            row += ((digit + a[s]) % d) * place;
            place *= d;
            phase = (phase + b[s] * digit) % d;
        }
        out(row, col) = roots[phase];
    }
    return out;
}

void require_isometry(const DenseOperator &v) {
    const double defect = max_abs_diff(adjoint_times(v, v), DenseOperator::identity(v.cols()));
    if (defect > kKLTolerance) {
        throw Error(ErrorKind::NotIsometry, "V^*V deviates from the identity by " + std::to_string(defect));
    }
}

void require_error_shapes(const DenseOperator &v, std::span<const DenseOperator> errors) {
    for (const DenseOperator &f : errors) {
        if (f.rows() != v.rows() || f.cols() != v.rows()) {
            throw Error(ErrorKind::DimensionMismatch, "error operator does not act on the code's output space");
        }
    }
}

}  // namespace

Channel Channel::from_kraus(std::vector<DenseOperator> kraus) {
    if (kraus.empty()) {
        throw Error(ErrorKind::NotChannel, "a channel needs at least one Kraus operator");
    }
    const std::size_t out = kraus.front().rows();
    const std::size_t in = kraus.front().cols();
    for (const DenseOperator &f : kraus) {
        if (f.rows() != out || f.cols() != in) {
            throw Error(ErrorKind::DimensionMismatch, "Kraus operators must share one shape");
        }
    }
    Channel ch(std::move(kraus), in, out);
    const double defect = ch.completeness_defect();
    if (!(defect <= kKrausTolerance)) {
        throw Error(ErrorKind::NotChannel, "sum F^*F deviates from the identity by " + std::to_string(defect));
    }
    return ch;
}

Channel Channel::identity(std::size_t dim) {
    return Channel({DenseOperator::identity(dim)}, dim, dim);
}

Channel Channel::unitary(const DenseOperator &u) {
    return from_kraus({u});
}

double Channel::completeness_defect() const {
    DenseOperator sum(dim_in_, dim_in_);
    for (const DenseOperator &f : kraus_) {
        sum += adjoint_times(f, f);
    }
    return max_abs_diff(sum, DenseOperator::identity(dim_in_));
}

DenseOperator apply_channel(const Channel &t, const DenseOperator &rho) {
    if (rho.rows() != t.dim_in() || rho.cols() != t.dim_in()) {
        throw Error(ErrorKind::DimensionMismatch, "state is " + std::to_string(rho.rows()) + "x" +
                                                      std::to_string(rho.cols()) + ", channel input dimension is " +
                                                      std::to_string(t.dim_in()));
    }
    DenseOperator out(t.dim_out(), t.dim_out());
    for (const DenseOperator &f : t.kraus()) {
        out += (f * rho) * f.adjoint();
    }
    return out;
}

Channel tensor_channels(const Channel &t1, const Channel &t2) {
    std::vector<DenseOperator> kraus;
    kraus.reserve(t1.kraus().size() * t2.kraus().size());
    for (const DenseOperator &f : t1.kraus()) {
        for (const DenseOperator &g : t2.kraus()) {
            kraus.push_back(kron(f, g));
        }
    }
    return Channel::from_kraus(std::move(kraus));
}

Channel product_channel(std::span<const Channel> sites) {
    if (sites.empty()) {
        return Channel::identity(1);
    }
    Channel acc = sites.front();
    for (std::size_t k = 1; k < sites.size(); ++k) {
        acc = tensor_channels(acc, sites[k]);
    }
    return acc;
}

Channel compose(const Channel &first, const Channel &second) {
    if (first.dim_out() != second.dim_in()) {
        throw Error(ErrorKind::DimensionMismatch, "channels do not compose");
    }
    std::vector<DenseOperator> kraus;
    for (const DenseOperator &f : first.kraus()) {
        for (const DenseOperator &g : second.kraus()) {
            kraus.push_back(g * f);
        }
    }
    return Channel::from_kraus(std::move(kraus));
}

DenseOperator choi_state(const Channel &t) {
    const std::size_t din = t.dim_in();
    const std::size_t dout = t.dim_out();
    DenseOperator choi(dout * din, dout * din);
    const double scale = 1.0 / static_cast<double>(din);
    for (std::size_t i = 0; i < din; ++i) {
        for (std::size_t j = 0; j < din; ++j) {
            DenseOperator unit(din, din);
            unit(i, j) = 1.0;
            const DenseOperator image = apply_channel(t, unit);
            for (std::size_t r = 0; r < dout; ++r) {
                for (std::size_t c = 0; c < dout; ++c) {
                    choi(r * din + i, c * din + j) = scale * image(r, c);
                }
            }
        }
    }
    return choi;
}

DenseOperator weyl(std::size_t d, std::size_t a, std::size_t b) {
    const std::size_t as[] = {a % d};
    const std::size_t bs[] = {b % d};
    return weyl_word(d, as, bs);
}

std::string weyl_label(std::size_t d, std::size_t a, std::size_t b) {
    a %= d;
    b %= d;
    if (a == 0 && b == 0) {
        return "I";
    }
    std::string out;
    if (a != 0) {
        out += a == 1 ? "X" : "X^" + std::to_string(a);
    }
    if (b != 0) {
        out += b == 1 ? "Z" : "Z^" + std::to_string(b);
    }
    return out;
}

std::vector<DenseOperator> localized_error_basis(std::size_t n, std::size_t d, const ErrorSubset &z) {
    if (!z.empty() && z.sites().back() >= n) {
        throw Error(ErrorKind::InvalidSubset, z.to_string() + " is not a subset of the " + std::to_string(n) + " sites");
    }
    const std::size_t dim = checked_power(d, n);
    check_amplitude_budget(dim, dim);
    const std::size_t count = checked_power(d * d, z.size());
    std::vector<DenseOperator> out;
    out.reserve(count);
    std::vector<std::size_t> a(n, 0);
    std::vector<std::size_t> b(n, 0);
    for (std::size_t w = 0; w < count; ++w) {
        std::size_t rest = w;
        for (std::size_t k = z.size(); k-- > 0;) {
            const std::size_t digit = rest % (d * d);
            rest /= d * d;
            a[z.sites()[k]] = digit % d;
            b[z.sites()[k]] = digit / d;
        }
        out.push_back(weyl_word(d, a, b));
    }
    return out;
}

std::vector<DenseOperator> error_space_basis(std::size_t n, std::size_t d, std::size_t f,
                                             std::vector<std::string> *labels) {
    const std::size_t dim = checked_power(d, n);
    check_amplitude_budget(dim, dim);
    std::vector<DenseOperator> out;
    if (labels) {
        labels->clear();
    }
    const std::size_t nontrivial = d * d - 1;
    for (std::size_t size = 0; size <= std::min(f, n); ++size) {
        std::vector<std::size_t> support(size);
        std::iota(support.begin(), support.end(), std::size_t{0});
        while (true) {
            const std::size_t words = checked_power(nontrivial, size);
            for (std::size_t w = 0; w < words; ++w) {
                std::vector<std::size_t> a(n, 0);
                std::vector<std::size_t> b(n, 0);
                std::size_t rest = w;
                std::string label;
                for (std::size_t k = size; k-- > 0;) {
                    const std::size_t digit = rest % nontrivial + 1;
                    rest /= nontrivial;
                    a[support[k]] = digit % d;
                    b[support[k]] = digit / d;
                }
                for (std::size_t k = 0; k < size; ++k) {
                    label += (k ? " " : "") + weyl_label(d, a[support[k]], b[support[k]]) + "@" +
                             std::to_string(support[k]);
                }
                out.push_back(weyl_word(d, a, b));
                if (labels) {
                    labels->push_back(size == 0 ? "I" : label);
                }
            }
            std::size_t k = size;
            while (k > 0 && support[k - 1] == n - size + k - 1) {
                --k;
            }
            if (k == 0) {
                break;
            }
            ++support[k - 1];
            for (std::size_t j = k; j < size; ++j) {
                support[j] = support[j - 1] + 1;
            }
        }
    }
    return out;
}

KLReport kl_verify(const DenseOperator &v, std::span<const DenseOperator> errors, std::vector<std::string> labels) {
    require_isometry(v);
    require_error_shapes(v, errors);
    const std::size_t k = v.cols();
    const std::size_t count = errors.size();
    // M_ab = (F_a V)^* (F_b V); keep the adjoints of F_a V around.
    std::vector<DenseOperator> images;
    std::vector<DenseOperator> images_adj;
    images.reserve(count);
    images_adj.reserve(count);
    for (const DenseOperator &f : errors) {
        images.push_back(f * v);
        images_adj.push_back(images.back().adjoint());
    }
    KLReport report{DenseOperator(count, count), 0.0, std::move(labels)};
    const DenseOperator id = DenseOperator::identity(k);
    for (std::size_t a = 0; a < count; ++a) {
        for (std::size_t b = 0; b < count; ++b) {
            const DenseOperator block = images_adj[a] * images[b];
            const cplx omega = block.trace() / static_cast<double>(k);
            report.gram(a, b) = a == b ? cplx(omega.real()) : omega;  // diagonal of a Gram form is real
            report.max_deviation = std::max(report.max_deviation, max_abs_diff(block, omega * id));
        }
    }
    return report;
}

LocalizedKLReport kl_verify_localized(const DenseOperator &v, std::span<const DenseOperator> ops) {
    require_isometry(v);
    require_error_shapes(v, ops);
    const std::size_t k = v.cols();
    const DenseOperator v_adj = v.adjoint();
    const DenseOperator id = DenseOperator::identity(k);
    LocalizedKLReport report;
    report.omega.reserve(ops.size());
    for (const DenseOperator &x : ops) {
        const DenseOperator block = v_adj * (x * v);
        const cplx omega = block.trace() / static_cast<double>(k);
        report.omega.push_back(omega);
        report.max_deviation = std::max(report.max_deviation, max_abs_diff(block, omega * id));
    }
    return report;
}

DecoderSynthesis synthesize_decoder(const DenseOperator &v, std::span<const DenseOperator> errors,
                                    const DenseOperator &rho0) {
    const std::size_t k = v.cols();
    const std::size_t dim = v.rows();
    if (rho0.rows() != k || rho0.cols() != k) {
        throw Error(ErrorKind::DimensionMismatch, "rho0 must act on the code's input space");
    }
    if (errors.empty()) {
        throw Error(ErrorKind::ParamOutOfRange, "error list is empty");
    }
    const KLReport kl = kl_verify(v, errors);
    if (!kl.passed()) {
        throw Error(ErrorKind::KLViolated, "Knill-Laflamme deviation " + std::to_string(kl.max_deviation) +
                                               " exceeds " + std::to_string(kKLTolerance));
    }
    const HermitianEigen rho_eig = hermitian_eigen(rho0);
    if (hermiticity_defect(rho0) > kKrausTolerance || std::abs(rho0.trace() - 1.0) > kKrausTolerance ||
        rho_eig.values.front() < -kKrausTolerance) {
        throw Error(ErrorKind::ParamOutOfRange, "rho0 is not a density operator");
    }

    // Orthonormalise the errors against omega: G_r = sum_a u_r[a] / sqrt(lambda_r) F_a.
    const HermitianEigen gram = hermitian_eigen(kl.gram);
    std::vector<std::size_t> kept;
    for (std::size_t r = gram.values.size(); r-- > 0;) {
        if (gram.values[r] > kGramCutoff) {
            kept.push_back(r);
        }
    }
    const std::size_t rank = kept.size();

    std::vector<DenseOperator> images;
    images.reserve(errors.size());
    for (const DenseOperator &f : errors) {
        images.push_back(f * v);
    }
    // Column i * rank + r of U is G_r V e_i.
    check_amplitude_budget(dim, k * rank);
    std::vector<std::vector<cplx>> basis;  // orthonormal columns of U, then the complement
    basis.reserve(dim);
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t slot = 0; slot < rank; ++slot) {
            basis.emplace_back(dim, cplx{0.0, 0.0});
        }
    }
    for (std::size_t slot = 0; slot < rank; ++slot) {
        const std::size_t r = kept[slot];
        const double inv_sqrt = 1.0 / std::sqrt(gram.values[r]);
        for (std::size_t a = 0; a < errors.size(); ++a) {
            const cplx coeff = gram.vectors(a, r) * inv_sqrt;
            if (coeff == cplx{0.0, 0.0}) {
                continue;
            }
            for (std::size_t i = 0; i < k; ++i) {
                std::vector<cplx> &col = basis[i * rank + slot];
                for (std::size_t x = 0; x < dim; ++x) {
                    col[x] += coeff * images[a](x, i);
                }
            }
        }
    }
    const std::size_t syndrome_columns = basis.size();

    // Complete range(U) to an orthonormal basis; the new vectors span range(1 - UU^*).
    for (std::size_t e = 0; e < dim && basis.size() < dim; ++e) {
        std::vector<cplx> w(dim, cplx{0.0, 0.0});
        w[e] = 1.0;
        for (int pass = 0; pass < 2; ++pass) {
            for (const std::vector<cplx> &q : basis) {
                simd::axpy(-simd::dotc(q.data(), w.data(), dim), q.data(), w.data(), dim);
            }
        }
        const double norm = std::sqrt(simd::dotc(w.data(), w.data(), dim).real());
        if (norm > 1e-6) {
            for (cplx &x : w) {
                x /= norm;
            }
            basis.push_back(std::move(w));
        }
    }

    std::vector<DenseOperator> kraus;
    for (std::size_t slot = 0; slot < rank; ++slot) {
        DenseOperator op(k, dim);
        for (std::size_t i = 0; i < k; ++i) {
            const std::vector<cplx> &col = basis[i * rank + slot];
            for (std::size_t x = 0; x < dim; ++x) {
                op(i, x) = std::conj(col[x]);
            }
        }
        kraus.push_back(std::move(op));
    }
    for (std::size_t l = 0; l < k; ++l) {
        const double p = rho_eig.values[l];
        if (p <= 0.0) {
            continue;
        }
        const double amp = std::sqrt(p);
        for (std::size_t j = syndrome_columns; j < basis.size(); ++j) {
            DenseOperator op(k, dim);
            for (std::size_t i = 0; i < k; ++i) {
                for (std::size_t x = 0; x < dim; ++x) {
                    op(i, x) = amp * rho_eig.vectors(i, l) * std::conj(basis[j][x]);
                }
            }
            kraus.push_back(std::move(op));
        }
    }
    return DecoderSynthesis{Channel::from_kraus(std::move(kraus)), rank, errors.size(), rank < errors.size(),
                            kl.max_deviation};
}

double verify_etd(const Channel &e, const Channel &t, const Channel &d) {
    if (e.dim_out() != t.dim_in() || t.dim_out() != d.dim_in() || d.dim_out() != e.dim_in()) {
        throw Error(ErrorKind::DimensionMismatch, "encoder, channel and decoder do not compose to an endomorphism");
    }
    const std::size_t k = e.dim_in();
    DenseOperator diff(k * k, k * k);
    const double scale = 1.0 / static_cast<double>(k);
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < k; ++j) {
            DenseOperator unit(k, k);
            unit(i, j) = 1.0;
            const DenseOperator image = apply_channel(d, apply_channel(t, apply_channel(e, unit)));
            for (std::size_t r = 0; r < k; ++r) {
                for (std::size_t c = 0; c < k; ++c) {
                    diff(r * k + i, c * k + j) = scale * (image(r, c) - unit(r, c));
                }
            }
        }
    }
    return 0.5 * trace_norm(diff);
}

}  // namespace qgc
