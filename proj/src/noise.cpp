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

#include "qgc/noise.h"

#include <cmath>
#include <fstream>
#include <limits>
#include <numbers>

#include "json.hpp"
#include "qgc/entropy.h"
#include "qgc/error.h"

namespace qgc {

namespace {

double parse_number(const std::string &text, const std::string &token) {
    std::size_t used = 0;
    double value = 0.0;
    try {
        value = std::stod(text, &used);
    } catch (const std::exception &) {
        used = 0;
    }
    if (used == 0 || used != text.size() || !std::isfinite(value)) {
        throw Error(ErrorKind::ParamOutOfRange, "bad numeric parameter in noise token '" + token + "'");
    }
    return value;
}

DenseOperator parse_matrix(const nlohmann::json &j) {
    if (!j.is_array() || j.empty() || !j[0].is_array()) {
        throw Error(ErrorKind::NotChannel, "Kraus matrix must be a list of rows");
    }
    DenseOperator out(j.size(), j[0].size());
    for (std::size_t r = 0; r < j.size(); ++r) {
        if (!j[r].is_array() || j[r].size() != out.cols()) {
            throw Error(ErrorKind::NotChannel, "ragged Kraus matrix");
        }
        for (std::size_t c = 0; c < out.cols(); ++c) {
            const nlohmann::json &v = j[r][c];
            if (v.is_number()) {
                out(r, c) = v.get<double>();
            } else if (v.is_array() && v.size() == 2 && v[0].is_number() && v[1].is_number()) {
                out(r, c) = cplx{v[0].get<double>(), v[1].get<double>()};
            } else {
                throw Error(ErrorKind::NotChannel, "Kraus entries must be numbers or [re, im] pairs");
            }
        }
    }
    return out;
}

}  // namespace

NoiseDescriptor parse_noise(const std::string &token, std::size_t site_dim) {
    const std::size_t colon = token.find(':');
    const std::string family = token.substr(0, colon);
    const std::string arg = colon == std::string::npos ? "" : token.substr(colon + 1);
    NoiseDescriptor out;
    out.site_dim = site_dim;
    if (family == "depolarizing") {
        out.family = NoiseFamily::Depolarizing;
        out.params = {parse_number(arg, token)};
    } else if (family == "unitary-rotation") {
        out.family = NoiseFamily::UnitaryRotation;
        out.params = {parse_number(arg, token)};
    } else if (family == "custom-kraus") {
        out.family = NoiseFamily::CustomKraus;
        std::ifstream in(arg);
        if (!in) {
            throw Error(ErrorKind::NotChannel, "cannot open Kraus file '" + arg + "'");
        }
        nlohmann::json j;
        try {
            in >> j;
        } catch (const nlohmann::json::exception &e) {
            throw Error(ErrorKind::NotChannel, arg + ": " + e.what());
        }
        if (!j.is_object() || !j.contains("kraus") || !j.at("kraus").is_array()) {
            throw Error(ErrorKind::NotChannel, arg + ": expected an object with a 'kraus' list");
        }
        for (const nlohmann::json &m : j.at("kraus")) {
            out.custom_kraus.push_back(parse_matrix(m));
        }
    } else {
        throw Error(ErrorKind::ParamOutOfRange,
                    "unknown noise family '" + family + "' (use depolarizing, unitary-rotation or custom-kraus)");
    }
    return out;
}

Channel make_channel(const NoiseDescriptor &noise) {
    switch (noise.family) {
        case NoiseFamily::Depolarizing:
            return make_depolarizing(noise.site_dim, noise.params.at(0));
        case NoiseFamily::UnitaryRotation:
            return Channel::unitary(rotation_unitary(noise.site_dim, noise.params.at(0)));
        case NoiseFamily::CustomKraus: {
            Channel ch = Channel::from_kraus(noise.custom_kraus);
            if (ch.dim_in() != noise.site_dim || ch.dim_out() != noise.site_dim) {
                throw Error(ErrorKind::DimensionMismatch, "custom Kraus operators must act on one site");
            }
            return ch;
        }
    }
    throw Error(ErrorKind::ParamOutOfRange, "unknown noise family");
}

UnitaryChannel make_unitary_channel(const DenseOperator &u) {
    if (!u.square()) {
        throw Error(ErrorKind::NotUnitary, "unitary must be square");
    }
    const DenseOperator id = DenseOperator::identity(u.rows());
    const double defect = max_abs_diff(adjoint_times(u, u), id);
    if (defect > kKrausTolerance) {
        throw Error(ErrorKind::NotUnitary, "U^*U deviates from the identity by " + std::to_string(defect));
    }
    return UnitaryChannel{Channel::from_kraus({u}), 2.0 * operator_norm(u - id)};
}

DenseOperator rotation_unitary(std::size_t d, double theta) {
    const DenseOperator x = weyl(d, 1, 0);
    DenseOperator generator = x + x.adjoint();
    generator *= 0.5;
    return unitary_exp(generator, 0.5 * theta);
}

Channel make_depolarizing(std::size_t d, double q) {
    if (!(q >= 0.0 && q <= 1.0)) {
        throw Error(ErrorKind::ParamOutOfRange, "depolarizing weight " + std::to_string(q) + " outside [0, 1]");
    }
    if (d < 2) {
        throw Error(ErrorKind::ParamOutOfRange, "site dimension must be at least 2");
    }
    const double dd = static_cast<double>(d * d);
    std::vector<DenseOperator> kraus;
    kraus.push_back(std::sqrt(1.0 - q + q / dd) * DenseOperator::identity(d));
    if (q > 0.0) {
        const double amp = std::sqrt(q / dd);
        for (std::size_t w = 1; w < d * d; ++w) {
            kraus.push_back(amp * weyl(d, w % d, w / d));
        }
    }
    return Channel::from_kraus(std::move(kraus));
}

LinearMap::LinearMap(std::size_t domain, std::size_t codomain,
                     std::vector<std::pair<DenseOperator, DenseOperator>> terms)
    : domain_(domain), codomain_(codomain), terms_(std::move(terms)) {
    for (const auto &[l, r] : terms_) {
        if (l.rows() != codomain || l.cols() != domain || r.rows() != domain || r.cols() != codomain) {
            throw Error(ErrorKind::DimensionMismatch, "operator-sum term does not map B(C^domain) to B(C^codomain)");
        }
    }
}

LinearMap LinearMap::heisenberg(const Channel &t) {
    std::vector<std::pair<DenseOperator, DenseOperator>> terms;
    for (const DenseOperator &f : t.kraus()) {
        terms.emplace_back(f.adjoint(), f);
    }
    return LinearMap(t.dim_out(), t.dim_in(), std::move(terms));
}

LinearMap LinearMap::transposition(std::size_t d) {
    // X^T = sum_ij |i><j| X |i><j|.
    std::vector<std::pair<DenseOperator, DenseOperator>> terms;
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = 0; j < d; ++j) {
            DenseOperator unit(d, d);
            unit(i, j) = 1.0;
            terms.emplace_back(unit, unit);
        }
    }
    return LinearMap(d, d, std::move(terms));
}

LinearMap LinearMap::zero(std::size_t domain, std::size_t codomain) {
    return LinearMap(domain, codomain, {});
}

DenseOperator LinearMap::apply(const DenseOperator &x) const {
    return apply_extended(x, 1);
}

DenseOperator LinearMap::apply_extended(const DenseOperator &a, std::size_t ancilla) const {
    if (a.rows() != domain_ * ancilla || a.cols() != domain_ * ancilla) {
        throw Error(ErrorKind::DimensionMismatch, "argument does not act on C^domain (x) C^ancilla");
    }
    const DenseOperator id = DenseOperator::identity(ancilla);
    DenseOperator out(codomain_ * ancilla, codomain_ * ancilla);
    for (const auto &[l, r] : terms_) {
        out += (kron(l, id) * a) * kron(r, id);
    }
    return out;
}

double cb_lower_witness(const LinearMap &l1, const LinearMap &l2, const DenseOperator &a) {
    if (l1.domain() != l2.domain() || l1.codomain() != l2.codomain()) {
        throw Error(ErrorKind::DimensionMismatch, "maps have different domains or codomains");
    }
    if (!a.square() || a.rows() % l1.domain() != 0) {
        throw Error(ErrorKind::DimensionMismatch, "witness must act on the domain tensored with an ancilla");
    }
    const std::size_t ancilla = a.rows() / l1.domain();
    const double norm_a = operator_norm(a);
    if (norm_a == 0.0) {
        return 0.0;
    }
    const DenseOperator diff = l1.apply_extended(a, ancilla) - l2.apply_extended(a, ancilla);
    return operator_norm(diff) / norm_a;
}

double cb_lower_witness(const Channel &t1, const Channel &t2, const DenseOperator &a) {
    return cb_lower_witness(LinearMap::heisenberg(t1), LinearMap::heisenberg(t2), a);
}

double choi_witness(const Channel &t1, const Channel &t2) {
    if (t1.dim_in() != t2.dim_in() || t1.dim_out() != t2.dim_out()) {
        throw Error(ErrorKind::DimensionMismatch, "channels have different shapes");
    }
    return trace_norm(choi_state(t1) - choi_state(t2));
}

double binomial_error_bound(std::size_t n, std::size_t f, double eps) {
    if (f + 1 > n) {
        throw Error(ErrorKind::PreconditionViolated, "need f + 1 <= n");
    }
    if (!(eps >= 0.0)) {
        throw Error(ErrorKind::ParamOutOfRange, "cb distance must be non-negative");
    }
    const double threshold = f + 1 == n ? std::numeric_limits<double>::infinity()
                                        : static_cast<double>(f + 1) / static_cast<double>(n - f - 1);
    if (eps > threshold) {
        throw Error(ErrorKind::PreconditionViolated,
                    "cb distance " + std::to_string(eps) + " exceeds (f+1)/(n-f-1) = " + std::to_string(threshold));
    }
    const double r = static_cast<double>(f + 1) / static_cast<double>(n);
    return std::pow(eps, static_cast<double>(f + 1)) * std::exp2(static_cast<double>(n) * binary_entropy(r));
}

double truncated_binomial_bound(std::size_t n, double r, double a) {
    if (!(r >= 0.0 && r <= 1.0)) {
        throw Error(ErrorKind::ParamOutOfRange, "fraction r must lie in [0, 1]");
    }
    if (!(a > 0.0)) {
        throw Error(ErrorKind::ParamOutOfRange, "a must be positive");
    }
    const double limit = r == 1.0 ? std::numeric_limits<double>::infinity() : r / (1.0 - r);
    if (a > limit) {
        throw Error(ErrorKind::PreconditionViolated,
                    "a = " + std::to_string(a) + " exceeds r/(1-r) = " + std::to_string(limit));
    }
    return static_cast<double>(n) * (r * std::log2(a) + binary_entropy(r));
}

ErrorThreshold error_threshold(double eps) {
    if (!(eps > 0.0 && eps <= 0.5)) {
        throw Error(ErrorKind::ParamOutOfRange, "error rate must lie in (0, 1/2]");
    }
    return {std::exp2(-binary_entropy(eps) / eps), eps / std::numbers::e};
}

double delta_exponent(double eps, double cb_dist) {
    if (!(eps > 0.0 && eps <= 0.5)) {
        throw Error(ErrorKind::ParamOutOfRange, "error rate must lie in (0, 1/2]");
    }
    if (!(cb_dist > 0.0)) {
        throw Error(ErrorKind::ParamOutOfRange, "cb distance must be positive");
    }
    return std::exp2(binary_entropy(eps)) * std::pow(cb_dist, eps);
}

}  // namespace qgc
