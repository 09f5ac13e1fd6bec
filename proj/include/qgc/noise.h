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
#include <string>
#include <utility>
#include <vector>

#include "qgc/dense.h"
#include "qgc/qnum.h"

namespace qgc {

enum class NoiseFamily { UnitaryRotation, Depolarizing, CustomKraus };

struct NoiseDescriptor {
    NoiseFamily family = NoiseFamily::Depolarizing;
    std::vector<double> params;  // rotation angle, or depolarizing weight q
    std::size_t site_dim = 2;
    std::vector<DenseOperator> custom_kraus;
};

/// Parses "depolarizing:q", "unitary-rotation:theta" or "custom-kraus:path".
/// The custom file holds {"kraus": [matrix, ...]} with each matrix a list of
/// rows of [re, im] pairs.
NoiseDescriptor parse_noise(const std::string &token, std::size_t site_dim);

Channel make_channel(const NoiseDescriptor &noise);

struct UnitaryChannel {
    Channel channel;
    double cb_upper = 0.0;  // 2 ||U - 1||, an upper bound on ||T - id||_cb
};

/// Throws NotUnitary unless U^*U = 1 within 1e-9.
UnitaryChannel make_unitary_channel(const DenseOperator &u);

/// exp(-i theta/2 (X + X^*)/2) on C^d; a plain x-rotation for qubits.
DenseOperator rotation_unitary(std::size_t d, double theta);

/// rho -> (1-q) rho + q 1/d via weighted Weyl Kraus operators.
Channel make_depolarizing(std::size_t d, double q);

/// Linear map X -> sum_k L_k X R_k from B(C^domain) to B(C^codomain).
class LinearMap {
   public:
    LinearMap(std::size_t domain, std::size_t codomain, std::vector<std::pair<DenseOperator, DenseOperator>> terms);

    /// Heisenberg dual of a channel: A -> sum_j F_j^* A F_j (output -> input).
    static LinearMap heisenberg(const Channel &t);
    static LinearMap transposition(std::size_t d);
    static LinearMap zero(std::size_t domain, std::size_t codomain);

    std::size_t domain() const noexcept {
        return domain_;
    }
    std::size_t codomain() const noexcept {
        return codomain_;
    }

    DenseOperator apply(const DenseOperator &x) const;
    /// (this (x) id_ancilla)(a) for `a` on C^domain (x) C^ancilla.
    DenseOperator apply_extended(const DenseOperator &a, std::size_t ancilla) const;

   private:
    std::size_t domain_;
    std::size_t codomain_;
    std::vector<std::pair<DenseOperator, DenseOperator>> terms_;
};

/// ||((L1 - L2) (x) id)(A)|| / ||A||, one member of the supremum defining the
/// cb-norm, hence a lower bound on ||L1 - L2||_cb. A acts on
/// C^domain (x) C^ancilla with ancilla = A.rows() / domain.
double cb_lower_witness(const LinearMap &l1, const LinearMap &l2, const DenseOperator &a);
double cb_lower_witness(const Channel &t1, const Channel &t2, const DenseOperator &a);

/// Trace norm of the Choi-state difference; a lower bound on the cb distance
/// of the two channels (equal to the witness above with A = sign of the
/// difference).
double choi_witness(const Channel &t1, const Channel &t2);

/// eps^(f+1) 2^(n H2((f+1)/n)), bounding ||E T^n D - id||_cb for a code that
/// corrects f errors. Throws PreconditionViolated when
/// eps > (f+1)/(n-f-1) or f+1 > n.
double binomial_error_bound(std::size_t n, std::size_t f, double eps);

/// n (r log2 a + H2(r)): bound on log2 sum_{k >= rn} C(n,k) a^k. Requires
/// 0 <= r <= 1, a > 0 and a <= r/(1-r).
double truncated_binomial_bound(std::size_t n, double r, double a);

struct ErrorThreshold {
    double strict = 0.0;  // 2^(-H2(eps)/eps)
    double simple = 0.0;  // eps / e
};

ErrorThreshold error_threshold(double eps);

/// Per-use factor 2^H2(eps) * cb_dist^eps; n uses give its n-th power.
double delta_exponent(double eps, double cb_dist);

}  // namespace qgc
