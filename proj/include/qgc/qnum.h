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
#include <span>
#include <string>
#include <vector>

#include "qgc/dense.h"
#include "qgc/sites.h"

namespace qgc {

inline constexpr double kKrausTolerance = 1e-9;
inline constexpr double kKLTolerance = 1e-9;
inline constexpr double kGramCutoff = 1e-10;

/// Channel in Kraus form, Schrodinger convention: rho -> sum_j F_j rho F_j^*.
/// Construction enforces sum_j F_j^* F_j = 1 within kKrausTolerance.
class Channel {
   public:
    static Channel from_kraus(std::vector<DenseOperator> kraus);
    static Channel identity(std::size_t dim);
    static Channel unitary(const DenseOperator &u);

    const std::vector<DenseOperator> &kraus() const noexcept {
        return kraus_;
    }
    std::size_t dim_in() const noexcept {
        return dim_in_;
    }
    std::size_t dim_out() const noexcept {
        return dim_out_;
    }

    /// max |sum_j F_j^* F_j - 1|.
    double completeness_defect() const;

   private:
    Channel(std::vector<DenseOperator> kraus, std::size_t dim_in, std::size_t dim_out)
        : kraus_(std::move(kraus)), dim_in_(dim_in), dim_out_(dim_out) {
    }

    std::vector<DenseOperator> kraus_;
    std::size_t dim_in_ = 1;
    std::size_t dim_out_ = 1;
};

/// sum_j F_j rho F_j^*. Only shapes are checked, so off-diagonal matrix units
/// may be pushed through as well (used for Choi matrices).
DenseOperator apply_channel(const Channel &t, const DenseOperator &rho);

/// Kraus set {F_i (x) G_j}, i major.
Channel tensor_channels(const Channel &t1, const Channel &t2);

/// Site channels tensored in order, site 0 most significant.
Channel product_channel(std::span<const Channel> sites);

/// Schrodinger composition: `first` acts, then `second`.
Channel compose(const Channel &first, const Channel &second);

/// (1/D) sum_ij T(|i><j|) (x) |i><j|; the identity channel maps to the
/// maximally entangled projector.
DenseOperator choi_state(const Channel &t);

/// Clock-and-shift word X^a Z^b on C^d with X|j> = |j+1>, Z|j> = w^j |j>.
DenseOperator weyl(std::size_t d, std::size_t a, std::size_t b);
std::string weyl_label(std::size_t d, std::size_t a, std::size_t b);

/// All d^(2|Z|) Weyl words supported on Z, identity elsewhere. Word index w is
/// read base d^2 with the first site of Z most significant; each digit k
/// encodes a = k % d, b = k / d, so a qubit site runs I, X, Z, XZ.
std::vector<DenseOperator> localized_error_basis(std::size_t n, std::size_t d, const ErrorSubset &z);

/// Distinct Weyl words acting non-trivially on at most f of the n sites,
/// identity first; labels (e.g. "X@0 Z@3") are written to `labels` if given.
std::vector<DenseOperator> error_space_basis(std::size_t n, std::size_t d, std::size_t f,
                                             std::vector<std::string> *labels = nullptr);

struct KLReport {
    DenseOperator gram;  // omega(F_a^* F_b)
    double max_deviation = 0.0;
    std::vector<std::string> basis_labels;

    bool passed() const {
        return max_deviation <= kKLTolerance;
    }
};

/// Pairwise check of V^* F_a^* F_b V = omega_ab 1 over an error list.
KLReport kl_verify(const DenseOperator &v, std::span<const DenseOperator> errors,
                   std::vector<std::string> labels = {});

struct LocalizedKLReport {
    std::vector<cplx> omega;  // omega(X) per operator
    double max_deviation = 0.0;

    bool passed() const {
        return max_deviation <= kKLTolerance;
    }
};

/// Single-operator form V^* X V = omega(X) 1, for X already spanning the
/// product space (e.g. all words on <= 2f sites).
LocalizedKLReport kl_verify_localized(const DenseOperator &v, std::span<const DenseOperator> ops);

struct DecoderSynthesis {
    Channel decoder;
    std::size_t gram_rank = 0;
    std::size_t error_count = 0;
    bool degenerate = false;  // gram_rank < error_count
    double kl_deviation = 0.0;
};

/// Recovery channel for the code V against the error list. The syndrome part
/// is (1 (x) <e_k|) U^* with U(phi (x) e_k) = G_k V phi for the
/// Gram-orthonormalised errors G_k; the complement of range(U) is mapped
/// onto rho0. Throws KLViolated if the error list is not correctable.
DecoderSynthesis synthesize_decoder(const DenseOperator &v, std::span<const DenseOperator> errors,
                                    const DenseOperator &rho0);

/// Half the trace norm between the Choi states of D o T o E and the identity.
double verify_etd(const Channel &e, const Channel &t, const Channel &d);

}  // namespace qgc
