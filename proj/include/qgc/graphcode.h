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
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "qgc/dense.h"
#include "qgc/modlinalg.h"
#include "qgc/sites.h"

namespace qgc {

struct Edge {
    std::size_t a = 0;
    std::size_t b = 0;
    std::int64_t multiplicity = 1;
};

/// Qudit graph code: a symmetric, zero-diagonal adjacency matrix over Z_d on
/// m input nodes followed by n output nodes. Node k < m is input k; node m + j
/// is output j. Immutable once built.
class GraphCode {
   public:
    /// Validates symmetry, zero diagonal and shape; throws InvalidGraph.
    GraphCode(std::uint32_t d, std::size_t m, std::size_t n, ModMatrix gamma);

    /// Edges are reduced mod d and summed when repeated; self-loops throw.
    static GraphCode from_edges(std::uint32_t d, std::size_t m, std::size_t n, const std::vector<Edge> &edges);

    std::uint32_t d() const noexcept {
        return d_;
    }
    std::size_t m() const noexcept {
        return m_;
    }
    std::size_t n() const noexcept {
        return n_;
    }
    std::size_t nodes() const noexcept {
        return m_ + n_;
    }
    const ModMatrix &gamma() const noexcept {
        return gamma_;
    }

    std::size_t output_node(std::size_t output) const noexcept {
        return m_ + output;
    }

    /// Non-zero upper-triangle entries as (a, b, multiplicity), a < b.
    std::vector<Edge> edges() const;

    bool operator==(const GraphCode &) const = default;

   private:
    std::uint32_t d_;
    std::size_t m_;
    std::size_t n_;
    ModMatrix gamma_;
};

/// The (Y \ Z) x (X u Z) block of the adjacency matrix.
ModMatrix correction_submatrix(const GraphCode &code, const ErrorSubset &z);

/// True iff the (Y \ Z) x (X u Z) block has trivial kernel mod d, which makes
/// V* F V proportional to the identity for every F localized on Z.
bool check_subset(const GraphCode &code, const ErrorSubset &z);

/// First subset with |Z| <= 2f failing check_subset, scanning by increasing
/// size and lexicographically within a size; nullopt when all pass.
/// Throws TooManyErrors unless 2f < n.
std::optional<ErrorSubset> find_uncorrectable_subset(const GraphCode &code, std::size_t f);

bool corrects_f(const GraphCode &code, std::size_t f);

/// Largest f with corrects_f, or -1 when even Z = {} fails.
int max_correctable_f(const GraphCode &code);

/// Encoding operator: entry (j_Y, j_X) = d^{-n/2} exp(i pi/d * j.Gamma.j) where
/// j runs over all m + n nodes. Basis indices are base-d integers whose most
/// significant digit belongs to the lowest node. Throws DimensionOverflow when
/// d^(m+n) exceeds the amplitude cap.
DenseOperator build_isometry(const GraphCode &code);

/// One input (node 0) joined to all five outputs, outputs on the 5-cycle
/// 1-2-3-5-4-1.
GraphCode wheel_code();

/// Triangular prism: triangles {0,1,4} and {2,3,5} plus rungs 0-2, 1-3, 4-5,
/// with node 0 as the input.
GraphCode prism_code();

// Graph file: {"d": int, "m": int, "n": int, "edges": [[a, b, mult], ...]}.
GraphCode graph_from_json(const nlohmann::json &j);
nlohmann::json graph_to_json(const GraphCode &code);
GraphCode load_graph_file(const std::string &path);

}  // namespace qgc
