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

#include "qgc/graphcode.h"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numbers>
#include <numeric>
#include <sstream>

#include "qgc/error.h"

namespace qgc {

ErrorSubset::ErrorSubset(std::vector<std::size_t> sites, std::size_t n) : sites_(std::move(sites)) {
    std::sort(sites_.begin(), sites_.end());
    if (std::adjacent_find(sites_.begin(), sites_.end()) != sites_.end()) {
        throw Error(ErrorKind::InvalidSubset, "duplicate site in " + to_string());
    }
    if (!sites_.empty() && sites_.back() >= n) {
        throw Error(ErrorKind::InvalidSubset,
                    "site " + std::to_string(sites_.back()) + " is not an output index below " + std::to_string(n));
    }
}

bool ErrorSubset::contains(std::size_t site) const {
    return std::binary_search(sites_.begin(), sites_.end(), site);
}

std::string ErrorSubset::to_string() const {
    std::ostringstream out;
    out << '{';
    for (std::size_t k = 0; k < sites_.size(); ++k) {
        out << (k ? "," : "") << sites_[k];
    }
    out << '}';
    return out.str();
}

GraphCode::GraphCode(std::uint32_t d, std::size_t m, std::size_t n, ModMatrix gamma)
    : d_(d), m_(m), n_(n), gamma_(std::move(gamma)) {
    if (d < 2) {
        throw Error(ErrorKind::InvalidGraph, "dimension d must be at least 2");
    }
    if (n == 0) {
        throw Error(ErrorKind::InvalidGraph, "a code needs at least one output node");
    }
    if (gamma_.modulus() != d || gamma_.rows() != m + n || gamma_.cols() != m + n) {
        throw Error(ErrorKind::InvalidGraph, "adjacency matrix must be (m+n)x(m+n) over Z_d");
    }
    for (std::size_t x = 0; x < m + n; ++x) {
        if (gamma_(x, x) != 0) {
            throw Error(ErrorKind::InvalidGraph, "self-loop at node " + std::to_string(x));
        }
        for (std::size_t y = x + 1; y < m + n; ++y) {
            if (gamma_(x, y) != gamma_(y, x)) {
                throw Error(ErrorKind::InvalidGraph,
                            "adjacency not symmetric at (" + std::to_string(x) + "," + std::to_string(y) + ")");
            }
        }
    }
}

GraphCode GraphCode::from_edges(std::uint32_t d, std::size_t m, std::size_t n, const std::vector<Edge> &edges) {
    if (d < 2) {
        throw Error(ErrorKind::InvalidGraph, "dimension d must be at least 2");
    }
    const std::size_t nodes = m + n;
    std::vector<std::int64_t> acc(nodes * nodes, 0);
    for (const Edge &e : edges) {
        if (e.a >= nodes || e.b >= nodes) {
            throw Error(ErrorKind::InvalidGraph, "edge endpoint outside 0.." + std::to_string(nodes - 1));
        }
        if (e.a == e.b) {
            throw Error(ErrorKind::InvalidGraph, "self-loop at node " + std::to_string(e.a));
        }
        const std::int64_t w = ((e.multiplicity % d) + d) % d;
        acc[e.a * nodes + e.b] = (acc[e.a * nodes + e.b] + w) % d;
        acc[e.b * nodes + e.a] = (acc[e.b * nodes + e.a] + w) % d;
    }
    return GraphCode(d, m, n, ModMatrix(d, nodes, nodes, acc));
}

std::vector<Edge> GraphCode::edges() const {
    std::vector<Edge> out;
    for (std::size_t a = 0; a < nodes(); ++a) {
        for (std::size_t b = a + 1; b < nodes(); ++b) {
            if (gamma_(a, b) != 0) {
                out.push_back({a, b, static_cast<std::int64_t>(gamma_(a, b))});
            }
        }
    }
    return out;
}

ModMatrix correction_submatrix(const GraphCode &code, const ErrorSubset &z) {
    if (!z.empty() && z.sites().back() >= code.n()) {
        throw Error(ErrorKind::InvalidSubset, z.to_string() + " contains non-output indices");
    }
    std::vector<std::size_t> row_nodes;
    std::vector<std::size_t> col_nodes(code.m());
    std::iota(col_nodes.begin(), col_nodes.end(), std::size_t{0});
    for (std::size_t y = 0; y < code.n(); ++y) {
        if (z.contains(y)) {
            col_nodes.push_back(code.output_node(y));
        } else {
            row_nodes.push_back(code.output_node(y));
        }
    }
    return code.gamma().select(row_nodes, col_nodes);
}

bool check_subset(const GraphCode &code, const ErrorSubset &z) {
    return kernel_trivial(correction_submatrix(code, z));
}

std::optional<ErrorSubset> find_uncorrectable_subset(const GraphCode &code, std::size_t f) {
    const std::size_t n = code.n();
    if (2 * f >= n) {
        throw Error(ErrorKind::TooManyErrors,
                    "need 2f < n, got f=" + std::to_string(f) + " with n=" + std::to_string(n));
    }
    for (std::size_t size = 0; size <= 2 * f; ++size) {
        std::vector<std::size_t> combo(size);
        std::iota(combo.begin(), combo.end(), std::size_t{0});
        while (true) {
            ErrorSubset z(combo, n);
            if (!check_subset(code, z)) {
                return z;
            }
            // Next combination in lexicographic order.
            std::size_t k = size;
            while (k > 0 && combo[k - 1] == n - size + k - 1) {
                --k;
            }
            if (k == 0) {
                break;
            }
            ++combo[k - 1];
            for (std::size_t j = k; j < size; ++j) {
                combo[j] = combo[j - 1] + 1;
            }
        }
    }
    return std::nullopt;
}

bool corrects_f(const GraphCode &code, std::size_t f) {
    return !find_uncorrectable_subset(code, f).has_value();
}

int max_correctable_f(const GraphCode &code) {
    int best = -1;
    for (std::size_t f = 0; 2 * f < code.n(); ++f) {
        if (!corrects_f(code, f)) {
            break;
        }
        best = static_cast<int>(f);
    }
    return best;
}

DenseOperator build_isometry(const GraphCode &code) {
    const std::uint64_t d = code.d();
    const std::size_t m = code.m();
    const std::size_t n = code.n();
    std::size_t dim_in = 1;
    std::size_t dim_out = 1;
    for (std::size_t k = 0; k < m; ++k) {
        check_amplitude_budget(dim_in, d);
        dim_in *= d;
    }
    for (std::size_t k = 0; k < n; ++k) {
        check_amplitude_budget(dim_out, d);
        dim_out *= d;
    }
    DenseOperator v(dim_out, dim_in);

    const std::size_t nodes = m + n;
    const std::uint64_t period = 2 * d;
    std::vector<cplx> phases(period);
    const double norm = std::pow(static_cast<double>(d), -0.5 * static_cast<double>(n));
    for (std::uint64_t t = 0; t < period; ++t) {
        phases[t] = std::polar(norm, std::numbers::pi * static_cast<double>(t) / static_cast<double>(d));
    }

    // Only the upper triangle is needed: j.Gamma.j = 2 * sum_{x<y} j_x Gamma_xy j_y.
    std::vector<Edge> edges = code.edges();
    std::vector<std::uint64_t> digits(nodes, 0);
    for (std::size_t jx = 0; jx < dim_in; ++jx) {
        std::size_t rest = jx;
        for (std::size_t x = m; x-- > 0;) {
            digits[x] = rest % d;
            rest /= d;
        }
        for (std::size_t jy = 0; jy < dim_out; ++jy) {
            rest = jy;
            for (std::size_t y = n; y-- > 0;) {
                digits[m + y] = rest % d;
                rest /= d;
            }
            std::uint64_t exponent = 0;
            for (const Edge &e : edges) {
                exponent = (exponent + 2 * digits[e.a] * static_cast<std::uint64_t>(e.multiplicity) % period *
                                           digits[e.b]) %
                           period;
            }
            v(jy, jx) = phases[exponent];
        }
    }
    return v;
}

GraphCode wheel_code() {
    std::vector<Edge> edges;
    for (std::size_t y = 1; y <= 5; ++y) {
        edges.push_back({0, y, 1});
    }
    for (auto [a, b] : {std::pair{1, 2}, {2, 3}, {3, 5}, {5, 4}, {4, 1}}) {
        edges.push_back({static_cast<std::size_t>(a), static_cast<std::size_t>(b), 1});
    }
    return GraphCode::from_edges(2, 1, 5, edges);
}

GraphCode prism_code() {
    std::vector<Edge> edges;
    for (auto [a, b] : {std::pair{0, 1}, {1, 3}, {3, 2}, {2, 0}, {0, 4}, {1, 4}, {2, 5}, {3, 5}, {4, 5}}) {
        edges.push_back({static_cast<std::size_t>(a), static_cast<std::size_t>(b), 1});
    }
    return GraphCode::from_edges(2, 1, 5, edges);
}

namespace {

std::int64_t require_int(const nlohmann::json &j, const char *key) {
    if (!j.contains(key)) {
        throw Error(ErrorKind::InvalidGraph, std::string("missing field '") + key + "'");
    }
    const nlohmann::json &v = j.at(key);
    if (!v.is_number_integer()) {
        throw Error(ErrorKind::InvalidGraph, std::string("field '") + key + "' must be an integer");
    }
    return v.get<std::int64_t>();
}

}  // namespace

GraphCode graph_from_json(const nlohmann::json &j) {
    if (!j.is_object()) {
        throw Error(ErrorKind::InvalidGraph, "graph file must hold a single object");
    }
    const std::int64_t d = require_int(j, "d");
    const std::int64_t m = require_int(j, "m");
    const std::int64_t n = require_int(j, "n");
    if (d < 2 || d > (std::int64_t{1} << 31)) {
        throw Error(ErrorKind::InvalidGraph, "d must lie in [2, 2^31]");
    }
    if (m < 0 || n < 1 || m + n > 4096) {
        throw Error(ErrorKind::InvalidGraph, "need m >= 0, n >= 1 and a modest node count");
    }
    if (!j.contains("edges") || !j.at("edges").is_array()) {
        throw Error(ErrorKind::InvalidGraph, "field 'edges' must be a list of [a, b, multiplicity]");
    }
    std::vector<Edge> edges;
    for (const nlohmann::json &e : j.at("edges")) {
        if (!e.is_array() || e.size() != 3 || !e[0].is_number_integer() || !e[1].is_number_integer() ||
            !e[2].is_number_integer()) {
            throw Error(ErrorKind::InvalidGraph, "edge " + e.dump() + " is not an [a, b, multiplicity] triple");
        }
        const std::int64_t a = e[0].get<std::int64_t>();
        const std::int64_t b = e[1].get<std::int64_t>();
        if (a < 0 || b < 0) {
            throw Error(ErrorKind::InvalidGraph, "edge " + e.dump() + " has a negative node");
        }
        edges.push_back({static_cast<std::size_t>(a), static_cast<std::size_t>(b), e[2].get<std::int64_t>()});
    }
    return GraphCode::from_edges(static_cast<std::uint32_t>(d), static_cast<std::size_t>(m),
                                 static_cast<std::size_t>(n), edges);
}

nlohmann::json graph_to_json(const GraphCode &code) {
    nlohmann::json edges = nlohmann::json::array();
    for (const Edge &e : code.edges()) {
        edges.push_back({e.a, e.b, e.multiplicity});
    }
    return {{"d", code.d()}, {"m", code.m()}, {"n", code.n()}, {"edges", edges}};
}

GraphCode load_graph_file(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw Error(ErrorKind::InvalidGraph, "cannot open " + path);
    }
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception &e) {
        throw Error(ErrorKind::InvalidGraph, path + ": " + e.what());
    }
    return graph_from_json(j);
}

}  // namespace qgc
