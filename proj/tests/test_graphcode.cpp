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

#include <cmath>
#include <complex>
#include <numbers>
#include <random>

#include "gtest/gtest.h"
#include "qgc/error.h"
#include "qgc/graphcode.h"
#include "qgc/qnum.h"

using namespace qgc;

namespace {

GraphCode random_code(std::mt19937_64 &rng, std::uint32_t d, std::size_t m, std::size_t n) {
    std::vector<Edge> edges;
    for (std::size_t a = 0; a < m + n; ++a) {
        for (std::size_t b = a + 1; b < m + n; ++b) {
            edges.push_back({a, b, static_cast<std::int64_t>(rng() % d)});
        }
    }
    return GraphCode::from_edges(d, m, n, edges);
}

// Oracle for check_subset: build the (Y \ Z) x (X u Z) block directly and look
// for a non-zero kernel vector by enumeration.
bool check_subset_brute(const GraphCode &code, const std::vector<std::size_t> &z) {
    std::vector<std::size_t> rows;
    std::vector<std::size_t> cols;
    for (std::size_t x = 0; x < code.m(); ++x) {
        cols.push_back(x);
    }
    for (std::size_t y = 0; y < code.n(); ++y) {
        if (std::find(z.begin(), z.end(), y) != z.end()) {
            cols.push_back(code.m() + y);
        } else {
            rows.push_back(code.m() + y);
        }
    }
    const std::uint32_t d = code.d();
    std::vector<std::uint32_t> h(cols.size(), 0);
    for (;;) {
        std::size_t pos = 0;
        while (pos < h.size() && ++h[pos] == d) {
            h[pos++] = 0;
        }
        if (pos == h.size()) {
            return true;
        }
        bool zero = true;
        for (std::size_t r : rows) {
            std::uint64_t acc = 0;
            for (std::size_t c = 0; c < cols.size(); ++c) {
                acc += code.gamma()(r, cols[c]) * h[c];
            }
            zero = zero && acc % d == 0;
        }
        if (zero) {
            return false;
        }
    }
}

// Oracle for the isometry: evaluate the quadratic-form phase with complex exp.
DenseOperator isometry_direct(const GraphCode &code) {
    const std::size_t d = code.d();
    const std::size_t nodes = code.nodes();
    std::size_t dim_in = 1;
    std::size_t dim_out = 1;
    for (std::size_t i = 0; i < code.m(); ++i) {
        dim_in *= d;
    }
    for (std::size_t i = 0; i < code.n(); ++i) {
        dim_out *= d;
    }
    DenseOperator v(dim_out, dim_in);
    std::vector<std::size_t> digits(nodes);
    for (std::size_t jx = 0; jx < dim_in; ++jx) {
        for (std::size_t jy = 0; jy < dim_out; ++jy) {
            std::size_t t = jx;
            for (std::size_t i = code.m(); i-- > 0;) {
                digits[i] = t % d;
                t /= d;
            }
            t = jy;
            for (std::size_t i = nodes; i-- > code.m();) {
                digits[i] = t % d;
                t /= d;
            }
            double q = 0;
            for (std::size_t a = 0; a < nodes; ++a) {
                for (std::size_t b = 0; b < nodes; ++b) {
                    q += static_cast<double>(digits[a] * code.gamma()(a, b) * digits[b]);
                }
            }
            v(jy, jx) = std::polar(std::pow(static_cast<double>(d), -0.5 * static_cast<double>(code.n())),
                                   std::numbers::pi / static_cast<double>(d) * q);
        }
    }
    return v;
}

std::vector<std::vector<std::size_t>> all_subsets_up_to(std::size_t n, std::size_t k) {
    std::vector<std::vector<std::size_t>> out;
    for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
        std::vector<std::size_t> s;
        for (std::size_t i = 0; i < n; ++i) {
            if (mask >> i & 1) {
                s.push_back(i);
            }
        }
        if (s.size() <= k) {
            out.push_back(s);
        }
    }
    return out;
}

}  // namespace

TEST(graphcode, five_qubit_codes_correct_one_error) {
    for (const GraphCode &code : {wheel_code(), prism_code()}) {
        EXPECT_TRUE(corrects_f(code, 1));
        EXPECT_FALSE(corrects_f(code, 2));
        EXPECT_EQ(max_correctable_f(code), 1);
        const auto witness = find_uncorrectable_subset(code, 2);
        ASSERT_TRUE(witness.has_value());
        EXPECT_EQ(witness->size(), 3u);
    }
}

TEST(graphcode, wheel_subsets_match_oracle) {
    const GraphCode code = wheel_code();
    for (const auto &z : all_subsets_up_to(5, 5)) {
        const bool got = check_subset(code, ErrorSubset(z, 5));
        EXPECT_EQ(got, check_subset_brute(code, z));
        if (z.size() <= 2) {
            EXPECT_TRUE(got);
        }
        if (code.m() + z.size() > code.n() - z.size()) {
            EXPECT_FALSE(got);
        }
    }
}

TEST(graphcode, random_codes_match_oracle) {
    std::mt19937_64 rng(8);
    for (std::uint32_t d : {2u, 3u, 4u, 6u}) {
        for (int rep = 0; rep < 30; ++rep) {
            const GraphCode code = random_code(rng, d, 1 + rep % 2, 4 + rep % 3);
            for (const auto &z : all_subsets_up_to(code.n(), 3)) {
                ASSERT_EQ(check_subset(code, ErrorSubset(z, code.n())), check_subset_brute(code, z));
            }
        }
    }
}

TEST(graphcode, corrects_f_nested) {
    std::mt19937_64 rng(12);
    for (int rep = 0; rep < 60; ++rep) {
        const GraphCode code = random_code(rng, rep % 2 ? 3 : 2, 1, 7);
        bool prev = true;
        for (std::size_t f = 0; 2 * f < code.n(); ++f) {
            const bool now = corrects_f(code, f);
            if (!prev) {
                EXPECT_FALSE(now);
            }
            prev = now;
        }
        const int mf = max_correctable_f(code);
        for (int f = 0; f <= mf; ++f) {
            EXPECT_TRUE(corrects_f(code, static_cast<std::size_t>(f)));
        }
    }
}

TEST(graphcode, max_f_edge_cases) {
    EXPECT_EQ(max_correctable_f(GraphCode::from_edges(2, 2, 3, {})), -1);
    EXPECT_EQ(max_correctable_f(GraphCode::from_edges(2, 1, 1, {{0, 1, 1}})), 0);
    try {
        corrects_f(wheel_code(), 3);
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.kind(), ErrorKind::TooManyErrors);
    }
}

TEST(graphcode, isometry_examples) {
    const double r = 1.0 / std::sqrt(2.0);
    const DenseOperator h = build_isometry(GraphCode::from_edges(2, 1, 1, {{0, 1, 1}}));
    EXPECT_LE(max_abs_diff(h, DenseOperator{{r, r}, {r, -r}}), 1e-15);
    const DenseOperator z = build_isometry(GraphCode::from_edges(2, 1, 1, {}));
    EXPECT_LE(max_abs_diff(z, DenseOperator{{r, r}, {r, r}}), 1e-15);
    const DenseOperator w = build_isometry(wheel_code());
    EXPECT_EQ(w.rows(), 32u);
    EXPECT_EQ(w.cols(), 2u);
    EXPECT_LE(max_abs_diff(adjoint_times(w, w), DenseOperator::identity(2)), 1e-12);
}

TEST(graphcode, isometry_matches_direct_formula) {
    std::mt19937_64 rng(21);
    for (std::uint32_t d : {2u, 3u, 4u, 5u}) {
        for (int rep = 0; rep < 6; ++rep) {
            const GraphCode code = random_code(rng, d, 1 + rep % 2, 2 + rep % 2);
            EXPECT_LE(max_abs_diff(build_isometry(code), isometry_direct(code)), 1e-12);
        }
    }
}

TEST(graphcode, isometry_iff_empty_subset_passes) {
    std::mt19937_64 rng(31);
    int seen_fail = 0;
    int seen_pass = 0;
    for (int rep = 0; rep < 80; ++rep) {
        const std::uint32_t d = rep % 3 == 0 ? 4 : (rep % 3 == 1 ? 2 : 3);
        const GraphCode code = random_code(rng, d, 1 + rep % 2, 2 + rep % 3);
        const DenseOperator v = build_isometry(code);
        const DenseOperator id = DenseOperator::identity(v.cols());
        const bool iso = max_abs_diff(adjoint_times(v, v), id) < 1e-9;
        const bool pass = check_subset(code, ErrorSubset({}, code.n()));
        EXPECT_EQ(iso, pass);
        (pass ? seen_pass : seen_fail)++;
    }
    EXPECT_GT(seen_pass, 0);
    EXPECT_GT(seen_fail, 0);
}

TEST(graphcode, adding_d_leaves_isometry_unchanged) {
    std::mt19937_64 rng(41);
    for (std::uint32_t d : {2u, 3u}) {
        const GraphCode code = random_code(rng, d, 1, 3);
        std::vector<Edge> shifted = code.edges();
        for (Edge &e : shifted) {
            e.multiplicity += d;
        }
        shifted.push_back({0, 1, static_cast<std::int64_t>(d)});
        shifted.push_back({2, 3, -static_cast<std::int64_t>(2 * d)});
        const GraphCode same = GraphCode::from_edges(d, 1, 3, shifted);
        EXPECT_EQ(same, code);
        EXPECT_LE(max_abs_diff(build_isometry(same), build_isometry(code)), 1e-15);
    }
}

TEST(graphcode, localized_operators_are_scalar_on_passing_subsets) {
    std::mt19937_64 rng(51);
    for (int rep = 0; rep < 10; ++rep) {
        const GraphCode code = random_code(rng, rep % 2 ? 3 : 2, 1, 4);
        const DenseOperator v = build_isometry(code);
        const double scale = std::pow(static_cast<double>(code.d()), -static_cast<double>(code.n()));
        for (const auto &zs : all_subsets_up_to(code.n(), 2)) {
            const ErrorSubset z(zs, code.n());
            if (!check_subset(code, z)) {
                continue;
            }
            for (const DenseOperator &f : localized_error_basis(code.n(), code.d(), z)) {
                const DenseOperator expect = DenseOperator::identity(v.cols()) * (scale * f.trace());
                EXPECT_LE(max_abs_diff(adjoint_times(v, f * v), expect), 1e-9);
            }
        }
    }
}

TEST(graphcode, validation) {
    auto kind_of = [](auto &&fn) {
        try {
            fn();
        } catch (const Error &e) {
            return e.kind();
        }
        return ErrorKind::ParamOutOfRange;  // sentinel: nothing thrown
    };
    EXPECT_EQ(kind_of([] { GraphCode::from_edges(2, 1, 2, {{1, 1, 1}}); }), ErrorKind::InvalidGraph);
    EXPECT_EQ(kind_of([] { GraphCode::from_edges(2, 1, 2, {{0, 3, 1}}); }), ErrorKind::InvalidGraph);
    EXPECT_EQ(kind_of([] {
                  const std::int64_t e[] = {0, 1, 0, 0};
                  GraphCode(2, 1, 1, ModMatrix(2, 2, 2, e));
              }),
              ErrorKind::InvalidGraph);
    EXPECT_EQ(kind_of([] { ErrorSubset({5}, 5); }), ErrorKind::InvalidSubset);
    EXPECT_EQ(kind_of([] { ErrorSubset({1, 1}, 5); }), ErrorKind::InvalidSubset);
    EXPECT_EQ(ErrorSubset({3, 1}, 5).to_string(), "{1,3}");
}

TEST(graphcode, json_round_trip_and_files) {
    for (const GraphCode &code : {wheel_code(), prism_code()}) {
        EXPECT_EQ(graph_from_json(graph_to_json(code)), code);
    }
    EXPECT_EQ(load_graph_file(std::string(QGC_DATA_DIR) + "/wheel.json"), wheel_code());
    EXPECT_EQ(load_graph_file(std::string(QGC_DATA_DIR) + "/prism.json"), prism_code());
    EXPECT_THROW(load_graph_file(std::string(QGC_DATA_DIR) + "/self_loop.json"), Error);
    EXPECT_THROW(graph_from_json(nlohmann::json::parse(R"({"d": 2, "m": 1})")), Error);
    // Duplicate edges add up mod d.
    const nlohmann::json dup = nlohmann::json::parse(R"({"d": 3, "m": 1, "n": 1, "edges": [[0,1,2],[1,0,2]]})");
    EXPECT_EQ(graph_from_json(dup).gamma()(0, 1), 1u);
}

TEST(graphcode, composite_dimension_verification) {
    // Over Z_4 the entry 2 is a zero divisor, so a lone edge of weight 2 fails.
    EXPECT_FALSE(check_subset(GraphCode::from_edges(4, 1, 1, {{0, 1, 2}}), ErrorSubset({}, 1)));
    EXPECT_TRUE(check_subset(GraphCode::from_edges(4, 1, 1, {{0, 1, 3}}), ErrorSubset({}, 1)));
}
