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
#include <numbers>
#include <sstream>

#include "gtest/gtest.h"
#include "qgc/entropy.h"
#include "qgc/error.h"
#include "qgc/noise.h"
#include "qgc/rates.h"

using namespace qgc;

namespace {

long double h2(long double r) {
    if (r <= 0 || r >= 1) {
        return 0;
    }
    return -r * std::log2(r) - (1 - r) * std::log2(1 - r);
}

// Root of a decreasing scalar function by long-double bisection to 1e-15.
template <typename F>
long double root(F f, long double lo, long double hi) {
    for (int i = 0; i < 200 && hi - lo > 1e-15L; ++i) {
        const long double mid = (lo + hi) / 2;
        (f(mid) > 0 ? lo : hi) = mid;
    }
    return (lo + hi) / 2;
}

std::size_t count_lines(const std::string &s) {
    return static_cast<std::size_t>(std::count(s.begin(), s.end(), '\n'));
}

}  // namespace

TEST(rates, achievable_examples) {
    EXPECT_TRUE(achievable_pair(2, 0.5, 0.0));
    EXPECT_FALSE(achievable_pair(2, 1.0, 0.01));
    const long double oracle = root([](long double e) { return 1 - 4 * e - h2(2 * e); }, 0, 0.25L);
    EXPECT_NEAR(static_cast<double>(oracle), 0.0852678304, 1e-9);
    const double eps_star = eps_boundary_random_graph(2, 0.0);
    EXPECT_NEAR(eps_star, static_cast<double>(oracle), 2e-9);
    EXPECT_TRUE(achievable_pair(2, 0.0, eps_star - 1e-6));
    EXPECT_FALSE(achievable_pair(2, 0.0, eps_star + 1e-6));
}

TEST(rates, hamming_examples) {
    EXPECT_TRUE(hamming_allows(3, 1.0, 0.0));
    EXPECT_TRUE(hamming_allows(2, 0.99, 0.0));
    const long double oracle = root([](long double e) { return 0.5L - h2(e) - e * std::log2(3.0L); }, 0, 0.5L);
    EXPECT_NEAR(static_cast<double>(oracle), 0.0743896005, 1e-9);
    EXPECT_NEAR(eps_boundary_hamming(2, 0.5), static_cast<double>(oracle), 2e-9);
}

TEST(rates, singleton_and_gv_examples) {
    EXPECT_TRUE(singleton_allows(2, 0.2, 0.2));
    EXPECT_TRUE(singleton_allows(7, 0.9, 0.0));
    EXPECT_FALSE(singleton_allows(2, 1.0, 0.01));
    EXPECT_TRUE(standard_singleton_allows(0.2, 0.2));
    EXPECT_FALSE(standard_singleton_allows(0.2, 0.21));
    EXPECT_TRUE(gv_allows(0.9, 0.0));
    for (double eps : {0.0, 0.1, 0.4}) {
        EXPECT_FALSE(gv_allows(1.0, eps));
    }
    try {
        gv_allows(0.1, 0.01, 3);
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.kind(), ErrorKind::UnsupportedDimension);
    }
    EXPECT_THROW(achievable_pair(2, 1.5, 0.0), Error);
}

TEST(rates, region_nesting_on_grid) {
    int gv_only = 0;
    int hamming_only = 0;
    for (int i = 0; i <= 200; ++i) {
        for (int j = 0; j <= 200; ++j) {
            const double mu = i * 0.005;
            const double eps = j * 0.005;
            const bool a = achievable_pair(2, mu, eps);
            const bool g = gv_allows(mu, eps);
            const bool h = hamming_allows(2, mu, eps);
            if (a) {
                ASSERT_TRUE(g) << mu << " " << eps;
            }
            if (g) {
                ASSERT_TRUE(h) << mu << " " << eps;
            }
            gv_only += g && !a;
            hamming_only += h && !g;
        }
    }
    EXPECT_GT(gv_only, 0);
    EXPECT_GT(hamming_only, 0);
}

TEST(rates, boundary_ordering_on_grid) {
    int compared = 0;
    for (int j = 0; j <= 100; ++j) {
        const double eps = j * 0.005;
        const auto s = mu_singleton(2, eps);
        const auto h = mu_hamming(2, eps);
        const auto r = mu_random_graph(2, eps);
        if (s && h && r) {
            EXPECT_GE(*s, *h);
            EXPECT_GE(*h, *r);
            ++compared;
        }
        if (const auto g = mu_gilbert_varshamov(eps); g && r) {
            EXPECT_GE(*g, *r);
        }
    }
    EXPECT_GT(compared, 10);
    EXPECT_EQ(*mu_random_graph(2, 0.0), 1.0);
    EXPECT_FALSE(mu_random_graph(2, 0.3).has_value());
}

TEST(rates, small_noise_capacity) {
    const SmallNoiseBound b = capacity_lower_bound_small_noise(2, 0.01);
    EXPECT_NEAR(b.threshold, static_cast<double>(std::exp2(-h2(0.01L) / 0.01L)), 1e-12);
    EXPECT_NEAR(b.threshold, 0.0036972964, 1e-9);
    EXPECT_NEAR(b.q_lower, static_cast<double>(0.96L - h2(0.02L)), 1e-12);
    EXPECT_NEAR(b.q_lower, 0.8185594575, 1e-9);
    EXPECT_TRUE(b.positive);
    const SmallNoiseBound bad = capacity_lower_bound_small_noise(2, 0.25);
    EXPECT_NEAR(bad.q_lower, -1.0, 1e-12);
    EXPECT_FALSE(bad.positive);
    EXPECT_NEAR(capacity_lower_bound_small_noise(3, 1e-9).q_lower, std::log2(3.0), 1e-6);
    for (std::uint32_t d : {2u, 3u, 5u, 7u}) {
        for (int j = 1; j < 500; ++j) {
            ASSERT_LE(capacity_lower_bound_small_noise(d, j * 0.001).q_lower, std::log2(static_cast<double>(d)));
        }
    }
    try {
        capacity_lower_bound_small_noise(4, 0.01);
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.kind(), ErrorKind::CompositeModulus);
    }
}

TEST(rates, finite_coding_capacity) {
    const long double e = std::numbers::e_v<long double>;
    const long double oracle = (1 - 4 * e * 1e-3L) - h2(2 * e * 1e-3L);
    EXPECT_NEAR(capacity_from_finite_coding(2, 1, 1e-3), static_cast<double>(oracle), 1e-12);
    EXPECT_NEAR(capacity_from_finite_coding(2, 1, 1e-3), 0.9404051747, 1e-9);
    EXPECT_NEAR(capacity_from_finite_coding(5, 3, 0.0), std::log2(5.0) / 3.0, 1e-15);
    EXPECT_NEAR(capacity_from_finite_coding(5, 3, 1e-12), std::log2(5.0) / 3.0, 1e-9);
    try {
        capacity_from_finite_coding(2, 1, 1.0 / (2.0 * std::numbers::e));
        FAIL();
    } catch (const Error &err) {
        EXPECT_EQ(err.kind(), ErrorKind::DeltaTooLarge);
    }
    EXPECT_THROW(capacity_from_finite_coding(6, 1, 1e-3), Error);
}

TEST(rates, exponent_curve_ordering) {
    const std::vector<double> deltas = {1e-3, 1e-4, 1e-5, 1e-6};
    std::vector<double> grid;
    for (int i = 0; i <= 490; ++i) {
        grid.push_back(0.01 + i * 0.001);
    }
    std::vector<std::vector<RatePoint>> curves;
    for (double delta : deltas) {
        curves.push_back(error_exponent_curve(2, 1, delta, grid));
    }
    for (std::size_t i = 0; i < grid.size(); ++i) {
        for (std::size_t c = 1; c < curves.size(); ++c) {
            EXPECT_EQ(curves[c][i].c, curves[c - 1][i].c);
            EXPECT_GT(curves[c][i].lambda_nats, curves[c - 1][i].lambda_nats);
        }
        EXPECT_NEAR(curves[0][i].lambda_bits, curves[0][i].lambda_nats / std::numbers::ln2, 1e-15);
    }
    // Rate falls and exponent grows as eps grows, up to the vacuous region.
    EXPECT_GT(curves[0].front().c, curves[0].back().c);
}

TEST(rates, exponent_curve_block_scaling) {
    const std::vector<double> grid = {0.01, 0.05, 0.1, 0.2};
    const auto k1 = error_exponent_curve(3, 1, 1e-4, grid);
    const auto k4 = error_exponent_curve(3, 4, 1e-4, grid);
    for (std::size_t i = 0; i < grid.size(); ++i) {
        EXPECT_NEAR(k4[i].lambda_nats * 4.0, k1[i].lambda_nats, 1e-13);
        EXPECT_NEAR(k4[i].c * 4.0, k1[i].c, 1e-13);
    }
}

TEST(rates, exponent_sign_at_left_end) {
    for (double delta : {1e-3, 1e-2, 0.05, 0.1}) {
        const double eps = std::numbers::e * delta;
        if (eps > 0.5) {
            continue;
        }
        const RatePoint pt = error_exponent_curve(2, 1, delta, {eps}).front();
        const bool below = delta < error_threshold(eps).strict;
        EXPECT_EQ(pt.lambda_nats > 0.0, below) << delta;
        EXPECT_EQ(pt.vacuous, !below);
    }
    EXPECT_THROW(error_exponent_curve(2, 1, 1e-3, {0.001}), Error);
    EXPECT_THROW(error_exponent_curve(2, 1, 1e-3, {0.6}), Error);
}

TEST(rates, csv_threshold) {
    CurveRequest req;
    req.figure = Figure::Threshold;
    const std::string csv = emit_curves(req);
    EXPECT_EQ(csv, emit_curves(req));
    EXPECT_EQ(count_lines(csv), 501u);
    std::istringstream in(csv);
    std::string line;
    std::getline(in, line);
    EXPECT_EQ(line, "eps,strict_threshold,simple_bound");
    std::getline(in, line);
    const ErrorThreshold t = error_threshold(0.001);
    EXPECT_EQ(line, "0.001," + format_number(t.strict) + "," + format_number(t.simple));
    std::string last;
    while (std::getline(in, line)) {
        last = line;
    }
    EXPECT_EQ(last, "0.5,0.25," + format_number(1.0 / (2.0 * std::numbers::e)));
}

TEST(rates, csv_region) {
    CurveRequest req;
    req.figure = Figure::RateRegion;
    req.eps_step = 0.005;
    const std::string csv = emit_curves(req);
    EXPECT_EQ(count_lines(csv), 102u);
    EXPECT_EQ(csv.substr(0, csv.find('\n')), "eps,mu_singleton,mu_hamming,mu_random_graph");
    EXPECT_NE(csv.find("\n0,1,1,1\n"), std::string::npos);
    EXPECT_NE(csv.find("\n0.3,0.4,,\n"), std::string::npos);
}

TEST(rates, csv_exponent) {
    CurveRequest req;
    req.figure = Figure::Exponent;
    req.points = 50;
    const std::string csv = emit_curves(req);
    EXPECT_EQ(count_lines(csv), 1u + 4u * 50u);
    EXPECT_EQ(csv.substr(0, csv.find('\n')), "c,lambda_nats,lambda_bits,delta");
    EXPECT_EQ(csv, emit_curves(req));
    // Every row has c >= 0 and the last row of each curve sits at the zero-rate point.
    std::istringstream rows(csv);
    std::string line;
    std::getline(rows, line);
    std::size_t row = 0;
    while (std::getline(rows, line)) {
        const double c = std::stod(line.substr(0, line.find(',')));
        EXPECT_GE(c, 0.0) << line;
        if (++row % 50 == 0) {
            EXPECT_LT(c, 1e-6) << line;
        }
    }
}

TEST(rates, exponent_rate_clamped_at_zero) {
    const RatePoint past = error_exponent_curve(2, 1, 1e-3, {0.3}).front();
    EXPECT_EQ(past.c, 0.0);
    EXPECT_LT(past.mu, 0.0);
}

TEST(rates, step_grid_is_exact) {
    const auto g = step_grid(0.001, 0.5, false);
    ASSERT_EQ(g.size(), 500u);
    EXPECT_EQ(g.front(), 0.001);
    EXPECT_EQ(g.back(), 0.5);
    EXPECT_EQ(step_grid(0.1, 0.3, true).size(), 4u);
    EXPECT_EQ(format_number(-0.0), "0");
    EXPECT_EQ(format_number(0.1), "0.1");
}
