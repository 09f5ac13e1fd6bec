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

namespace qgc {

// Rates are in bits per channel use throughout; error exponents are carried
// both in nats (natural-log convention of the exponent bound) and in bits.

/// Random graph coding: (1 - mu - 4 eps) log2 d > H2(2 eps).
bool achievable_pair(std::uint32_t d, double mu, double eps);

/// Non-degenerate Hamming bound: mu log2 d + H2(eps) + eps log2(d^2 - 1) <= log2 d.
bool hamming_allows(std::uint32_t d, double mu, double eps);

/// Singleton bound in the form 1 - mu >= d eps.
bool singleton_allows(std::uint32_t d, double mu, double eps);

/// Textbook quantum Singleton bound n - m >= 4f, i.e. 1 - mu >= 4 eps.
bool standard_singleton_allows(double mu, double eps);

/// Qubit Gilbert-Varshamov: 1 - mu - 2 eps log2 3 > H2(2 eps). Throws
/// UnsupportedDimension for d != 2.
bool gv_allows(double mu, double eps, std::uint32_t d = 2);

// Largest allowed mu at a given eps; nullopt where the boundary leaves [0, 1].
std::optional<double> mu_singleton(std::uint32_t d, double eps);
std::optional<double> mu_hamming(std::uint32_t d, double eps);
std::optional<double> mu_random_graph(std::uint32_t d, double eps);
std::optional<double> mu_gilbert_varshamov(double eps);

/// eps at which the random-graph region ends for the given mu, by bisection
/// to 1e-9 on [0, 1/4] where the defining function is monotone.
double eps_boundary_random_graph(std::uint32_t d, double mu);
/// Same for the Hamming bound, on [0, 1/2].
double eps_boundary_hamming(std::uint32_t d, double mu);

struct SmallNoiseBound {
    double threshold = 0.0;  // cb distance below which the bound applies
    double q_lower = 0.0;    // (1 - 4 eps) log2 d - H2(2 eps)
    bool positive = false;
};

/// Prime d, 0 < eps < 1/2.
SmallNoiseBound capacity_lower_bound_small_noise(std::uint32_t d, double eps);

/// (log2 p / k)(1 - 4 e delta) - H2(2 e delta) / k for a p-level scheme over k
/// uses with cb error delta < 1/(2e).
double capacity_from_finite_coding(std::uint32_t p, std::size_t k, double delta);

struct RatePoint {
    double mu = 0.0;
    double eps = 0.0;
    double c = 0.0;
    double lambda_nats = 0.0;
    double lambda_bits = 0.0;
    std::uint32_t d = 2;
    std::uint32_t p = 2;
    std::size_t k = 1;
    double delta = 0.0;
    bool vacuous = false;  // lambda_nats <= 0
};

/// Parametric (c, lambda) curve, one point per eps with e delta <= eps <= 1/2.
/// c is clamped at 0 beyond the eps where the certified rate vanishes.
std::vector<RatePoint> error_exponent_curve(std::uint32_t p, std::size_t k, double delta,
                                            const std::vector<double> &eps_grid);

enum class Figure { Threshold, RateRegion, Exponent };

struct CurveRequest {
    Figure figure = Figure::Threshold;
    std::uint32_t d = 2;
    std::uint32_t p = 2;
    std::size_t k = 1;
    std::vector<double> deltas{1e-3, 1e-4, 1e-5, 1e-6};
    double eps_step = 0.001;  // threshold: (0, 1/2]; region: [0, 1/2]
    std::size_t points = 500;  // exponent: per delta, from e*delta to the zero-rate eps
    double eps_max = 0.5;
};

/// Fixed-step grid step, 2 step, ... up to `last` (and 0 first when
/// include_zero), computed by multiplication so it is exactly reproducible.
std::vector<double> step_grid(double step, double last, bool include_zero);

/// CSV for one figure; `\n` line endings and 12 significant digits.
std::string emit_curves(const CurveRequest &request);

std::string format_number(double value);

}  // namespace qgc
