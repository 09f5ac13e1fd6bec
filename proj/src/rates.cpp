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

#include "qgc/rates.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <sstream>

#include "qgc/entropy.h"
#include "qgc/error.h"
#include "qgc/modlinalg.h"
#include "qgc/noise.h"

namespace qgc {

namespace {

void check_rate_args(std::uint32_t d, double mu, double eps) {
    if (d < 2) {
        throw Error(ErrorKind::ParamOutOfRange, "dimension must be at least 2");
    }
    if (!(mu >= 0.0 && mu <= 1.0) || !(eps >= 0.0 && eps <= 1.0)) {
        throw Error(ErrorKind::ParamOutOfRange, "mu and eps must lie in [0, 1]");
    }
}

std::optional<double> in_unit(double mu) {
    if (mu >= 0.0 && mu <= 1.0) {
        return mu;
    }
    return std::nullopt;
}

template <typename F>
double bisect(F &&decreasing, double lo, double hi) {
    // decreasing(lo) > 0 >= decreasing(hi)
    while (hi - lo > 1e-9) {
        const double mid = 0.5 * (lo + hi);
        if (decreasing(mid) > 0.0) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

void require_prime(std::uint32_t p) {
    if (!is_prime(p)) {
        throw Error(ErrorKind::CompositeModulus, std::to_string(p) + " is not prime");
    }
}

}  // namespace

bool achievable_pair(std::uint32_t d, double mu, double eps) {
    check_rate_args(d, mu, eps);
    if (2.0 * eps > 1.0) {
        return false;
    }
    return (1.0 - mu - 4.0 * eps) * std::log2(static_cast<double>(d)) > binary_entropy(2.0 * eps);
}

bool hamming_allows(std::uint32_t d, double mu, double eps) {
    check_rate_args(d, mu, eps);
    const double ld = std::log2(static_cast<double>(d));
    const double dd = static_cast<double>(d);
    return mu * ld + binary_entropy(eps) + eps * std::log2(dd * dd - 1.0) <= ld;
}

bool singleton_allows(std::uint32_t d, double mu, double eps) {
    check_rate_args(d, mu, eps);
    return 1.0 - mu >= static_cast<double>(d) * eps;
}

bool standard_singleton_allows(double mu, double eps) {
    check_rate_args(2, mu, eps);
    return 1.0 - mu >= 4.0 * eps;
}

bool gv_allows(double mu, double eps, std::uint32_t d) {
    if (d != 2) {
        throw Error(ErrorKind::UnsupportedDimension, "the Gilbert-Varshamov form here is for qubits only");
    }
    check_rate_args(d, mu, eps);
    if (2.0 * eps > 1.0) {
        return false;
    }
    return 1.0 - mu - 2.0 * eps * std::log2(3.0) > binary_entropy(2.0 * eps);
}

std::optional<double> mu_singleton(std::uint32_t d, double eps) {
    check_rate_args(d, 0.0, eps);
    return in_unit(1.0 - static_cast<double>(d) * eps);
}

std::optional<double> mu_hamming(std::uint32_t d, double eps) {
    check_rate_args(d, 0.0, eps);
    const double ld = std::log2(static_cast<double>(d));
    const double dd = static_cast<double>(d);
    return in_unit(1.0 - (binary_entropy(eps) + eps * std::log2(dd * dd - 1.0)) / ld);
}

std::optional<double> mu_random_graph(std::uint32_t d, double eps) {
    check_rate_args(d, 0.0, eps);
    if (2.0 * eps > 1.0) {
        return std::nullopt;
    }
    return in_unit(1.0 - 4.0 * eps - binary_entropy(2.0 * eps) / std::log2(static_cast<double>(d)));
}

std::optional<double> mu_gilbert_varshamov(double eps) {
    check_rate_args(2, 0.0, eps);
    if (2.0 * eps > 1.0) {
        return std::nullopt;
    }
    return in_unit(1.0 - 2.0 * eps * std::log2(3.0) - binary_entropy(2.0 * eps));
}

double eps_boundary_random_graph(std::uint32_t d, double mu) {
    check_rate_args(d, mu, 0.0);
    const double ld = std::log2(static_cast<double>(d));
    if (mu >= 1.0) {
        return 0.0;
    }
    return bisect([&](double eps) { return (1.0 - mu - 4.0 * eps) * ld - binary_entropy(2.0 * eps); }, 0.0, 0.25);
}

double eps_boundary_hamming(std::uint32_t d, double mu) {
    check_rate_args(d, mu, 0.0);
    const double ld = std::log2(static_cast<double>(d));
    const double dd = static_cast<double>(d);
    if (mu >= 1.0) {
        return 0.0;
    }
    return bisect(
        [&](double eps) { return (1.0 - mu) * ld - binary_entropy(eps) - eps * std::log2(dd * dd - 1.0); }, 0.0,
        0.5);
}

SmallNoiseBound capacity_lower_bound_small_noise(std::uint32_t d, double eps) {
    require_prime(d);
    if (!(eps > 0.0 && eps < 0.5)) {
        throw Error(ErrorKind::ParamOutOfRange, "eps must lie in (0, 1/2)");
    }
    SmallNoiseBound out;
    out.threshold = std::exp2(-binary_entropy(eps) / eps);
    out.q_lower = (1.0 - 4.0 * eps) * std::log2(static_cast<double>(d)) - binary_entropy(2.0 * eps);
    out.positive = out.q_lower > 0.0;
    return out;
}

double capacity_from_finite_coding(std::uint32_t p, std::size_t k, double delta) {
    require_prime(p);
    if (k == 0) {
        throw Error(ErrorKind::ParamOutOfRange, "block length must be positive");
    }
    const double e = std::numbers::e;
    if (!(delta >= 0.0)) {
        throw Error(ErrorKind::ParamOutOfRange, "coding error must be non-negative");
    }
    if (!(delta < 1.0 / (2.0 * e))) {
        throw Error(ErrorKind::DeltaTooLarge, "coding error must be below 1/(2e)");
    }
    const double kk = static_cast<double>(k);
    return std::log2(static_cast<double>(p)) / kk * (1.0 - 4.0 * e * delta) - binary_entropy(2.0 * e * delta) / kk;
}

std::vector<RatePoint> error_exponent_curve(std::uint32_t p, std::size_t k, double delta,
                                            const std::vector<double> &eps_grid) {
    require_prime(p);
    if (k == 0) {
        throw Error(ErrorKind::ParamOutOfRange, "block length must be positive");
    }
    if (!(delta > 0.0 && delta < 1.0)) {
        throw Error(ErrorKind::ParamOutOfRange, "coding error must lie in (0, 1)");
    }
    const double e_delta = std::numbers::e * delta;
    const double lp = std::log2(static_cast<double>(p));
    const double kk = static_cast<double>(k);
    std::vector<RatePoint> out;
    out.reserve(eps_grid.size());
    for (double eps : eps_grid) {
        if (!(eps >= e_delta && eps <= 0.5)) {
            throw Error(ErrorKind::ParamOutOfRange,
                        "eps = " + format_number(eps) + " outside [e*delta, 1/2] = [" + format_number(e_delta) + ", 0.5]");
        }
        RatePoint pt;
        pt.eps = eps;
        pt.p = p;
        pt.d = p;
        pt.k = k;
        pt.delta = delta;
        pt.mu = 1.0 - 4.0 * eps - binary_entropy(2.0 * eps) / lp;
        // Past the zero-rate point only rate 0 is certified; lower rates keep the exponent.
        pt.c = std::max(0.0, lp / kk * pt.mu);
        pt.lambda_nats = -(eps / kk) * (std::log(delta) + std::numbers::ln2 * binary_entropy(eps) / eps);
        pt.lambda_bits = pt.lambda_nats / std::numbers::ln2;
        pt.vacuous = pt.lambda_nats <= 0.0;
        out.push_back(pt);
    }
    return out;
}

std::vector<double> step_grid(double step, double last, bool include_zero) {
    if (!(step > 0.0) || !(last >= 0.0)) {
        throw Error(ErrorKind::ParamOutOfRange, "grid step must be positive");
    }
    std::vector<double> grid;
    if (include_zero) {
        grid.push_back(0.0);
    }
    const auto count = static_cast<std::size_t>(std::floor(last / step + 1e-9));
    for (std::size_t i = 1; i <= count; ++i) {
        grid.push_back(std::min(static_cast<double>(i) * step, last));
    }
    return grid;
}

std::string format_number(double value) {
    if (value == 0.0) {
        value = 0.0;  // drop the sign of -0
    }
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", value);
    return buf;
}

std::string emit_curves(const CurveRequest &request) {
    std::ostringstream out;
    auto cell = [](const std::optional<double> &v) { return v ? format_number(*v) : std::string(); };
    switch (request.figure) {
        case Figure::Threshold: {
            out << "eps,strict_threshold,simple_bound\n";
            for (double eps : step_grid(request.eps_step, std::min(request.eps_max, 0.5), false)) {
                const ErrorThreshold t = error_threshold(eps);
                out << format_number(eps) << ',' << format_number(t.strict) << ',' << format_number(t.simple) << '\n';
            }
            break;
        }
        case Figure::RateRegion: {
            out << "eps,mu_singleton,mu_hamming,mu_random_graph\n";
            for (double eps : step_grid(request.eps_step, std::min(request.eps_max, 0.5), true)) {
                out << format_number(eps) << ',' << cell(mu_singleton(request.d, eps)) << ','
                    << cell(mu_hamming(request.d, eps)) << ',' << cell(mu_random_graph(request.d, eps)) << '\n';
            }
            break;
        }
        case Figure::Exponent: {
            out << "c,lambda_nats,lambda_bits,delta\n";
            if (request.points < 2) {
                throw Error(ErrorKind::ParamOutOfRange, "exponent curves need at least two points");
            }
            for (double delta : request.deltas) {
                const double lo = std::numbers::e * delta;
                // Stop where the certified rate reaches zero.
                double hi = std::min(request.eps_max, eps_boundary_random_graph(request.p, 0.0));
                while (hi > lo && mu_random_graph(request.p, hi).value_or(-1.0) < 0.0) {
                    hi = std::nextafter(hi, 0.0);
                }
                if (!(lo <= hi)) {
                    throw Error(ErrorKind::ParamOutOfRange, "e*delta exceeds the largest eps");
                }
                std::vector<double> grid(request.points);
                for (std::size_t i = 0; i < request.points; ++i) {
                    grid[i] = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(request.points - 1);
                }
                grid.back() = hi;
                for (const RatePoint &pt : error_exponent_curve(request.p, request.k, delta, grid)) {
                    out << format_number(pt.c) << ',' << format_number(pt.lambda_nats) << ','
                        << format_number(pt.lambda_bits) << ',' << format_number(delta) << '\n';
                }
            }
            break;
        }
    }
    return out.str();
}

}  // namespace qgc
