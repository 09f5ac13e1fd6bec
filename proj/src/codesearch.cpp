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

#include "qgc/codesearch.h"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <thread>
#include <vector>

#include <boost/math/distributions/binomial.hpp>

#include "qgc/entropy.h"
#include "qgc/error.h"
#include "qgc/modlinalg.h"

namespace qgc {

namespace {

constexpr std::uint64_t kGoldenGamma = 0x9e3779b97f4a7c15ULL;

void require_prime(std::uint32_t d) {
    if (!is_prime(d)) {
        throw Error(ErrorKind::CompositeModulus, std::to_string(d) + " is not prime");
    }
}

// Runs body(i) for i in [0, count) on up to `threads` workers. Results must be
// written to per-index slots so the outcome is independent of scheduling.
template <typename Body>
void parallel_for(std::size_t count, unsigned threads, Body &&body) {
    const unsigned workers = static_cast<unsigned>(std::min<std::size_t>(std::max(1u, threads), count));
    if (workers <= 1) {
        for (std::size_t i = 0; i < count; ++i) {
            body(i);
        }
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::atomic<bool> failed{false};
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            for (;;) {
                const std::size_t i = next.fetch_add(1);
                if (i >= count || failed.load()) {
                    return;
                }
                try {
                    body(i);
                } catch (...) {
                    if (!failed.exchange(true)) {
                        failure = std::current_exception();
                    }
                    return;
                }
            }
        });
    }
    for (std::thread &t : pool) {
        t.join();
    }
    if (failure) {
        std::rethrow_exception(failure);
    }
}

struct TrialOutcome {
    bool passed = false;
    std::optional<ErrorSubset> witness;
};

}  // namespace

std::uint64_t trial_seed(std::uint64_t master, std::uint64_t trial) {
    std::uint64_t z = master + (trial + 1) * kGoldenGamma;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

std::uint32_t uniform_residue(std::mt19937_64 &rng, std::uint32_t d) {
    // Largest multiple of d representable as a count of 64-bit words.
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                                (std::numeric_limits<std::uint64_t>::max() % d + 1) % d;
    for (;;) {
        const std::uint64_t w = rng();
        if (w <= limit) {
            return static_cast<std::uint32_t>(w % d);
        }
    }
}

GraphCode sample_graph(std::uint32_t d, std::size_t m, std::size_t n, std::mt19937_64 &rng) {
    require_prime(d);
    const std::size_t nodes = m + n;
    ModMatrix gamma(d, nodes, nodes);
    for (std::size_t k = 1; k < nodes; ++k) {
        for (std::size_t j = 0; j < k; ++j) {
            const std::uint32_t v = uniform_residue(rng, d);
            gamma.set(k, j, v);
            gamma.set(j, k, v);
        }
    }
    return GraphCode(d, m, n, std::move(gamma));
}

double failure_bound_log2(std::uint32_t d, std::size_t m, std::size_t n, std::size_t f) {
    require_prime(d);
    if (n == 0 || 2 * f >= n) {
        throw Error(ErrorKind::ParamOutOfRange, "need 2f < n");
    }
    const double nn = static_cast<double>(n);
    const double ff = static_cast<double>(f);
    const double mm = static_cast<double>(m);
    return nn * ((mm / nn + 4.0 * ff / nn - 1.0) * std::log2(static_cast<double>(d)) + binary_entropy(2.0 * ff / nn));
}

SearchReport run_search(const SearchConfig &config) {
    require_prime(config.d);
    if (config.trials == 0) {
        throw Error(ErrorKind::ParamOutOfRange, "need at least one trial");
    }
    SearchReport report;
    report.config = config;
    report.bound_log2 = failure_bound_log2(config.d, config.m, config.n, config.f);
    report.seed_derivation = "trial t uses mt19937_64 seeded with splitmix64(seed + (t + 1) * 0x9e3779b97f4a7c15)";

    std::vector<TrialOutcome> outcomes(config.trials);
    parallel_for(config.trials, config.threads, [&](std::size_t t) {
        std::mt19937_64 rng(trial_seed(config.seed, t));
        const GraphCode code = sample_graph(config.d, config.m, config.n, rng);
        outcomes[t].witness = find_uncorrectable_subset(code, config.f);
        outcomes[t].passed = !outcomes[t].witness.has_value();
    });

    for (std::size_t t = 0; t < config.trials; ++t) {
        if (outcomes[t].passed) {
            ++report.successes;
            if (!report.best_code) {
                std::mt19937_64 rng(trial_seed(config.seed, t));
                report.best_code = sample_graph(config.d, config.m, config.n, rng);
                report.best_trial = t;
            }
        } else {
            ++report.failures;
            if (!report.first_failure_trial) {
                report.first_failure_trial = t;
                report.first_failure_subset = outcomes[t].witness;
            }
        }
    }
    const double trials = static_cast<double>(config.trials);
    report.empirical_failure = static_cast<double>(report.failures) / trials;
    report.failure_upper_95 = boost::math::binomial_distribution<>::find_upper_bound_on_p(
        trials, static_cast<double>(report.failures), 0.05);
    return report;
}

nlohmann::json report_to_json(const SearchReport &r) {
    nlohmann::json j;
    j["d"] = r.config.d;
    j["m"] = r.config.m;
    j["n"] = r.config.n;
    j["f"] = r.config.f;
    j["trials"] = r.config.trials;
    j["seed"] = r.config.seed;
    j["seed_derivation"] = r.seed_derivation;
    j["successes"] = r.successes;
    j["failures"] = r.failures;
    j["empirical_failure_fraction"] = r.empirical_failure;
    j["failure_upper_95"] = r.failure_upper_95;
    j["bound_log2"] = r.bound_log2;
    j["bound_probability"] = std::min(1.0, std::exp2(r.bound_log2));
    if (r.best_code) {
        j["best_trial"] = r.best_trial;
        j["best_code"] = graph_to_json(*r.best_code);
    } else {
        j["best_trial"] = nullptr;
        j["best_code"] = nullptr;
    }
    if (r.first_failure_trial) {
        j["first_failure"] = {{"trial", *r.first_failure_trial}, {"subset", r.first_failure_subset->sites()}};
    } else {
        j["first_failure"] = nullptr;
    }
    return j;
}

SingularFraction singular_fraction_experiment(std::uint32_t d, std::size_t rows, std::size_t cols, std::size_t trials,
                                              std::uint64_t seed, unsigned threads) {
    require_prime(d);
    if (rows <= cols) {
        throw Error(ErrorKind::ParamOutOfRange, "need more rows than columns");
    }
    if (trials == 0) {
        throw Error(ErrorKind::ParamOutOfRange, "need at least one trial");
    }
    SingularFraction out;
    out.bound = std::pow(static_cast<double>(d), -static_cast<double>(rows - cols));
    std::vector<char> singular(trials, 0);
    parallel_for(trials, threads, [&](std::size_t t) {
        std::mt19937_64 rng(trial_seed(seed, t));
        ModMatrix a(d, rows, cols);
        for (std::size_t r = 0; r < rows; ++r) {
            for (std::size_t c = 0; c < cols; ++c) {
                a.set(r, c, uniform_residue(rng, d));
            }
        }
        singular[t] = kernel_trivial(a) ? 0 : 1;
    });
    const auto count = static_cast<double>(std::count(singular.begin(), singular.end(), 1));
    out.empirical = count / static_cast<double>(trials);
    return out;
}

}  // namespace qgc
