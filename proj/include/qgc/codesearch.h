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
#include <random>
#include <string>

#include "json.hpp"
#include "qgc/graphcode.h"
#include "qgc/sites.h"

namespace qgc {

struct SearchConfig {
    std::uint32_t d = 2;
    std::size_t m = 1;
    std::size_t n = 5;
    std::size_t f = 1;
    std::size_t trials = 1;
    std::uint64_t seed = 0;
    unsigned threads = 1;  // worker cap; never changes the result
};

struct SearchReport {
    SearchConfig config;
    std::size_t successes = 0;
    std::size_t failures = 0;
    double bound_log2 = 0.0;  // log2 of the per-trial failure probability bound
    double empirical_failure = 0.0;
    double failure_upper_95 = 0.0;  // one-sided Clopper-Pearson
    std::optional<GraphCode> best_code;
    std::size_t best_trial = 0;
    std::optional<std::size_t> first_failure_trial;
    std::optional<ErrorSubset> first_failure_subset;
    std::string seed_derivation;
};

/// Seed of the generator used for one trial: splitmix64 applied to
/// master + (trial + 1) * golden gamma. Trials are independent of each other
/// and of the worker that runs them.
std::uint64_t trial_seed(std::uint64_t master, std::uint64_t trial);

/// Uniform residue in [0, d) by rejection from 64-bit words.
std::uint32_t uniform_residue(std::mt19937_64 &rng, std::uint32_t d);

/// Random graph code with i.i.d. uniform strictly-lower entries, drawn row by
/// row (row k, columns 0..k-1), mirrored to the upper triangle.
/// Throws CompositeModulus for non-prime d.
GraphCode sample_graph(std::uint32_t d, std::size_t m, std::size_t n, std::mt19937_64 &rng);

/// n [(m/n + 4f/n - 1) log2 d + H2(2f/n)]: log2 of an upper bound on the
/// probability that a random code fails to correct f errors. Negative values
/// certify that some code exists.
double failure_bound_log2(std::uint32_t d, std::size_t m, std::size_t n, std::size_t f);

SearchReport run_search(const SearchConfig &config);

nlohmann::json report_to_json(const SearchReport &report);

struct SingularFraction {
    double empirical = 0.0;
    double bound = 0.0;  // d^-(N-M)
};

/// Fraction of uniform N x M matrices over Z_d with a non-trivial kernel.
SingularFraction singular_fraction_experiment(std::uint32_t d, std::size_t rows, std::size_t cols, std::size_t trials,
                                              std::uint64_t seed, unsigned threads = 1);

}  // namespace qgc
