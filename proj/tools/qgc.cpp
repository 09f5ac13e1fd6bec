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

// Command-line front end: code verification, decoder simulation, random
// search and figure data.
//
// Exit codes: 0 pass, 1 semantic failure, 2 usage or input error.

#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "qgc/codesearch.h"
#include "qgc/error.h"
#include "qgc/graphcode.h"
#include "qgc/noise.h"
#include "qgc/qnum.h"
#include "qgc/rates.h"

namespace {

using nlohmann::json;
using qgc::format_number;

constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kUsage = 2;

struct Common {
    bool json_out = false;
    bool no_timing = false;
    unsigned threads = std::max(1u, std::thread::hardware_concurrency());
    std::string out;
};

class Stopwatch {
   public:
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    }

   private:
    std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

// Collects one report in either text or JSON form and writes it once at the end.
class Report {
   public:
    explicit Report(const Common &common) : common_(common) {
    }

    void line(const std::string &key, const std::string &text) {
        text_ << key << ": " << text << '\n';
    }
    template <typename T>
    void field(const std::string &key, const T &value) {
        json_[key] = value;
    }
    void both(const std::string &key, double value) {
        line(key, format_number(value));
        field(key, value);
    }

    void timing(const Stopwatch &watch) {
        if (common_.no_timing) {
            return;
        }
        const double s = watch.seconds();
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.6f", s);
        line("time_seconds", buf);
        field("time_seconds", s);
    }

    void emit() const {
        const std::string body = common_.json_out ? json_.dump(2) + "\n" : text_.str();
        write_output(common_, body);
    }

    static void write_output(const Common &common, const std::string &body) {
        if (common.out.empty()) {
            std::cout << body;
            return;
        }
        std::ofstream f(common.out, std::ios::binary);
        if (!f) {
            throw qgc::Error(qgc::ErrorKind::ParamOutOfRange, "cannot write '" + common.out + "'");
        }
        f << body;
    }

   private:
    const Common &common_;
    std::ostringstream text_;
    json json_ = json::object();
};

std::string code_summary(const qgc::GraphCode &code) {
    return "d=" + std::to_string(code.d()) + " m=" + std::to_string(code.m()) + " n=" + std::to_string(code.n());
}

int cmd_verify(const Common &common, const std::string &path, std::size_t f) {
    const Stopwatch watch;
    const qgc::GraphCode code = qgc::load_graph_file(path);
    const auto witness = qgc::find_uncorrectable_subset(code, f);
    Report r(common);
    r.line("code", code_summary(code));
    r.field("d", code.d());
    r.field("m", code.m());
    r.field("n", code.n());
    r.line("f", std::to_string(f));
    r.field("f", f);
    r.line("result", witness ? "fail" : "pass");
    r.field("pass", !witness);
    if (witness) {
        r.line("failing_subset", witness->to_string());
        r.field("failing_subset", witness->sites());
    } else {
        r.field("failing_subset", nullptr);
    }
    r.timing(watch);
    r.emit();
    return witness ? kFail : kPass;
}

int cmd_maxf(const Common &common, const std::string &path) {
    const Stopwatch watch;
    const qgc::GraphCode code = qgc::load_graph_file(path);
    const int f = qgc::max_correctable_f(code);
    Report r(common);
    r.line("code", code_summary(code));
    r.line("max_f", std::to_string(f));
    r.field("max_f", f);
    r.timing(watch);
    r.emit();
    return kPass;
}

int cmd_kl_check(const Common &common, const std::string &path, std::size_t f) {
    const Stopwatch watch;
    const qgc::GraphCode code = qgc::load_graph_file(path);
    const qgc::DenseOperator v = qgc::build_isometry(code);
    const qgc::DenseOperator gram_v = qgc::adjoint_times(v, v);
    const double iso = qgc::max_abs_diff(gram_v, qgc::DenseOperator::identity(v.cols()));
    Report r(common);
    r.line("code", code_summary(code));
    r.both("isometry_defect", iso);
    bool pass = iso <= qgc::kKLTolerance;
    if (pass) {
        // Single-operator form over words on <= 2f sites, pairwise form over <= f sites.
        const auto wide = qgc::error_space_basis(code.n(), code.d(), 2 * f);
        const qgc::LocalizedKLReport loc = qgc::kl_verify_localized(v, wide);
        std::vector<std::string> labels;
        const auto narrow = qgc::error_space_basis(code.n(), code.d(), f, &labels);
        const qgc::KLReport pair = qgc::kl_verify(v, narrow, labels);
        r.line("localized_operators", std::to_string(wide.size()));
        r.field("localized_operators", wide.size());
        r.both("localized_max_deviation", loc.max_deviation);
        r.line("pairwise_operators", std::to_string(narrow.size()));
        r.field("pairwise_operators", narrow.size());
        r.both("pairwise_max_deviation", pair.max_deviation);
        pass = loc.passed() && pair.passed();
    }
    r.line("result", pass ? "pass" : "fail");
    r.field("pass", pass);
    r.timing(watch);
    r.emit();
    return pass ? kPass : kFail;
}

int cmd_simulate(const Common &common, const std::string &path, std::size_t f, const std::string &noise_token,
                 const std::vector<std::size_t> &sites) {
    const Stopwatch watch;
    const qgc::GraphCode code = qgc::load_graph_file(path);
    if (noise_token.empty() != sites.empty()) {
        throw qgc::Error(qgc::ErrorKind::ParamOutOfRange, "--noise and --sites must be given together");
    }
    const qgc::ErrorSubset noisy(sites, code.n());
    Report r(common);
    r.line("code", code_summary(code));
    if (const auto witness = qgc::find_uncorrectable_subset(code, f)) {
        r.line("result", "code does not correct " + std::to_string(f) + " errors (subset " + witness->to_string() +
                             ")");
        r.field("pass", false);
        r.field("failing_subset", witness->sites());
        r.emit();
        return kFail;
    }
    const qgc::DenseOperator v = qgc::build_isometry(code);
    const auto errors = qgc::error_space_basis(code.n(), code.d(), f);
    const qgc::DenseOperator rho0 = qgc::DenseOperator::basis_projector(v.cols(), 0);
    const qgc::DecoderSynthesis syn = qgc::synthesize_decoder(v, errors, rho0);

    std::vector<qgc::Channel> per_site(code.n(), qgc::Channel::identity(code.d()));
    if (!noise_token.empty()) {
        const qgc::Channel site_noise = qgc::make_channel(qgc::parse_noise(noise_token, code.d()));
        for (std::size_t s : noisy.sites()) {
            per_site[s] = site_noise;
        }
    }
    const double distance =
        qgc::verify_etd(qgc::Channel::from_kraus({v}), qgc::product_channel(per_site), syn.decoder);

    r.line("f", std::to_string(f));
    r.field("f", f);
    r.line("noise", noise_token.empty() ? "none" : noise_token);
    r.field("noise", noise_token.empty() ? json(nullptr) : json(noise_token));
    r.line("sites", noisy.to_string());
    r.field("sites", noisy.sites());
    r.line("error_operators", std::to_string(syn.error_count));
    r.field("error_operators", syn.error_count);
    r.line("gram_rank", std::to_string(syn.gram_rank));
    r.field("gram_rank", syn.gram_rank);
    r.line("degenerate", syn.degenerate ? "yes" : "no");
    r.field("degenerate", syn.degenerate);
    r.both("choi_trace_distance", distance);
    r.field("pass", true);
    r.timing(watch);
    r.emit();
    return kPass;
}

int cmd_search(const Common &common, qgc::SearchConfig cfg) {
    const Stopwatch watch;
    cfg.threads = common.threads;
    const qgc::SearchReport rep = qgc::run_search(cfg);
    const json j = qgc::report_to_json(rep);
    if (common.json_out) {
        json out = j;
        if (!common.no_timing) {
            out["time_seconds"] = watch.seconds();
        }
        Report::write_output(common, out.dump(2) + "\n");
    } else {
        Report r(common);
        r.line("config", "d=" + std::to_string(cfg.d) + " m=" + std::to_string(cfg.m) + " n=" + std::to_string(cfg.n) +
                             " f=" + std::to_string(cfg.f) + " trials=" + std::to_string(cfg.trials) +
                             " seed=" + std::to_string(cfg.seed));
        r.line("seed_derivation", rep.seed_derivation);
        r.line("successes", std::to_string(rep.successes));
        r.line("failures", std::to_string(rep.failures));
        r.both("empirical_failure_fraction", rep.empirical_failure);
        r.both("failure_upper_95", rep.failure_upper_95);
        r.both("bound_log2", rep.bound_log2);
        r.both("bound_probability", std::min(1.0, std::exp2(rep.bound_log2)));
        if (rep.first_failure_trial) {
            r.line("first_failure", "trial " + std::to_string(*rep.first_failure_trial) + " subset " +
                                        rep.first_failure_subset->to_string());
        } else {
            r.line("first_failure", "none");
        }
        if (rep.best_code) {
            r.line("best_trial", std::to_string(rep.best_trial));
            r.line("best_code", qgc::graph_to_json(*rep.best_code).dump());
        } else {
            r.line("best_code", "none");
        }
        r.timing(watch);
        r.emit();
    }
    return rep.successes > 0 ? kPass : kFail;
}

int cmd_singular_mc(const Common &common, std::uint32_t d, std::size_t rows, std::size_t cols, std::size_t trials,
                    std::uint64_t seed) {
    const Stopwatch watch;
    const qgc::SingularFraction sf = qgc::singular_fraction_experiment(d, rows, cols, trials, seed, common.threads);
    const double limit = sf.bound + 3.0 * std::sqrt(sf.bound / static_cast<double>(trials));
    const bool pass = sf.empirical <= limit;
    Report r(common);
    r.line("config", "d=" + std::to_string(d) + " rows=" + std::to_string(rows) + " cols=" + std::to_string(cols) +
                         " trials=" + std::to_string(trials) + " seed=" + std::to_string(seed));
    r.field("d", d);
    r.field("rows", rows);
    r.field("cols", cols);
    r.field("trials", trials);
    r.field("seed", seed);
    r.both("empirical", sf.empirical);
    r.both("bound", sf.bound);
    r.both("bound_plus_3_sigma", limit);
    r.line("result", pass ? "pass" : "fail");
    r.field("pass", pass);
    r.timing(watch);
    r.emit();
    return pass ? kPass : kFail;
}

int cmd_bounds(const Common &common, const std::string &fig, qgc::CurveRequest req) {
    if (fig == "threshold") {
        req.figure = qgc::Figure::Threshold;
    } else if (fig == "region") {
        req.figure = qgc::Figure::RateRegion;
    } else if (fig == "exponent") {
        req.figure = qgc::Figure::Exponent;
    } else {
        throw qgc::Error(qgc::ErrorKind::ParamOutOfRange, "--fig must be threshold, region or exponent");
    }
    Report::write_output(common, qgc::emit_curves(req));
    return kPass;
}

int cmd_capacity(const Common &common, std::uint32_t d, double eps, double delta, std::size_t k, bool finite) {
    Report r(common);
    r.line("d", std::to_string(d));
    r.field("d", d);
    if (finite) {
        const double q = qgc::capacity_from_finite_coding(d, k, delta);
        r.line("mode", "finite-coding");
        r.field("mode", "finite-coding");
        r.line("k", std::to_string(k));
        r.field("k", k);
        r.both("delta", delta);
        r.both("q_lower_bits", q);
    } else {
        const qgc::SmallNoiseBound b = qgc::capacity_lower_bound_small_noise(d, eps);
        r.line("mode", "small-noise");
        r.field("mode", "small-noise");
        r.both("eps", eps);
        r.both("cb_threshold", b.threshold);
        r.both("q_lower_bits", b.q_lower);
        r.line("positive", b.positive ? "yes" : "no");
        r.field("positive", b.positive);
    }
    r.emit();
    return kPass;
}

int exit_code_for(const qgc::Error &e) {
    switch (e.kind()) {
        case qgc::ErrorKind::KLViolated:
        case qgc::ErrorKind::NotIsometry:
            return kFail;
        default:
            return kUsage;
    }
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"qgc: qudit graph codes, decoders and capacity bounds"};
    app.require_subcommand(1);
    app.fallthrough();
    Common common;
    app.add_flag("--json", common.json_out, "Structured output");
    app.add_flag("--no-timing", common.no_timing, "Omit the timing line");
    app.add_option("--threads", common.threads, "Worker cap")->check(CLI::PositiveNumber);
    app.add_option("--out", common.out, "Write output to this file instead of stdout");

    std::string graph;
    std::size_t f = 1;

    CLI::App *verify = app.add_subcommand("verify", "Check that a graph code corrects f errors");
    verify->add_option("graph", graph, "Graph file")->required();
    verify->add_option("--f", f, "Errors to correct");

    CLI::App *maxf = app.add_subcommand("maxf", "Largest f the code corrects");
    maxf->add_option("graph", graph, "Graph file")->required();

    CLI::App *kl = app.add_subcommand("kl-check", "Knill-Laflamme check on the encoding isometry");
    kl->add_option("graph", graph, "Graph file")->required();
    kl->add_option("--f", f, "Errors to correct");

    std::string noise;
    std::vector<std::size_t> sites;
    CLI::App *sim = app.add_subcommand("simulate", "Encode, apply noise, decode, compare with identity");
    sim->add_option("graph", graph, "Graph file")->required();
    sim->add_option("--f", f, "Errors the decoder targets");
    sim->add_option("--noise", noise, "depolarizing:q | unitary-rotation:theta | custom-kraus:path");
    sim->add_option("--sites", sites, "Noisy output sites, e.g. 2,4")->delimiter(',');

    qgc::SearchConfig search_cfg;
    search_cfg.m = 3;
    search_cfg.n = 30;
    search_cfg.trials = 100;
    CLI::App *search = app.add_subcommand("search", "Sample random graph codes");
    search->add_option("--d", search_cfg.d, "Prime dimension");
    search->add_option("--m", search_cfg.m, "Inputs");
    search->add_option("--n", search_cfg.n, "Outputs");
    search->add_option("--f", search_cfg.f, "Errors to correct");
    search->add_option("--trials", search_cfg.trials, "Samples");
    search->add_option("--seed", search_cfg.seed, "64-bit master seed");

    std::uint32_t mc_d = 2;
    std::size_t mc_rows = 10;
    std::size_t mc_cols = 5;
    std::size_t mc_trials = 100000;
    std::uint64_t mc_seed = 0;
    CLI::App *mc = app.add_subcommand("singular-mc", "Singular fraction of random matrices over Z_d");
    mc->add_option("--d", mc_d, "Prime dimension");
    mc->add_option("--rows", mc_rows, "Rows N");
    mc->add_option("--cols", mc_cols, "Columns M");
    mc->add_option("--trials", mc_trials, "Samples");
    mc->add_option("--seed", mc_seed, "64-bit master seed");

    std::string fig;
    qgc::CurveRequest curves;
    CLI::App *bounds = app.add_subcommand("bounds", "CSV data for the threshold, rate-region and exponent figures");
    bounds->add_option("--fig", fig, "threshold | region | exponent")->required();
    bounds->add_option("--d", curves.d, "Site dimension (region)");
    bounds->add_option("--p", curves.p, "Prime code dimension (exponent)");
    bounds->add_option("--k", curves.k, "Block length (exponent)");
    bounds->add_option("--delta", curves.deltas, "Coding errors, comma separated (exponent)")->delimiter(',');
    bounds->add_option("--step", curves.eps_step, "eps grid step (threshold, region)");
    bounds->add_option("--points", curves.points, "Points per curve (exponent)");
    bounds->add_option("--eps-max", curves.eps_max, "Largest eps");

    std::uint32_t cap_d = 2;
    double cap_eps = 0.01;
    double cap_delta = 0.0;
    std::size_t cap_k = 1;
    CLI::App *cap = app.add_subcommand("capacity", "Capacity lower bounds");
    cap->add_option("--d,--p", cap_d, "Prime dimension");
    cap->add_option("--eps", cap_eps, "Error rate (small-noise mode)");
    CLI::Option *delta_opt = cap->add_option("--delta", cap_delta, "Coding error (finite-coding mode)");
    cap->add_option("--k", cap_k, "Block length (finite-coding mode)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        return app.exit(e) == 0 ? kPass : kUsage;
    }

    try {
        if (*verify) {
            return cmd_verify(common, graph, f);
        }
        if (*maxf) {
            return cmd_maxf(common, graph);
        }
        if (*kl) {
            return cmd_kl_check(common, graph, f);
        }
        if (*sim) {
            return cmd_simulate(common, graph, f, noise, sites);
        }
        if (*search) {
            return cmd_search(common, search_cfg);
        }
        if (*mc) {
            return cmd_singular_mc(common, mc_d, mc_rows, mc_cols, mc_trials, mc_seed);
        }
        if (*bounds) {
            return cmd_bounds(common, fig, curves);
        }
        if (*cap) {
            return cmd_capacity(common, cap_d, cap_eps, cap_delta, cap_k, delta_opt->count() > 0);
        }
    } catch (const qgc::Error &e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_code_for(e);
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    }
    return kUsage;
}
