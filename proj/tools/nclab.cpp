// Copyright (c) 2026 the nclab authors
// SPDX-License-Identifier: Apache-2.0
//
// Command-line driver: seeded sampling, Monte Carlo experiments, tail and
// moment estimation, the free-limit oracle, convergence tables, and the
// randomized verification suites. Exit codes: 0 success, 1 validation or
// usage failure, 2 verification-suite failure.

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "nclab/conclab.hpp"
#include "nclab/constructions.hpp"
#include "nclab/ensembles.hpp"
#include "nclab/freeprob.hpp"
#include "nclab/io.hpp"
#include "nclab/verify.hpp"

namespace {

using namespace nclab;

constexpr const char* kVersion = "nclab 1.0.0";

std::vector<double> parse_double_list(const std::string& text) {
    std::vector<double> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        out.push_back(std::stod(item));
    }
    if (out.empty()) throw std::invalid_argument("empty list: '" + text + "'");
    return out;
}

std::vector<std::size_t> parse_size_list(const std::string& text) {
    std::vector<std::size_t> out;
    for (double v : parse_double_list(text)) {
        if (v < 1 || v != static_cast<double>(static_cast<std::size_t>(v)))
            throw std::invalid_argument("expected positive integers in '" + text + "'");
        out.push_back(static_cast<std::size_t>(v));
    }
    return out;
}

// Writes to the path when given, otherwise to stdout.
class OutputTarget {
  public:
    explicit OutputTarget(const std::string& path) {
        if (!path.empty()) {
            file_.open(path);
            if (!file_) throw std::runtime_error("cannot open output file: " + path);
        }
    }
    std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

  private:
    std::ofstream file_;
};

io::SampleTable read_table(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open input file: " + path);
    return io::read_experiment_csv(in);
}

int run_verify(const std::string& suite, std::uint64_t seed_value) {
    std::vector<verify::SuiteResult> results;
    const Seed seed{seed_value};
    const int cases = 100;
    if (suite == "identities" || suite == "all") {
        for (auto& s : verify::identities_suites(seed, cases)) results.push_back(std::move(s));
    }
    if (suite == "kernel" || suite == "all")
        results.push_back(verify::kernel_suite(Seed{derive(seed, 10)}, cases));
    if (suite == "ensembles" || suite == "all")
        results.push_back(verify::ensemble_suite(Seed{derive(seed, 11)}));
    if (suite == "extension")
        results.push_back(verify::extension_suite(Seed{derive(seed, 12)}, cases));
    if (results.empty()) {
        std::cerr << "unknown suite '" << suite
                  << "' (expected identities, kernel, ensembles, extension or all)\n";
        return 1;
    }

    bool ok = true;
    for (const auto& s : results) {
        ok = ok && s.passed();
        std::printf("[%s] %-16s cases=%-4d failures=%-3d worst=%.3e\n",
                    s.passed() ? "PASS" : "FAIL", s.name.c_str(), s.cases, s.failures, s.worst);
    }
    return ok ? 0 : 2;
}

void print_experiment_summary(const conclab::ExperimentResult& res) {
    std::printf("replicas=%zu n=%zu m=%d poly=%s\n", res.samples.size(), res.config.n,
                res.config.m, res.config.poly_text.c_str());
    std::printf("mean=%s\n", io::format_complex(res.mean).c_str());
    std::printf("median=%s\n", io::format_complex(res.median).c_str());
    std::printf("std=%s\n", io::format_double(conclab::sample_std(res.samples)).c_str());
    std::printf("median_mean_gap=%s\n",
                io::format_double(conclab::median_mean_gap(res)).c_str());
}

int run(int argc, char** argv) {
    CLI::App app{"desk-scale laboratory for traces of noncommutative polynomials "
                 "in random matrices"};
    app.set_version_flag("--version", kVersion);
    app.require_subcommand(1);

    // verify
    auto* cmd_verify = app.add_subcommand("verify", "run randomized verification suites");
    std::string suite = "all";
    std::uint64_t verify_seed = 2026;
    cmd_verify->add_option("--suite", suite, "identities|kernel|ensembles|extension|all");
    cmd_verify->add_option("--seed", verify_seed, "master seed for the suites");

    // sample
    auto* cmd_sample = app.add_subcommand("sample", "draw one matrix from an ensemble");
    std::string ens_name = "wigner_gaussian_real";
    std::size_t sample_n = 8;
    std::uint64_t sample_seed = 0;
    double diag_var = 1.0, offdiag_var = 1.0;
    std::string sample_out;
    cmd_sample->add_option("--ensemble", ens_name, "ensemble kind")->required();
    cmd_sample->add_option("--n", sample_n, "matrix size")->required();
    cmd_sample->add_option("--seed", sample_seed, "seed");
    cmd_sample->add_option("--diag-variance", diag_var, "Wigner diagonal variance");
    cmd_sample->add_option("--offdiag-variance", offdiag_var, "Wigner off-diagonal variance");
    cmd_sample->add_option("--out", sample_out, "output CSV path (default stdout)");

    // experiment
    auto* cmd_exp = app.add_subcommand("experiment", "run a Monte Carlo experiment");
    std::string config_path, exp_out;
    int threads = 0;
    bool force = false;
    cmd_exp->add_option("--config", config_path, "key = value config file")->required();
    cmd_exp->add_option("--out", exp_out, "samples CSV path");
    cmd_exp->add_option("--threads", threads, "worker cap (0 = hardware)");
    cmd_exp->add_flag("--force", force, "override the operation budget guard");

    // tail
    auto* cmd_tail = app.add_subcommand("tail", "empirical tail of |Z - mean| from a samples CSV");
    std::string tail_in, tail_out, grid_text;
    int tail_d = 0;
    cmd_tail->add_option("--in", tail_in, "samples CSV from 'experiment'")->required();
    cmd_tail->add_option("--grid", grid_text, "comma-separated t values (default: geometric)");
    cmd_tail->add_option("--d", tail_d, "polynomial degree; fits bound constants when given");
    cmd_tail->add_option("--out", tail_out, "tail CSV path (default stdout)");

    // moments
    auto* cmd_mom = app.add_subcommand("moments", "empirical L_q norms of Z - mean");
    std::string mom_in, mom_out, q_text = "1,2,4,8";
    cmd_mom->add_option("--in", mom_in, "samples CSV from 'experiment'")->required();
    cmd_mom->add_option("--q", q_text, "comma-separated exponents (default 1,2,4,8)");
    cmd_mom->add_option("--out", mom_out, "output path (default stdout)");

    // freelimit
    auto* cmd_free = app.add_subcommand("freelimit", "free semicircular moment of a polynomial");
    std::string free_poly;
    int free_m = 1;
    cmd_free->add_option("--poly", free_poly, "polynomial text")->required();
    cmd_free->add_option("--m", free_m, "number of variables")->required();

    // converge
    auto* cmd_conv = app.add_subcommand("converge", "convergence of n^{-1} Z to the free limit");
    std::string conv_poly, conv_ens = "wigner_gaussian_real", conv_n_text = "32,64,128";
    int conv_m = 1, conv_threads = 0;
    std::size_t conv_replicas = 400;
    std::uint64_t conv_seed = 0;
    bool conv_force = false;
    cmd_conv->add_option("--poly", conv_poly, "polynomial text")->required();
    cmd_conv->add_option("--m", conv_m, "number of variables")->required();
    cmd_conv->add_option("--ensemble", conv_ens, "ensemble kind");
    cmd_conv->add_option("--n", conv_n_text, "comma-separated matrix sizes");
    cmd_conv->add_option("--replicas", conv_replicas, "replicas per size");
    cmd_conv->add_option("--seed", conv_seed, "master seed");
    cmd_conv->add_option("--threads", conv_threads, "worker cap (0 = hardware)");
    cmd_conv->add_flag("--force", conv_force, "override the operation budget guard");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (cmd_verify->parsed()) return run_verify(suite, verify_seed);

        if (cmd_sample->parsed()) {
            ensembles::EnsembleSpec spec{ensembles::kind_from_string(ens_name), diag_var,
                                         offdiag_var};
            const matkernel::Matrix x = ensembles::sample(spec, sample_n, Seed{sample_seed});
            OutputTarget out(sample_out);
            io::write_matrix_csv(out.stream(), x);
            return 0;
        }

        if (cmd_exp->parsed()) {
            std::ifstream in(config_path);
            if (!in) throw std::runtime_error("cannot open config file: " + config_path);
            conclab::ExperimentConfig cfg = io::read_config(in);
            cfg.threads = threads;
            cfg.force = force;
            const conclab::ExperimentResult res = conclab::run_experiment(cfg);
            if (!exp_out.empty()) {
                std::ofstream os(exp_out);
                if (!os) throw std::runtime_error("cannot open output file: " + exp_out);
                io::write_experiment_csv(os, res);
            }
            print_experiment_summary(res);
            return 0;
        }

        if (cmd_tail->parsed()) {
            const io::SampleTable table = read_table(tail_in);
            const std::vector<matkernel::Complex> samples = table.samples();
            const std::vector<double> grid = grid_text.empty()
                                                 ? conclab::default_grid(samples)
                                                 : parse_double_list(grid_text);
            const conclab::TailEstimate tail = conclab::tail_estimate(samples, grid);
            OutputTarget out(tail_out);
            io::write_tail_csv(out.stream(), tail);
            if (tail_d > 0) {
                const auto fit = conclab::fit_tail_constants(tail, table.n, tail_d);
                std::cout << io::format_fit(fit) << "\n";
            }
            return 0;
        }

        if (cmd_mom->parsed()) {
            const io::SampleTable table = read_table(mom_in);
            const std::vector<double> qs = parse_double_list(q_text);
            const std::vector<double> vals = conclab::lq_norms(table.samples(), qs);
            OutputTarget out(mom_out);
            out.stream() << "q,lq\n";
            for (std::size_t i = 0; i < qs.size(); ++i)
                out.stream() << io::format_double(qs[i]) << ','
                             << io::format_double(vals[i]) << '\n';
            return 0;
        }

        if (cmd_free->parsed()) {
            const ncpoly::Polynomial p = ncpoly::parse(free_poly, free_m);
            std::cout << io::format_complex(freeprob::free_moment(p)) << "\n";
            return 0;
        }

        if (cmd_conv->parsed()) {
            conclab::ExperimentConfig base;
            base.poly_text = conv_poly;
            base.m = conv_m;
            base.n = 1;
            base.ensemble = {ensembles::EnsembleSpec{ensembles::kind_from_string(conv_ens),
                                                     1.0, 1.0}};
            base.replicas = conv_replicas;
            base.master_seed = Seed{conv_seed};
            base.threads = conv_threads;
            base.force = conv_force;
            const auto sizes = parse_size_list(conv_n_text);
            const auto rows = conclab::convergence_study(base, sizes);
            if (!rows.empty() && !rows.front().limit_applicable)
                std::cerr << "warning: ensemble is not unit-variance Wigner; "
                             "the free-limit column does not apply\n";
            std::cout << "n,mean_re,mean_im,stderr,limit_re,limit_im,abs_dev,limit_applicable\n";
            for (const auto& row : rows) {
                const double dev = std::abs(row.mean_scaled - row.free_limit);
                std::cout << row.n << ',' << io::format_double(row.mean_scaled.real()) << ','
                          << io::format_double(row.mean_scaled.imag()) << ','
                          << io::format_double(row.std_error) << ','
                          << io::format_double(row.free_limit.real()) << ','
                          << io::format_double(row.free_limit.imag()) << ','
                          << io::format_double(dev) << ','
                          << (row.limit_applicable ? 1 : 0) << '\n';
            }
            return 0;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}

}  // namespace

int main(int argc, char** argv) { return run(argc, argv); }
