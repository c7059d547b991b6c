// lopant command-line front end. Talks to the solver only through the C API.
//
// Exit codes: 0 success, 1 usage error, 2 input-file error.

#include "lopant/lopant.h"

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitInput = 2;

struct InstanceDeleter {
    void operator()(lop_instance* p) const { lop_instance_free(p); }
};
struct ConfigDeleter {
    void operator()(lop_bench_config* p) const { lop_bench_config_free(p); }
};
struct ReportDeleter {
    void operator()(lop_bench_report* p) const { lop_bench_report_free(p); }
};
using InstancePtr = std::unique_ptr<lop_instance, InstanceDeleter>;
using ConfigPtr = std::unique_ptr<lop_bench_config, ConfigDeleter>;
using ReportPtr = std::unique_ptr<lop_bench_report, ReportDeleter>;

bool is_input_error(lop_status s) {
    return s == LOP_ERR_PARSE || s == LOP_ERR_TRUNCATED || s == LOP_ERR_INVALID_HEADER ||
           s == LOP_ERR_IO;
}

int report_error(lop_status s) {
    std::cerr << "error: " << lop_last_error() << " [" << lop_status_string(s) << "]\n";
    return is_input_error(s) ? kExitInput : kExitUsage;
}

template <typename Fill>
std::string fetch_text(Fill fill) {
    size_t required = 0;
    fill(nullptr, 0, &required);
    std::string text(required, '\0');
    if (fill(text.data(), text.size(), &required) != LOP_OK) {
        return {};
    }
    text.resize(required > 0 ? required - 1 : 0);
    return text;
}

int emit(const std::string& text, const std::string& path) {
    if (path.empty()) {
        std::cout << text;
        return kExitOk;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out || !(out << text)) {
        std::cerr << "error: cannot write " << path << '\n';
        return kExitInput;
    }
    return kExitOk;
}

int finish_report(const lop_bench_report* report, bool timing, const std::string& out) {
    const std::string csv = fetch_text([&](char* b, size_t c, size_t* r) {
        return lop_bench_report_csv(report, timing ? 1 : 0, b, c, r);
    });
    const std::string summary = fetch_text(
        [&](char* b, size_t c, size_t* r) { return lop_bench_report_summary(report, b, c, r); });
    std::cerr << summary;
    const int code = emit(csv, out);
    if (code != kExitOk) return code;
    return lop_bench_report_failure_count(report) > 0 ? kExitInput : kExitOk;
}

struct SolveOptions {
    std::string instance;
    std::string algo = "sb-sam";
    unsigned iterations = 200;
    unsigned ants = 10;
    unsigned runs = 5;
    uint64_t seed = 1;
    std::optional<double> optimum;
    std::string out;
    bool timing = false;
    unsigned threads = 1;
    lop_params params{};
};

int run_solve(SolveOptions& opt) {
    if (opt.algo == "acs-im") {
        opt.params.algorithm = LOP_ALGO_ACS_IM;
    } else if (opt.algo == "sb-sam") {
        opt.params.algorithm = LOP_ALGO_SB_SAM;
    } else {
        std::cerr << "error: unknown algorithm '" << opt.algo << "'\n";
        return kExitUsage;
    }
    opt.params.iterations = opt.iterations;
    opt.params.ants = opt.ants;

    lop_bench_config* raw = nullptr;
    if (auto s = lop_bench_config_new(&raw); s != LOP_OK) return report_error(s);
    ConfigPtr config(raw);
    lop_status s = lop_bench_config_add_instance(config.get(), opt.instance.c_str(),
                                                 opt.optimum ? 1 : 0, opt.optimum.value_or(0));
    const int algorithm = opt.params.algorithm;
    if (s == LOP_OK) s = lop_bench_config_set_algorithms(config.get(), &algorithm, 1);
    if (s == LOP_OK) s = lop_bench_config_set_params(config.get(), &opt.params);
    if (s == LOP_OK) s = lop_bench_config_set_runs(config.get(), opt.runs);
    if (s == LOP_OK) s = lop_bench_config_set_seed(config.get(), opt.seed);
    if (s == LOP_OK) s = lop_bench_config_set_threads(config.get(), opt.threads);
    if (s != LOP_OK) return report_error(s);

    lop_bench_report* report_raw = nullptr;
    if (s = lop_bench_run(config.get(), &report_raw); s != LOP_OK) return report_error(s);
    ReportPtr report(report_raw);
    return finish_report(report.get(), opt.timing, opt.out);
}

int run_bench(const std::string& config_path, const std::string& out_override,
              bool timing) {
    lop_bench_config* raw = nullptr;
    if (auto s = lop_bench_config_load(config_path.c_str(), &raw); s != LOP_OK) {
        return report_error(s);
    }
    ConfigPtr config(raw);
    lop_bench_report* report_raw = nullptr;
    if (auto s = lop_bench_run(config.get(), &report_raw); s != LOP_OK) return report_error(s);
    ReportPtr report(report_raw);
    const std::string out =
        out_override.empty() ? lop_bench_config_output(config.get()) : out_override;
    return finish_report(report.get(), timing || lop_bench_config_timing(config.get()) != 0,
                         out);
}

int run_gen(size_t n, int64_t low, int64_t high, uint64_t seed, const std::string& out) {
    lop_instance* raw = nullptr;
    if (auto s = lop_instance_generate(n, low, high, seed, &raw); s != LOP_OK) {
        return report_error(s);
    }
    InstancePtr instance(raw);
    const std::string text = fetch_text([&](char* b, size_t c, size_t* r) {
        return lop_instance_to_text(instance.get(), b, c, r);
    });
    return emit(text, out);
}

int run_oracle(const std::string& path) {
    lop_instance* raw = nullptr;
    if (auto s = lop_instance_load(path.c_str(), &raw); s != LOP_OK) return report_error(s);
    InstancePtr instance(raw);
    const size_t n = lop_instance_size(instance.get());
    std::vector<uint32_t> order(n);
    double value = 0.0;
    if (auto s = lop_oracle(instance.get(), &value, order.data(), order.size()); s != LOP_OK) {
        return report_error(s);
    }
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", value);
    std::cout << "optimum " << buf << "\norder";
    for (auto v : order) std::cout << ' ' << v;
    std::cout << '\n';
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Linear ordering problem solver: ACS-IM and SB-SAM ant colonies"};
    app.require_subcommand(1);
    app.set_version_flag("--version", lop_version());

    SolveOptions solve;
    lop_params_default(&solve.params);
    auto* solve_cmd = app.add_subcommand("solve", "Run replicate solves on one instance, CSV out");
    solve_cmd->add_option("--instance", solve.instance, "Instance file")->required();
    solve_cmd->add_option("--algo", solve.algo, "acs-im or sb-sam")
        ->check(CLI::IsMember({"acs-im", "sb-sam"}))
        ->capture_default_str();
    solve_cmd->add_option("--iterations", solve.iterations)->capture_default_str();
    solve_cmd->add_option("--ants", solve.ants)->capture_default_str();
    solve_cmd->add_option("--runs", solve.runs)->capture_default_str();
    solve_cmd->add_option("--seed", solve.seed, "Base seed; run r uses seed + r - 1")
        ->capture_default_str();
    solve_cmd->add_option("--optimum", solve.optimum, "Known optimum, enables deviation");
    solve_cmd->add_option("--out", solve.out, "CSV path (default: stdout)");
    solve_cmd->add_flag("--timing", solve.timing, "Fill the seconds column");
    solve_cmd->add_option("--threads", solve.threads)->capture_default_str();
    solve_cmd->add_option("--alpha", solve.params.alpha)->capture_default_str();
    solve_cmd->add_option("--beta", solve.params.beta)->capture_default_str();
    solve_cmd->add_option("--tau0", solve.params.tau0)->capture_default_str();
    solve_cmd->add_option("--rho", solve.params.rho)->capture_default_str();
    solve_cmd->add_option("--q0", solve.params.q0)->capture_default_str();
    solve_cmd->add_option("--tau-min", solve.params.tau_min)->capture_default_str();
    solve_cmd->add_option("--deposit-scale", solve.params.deposit_scale)->capture_default_str();
    solve_cmd->add_option("--ls-passes", solve.params.max_ls_passes, "0 means n*n")
        ->capture_default_str();

    std::string bench_config;
    std::string bench_out;
    bool bench_timing = false;
    auto* bench_cmd = app.add_subcommand("bench", "Batch benchmark from a JSON config");
    bench_cmd->add_option("--config", bench_config)->required();
    bench_cmd->add_option("--out", bench_out, "Overrides the config's output path");
    bench_cmd->add_flag("--timing", bench_timing);

    size_t gen_n = 0;
    int64_t gen_low = 0;
    int64_t gen_high = 99;
    uint64_t gen_seed = 1;
    std::string gen_out;
    auto* gen_cmd = app.add_subcommand("gen", "Generate a uniform random instance");
    gen_cmd->add_option("--n", gen_n)->required();
    gen_cmd->add_option("--low", gen_low)->capture_default_str();
    gen_cmd->add_option("--high", gen_high)->capture_default_str();
    gen_cmd->add_option("--seed", gen_seed)->capture_default_str();
    gen_cmd->add_option("--out", gen_out, "Output path (default: stdout)");

    std::string oracle_instance;
    auto* oracle_cmd = app.add_subcommand("oracle", "Exact optimum by enumeration (n <= 10)");
    oracle_cmd->add_option("--instance", oracle_instance)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    if (*solve_cmd) return run_solve(solve);
    if (*bench_cmd) return run_bench(bench_config, bench_out, bench_timing);
    if (*gen_cmd) return run_gen(gen_n, gen_low, gen_high, gen_seed, gen_out);
    if (*oracle_cmd) return run_oracle(oracle_instance);
    return kExitUsage;
}
