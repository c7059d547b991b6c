#include "lopant/lopant.h"

#include "lopant/colony.hpp"
#include "lopant/construction.hpp"
#include "lopant/errors.hpp"
#include "lopant/harness.hpp"
#include "lopant/instance_io.hpp"
#include "lopant/local_search.hpp"
#include "lopant/lop_core.hpp"

#include <cstring>
#include <limits>
#include <new>
#include <string>

struct lop_instance {
    lopant::Instance value;
};

struct lop_run_result {
    lopant::RunResult value;
};

struct lop_bench_config {
    lopant::BenchmarkConfig value;
    std::string output;
};

struct lop_bench_report {
    lopant::BenchmarkReport value;
};

namespace {

thread_local std::string last_error;

lop_status to_status(lopant::ErrorCode code) {
    using lopant::ErrorCode;
    switch (code) {
    case ErrorCode::InvalidArgument: return LOP_ERR_INVALID_ARGUMENT;
    case ErrorCode::Parse: return LOP_ERR_PARSE;
    case ErrorCode::Truncated: return LOP_ERR_TRUNCATED;
    case ErrorCode::InvalidHeader: return LOP_ERR_INVALID_HEADER;
    case ErrorCode::Io: return LOP_ERR_IO;
    case ErrorCode::SizeLimit: return LOP_ERR_SIZE_LIMIT;
    case ErrorCode::NoCandidate: return LOP_ERR_NO_CANDIDATE;
    }
    return LOP_ERR_INTERNAL;
}

lop_status fail(lop_status status, std::string message) {
    last_error = std::move(message);
    return status;
}

template <typename F>
lop_status guarded(F&& body) {
    try {
        last_error.clear();
        return body();
    } catch (const lopant::LopError& e) {
        return fail(to_status(e.code()), e.what());
    } catch (const std::bad_alloc&) {
        return fail(LOP_ERR_INTERNAL, "out of memory");
    } catch (const std::exception& e) {
        return fail(LOP_ERR_INTERNAL, e.what());
    }
}

#define LOP_REQUIRE(cond, what)                                   \
    do {                                                          \
        if (!(cond)) return fail(LOP_ERR_INVALID_ARGUMENT, what); \
    } while (0)

template <typename T>
lop_status copy_out(const T* data, std::size_t count, T* buffer, std::size_t capacity,
                    std::size_t* required) {
    if (required != nullptr) *required = count;
    if (capacity < count || (count > 0 && buffer == nullptr)) {
        return fail(LOP_ERR_BUFFER_TOO_SMALL, "output buffer too small");
    }
    std::copy(data, data + count, buffer);
    return LOP_OK;
}

// Text is NUL-terminated; *required counts the terminator.
lop_status copy_text(const std::string& text, char* buffer, std::size_t capacity,
                     std::size_t* required) {
    if (required != nullptr) *required = text.size() + 1;
    if (buffer == nullptr || capacity < text.size() + 1) {
        return fail(LOP_ERR_BUFFER_TOO_SMALL, "output buffer too small");
    }
    std::memcpy(buffer, text.c_str(), text.size() + 1);
    return LOP_OK;
}

lopant::Permutation perm_from(const uint32_t* order, std::size_t n) {
    if (order == nullptr && n > 0) {
        throw lopant::invalid_argument("null ordering");
    }
    return lopant::Permutation::from_one_based({order, n});
}

lopant::ColonyParams params_from(const lop_params& p) {
    lopant::ColonyParams out;
    if (p.algorithm != LOP_ALGO_ACS_IM && p.algorithm != LOP_ALGO_SB_SAM) {
        throw lopant::invalid_argument("unknown algorithm id " + std::to_string(p.algorithm));
    }
    out.algorithm = p.algorithm == LOP_ALGO_ACS_IM ? lopant::Algorithm::AcsIm
                                                   : lopant::Algorithm::SbSam;
    out.alpha = p.alpha;
    out.beta = p.beta;
    out.tau0 = p.tau0;
    out.rho = p.rho;
    out.q0 = p.q0;
    out.tau_min = p.tau_min;
    out.deposit_scale = p.deposit_scale;
    out.ants = p.ants;
    out.iterations = p.iterations;
    out.max_ls_passes = p.max_ls_passes;
    if (p.fixed_psl >= 0.0) out.fixed_psl = p.fixed_psl;
    out.validate();
    return out;
}

} // namespace

extern "C" {

const char* lop_version(void) { return "1.0.0"; }

const char* lop_last_error(void) { return last_error.c_str(); }

const char* lop_status_string(lop_status status) {
    switch (status) {
    case LOP_OK: return "ok";
    case LOP_ERR_INVALID_ARGUMENT: return "invalid argument";
    case LOP_ERR_PARSE: return "parse error";
    case LOP_ERR_TRUNCATED: return "truncated file";
    case LOP_ERR_INVALID_HEADER: return "invalid header";
    case LOP_ERR_IO: return "i/o error";
    case LOP_ERR_SIZE_LIMIT: return "size limit exceeded";
    case LOP_ERR_NO_CANDIDATE: return "no candidate";
    case LOP_ERR_BUFFER_TOO_SMALL: return "buffer too small";
    case LOP_ERR_INTERNAL: return "internal error";
    }
    return "unknown status";
}

lop_status lop_instance_load(const char* path, lop_instance** out) {
    LOP_REQUIRE(path != nullptr && out != nullptr, "null argument");
    return guarded([&] {
        *out = new lop_instance{lopant::read_instance_file(path)};
        return LOP_OK;
    });
}

lop_status lop_instance_parse(const char* text, size_t length, const char* name,
                              lop_instance** out) {
    LOP_REQUIRE(out != nullptr && (text != nullptr || length == 0), "null argument");
    return guarded([&] {
        *out = new lop_instance{lopant::parse_instance(std::string_view(text, length),
                                                       name != nullptr ? name : "")};
        return LOP_OK;
    });
}

lop_status lop_instance_from_matrix(size_t n, const double* weights, const char* name,
                                    lop_instance** out) {
    LOP_REQUIRE(out != nullptr && weights != nullptr, "null argument");
    return guarded([&] {
        std::vector<double> w(weights, weights + n * n);
        *out = new lop_instance{lopant::Instance(n, std::move(w), name != nullptr ? name : "")};
        return LOP_OK;
    });
}

lop_status lop_instance_generate(size_t n, int64_t low, int64_t high, uint64_t seed,
                                 lop_instance** out) {
    LOP_REQUIRE(out != nullptr, "null argument");
    return guarded([&] {
        *out = new lop_instance{lopant::generate_random_instance(n, low, high, seed)};
        return LOP_OK;
    });
}

void lop_instance_free(lop_instance* instance) { delete instance; }

size_t lop_instance_size(const lop_instance* instance) {
    return instance != nullptr ? instance->value.size() : 0;
}

const char* lop_instance_name(const lop_instance* instance) {
    return instance != nullptr ? instance->value.name().c_str() : "";
}

lop_status lop_instance_weight(const lop_instance* instance, size_t i, size_t j, double* out) {
    LOP_REQUIRE(instance != nullptr && out != nullptr, "null argument");
    const std::size_t n = instance->value.size();
    LOP_REQUIRE(i < n && j < n, "node index out of range");
    *out = instance->value(static_cast<lopant::Node>(i), static_cast<lopant::Node>(j));
    return LOP_OK;
}

lop_status lop_instance_save(const lop_instance* instance, const char* path) {
    LOP_REQUIRE(instance != nullptr && path != nullptr, "null argument");
    return guarded([&] {
        lopant::write_instance_file(instance->value, path);
        return LOP_OK;
    });
}

lop_status lop_instance_to_text(const lop_instance* instance, char* buffer, size_t capacity,
                                size_t* required) {
    LOP_REQUIRE(instance != nullptr, "null argument");
    return guarded([&] {
        return copy_text(lopant::write_instance(instance->value), buffer, capacity, required);
    });
}

lop_status lop_objective(const lop_instance* instance, const uint32_t* order, size_t n,
                         double* out) {
    LOP_REQUIRE(instance != nullptr && out != nullptr, "null argument");
    return guarded([&] {
        *out = lopant::objective(instance->value, perm_from(order, n));
        return LOP_OK;
    });
}

lop_status lop_total_offdiagonal(const lop_instance* instance, double* out) {
    LOP_REQUIRE(instance != nullptr && out != nullptr, "null argument");
    *out = lopant::total_offdiagonal(instance->value);
    return LOP_OK;
}

lop_status lop_insert_move_delta(const lop_instance* instance, const uint32_t* order, size_t n,
                                 size_t from_pos, size_t to_pos, double* out) {
    LOP_REQUIRE(instance != nullptr && out != nullptr, "null argument");
    LOP_REQUIRE(from_pos >= 1 && to_pos >= 1, "positions are 1-based");
    return guarded([&] {
        *out = lopant::insert_move_delta(instance->value, perm_from(order, n), from_pos - 1,
                                         to_pos - 1);
        return LOP_OK;
    });
}

lop_status lop_swap_delta(const lop_instance* instance, const uint32_t* order, size_t n,
                          size_t pos_a, size_t pos_b, double* out) {
    LOP_REQUIRE(instance != nullptr && out != nullptr, "null argument");
    LOP_REQUIRE(pos_a >= 1 && pos_b >= 1, "positions are 1-based");
    return guarded([&] {
        *out = lopant::swap_delta(instance->value, perm_from(order, n), pos_a - 1, pos_b - 1);
        return LOP_OK;
    });
}

lop_status lop_greedy_initial(const lop_instance* instance, uint32_t* order_out,
                              size_t capacity) {
    LOP_REQUIRE(instance != nullptr, "null argument");
    return guarded([&] {
        const auto labels = lopant::greedy_initial(instance->value).to_one_based();
        return copy_out(labels.data(), labels.size(), order_out, capacity, nullptr);
    });
}

lop_status lop_insert_move_search(const lop_instance* instance, uint32_t* order, size_t n,
                                  size_t max_passes) {
    LOP_REQUIRE(instance != nullptr, "null argument");
    return guarded([&] {
        const auto improved =
            lopant::insert_move_search(instance->value, perm_from(order, n),
                                       max_passes > 0 ? max_passes
                                                      : lopant::default_max_passes(n));
        const auto labels = improved.to_one_based();
        std::copy(labels.begin(), labels.end(), order);
        return LOP_OK;
    });
}

void lop_params_default(lop_params* params) {
    if (params == nullptr) return;
    const lopant::ColonyParams d;
    params->algorithm = LOP_ALGO_SB_SAM;
    params->alpha = d.alpha;
    params->beta = d.beta;
    params->tau0 = d.tau0;
    params->rho = d.rho;
    params->q0 = d.q0;
    params->tau_min = d.tau_min;
    params->deposit_scale = d.deposit_scale;
    params->ants = static_cast<uint32_t>(d.ants);
    params->iterations = static_cast<uint32_t>(d.iterations);
    params->max_ls_passes = 0;
    params->fixed_psl = -1.0;
}

lop_status lop_solve(const lop_instance* instance, const lop_params* params, uint64_t seed,
                     lop_run_result** out) {
    LOP_REQUIRE(instance != nullptr && params != nullptr && out != nullptr, "null argument");
    return guarded([&] {
        *out = new lop_run_result{lopant::run(instance->value, params_from(*params), seed)};
        return LOP_OK;
    });
}

void lop_result_free(lop_run_result* result) { delete result; }

double lop_result_best_value(const lop_run_result* result) {
    return result != nullptr ? result->value.best_value
                             : std::numeric_limits<double>::quiet_NaN();
}

uint64_t lop_result_seed(const lop_run_result* result) {
    return result != nullptr ? result->value.seed : 0;
}

size_t lop_result_step_backs(const lop_run_result* result) {
    return result != nullptr ? result->value.step_backs : 0;
}

lop_status lop_result_permutation(const lop_run_result* result, uint32_t* out, size_t capacity,
                                  size_t* required) {
    LOP_REQUIRE(result != nullptr, "null argument");
    const auto labels = result->value.best_perm.to_one_based();
    return copy_out(labels.data(), labels.size(), out, capacity, required);
}

size_t lop_result_trace_length(const lop_run_result* result) {
    return result != nullptr ? result->value.iteration_best_trace.size() : 0;
}

lop_status lop_result_trace(const lop_run_result* result, double* out, size_t capacity,
                            size_t* required) {
    LOP_REQUIRE(result != nullptr, "null argument");
    const auto& trace = result->value.iteration_best_trace;
    return copy_out(trace.data(), trace.size(), out, capacity, required);
}

lop_status lop_oracle(const lop_instance* instance, double* value, uint32_t* order_out,
                      size_t capacity) {
    LOP_REQUIRE(instance != nullptr && value != nullptr, "null argument");
    return guarded([&] {
        const auto best = lopant::brute_force_optimal(instance->value);
        *value = best.value;
        if (order_out == nullptr) return LOP_OK;
        const auto labels = best.perm.to_one_based();
        return copy_out(labels.data(), labels.size(), order_out, capacity, nullptr);
    });
}

lop_status lop_deviation(double found, double optimal, double* out) {
    LOP_REQUIRE(out != nullptr, "null argument");
    return guarded([&] {
        *out = lopant::deviation(found, optimal);
        return LOP_OK;
    });
}

lop_status lop_bench_config_new(lop_bench_config** out) {
    LOP_REQUIRE(out != nullptr, "null argument");
    return guarded([&] {
        *out = new lop_bench_config{};
        return LOP_OK;
    });
}

lop_status lop_bench_config_load(const char* json_path, lop_bench_config** out) {
    LOP_REQUIRE(json_path != nullptr && out != nullptr, "null argument");
    return guarded([&] {
        auto config = lopant::read_benchmark_config(json_path);
        std::string output = config.output.string();
        *out = new lop_bench_config{std::move(config), std::move(output)};
        return LOP_OK;
    });
}

void lop_bench_config_free(lop_bench_config* config) { delete config; }

lop_status lop_bench_config_add_instance(lop_bench_config* config, const char* path,
                                         int has_optimum, double optimum) {
    LOP_REQUIRE(config != nullptr && path != nullptr, "null argument");
    return guarded([&] {
        lopant::InstanceSpec spec{path, {}};
        if (has_optimum != 0) spec.optimum = optimum;
        config->value.instances.push_back(std::move(spec));
        return LOP_OK;
    });
}

lop_status lop_bench_config_set_algorithms(lop_bench_config* config, const int* algorithms,
                                           size_t count) {
    LOP_REQUIRE(config != nullptr && algorithms != nullptr && count > 0, "null argument");
    std::vector<lopant::Algorithm> list;
    for (size_t i = 0; i < count; ++i) {
        if (algorithms[i] == LOP_ALGO_ACS_IM) {
            list.push_back(lopant::Algorithm::AcsIm);
        } else if (algorithms[i] == LOP_ALGO_SB_SAM) {
            list.push_back(lopant::Algorithm::SbSam);
        } else {
            return fail(LOP_ERR_INVALID_ARGUMENT, "unknown algorithm id");
        }
    }
    config->value.algorithms = std::move(list);
    return LOP_OK;
}

lop_status lop_bench_config_set_params(lop_bench_config* config, const lop_params* params) {
    LOP_REQUIRE(config != nullptr && params != nullptr, "null argument");
    return guarded([&] {
        config->value.params = params_from(*params);
        return LOP_OK;
    });
}

lop_status lop_bench_config_set_runs(lop_bench_config* config, size_t runs) {
    LOP_REQUIRE(config != nullptr, "null argument");
    LOP_REQUIRE(runs >= 1, "runs must be at least 1");
    config->value.runs = runs;
    return LOP_OK;
}

lop_status lop_bench_config_set_seed(lop_bench_config* config, uint64_t seed) {
    LOP_REQUIRE(config != nullptr, "null argument");
    config->value.base_seed = seed;
    return LOP_OK;
}

lop_status lop_bench_config_set_threads(lop_bench_config* config, size_t threads) {
    LOP_REQUIRE(config != nullptr, "null argument");
    LOP_REQUIRE(threads >= 1, "threads must be at least 1");
    config->value.threads = threads;
    return LOP_OK;
}

lop_status lop_bench_config_set_optimum(lop_bench_config* config, const char* name,
                                        double optimum) {
    LOP_REQUIRE(config != nullptr && name != nullptr, "null argument");
    config->value.optima[name] = optimum;
    return LOP_OK;
}

lop_status lop_bench_config_load_optima(lop_bench_config* config, const char* path) {
    LOP_REQUIRE(config != nullptr && path != nullptr, "null argument");
    return guarded([&] {
        for (auto& [name, value] : lopant::read_optima_file(path)) {
            config->value.optima[name] = value;
        }
        return LOP_OK;
    });
}

const char* lop_bench_config_output(const lop_bench_config* config) {
    return config != nullptr ? config->output.c_str() : "";
}

int lop_bench_config_timing(const lop_bench_config* config) {
    return config != nullptr && config->value.timing ? 1 : 0;
}

lop_status lop_bench_run(const lop_bench_config* config, lop_bench_report** out) {
    LOP_REQUIRE(config != nullptr && out != nullptr, "null argument");
    return guarded([&] {
        *out = new lop_bench_report{lopant::run_benchmark(config->value)};
        return LOP_OK;
    });
}

void lop_bench_report_free(lop_bench_report* report) { delete report; }

lop_status lop_bench_report_csv(const lop_bench_report* report, int include_timing,
                                char* buffer, size_t capacity, size_t* required) {
    LOP_REQUIRE(report != nullptr, "null argument");
    return guarded([&] {
        return copy_text(lopant::to_csv(report->value, include_timing != 0), buffer, capacity,
                         required);
    });
}

lop_status lop_bench_report_summary(const lop_bench_report* report, char* buffer,
                                    size_t capacity, size_t* required) {
    LOP_REQUIRE(report != nullptr, "null argument");
    return guarded([&] {
        return copy_text(lopant::format_summary(report->value), buffer, capacity, required);
    });
}

size_t lop_bench_report_failure_count(const lop_bench_report* report) {
    return report != nullptr ? report->value.failures.size() : 0;
}

const char* lop_bench_report_failure(const lop_bench_report* report, size_t index) {
    if (report == nullptr || index >= report->value.failures.size()) return "";
    return report->value.failures[index].message.c_str();
}

size_t lop_bench_report_run_count(const lop_bench_report* report) {
    return report != nullptr ? report->value.runs.size() : 0;
}

lop_status lop_bench_report_run_value(const lop_bench_report* report, size_t index,
                                      double* best_value, double* deviation) {
    LOP_REQUIRE(report != nullptr, "null argument");
    LOP_REQUIRE(index < report->value.runs.size(), "run index out of range");
    const auto& rec = report->value.runs[index];
    if (best_value != nullptr) *best_value = rec.best_value;
    if (deviation != nullptr) {
        *deviation = rec.deviation.value_or(std::numeric_limits<double>::quiet_NaN());
    }
    return LOP_OK;
}

} // extern "C"
