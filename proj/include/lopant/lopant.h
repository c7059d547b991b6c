/*
 * lopant C API: linear ordering problem solver (ACS-IM and SB-SAM ant
 * colonies) behind opaque handles and status codes.
 *
 * Conventions:
 *   - every function returning lop_status reports failures through it and
 *     leaves a message retrievable with lop_last_error() on the same thread;
 *   - orderings crossing this boundary use 1-based node labels;
 *   - handles are released with the matching *_free function, which accepts NULL;
 *   - copy-out functions take (buffer, capacity, required) and return
 *     LOP_ERR_BUFFER_TOO_SMALL with *required set when capacity is short.
 */
#ifndef LOPANT_H
#define LOPANT_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  define LOPANT_API __declspec(dllexport)
#else
#  define LOPANT_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum lop_status {
    LOP_OK = 0,
    LOP_ERR_INVALID_ARGUMENT = 1,
    LOP_ERR_PARSE = 2,
    LOP_ERR_TRUNCATED = 3,
    LOP_ERR_INVALID_HEADER = 4,
    LOP_ERR_IO = 5,
    LOP_ERR_SIZE_LIMIT = 6,
    LOP_ERR_NO_CANDIDATE = 7,
    LOP_ERR_BUFFER_TOO_SMALL = 8,
    LOP_ERR_INTERNAL = 9
} lop_status;

typedef enum lop_algorithm {
    LOP_ALGO_ACS_IM = 0,
    LOP_ALGO_SB_SAM = 1
} lop_algorithm;

typedef struct lop_instance lop_instance;
typedef struct lop_run_result lop_run_result;
typedef struct lop_bench_config lop_bench_config;
typedef struct lop_bench_report lop_bench_report;

typedef struct lop_params {
    int algorithm; /* lop_algorithm */
    double alpha;
    double beta;
    double tau0;
    double rho;
    double q0;
    double tau_min;
    double deposit_scale;
    uint32_t ants;
    uint32_t iterations;
    uint32_t max_ls_passes; /* 0: n * n */
    double fixed_psl;       /* < 0: draw each ant's PSL uniformly */
} lop_params;

LOPANT_API const char* lop_version(void);
LOPANT_API const char* lop_last_error(void);
LOPANT_API const char* lop_status_string(lop_status status);

/* Instances */
LOPANT_API lop_status lop_instance_load(const char* path, lop_instance** out);
LOPANT_API lop_status lop_instance_parse(const char* text, size_t length, const char* name,
                                         lop_instance** out);
LOPANT_API lop_status lop_instance_from_matrix(size_t n, const double* weights,
                                               const char* name, lop_instance** out);
LOPANT_API lop_status lop_instance_generate(size_t n, int64_t low, int64_t high,
                                            uint64_t seed, lop_instance** out);
LOPANT_API void lop_instance_free(lop_instance* instance);
LOPANT_API size_t lop_instance_size(const lop_instance* instance);
LOPANT_API const char* lop_instance_name(const lop_instance* instance);
LOPANT_API lop_status lop_instance_weight(const lop_instance* instance, size_t i, size_t j,
                                          double* out);
LOPANT_API lop_status lop_instance_save(const lop_instance* instance, const char* path);
LOPANT_API lop_status lop_instance_to_text(const lop_instance* instance, char* buffer,
                                           size_t capacity, size_t* required);

/* Objective and moves; orders are 1-based labels of length n */
LOPANT_API lop_status lop_objective(const lop_instance* instance, const uint32_t* order,
                                    size_t n, double* out);
LOPANT_API lop_status lop_total_offdiagonal(const lop_instance* instance, double* out);
LOPANT_API lop_status lop_insert_move_delta(const lop_instance* instance,
                                            const uint32_t* order, size_t n,
                                            size_t from_pos, size_t to_pos, double* out);
LOPANT_API lop_status lop_swap_delta(const lop_instance* instance, const uint32_t* order,
                                     size_t n, size_t pos_a, size_t pos_b, double* out);
LOPANT_API lop_status lop_greedy_initial(const lop_instance* instance, uint32_t* order_out,
                                         size_t capacity);
LOPANT_API lop_status lop_insert_move_search(const lop_instance* instance, uint32_t* order,
                                             size_t n, size_t max_passes);

/* Solver */
LOPANT_API void lop_params_default(lop_params* params);
LOPANT_API lop_status lop_solve(const lop_instance* instance, const lop_params* params,
                                uint64_t seed, lop_run_result** out);
LOPANT_API void lop_result_free(lop_run_result* result);
LOPANT_API double lop_result_best_value(const lop_run_result* result);
LOPANT_API uint64_t lop_result_seed(const lop_run_result* result);
LOPANT_API size_t lop_result_step_backs(const lop_run_result* result);
LOPANT_API lop_status lop_result_permutation(const lop_run_result* result, uint32_t* out,
                                             size_t capacity, size_t* required);
LOPANT_API size_t lop_result_trace_length(const lop_run_result* result);
LOPANT_API lop_status lop_result_trace(const lop_run_result* result, double* out,
                                       size_t capacity, size_t* required);

/* Oracle and statistics */
LOPANT_API lop_status lop_oracle(const lop_instance* instance, double* value,
                                 uint32_t* order_out, size_t capacity);
LOPANT_API lop_status lop_deviation(double found, double optimal, double* out);

/* Benchmarks */
LOPANT_API lop_status lop_bench_config_new(lop_bench_config** out);
LOPANT_API lop_status lop_bench_config_load(const char* json_path, lop_bench_config** out);
LOPANT_API void lop_bench_config_free(lop_bench_config* config);
/* has_optimum != 0 attaches a known optimum to this instance */
LOPANT_API lop_status lop_bench_config_add_instance(lop_bench_config* config, const char* path,
                                                    int has_optimum, double optimum);
LOPANT_API lop_status lop_bench_config_set_algorithms(lop_bench_config* config,
                                                      const int* algorithms, size_t count);
LOPANT_API lop_status lop_bench_config_set_params(lop_bench_config* config,
                                                  const lop_params* params);
LOPANT_API lop_status lop_bench_config_set_runs(lop_bench_config* config, size_t runs);
LOPANT_API lop_status lop_bench_config_set_seed(lop_bench_config* config, uint64_t seed);
LOPANT_API lop_status lop_bench_config_set_threads(lop_bench_config* config, size_t threads);
LOPANT_API lop_status lop_bench_config_set_optimum(lop_bench_config* config, const char* name,
                                                   double optimum);
LOPANT_API lop_status lop_bench_config_load_optima(lop_bench_config* config, const char* path);
/* Output path and timing flag from a loaded JSON config; "" when unset */
LOPANT_API const char* lop_bench_config_output(const lop_bench_config* config);
LOPANT_API int lop_bench_config_timing(const lop_bench_config* config);

LOPANT_API lop_status lop_bench_run(const lop_bench_config* config, lop_bench_report** out);
LOPANT_API void lop_bench_report_free(lop_bench_report* report);
LOPANT_API lop_status lop_bench_report_csv(const lop_bench_report* report, int include_timing,
                                           char* buffer, size_t capacity, size_t* required);
LOPANT_API lop_status lop_bench_report_summary(const lop_bench_report* report, char* buffer,
                                               size_t capacity, size_t* required);
LOPANT_API size_t lop_bench_report_failure_count(const lop_bench_report* report);
LOPANT_API const char* lop_bench_report_failure(const lop_bench_report* report, size_t index);
LOPANT_API size_t lop_bench_report_run_count(const lop_bench_report* report);
/* deviation is NaN when no optimum was known for the run */
LOPANT_API lop_status lop_bench_report_run_value(const lop_bench_report* report, size_t index,
                                                 double* best_value, double* deviation);

#ifdef __cplusplus
}
#endif

#endif /* LOPANT_H */
