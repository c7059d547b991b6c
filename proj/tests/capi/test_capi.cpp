// Exercises the shared library strictly through its C header.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lopant/lopant.h"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <string>
#include <vector>

#include <unistd.h>

TEST_CASE("instance parse, objective and moves use 1-based orders") {
    const char text[] = "2\n0 5\n3 0\n";
    lop_instance* inst = nullptr;
    REQUIRE(lop_instance_parse(text, std::strlen(text), "tiny", &inst) == LOP_OK);
    CHECK(lop_instance_size(inst) == 2);
    CHECK(std::string(lop_instance_name(inst)) == "tiny");

    const uint32_t fwd[] = {1, 2}, rev[] = {2, 1};
    double v = 0;
    CHECK(lop_objective(inst, fwd, 2, &v) == LOP_OK);
    CHECK(v == 5.0);
    CHECK(lop_objective(inst, rev, 2, &v) == LOP_OK);
    CHECK(v == 3.0);
    CHECK(lop_total_offdiagonal(inst, &v) == LOP_OK);
    CHECK(v == 8.0);
    CHECK(lop_swap_delta(inst, fwd, 2, 1, 2, &v) == LOP_OK);
    CHECK(v == -2.0);
    CHECK(lop_insert_move_delta(inst, fwd, 2, 2, 1, &v) == LOP_OK);
    CHECK(v == -2.0);

    const uint32_t bad[] = {1, 1};
    CHECK(lop_objective(inst, bad, 2, &v) == LOP_ERR_INVALID_ARGUMENT);
    CHECK(std::strlen(lop_last_error()) > 0);
    CHECK(lop_swap_delta(inst, fwd, 2, 0, 1, &v) == LOP_ERR_INVALID_ARGUMENT);
    CHECK(lop_instance_weight(inst, 1, 0, &v) == LOP_OK);
    CHECK(v == 3.0);
    CHECK(lop_instance_weight(inst, 2, 0, &v) == LOP_ERR_INVALID_ARGUMENT);

    char small[4];
    size_t required = 0;
    CHECK(lop_instance_to_text(inst, small, sizeof small, &required) == LOP_ERR_BUFFER_TOO_SMALL);
    std::vector<char> buf(required);
    CHECK(lop_instance_to_text(inst, buf.data(), buf.size(), &required) == LOP_OK);
    CHECK(std::string(buf.data()) == "2\n0 5\n3 0\n");
    lop_instance_free(inst);
}

TEST_CASE("parse errors map to status codes") {
    lop_instance* inst = nullptr;
    CHECK(lop_instance_parse("2\n0 5\n3", 7, nullptr, &inst) == LOP_ERR_TRUNCATED);
    CHECK(lop_instance_parse("0\n", 2, nullptr, &inst) == LOP_ERR_INVALID_HEADER);
    CHECK(lop_instance_parse("1\nx\n", 4, nullptr, &inst) == LOP_ERR_PARSE);
    CHECK(std::string(lop_last_error()).find("line 2") != std::string::npos);
    CHECK(lop_instance_load("/nonexistent/lopant.mat", &inst) == LOP_ERR_IO);
    CHECK(inst == nullptr);
    CHECK(lop_instance_generate(3, 5, 1, 0, &inst) == LOP_ERR_INVALID_ARGUMENT);
    lop_instance_free(nullptr);
}

TEST_CASE("greedy, local search, oracle and solve") {
    lop_instance* inst = nullptr;
    REQUIRE(lop_instance_generate(8, 0, 99, 17, &inst) == LOP_OK);

    std::vector<uint32_t> greedy(8);
    CHECK(lop_greedy_initial(inst, greedy.data(), greedy.size()) == LOP_OK);
    CHECK(lop_greedy_initial(inst, greedy.data(), 3) == LOP_ERR_BUFFER_TOO_SMALL);
    std::vector<uint32_t> improved = greedy;
    CHECK(lop_insert_move_search(inst, improved.data(), improved.size(), 0) == LOP_OK);
    double g = 0, l = 0;
    lop_objective(inst, greedy.data(), 8, &g);
    lop_objective(inst, improved.data(), 8, &l);
    CHECK(l >= g);

    double best = 0;
    std::vector<uint32_t> order(8);
    REQUIRE(lop_oracle(inst, &best, order.data(), order.size()) == LOP_OK);
    double check = 0;
    lop_objective(inst, order.data(), 8, &check);
    CHECK(check == best);

    lop_params params;
    lop_params_default(&params);
    CHECK(params.ants == 10);
    CHECK(params.q0 == 0.5);
    params.iterations = 60;
    lop_run_result* r1 = nullptr;
    lop_run_result* r2 = nullptr;
    REQUIRE(lop_solve(inst, &params, 99, &r1) == LOP_OK);
    REQUIRE(lop_solve(inst, &params, 99, &r2) == LOP_OK);
    CHECK(lop_result_best_value(r1) == lop_result_best_value(r2));
    CHECK(lop_result_best_value(r1) == best);
    CHECK(lop_result_seed(r1) == 99);
    CHECK(lop_result_trace_length(r1) == 60);
    std::vector<double> trace(60);
    size_t required = 0;
    CHECK(lop_result_trace(r1, trace.data(), trace.size(), &required) == LOP_OK);
    CHECK(trace.back() == best);
    std::vector<uint32_t> perm(8);
    CHECK(lop_result_permutation(r1, perm.data(), perm.size(), &required) == LOP_OK);
    lop_objective(inst, perm.data(), 8, &check);
    CHECK(check == best);
    lop_result_free(r1);
    lop_result_free(r2);

    params.rho = 1.5;
    lop_run_result* r3 = nullptr;
    CHECK(lop_solve(inst, &params, 1, &r3) == LOP_ERR_INVALID_ARGUMENT);
    params.rho = 0.1;
    params.algorithm = 7;
    CHECK(lop_solve(inst, &params, 1, &r3) == LOP_ERR_INVALID_ARGUMENT);
    lop_instance_free(inst);

    lop_instance* big = nullptr;
    REQUIRE(lop_instance_generate(11, 0, 9, 1, &big) == LOP_OK);
    CHECK(lop_oracle(big, &best, nullptr, 0) == LOP_ERR_SIZE_LIMIT);
    lop_instance_free(big);

    double dev = 0;
    CHECK(lop_deviation(0, 197652, &dev) == LOP_OK);
    CHECK(dev == 1.0);
    CHECK(lop_deviation(1, 0, &dev) == LOP_ERR_INVALID_ARGUMENT);
}

TEST_CASE("benchmark through handles") {
    char path[] = "/tmp/lopant_capi_XXXXXX.mat";
    const int fd = mkstemps(path, 4);
    REQUIRE(fd >= 0);
    close(fd);
    lop_instance* inst = nullptr;
    REQUIRE(lop_instance_generate(7, 0, 99, 3, &inst) == LOP_OK);
    REQUIRE(lop_instance_save(inst, path) == LOP_OK);
    double opt = 0;
    REQUIRE(lop_oracle(inst, &opt, nullptr, 0) == LOP_OK);

    lop_bench_config* cfg = nullptr;
    REQUIRE(lop_bench_config_new(&cfg) == LOP_OK);
    CHECK(lop_bench_config_add_instance(cfg, path, 1, opt) == LOP_OK);
    CHECK(lop_bench_config_add_instance(cfg, "/nonexistent/x.mat", 0, 0) == LOP_OK);
    const int algos[] = {LOP_ALGO_ACS_IM, LOP_ALGO_SB_SAM};
    CHECK(lop_bench_config_set_algorithms(cfg, algos, 2) == LOP_OK);
    CHECK(lop_bench_config_set_runs(cfg, 2) == LOP_OK);
    CHECK(lop_bench_config_set_runs(cfg, 0) == LOP_ERR_INVALID_ARGUMENT);
    CHECK(lop_bench_config_set_seed(cfg, 5) == LOP_OK);
    lop_params params;
    lop_params_default(&params);
    params.iterations = 20;
    CHECK(lop_bench_config_set_params(cfg, &params) == LOP_OK);

    lop_bench_report* report = nullptr;
    REQUIRE(lop_bench_run(cfg, &report) == LOP_OK);
    CHECK(lop_bench_report_failure_count(report) == 1);
    CHECK(std::string(lop_bench_report_failure(report, 0)).find("x.mat") != std::string::npos);
    CHECK(lop_bench_report_run_count(report) == 4);
    double value = 0, dev = 0;
    CHECK(lop_bench_report_run_value(report, 0, &value, &dev) == LOP_OK);
    CHECK(value == opt);
    CHECK(dev == 0.0);
    size_t required = 0;
    lop_bench_report_csv(report, 0, nullptr, 0, &required);
    std::vector<char> csv(required);
    CHECK(lop_bench_report_csv(report, 0, csv.data(), csv.size(), &required) == LOP_OK);
    CHECK(std::string(csv.data()).find("acs-im,1,5,") != std::string::npos);
    lop_bench_report_free(report);
    lop_bench_config_free(cfg);
    lop_instance_free(inst);
    std::remove(path);
}
