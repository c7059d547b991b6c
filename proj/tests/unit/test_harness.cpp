#include "lopant/harness.hpp"
#include "lopant/instance_io.hpp"

#include "../support/oracles.hpp"

#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <numeric>
#include <random>
#include <sstream>

#include <unistd.h>

using namespace lopant;
namespace fs = std::filesystem;

namespace {

struct TempDir {
    fs::path path;
    explicit TempDir(const std::string& tag) {
        path = fs::temp_directory_path() / ("lopant_" + tag + "_" + std::to_string(::getpid()));
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
};

void write_text(const fs::path& p, const std::string& text) {
    std::ofstream(p) << text;
}

std::vector<DeviationRow> rows_for(Algorithm a, const std::string& prefix,
                                   const std::vector<double>& devs) {
    std::vector<DeviationRow> rows;
    for (std::size_t i = 0; i < devs.size(); ++i) {
        rows.push_back({prefix + char('a' + i), 0, a, devs[i]});
    }
    return rows;
}

} // namespace

TEST_SUITE("harness") {

TEST_CASE("deviation") {
    CHECK(deviation(197652, 197652) == 0.0);
    CHECK(deviation(0, 197652) == 1.0);
    CHECK(deviation(150, 200) == 0.25);
    CHECK_THROWS_AS(deviation(1, 0), LopError);
    CHECK_THROWS_AS(deviation(1, -5), LopError);
}

TEST_CASE("size from name") {
    CHECK(size_from_name("r100a2") == 100u);
    CHECK(size_from_name("r250e0") == 250u);
    CHECK_FALSE(size_from_name("random").has_value());
}

TEST_CASE("aggregate") {
    CHECK(aggregate({}).by_size.empty());

    const std::vector<DeviationRow> single{{"r100a2", 100, Algorithm::AcsIm, 0.003448}};
    const auto one = aggregate(single);
    REQUIRE(one.by_size.size() == 1);
    CHECK(one.by_size[0].mean_percent == doctest::Approx(0.3448).epsilon(1e-12));
    CHECK(one.overall_percent.at(Algorithm::AcsIm) == doctest::Approx(0.3448).epsilon(1e-12));

    // published size-100 ACS-IM column: sum 0.0172, mean 0.00344
    const auto acs = aggregate(rows_for(Algorithm::AcsIm, "r100", {0.0023, 0.0046, 0.0032, 0.0047, 0.0024}));
    CHECK(acs.by_size[0].mean_percent == doctest::Approx(0.344).epsilon(1e-12));

    const auto sam = aggregate(rows_for(
        Algorithm::SbSam, "r200",
        {0.0011, 0.0015, 0.0012, 0.0001, 0.0012, 0.0001, 0.0015, 0.0014, 0.0007, 0.0010}));
    CHECK(sam.by_size[0].mean_percent == doctest::Approx(0.098).epsilon(1e-12));
    CHECK(sam.by_size[0].count == 10);

    // rows without a size in the name fall back to n
    const std::vector<DeviationRow> unnamed{{"x", 7, Algorithm::SbSam, 0.01},
                                            {"y", 7, Algorithm::SbSam, 0.03},
                                            {"z", 9, Algorithm::SbSam, 0.0}};
    const auto fallback = aggregate(unnamed);
    REQUIRE(fallback.by_size.size() == 2);
    CHECK(fallback.by_size[0].size == 7);
    CHECK(fallback.by_size[0].mean_percent == doctest::Approx(2.0));
    CHECK(fallback.overall_percent.at(Algorithm::SbSam) == doctest::Approx(1.0));
}

TEST_CASE("brute-force oracle") {
    const auto two = brute_force_optimal(Instance::from_rows({{0, 5}, {3, 0}}));
    CHECK(two.value == 5.0);
    CHECK(two.perm.to_one_based() == std::vector<std::uint32_t>{1, 2});

    const auto one = brute_force_optimal(Instance(1, {0.0}));
    CHECK(one.value == 0.0);
    CHECK(one.perm == Permutation::identity(1));

    // all-zero matrix: every ordering ties, identity is lexicographically first
    CHECK(brute_force_optimal(Instance(4, std::vector<Weight>(16, 0.0))).perm ==
          Permutation::identity(4));

    std::mt19937_64 rng(61);
    const Instance six = oracle::random_instance(6, rng);
    const auto best = brute_force_optimal(six);
    CHECK(best.value == objective(six, best.perm));
    for (int rep = 0; rep < 1000; ++rep) {
        CHECK(best.value >= objective(six, Permutation(oracle::random_order(6, rng))));
    }

    for (std::size_t n = 2; n <= 9; ++n) {
        const Instance inst = oracle::random_instance(n, rng);
        CHECK(brute_force_optimal(inst).value == oracle::subset_dp_optimum(inst));
    }

    try {
        brute_force_optimal(oracle::random_instance(11, rng));
        FAIL("expected a size-limit error");
    } catch (const LopError& e) {
        CHECK(e.code() == ErrorCode::SizeLimit);
    }
}

TEST_CASE("optima sidecar") {
    const auto table = parse_optima("# MBLIB optima\nr100a2 197652\n\n  r150a0\t550666\n");
    CHECK(table.size() == 2);
    CHECK(table.at("r100a2") == 197652.0);
    CHECK(table.at("r150a0") == 550666.0);
    CHECK_THROWS_AS(parse_optima("r100a2\n"), ParseError);
    CHECK_THROWS_AS(parse_optima("r100a2 lots\n"), ParseError);
}

TEST_CASE("benchmark config JSON") {
    const auto cfg = parse_benchmark_config(R"({
        "instances": ["a.mat", {"path": "/abs/b.mat", "optimum": 42}],
        "algorithms": ["sb-sam"], "runs": 3, "iterations": 17, "ants": 4,
        "seed": 9, "q0": 0.7, "optima": {"a": 11}, "out": "r.csv", "threads": 2
    })", "/base");
    REQUIRE(cfg.instances.size() == 2);
    CHECK(cfg.instances[0].path == fs::path("/base/a.mat"));
    CHECK(cfg.instances[1].path == fs::path("/abs/b.mat"));
    CHECK(cfg.instances[1].optimum == 42.0);
    CHECK(cfg.algorithms == std::vector<Algorithm>{Algorithm::SbSam});
    CHECK(cfg.runs == 3);
    CHECK(cfg.params.iterations == 17);
    CHECK(cfg.params.ants == 4);
    CHECK(cfg.params.q0 == 0.7);
    CHECK(cfg.base_seed == 9);
    CHECK(cfg.optima.at("a") == 11.0);
    CHECK(cfg.output == fs::path("/base/r.csv"));
    CHECK(cfg.threads == 2);

    CHECK_THROWS_AS(parse_benchmark_config("{\"algorithms\": [\"ga\"]}"), LopError);
    CHECK_THROWS_AS(parse_benchmark_config("{\"runs\": 0}"), LopError);
    CHECK_THROWS_AS(parse_benchmark_config("[1, 2"), LopError);
}

TEST_CASE("run_benchmark: single run on n = 1") {
    TempDir dir("bench1");
    write_instance_file(Instance(1, {0.0}), dir.path / "unit.mat");
    BenchmarkConfig cfg;
    cfg.instances.push_back({dir.path / "unit.mat", 0.0});
    cfg.algorithms = {Algorithm::SbSam};
    cfg.runs = 1;
    cfg.params.iterations = 3;
    const auto report = run_benchmark(cfg);
    REQUIRE(report.runs.size() == 1);
    CHECK(report.runs[0].deviation == 0.0);
}

TEST_CASE("run_benchmark: report layout, failures and determinism") {
    TempDir dir("bench2");
    write_instance_file(generate_random_instance(9, 0, 99, 1), dir.path / "r9a.mat");
    write_instance_file(generate_random_instance(10, 0, 99, 2), dir.path / "r10b.mat");
    const Instance a = read_instance_file(dir.path / "r9a.mat");

    BenchmarkConfig cfg;
    cfg.instances = {{dir.path / "r9a.mat", {}},
                     {dir.path / "missing.mat", {}},
                     {dir.path / "r10b.mat", {}}};
    cfg.runs = 2;
    cfg.params.iterations = 15;
    cfg.base_seed = 40;
    cfg.optima["r9a"] = brute_force_optimal(a).value;

    const auto report = run_benchmark(cfg);
    REQUIRE(report.failures.size() == 1);
    CHECK(report.failures[0].code == ErrorCode::Io);
    REQUIRE(report.runs.size() == 2 * 2 * 2);
    CHECK(report.runs[0].instance == "r9a");
    CHECK(report.runs[0].algorithm == Algorithm::AcsIm);
    CHECK(report.runs[1].seed == 41);
    CHECK(report.runs[2].algorithm == Algorithm::SbSam);
    CHECK(report.runs[0].deviation.has_value());
    CHECK_FALSE(report.runs[4].deviation.has_value());
    CHECK(report.rows.size() == 4);
    CHECK(report.rows[2].mean_deviation == std::nullopt);

    const std::string csv = to_csv(report, false);
    CHECK(csv.rfind("instance,algorithm,run,seed,best_value,optimum,deviation,iterations,seconds\n", 0) == 0);
    std::istringstream lines(csv);
    std::string header, first, fifth;
    std::getline(lines, header);
    std::getline(lines, first);
    for (int i = 0; i < 4; ++i) std::getline(lines, fifth);
    CHECK(first.rfind("r9a,acs-im,1,40,", 0) == 0);
    CHECK(first.find(",15,") != std::string::npos);
    CHECK(first.back() == ',');
    // deviation has six decimals
    const auto dev_field = first.substr(0, first.rfind(",15,"));
    CHECK(dev_field.substr(dev_field.rfind(',') + 1).size() == 8);
    CHECK(fifth.rfind("r10b,acs-im,1,40,", 0) == 0);
    CHECK(fifth.find(",,,15,") != std::string::npos);

    CHECK(to_csv(run_benchmark(cfg), false) == csv);
    BenchmarkConfig threaded = cfg;
    threaded.threads = 4;
    CHECK(to_csv(run_benchmark(threaded), false) == csv);
    CHECK(to_csv(report, true).find(",,,15,,") == std::string::npos);
    CHECK_FALSE(format_summary(report).empty());
}

TEST_CASE("run_benchmark: oracle-optimal small instances") {
    TempDir dir("bench3");
    BenchmarkConfig cfg;
    cfg.runs = 1;
    for (int i = 0; i < 20; ++i) {
        const auto path = dir.path / ("n8_" + std::to_string(i) + ".mat");
        const Instance inst = generate_random_instance(8, 0, 99, 500 + i);
        write_instance_file(inst, path);
        cfg.instances.push_back({path, brute_force_optimal(inst).value});
    }
    const auto report = run_benchmark(cfg);
    double sum = 0.0;
    for (const auto& row : report.rows) sum += *row.mean_deviation;
    CHECK(sum / report.rows.size() <= 0.01);
}

} // TEST_SUITE
