#pragma once

// Benchmark harness: replicate runs, deviation-from-optimum statistics,
// per-size aggregation, the CSV report and a brute-force oracle.

#include "lopant/colony.hpp"
#include "lopant/errors.hpp"
#include "lopant/lop_core.hpp"

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace lopant {

/// (optimal - found) / optimal. Throws LopError(InvalidArgument) if optimal <= 0.
double deviation(Weight found, Weight optimal);

struct DeviationRow {
    std::string instance;
    std::size_t n = 0;
    Algorithm algorithm = Algorithm::SbSam;
    double deviation = 0.0; ///< fraction, not percent
};

struct SizeAggregate {
    Algorithm algorithm;
    std::size_t size;
    std::size_t count;
    double mean_percent;
};

struct AggregateSummary {
    std::vector<SizeAggregate> by_size; ///< ordered by (algorithm, size)
    /// Per algorithm: the unweighted mean of its per-size means, in percent.
    std::map<Algorithm, double> overall_percent;
};

/// Leading digit run of an instance name ("r150b1" -> 150), if any.
std::optional<std::size_t> size_from_name(std::string_view name);

/// Groups rows by algorithm and instance size (from the name, falling back
/// to n) and averages their deviations, reported in percent.
AggregateSummary aggregate(std::span<const DeviationRow> rows);

inline constexpr std::size_t kOracleMaxSize = 10;

struct OracleResult {
    Weight value = 0.0;
    Permutation perm;
};

/// Exhaustive search over all n! orderings; the lexicographically smallest
/// maximiser wins ties. Throws LopError(SizeLimit) above kOracleMaxSize.
OracleResult brute_force_optimal(const Instance& instance);

using OptimaTable = std::map<std::string, Weight, std::less<>>;

/// "name value" per line; blank lines and lines starting with '#' are skipped.
OptimaTable parse_optima(std::string_view text);
OptimaTable read_optima_file(const std::filesystem::path& path);

struct InstanceSpec {
    std::filesystem::path path;
    std::optional<Weight> optimum; ///< overrides the optima table
};

struct BenchmarkConfig {
    std::vector<InstanceSpec> instances;
    std::vector<Algorithm> algorithms{Algorithm::AcsIm, Algorithm::SbSam};
    std::size_t runs = 5;
    ColonyParams params; ///< params.algorithm is overridden per row
    std::uint64_t base_seed = 0;
    OptimaTable optima;
    std::size_t threads = 1;
    /// CSV destination used by the CLI; empty means standard output.
    std::filesystem::path output;
    bool timing = false;

    void validate() const;
};

/// JSON batch configuration. Relative paths resolve against base_dir.
///
///     {
///       "instances": ["r100a2.mat", {"path": "x.mat", "optimum": 1234}],
///       "algorithms": ["acs-im", "sb-sam"],
///       "runs": 5, "iterations": 200, "ants": 10, "seed": 1,
///       "alpha": 1, "beta": 2, "tau0": 0.1, "rho": 0.1, "q0": 0.5,
///       "tau_min": 0.001, "max_ls_passes": 0, "deposit_scale": 1,
///       "optima_file": "optima.txt", "optima": {"r100a2": 197652},
///       "threads": 1, "out": "report.csv", "timing": false
///     }
BenchmarkConfig parse_benchmark_config(std::string_view json_text,
                                       const std::filesystem::path& base_dir = {});
BenchmarkConfig read_benchmark_config(const std::filesystem::path& path);

struct RunRecord {
    std::string instance;
    std::size_t n = 0;
    Algorithm algorithm = Algorithm::SbSam;
    std::size_t run = 0;
    std::uint64_t seed = 0;
    Weight best_value = 0.0;
    std::vector<std::uint32_t> best_perm; ///< 1-based labels
    std::optional<Weight> optimum;
    std::optional<double> deviation;
    std::size_t iterations = 0;
    double seconds = 0.0;
};

struct SummaryRow {
    std::string instance;
    std::size_t n = 0;
    Algorithm algorithm = Algorithm::SbSam;
    std::optional<double> mean_deviation;
    std::vector<Weight> best_values;
    double mean_seconds = 0.0;
};

struct InstanceFailure {
    std::string path;
    ErrorCode code;
    std::string message;
};

struct BenchmarkReport {
    std::vector<RunRecord> runs;  ///< ordered by (instance, algorithm, run)
    std::vector<SummaryRow> rows; ///< ordered by (instance, algorithm)
    AggregateSummary aggregates;
    std::vector<InstanceFailure> failures;
};

/// Runs every instance x algorithm `runs` times with seeds base_seed + run.
/// Unreadable instances are recorded in `failures` and skipped.
BenchmarkReport run_benchmark(const BenchmarkConfig& config);

/// Columns: instance, algorithm, run, seed, best_value, optimum, deviation,
/// iterations, seconds. Seconds are left empty unless include_timing is set,
/// which keeps the report a pure function of the configuration.
std::string to_csv(const BenchmarkReport& report, bool include_timing);

/// Human-readable per-instance means and per-size aggregates.
std::string format_summary(const BenchmarkReport& report);

} // namespace lopant
