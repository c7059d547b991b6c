#include "lopant/harness.hpp"

#include "lopant/instance_io.hpp"

#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <cctype>
#include <charconv>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

namespace lopant {

double deviation(Weight found, Weight optimal) {
    if (!(optimal > 0.0)) {
        throw invalid_argument("deviation needs a positive optimum");
    }
    return (optimal - found) / optimal;
}

std::optional<std::size_t> size_from_name(std::string_view name) {
    const auto first = std::find_if(name.begin(), name.end(),
                                    [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
    if (first == name.end()) {
        return std::nullopt;
    }
    std::size_t value = 0;
    auto [ptr, ec] = std::from_chars(&*first, name.data() + name.size(), value);
    if (ec != std::errc{}) {
        return std::nullopt;
    }
    return value;
}

AggregateSummary aggregate(std::span<const DeviationRow> rows) {
    struct Acc {
        double sum = 0.0;
        std::size_t count = 0;
    };
    std::map<std::pair<Algorithm, std::size_t>, Acc> groups;
    for (const auto& row : rows) {
        const std::size_t size = size_from_name(row.instance).value_or(row.n);
        auto& acc = groups[{row.algorithm, size}];
        acc.sum += row.deviation;
        ++acc.count;
    }

    AggregateSummary summary;
    std::map<Algorithm, std::pair<double, std::size_t>> overall;
    for (const auto& [key, acc] : groups) {
        const double mean_percent = acc.sum / static_cast<double>(acc.count) * 100.0;
        summary.by_size.push_back({key.first, key.second, acc.count, mean_percent});
        auto& o = overall[key.first];
        o.first += mean_percent;
        ++o.second;
    }
    for (const auto& [algorithm, o] : overall) {
        summary.overall_percent[algorithm] = o.first / static_cast<double>(o.second);
    }
    return summary;
}

OracleResult brute_force_optimal(const Instance& instance) {
    const std::size_t n = instance.size();
    if (n > kOracleMaxSize) {
        throw LopError(ErrorCode::SizeLimit,
                       "brute-force oracle is limited to n <= " +
                           std::to_string(kOracleMaxSize) + ", got n = " + std::to_string(n));
    }
    const Permutation start = Permutation::identity(n);
    std::vector<Node> order(start.order().begin(), start.order().end());
    std::vector<Node> best_order = order;
    Weight best = objective(instance, start);
    while (std::next_permutation(order.begin(), order.end())) {
        Weight value = 0.0;
        for (std::size_t i = 0; i + 1 < n; ++i) {
            for (std::size_t j = i + 1; j < n; ++j) {
                value += instance(order[i], order[j]);
            }
        }
        if (value > best) {
            best = value;
            best_order = order;
        }
    }
    return {best, Permutation(std::move(best_order), Permutation::Unchecked{})};
}

OptimaTable parse_optima(std::string_view text) {
    OptimaTable table;
    std::istringstream in{std::string(text)};
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream fields(line);
        std::string name;
        if (!(fields >> name) || name.front() == '#') {
            continue;
        }
        std::string value_text;
        double value = 0.0;
        if (!(fields >> value_text)) {
            throw ParseError(ErrorCode::Parse, "missing optimum for '" + name + "'", line_no, 1);
        }
        auto [ptr, ec] = std::from_chars(value_text.data(),
                                         value_text.data() + value_text.size(), value);
        if (ec != std::errc{} || ptr != value_text.data() + value_text.size()) {
            throw ParseError(ErrorCode::Parse, "invalid optimum '" + value_text + "'",
                             line_no, line.find(value_text) + 1);
        }
        table[name] = value;
    }
    return table;
}

OptimaTable read_optima_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw LopError(ErrorCode::Io, "cannot open optima file " + path.string());
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_optima(buffer.str());
}

void BenchmarkConfig::validate() const {
    if (runs < 1) throw invalid_argument("runs must be at least 1");
    if (algorithms.empty()) throw invalid_argument("no algorithm selected");
    if (threads < 1) throw invalid_argument("threads must be at least 1");
    params.validate();
}

namespace {

std::filesystem::path resolve(const std::filesystem::path& base, const std::string& p) {
    std::filesystem::path path(p);
    return path.is_absolute() || base.empty() ? path : base / path;
}

} // namespace

BenchmarkConfig parse_benchmark_config(std::string_view json_text,
                                       const std::filesystem::path& base_dir) {
    using nlohmann::json;
    BenchmarkConfig config;
    try {
        const json doc = json::parse(json_text);
        if (!doc.is_object()) {
            throw invalid_argument("benchmark config must be a JSON object");
        }
        for (const auto& entry : doc.value("instances", json::array())) {
            if (entry.is_string()) {
                config.instances.push_back({resolve(base_dir, entry.get<std::string>()), {}});
            } else {
                InstanceSpec spec{resolve(base_dir, entry.at("path").get<std::string>()), {}};
                if (entry.contains("optimum")) {
                    spec.optimum = entry.at("optimum").get<double>();
                }
                config.instances.push_back(std::move(spec));
            }
        }
        if (doc.contains("algorithms")) {
            config.algorithms.clear();
            for (const auto& a : doc.at("algorithms")) {
                const auto parsed = parse_algorithm(a.get<std::string>());
                if (!parsed) {
                    throw invalid_argument("unknown algorithm '" + a.get<std::string>() + "'");
                }
                config.algorithms.push_back(*parsed);
            }
        }
        ColonyParams& p = config.params;
        config.runs = doc.value("runs", config.runs);
        p.iterations = doc.value("iterations", p.iterations);
        p.ants = doc.value("ants", p.ants);
        config.base_seed = doc.value("seed", config.base_seed);
        p.alpha = doc.value("alpha", p.alpha);
        p.beta = doc.value("beta", p.beta);
        p.tau0 = doc.value("tau0", p.tau0);
        p.rho = doc.value("rho", p.rho);
        p.q0 = doc.value("q0", p.q0);
        p.tau_min = doc.value("tau_min", p.tau_min);
        p.max_ls_passes = doc.value("max_ls_passes", p.max_ls_passes);
        p.deposit_scale = doc.value("deposit_scale", p.deposit_scale);
        config.threads = doc.value("threads", config.threads);
        config.timing = doc.value("timing", config.timing);
        if (doc.contains("out")) {
            config.output = resolve(base_dir, doc.at("out").get<std::string>());
        }
        if (doc.contains("optima_file")) {
            config.optima =
                read_optima_file(resolve(base_dir, doc.at("optima_file").get<std::string>()));
        }
        if (doc.contains("optima")) {
            for (const auto& [name, value] : doc.at("optima").items()) {
                config.optima[name] = value.get<double>();
            }
        }
    } catch (const json::exception& e) {
        throw LopError(ErrorCode::Parse, std::string("benchmark config: ") + e.what());
    }
    config.validate();
    return config;
}

BenchmarkConfig read_benchmark_config(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw LopError(ErrorCode::Io, "cannot open benchmark config " + path.string());
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_benchmark_config(buffer.str(), path.parent_path());
}

BenchmarkReport run_benchmark(const BenchmarkConfig& config) {
    config.validate();
    BenchmarkReport report;

    struct Loaded {
        Instance instance;
        std::optional<Weight> optimum;
    };
    std::vector<Loaded> loaded;
    for (const auto& spec : config.instances) {
        try {
            std::vector<std::string> warnings;
            Instance instance = read_instance_file(spec.path, &warnings);
            for (const auto& w : warnings) {
                std::cerr << "warning: " << spec.path.string() << ": " << w << '\n';
            }
            std::optional<Weight> optimum = spec.optimum;
            if (!optimum) {
                if (auto it = config.optima.find(instance.name()); it != config.optima.end()) {
                    optimum = it->second;
                }
            }
            loaded.push_back({std::move(instance), optimum});
        } catch (const LopError& e) {
            report.failures.push_back({spec.path.string(), e.code(), e.what()});
        }
    }

    struct Task {
        std::size_t instance;
        Algorithm algorithm;
        std::size_t run;
    };
    std::vector<Task> tasks;
    for (std::size_t i = 0; i < loaded.size(); ++i) {
        for (Algorithm a : config.algorithms) {
            for (std::size_t r = 0; r < config.runs; ++r) {
                tasks.push_back({i, a, r});
            }
        }
    }

    report.runs.resize(tasks.size());
    auto execute = [&](std::size_t t) {
        const Task& task = tasks[t];
        const Loaded& item = loaded[task.instance];
        ColonyParams params = config.params;
        params.algorithm = task.algorithm;
        const std::uint64_t seed = config.base_seed + task.run;

        const auto started = std::chrono::steady_clock::now();
        const RunResult result = run(item.instance, params, seed);
        const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - started;

        RunRecord& rec = report.runs[t];
        rec.instance = item.instance.name();
        rec.n = item.instance.size();
        rec.algorithm = task.algorithm;
        rec.run = task.run;
        rec.seed = seed;
        rec.best_value = result.best_value;
        rec.best_perm = result.best_perm.to_one_based();
        rec.optimum = item.optimum;
        if (item.optimum) {
            if (result.best_value == *item.optimum) {
                rec.deviation = 0.0;
            } else if (*item.optimum > 0.0) {
                rec.deviation = deviation(result.best_value, *item.optimum);
            }
        }
        rec.iterations = params.iterations;
        rec.seconds = elapsed.count();
    };

    const std::size_t workers = std::min(config.threads, std::max<std::size_t>(tasks.size(), 1));
    if (workers <= 1) {
        for (std::size_t t = 0; t < tasks.size(); ++t) execute(t);
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::jthread> pool;
        for (std::size_t w = 0; w < workers; ++w) {
            pool.emplace_back([&] {
                for (std::size_t t = next++; t < tasks.size(); t = next++) execute(t);
            });
        }
    }

    std::vector<DeviationRow> deviations;
    for (std::size_t start = 0; start < report.runs.size(); start += config.runs) {
        SummaryRow row;
        const RunRecord& first = report.runs[start];
        row.instance = first.instance;
        row.n = first.n;
        row.algorithm = first.algorithm;
        double dev_sum = 0.0;
        bool all_dev = true;
        for (std::size_t r = 0; r < config.runs; ++r) {
            const RunRecord& rec = report.runs[start + r];
            row.best_values.push_back(rec.best_value);
            row.mean_seconds += rec.seconds;
            if (rec.deviation) {
                dev_sum += *rec.deviation;
            } else {
                all_dev = false;
            }
        }
        row.mean_seconds /= static_cast<double>(config.runs);
        if (all_dev) {
            row.mean_deviation = dev_sum / static_cast<double>(config.runs);
            deviations.push_back({row.instance, row.n, row.algorithm, *row.mean_deviation});
        }
        report.rows.push_back(std::move(row));
    }
    report.aggregates = aggregate(deviations);
    return report;
}

namespace {

std::string shortest(double v) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, ptr);
}

std::string fixed(double v, int digits) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", digits, v);
    return buf;
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) {
        return s;
    }
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + '"';
}

} // namespace

std::string to_csv(const BenchmarkReport& report, bool include_timing) {
    std::string out =
        "instance,algorithm,run,seed,best_value,optimum,deviation,iterations,seconds\n";
    for (const auto& rec : report.runs) {
        out += csv_field(rec.instance);
        out += ',';
        out += to_string(rec.algorithm);
        out += ',' + std::to_string(rec.run + 1);
        out += ',' + std::to_string(rec.seed);
        out += ',' + shortest(rec.best_value);
        out += ',' + (rec.optimum ? shortest(*rec.optimum) : std::string());
        out += ',' + (rec.deviation ? fixed(*rec.deviation, 6) : std::string());
        out += ',' + std::to_string(rec.iterations);
        out += ',' + (include_timing ? fixed(rec.seconds, 6) : std::string());
        out += '\n';
    }
    return out;
}

std::string format_summary(const BenchmarkReport& report) {
    std::ostringstream out;
    for (const auto& row : report.rows) {
        out << row.instance << " (n=" << row.n << ") " << to_string(row.algorithm) << ": best";
        for (Weight v : row.best_values) out << ' ' << shortest(v);
        if (row.mean_deviation) {
            out << ", mean deviation " << fixed(*row.mean_deviation, 6) << " ("
                << fixed(*row.mean_deviation * 100.0, 3) << "%)";
        }
        out << ", mean time " << fixed(row.mean_seconds, 3) << "s\n";
    }
    for (const auto& agg : report.aggregates.by_size) {
        out << "size " << agg.size << ' ' << to_string(agg.algorithm) << ": "
            << fixed(agg.mean_percent, 3) << "% over " << agg.count << " instance(s)\n";
    }
    for (const auto& [algorithm, pct] : report.aggregates.overall_percent) {
        out << "average " << to_string(algorithm) << ": " << fixed(pct, 3) << "%\n";
    }
    for (const auto& f : report.failures) {
        out << "error: " << f.message << '\n';
    }
    return out.str();
}

} // namespace lopant
