#include "lopant/colony.hpp"

#include "lopant/construction.hpp"
#include "lopant/errors.hpp"
#include "lopant/local_search.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <iostream>
#include <string>

namespace lopant {

std::string_view to_string(Algorithm algorithm) noexcept {
    switch (algorithm) {
    case Algorithm::AcsIm: return "acs-im";
    case Algorithm::SbSam: return "sb-sam";
    }
    return "unknown";
}

std::optional<Algorithm> parse_algorithm(std::string_view text) {
    std::string norm;
    for (char c : text) {
        norm += c == '_' ? '-' : static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    }
    if (norm == "acs-im") return Algorithm::AcsIm;
    if (norm == "sb-sam") return Algorithm::SbSam;
    return std::nullopt;
}

void ColonyParams::validate() const {
    auto fail = [](const std::string& what) { throw invalid_argument(what); };
    if (!(rho > 0.0 && rho < 1.0)) fail("rho must lie in (0, 1)");
    if (!(q0 >= 0.0 && q0 <= 1.0)) fail("q0 must lie in [0, 1]");
    if (!(tau0 > 0.0)) fail("tau0 must be positive");
    if (!(tau_min > 0.0 && tau_min <= tau0)) fail("tau_min must lie in (0, tau0]");
    if (ants < 1) fail("ant count must be at least 1");
    if (iterations < 1) fail("iteration count must be at least 1");
    if (!std::isfinite(alpha) || !std::isfinite(beta)) fail("alpha and beta must be finite");
    if (!(deposit_scale >= 0.0) || !std::isfinite(deposit_scale)) {
        fail("deposit scale must be a finite non-negative number");
    }
    if (fixed_psl && !(*fixed_psl >= 0.0 && *fixed_psl <= 1.0)) {
        fail("fixed PSL must lie in [0, 1]");
    }
}

PheromoneMatrix::PheromoneMatrix(std::size_t n, double initial, double floor)
    : n_(n), floor_(floor), tau_(n * n, std::max(initial, floor)) {}

void PheromoneMatrix::set(Node i, Node j, double value) noexcept {
    tau_[i * n_ + j] = std::max(value, floor_);
}

double PheromoneMatrix::min_entry() const noexcept {
    return tau_.empty() ? floor_ : *std::min_element(tau_.begin(), tau_.end());
}

PheromoneMatrix init_pheromone(std::size_t n, const ColonyParams& params) {
    return PheromoneMatrix(n, params.tau0, params.tau_min);
}

double uniform01(Rng& rng) noexcept {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

Ant::Ant(std::size_t n, double psl_) : psl(psl_), visited(n, false), blocked(n, false) {
    tour.reserve(n);
}

void Ant::reset(Node start) {
    tour.assign(1, start);
    std::fill(visited.begin(), visited.end(), false);
    std::fill(blocked.begin(), blocked.end(), false);
    visited[start] = true;
    resumed_after_step_back = false;
    last_move_retractable = false;
    step_backs = 0;
}

std::optional<Node> Ant::previous() const noexcept {
    if (tour.size() < 2) return std::nullopt;
    return tour[tour.size() - 2];
}

double heuristic_value(const Instance& instance, const Ant& ant, Node candidate) {
    const Weight scale = instance.max_abs_weight();
    if (scale <= 0.0) {
        return 1.0;
    }
    const Node from = ant.current();
    const Weight advantage = instance(from, candidate) - instance(candidate, from);
    return 1.0 + std::min(1.0, std::max(0.0, advantage) / scale);
}

namespace {

double score(const Instance& instance, const PheromoneMatrix& tau, const Ant& ant,
             const ColonyParams& params, Node v) {
    const double t = tau(ant.current(), v);
    const double eta = heuristic_value(instance, ant, v);
    const double ta = params.alpha == 1.0 ? t : std::pow(t, params.alpha);
    const double eb = params.beta == 2.0 ? eta * eta : std::pow(eta, params.beta);
    return ta * eb;
}

std::size_t count_eligible(const Ant& ant) {
    std::size_t count = 0;
    for (Node v = 0; v < ant.visited.size(); ++v) {
        count += ant.eligible(v) ? 1 : 0;
    }
    return count;
}

Node first_eligible(const Ant& ant) {
    for (Node v = 0; v < ant.visited.size(); ++v) {
        if (ant.eligible(v)) return v;
    }
    throw LopError(ErrorCode::NoCandidate, "no candidate node left");
}

void move_forward(PheromoneMatrix& tau, Ant& ant, Node next, const ColonyParams& params) {
    const Node from = ant.current();
    ant.tour.push_back(next);
    ant.visited[next] = true;
    local_update(tau, from, next, params);
    std::fill(ant.blocked.begin(), ant.blocked.end(), false);
    ant.last_move_retractable = !ant.resumed_after_step_back;
    ant.resumed_after_step_back = false;
}

void step_back(PheromoneMatrix& tau, Ant& ant, const ColonyParams& params) {
    const Node cur = ant.current();
    ant.tour.pop_back();
    const Node prev = ant.current();
    ant.visited[cur] = false;
    std::fill(ant.blocked.begin(), ant.blocked.end(), false);
    ant.blocked[cur] = true;
    step_back_update(tau, prev, cur, params);
    ant.resumed_after_step_back = true;
    ant.last_move_retractable = false;
    ++ant.step_backs;
}

} // namespace

std::vector<Candidate> transition_probabilities(const Instance& instance,
                                                const PheromoneMatrix& tau, const Ant& ant,
                                                const ColonyParams& params) {
    std::vector<Candidate> out;
    double total = 0.0;
    for (Node v = 0; v < ant.visited.size(); ++v) {
        if (ant.eligible(v)) {
            const double s = score(instance, tau, ant, params, v);
            out.push_back({v, s});
            total += s;
        }
    }
    if (out.empty()) {
        throw LopError(ErrorCode::NoCandidate, "no unvisited, unblocked candidate node");
    }
    for (auto& c : out) {
        c.probability /= total;
    }
    return out;
}

Node acs_select(const Instance& instance, const PheromoneMatrix& tau, const Ant& ant,
                const ColonyParams& params, Rng& rng) {
    const double q = uniform01(rng);
    if (q < params.q0) {
        Node best = 0;
        double best_score = -1.0;
        bool any = false;
        for (Node v = 0; v < ant.visited.size(); ++v) {
            if (!ant.eligible(v)) continue;
            const double s = score(instance, tau, ant, params, v);
            if (!any || s > best_score) {
                best = v;
                best_score = s;
                any = true;
            }
        }
        if (!any) {
            throw LopError(ErrorCode::NoCandidate, "no unvisited, unblocked candidate node");
        }
        return best;
    }

    const auto candidates = transition_probabilities(instance, tau, ant, params);
    const double r = uniform01(rng);
    double cumulative = 0.0;
    for (const auto& c : candidates) {
        cumulative += c.probability;
        if (r < cumulative) {
            return c.node;
        }
    }
    return candidates.back().node;
}

GateOutcome sam_gate(const Ant& ant, Rng& rng) {
    return uniform01(rng) < ant.psl ? GateOutcome::Normal : GateOutcome::Virtual;
}

void local_update(PheromoneMatrix& tau, Node i, Node j, const ColonyParams& params) {
    tau.set(i, j, (1.0 - params.rho) * tau(i, j) + params.rho * params.tau0);
}

void step_back_update(PheromoneMatrix& tau, Node prev, Node cur, const ColonyParams& params) {
    tau.set(prev, cur, (1.0 - params.rho) * tau(prev, cur) - params.rho * params.tau0);
}

bool global_update(PheromoneMatrix& tau, const Permutation& best, Weight best_value,
                   const ColonyParams& params) {
    const bool deposit = best_value > 0.0;
    const double added = deposit ? params.rho * params.deposit_scale / best_value : 0.0;
    const auto order = best.order();
    for (std::size_t k = 0; k + 1 < order.size(); ++k) {
        const Node i = order[k];
        const Node j = order[k + 1];
        tau.set(i, j, (1.0 - params.rho) * tau(i, j) + added);
    }
    return deposit;
}

Permutation construct_tour(const Instance& instance, PheromoneMatrix& tau, Ant& ant,
                           const ColonyParams& params, Rng& rng) {
    const std::size_t n = instance.size();
    while (ant.tour.size() < n) {
        std::size_t eligible = count_eligible(ant);
        bool forced = false;
        if (eligible == 0) {
            std::fill(ant.blocked.begin(), ant.blocked.end(), false);
            eligible = count_eligible(ant);
            forced = true;
        }
        if (eligible == 1) {
            move_forward(tau, ant, first_eligible(ant), params);
            continue;
        }
        if (!forced && ant.last_move_retractable && ant.tour.size() >= 2) {
            const GateOutcome gate = sam_gate(ant, rng);
            if (params.algorithm == Algorithm::SbSam && gate == GateOutcome::Virtual) {
                step_back(tau, ant, params);
                continue;
            }
        }
        move_forward(tau, ant, acs_select(instance, tau, ant, params, rng), params);
    }
    return Permutation(ant.tour, Permutation::Unchecked{});
}

RunResult run(const Instance& instance, const ColonyParams& params, std::uint64_t seed) {
    params.validate();
    const std::size_t n = instance.size();
    const std::size_t passes =
        params.max_ls_passes > 0 ? params.max_ls_passes : default_max_passes(n);

    Rng rng(seed);
    PheromoneMatrix tau = init_pheromone(n, params);

    RunResult result;
    result.seed = seed;
    result.best_perm = greedy_initial(instance);
    result.best_value = objective(instance, result.best_perm);
    result.iteration_best_trace.reserve(params.iterations);

    std::vector<Ant> ants;
    ants.reserve(params.ants);
    for (std::size_t k = 0; k < params.ants; ++k) {
        double psl = 1.0;
        if (params.fixed_psl) {
            psl = *params.fixed_psl;
        } else if (params.algorithm == Algorithm::SbSam) {
            psl = uniform01(rng);
        }
        ants.emplace_back(n, psl);
    }

    std::uniform_int_distribution<Node> start_dist(0, static_cast<Node>(n - 1));
    bool warned = false;
    for (std::size_t it = 0; it < params.iterations; ++it) {
        for (Ant& ant : ants) {
            ant.reset(start_dist(rng));
            construct_tour(instance, tau, ant, params, rng);
            result.step_backs += ant.step_backs;
            std::vector<Node> order = ant.tour;
            detail::insert_move_search_inplace(instance, order, passes);
            Permutation candidate(std::move(order), Permutation::Unchecked{});
            const Weight value = objective(instance, candidate);
            if (value > result.best_value) {
                result.best_value = value;
                result.best_perm = std::move(candidate);
            }
        }
        if (!global_update(tau, result.best_perm, result.best_value, params) && n > 1 &&
            !warned) {
            std::cerr << "warning: best-so-far value " << result.best_value
                      << " is not positive; global update applies evaporation only\n";
            warned = true;
        }
        result.iteration_best_trace.push_back(result.best_value);
    }
    return result;
}

} // namespace lopant
