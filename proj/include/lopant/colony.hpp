#pragma once

// Ant colony engine for the LOP: the ACS transition and pheromone rules,
// sensitivity gating with step-back (SB-SAM), and the two run drivers.
//
// Pheromone lives on directed edges: tau(i, j) is the desirability of
// placing j immediately after i in the ordering under construction.

#include "lopant/lop_core.hpp"

#include <cstdint>
#include <optional>
#include <random>
#include <string_view>
#include <vector>

namespace lopant {

enum class Algorithm { AcsIm, SbSam };

std::string_view to_string(Algorithm algorithm) noexcept;
/// Accepts "acs-im" / "sb-sam" (case-insensitive, '_' allowed for '-').
std::optional<Algorithm> parse_algorithm(std::string_view text);

struct ColonyParams {
    double alpha = 1.0;
    double beta = 2.0;
    double tau0 = 0.1;
    double rho = 0.1;
    double q0 = 0.5;
    std::size_t ants = 10;
    std::size_t iterations = 200;
    double tau_min = 0.001;
    Algorithm algorithm = Algorithm::SbSam;
    /// Insert-search pass budget per tour; 0 selects n * n.
    std::size_t max_ls_passes = 0;
    /// Multiplier on the rho / C_bs global deposit. 1 reproduces the plain rule.
    double deposit_scale = 1.0;
    /// When set, every ant gets this sensitivity and no PSL draws are made.
    std::optional<double> fixed_psl;

    /// Throws LopError(InvalidArgument) on any out-of-range field.
    void validate() const;
};

class PheromoneMatrix {
public:
    PheromoneMatrix(std::size_t n, double initial, double floor);

    std::size_t size() const noexcept { return n_; }
    double floor() const noexcept { return floor_; }
    double operator()(Node i, Node j) const noexcept { return tau_[i * n_ + j]; }
    /// Stores max(value, floor).
    void set(Node i, Node j, double value) noexcept;
    double min_entry() const noexcept;
    const std::vector<double>& values() const noexcept { return tau_; }

private:
    std::size_t n_;
    double floor_;
    std::vector<double> tau_;
};

PheromoneMatrix init_pheromone(std::size_t n, const ColonyParams& params);

using Rng = std::mt19937_64;

/// Uniform double in [0, 1) from the top 53 bits of one generator output.
double uniform01(Rng& rng) noexcept;

/// Construction-time state of one ant.
struct Ant {
    double psl = 1.0;
    std::vector<Node> tour;
    std::vector<bool> visited;
    /// Nodes excluded at the current decision point after a step back.
    std::vector<bool> blocked;
    /// False right after a step back: the next forward move is then final.
    bool resumed_after_step_back = false;
    /// Whether the most recent forward move may still be retracted.
    bool last_move_retractable = false;
    std::size_t step_backs = 0;

    explicit Ant(std::size_t n, double psl = 1.0);

    void reset(Node start);
    Node current() const noexcept { return tour.back(); }
    std::optional<Node> previous() const noexcept;
    bool eligible(Node v) const noexcept { return !visited[v] && !blocked[v]; }
};

/// eta(current, candidate) = 1 + min(1, max(0, w(c, v) - w(v, c)) / max|w|),
/// or 1 when the matrix is all zeros. Always in [1, 2].
double heuristic_value(const Instance& instance, const Ant& ant, Node candidate);

struct Candidate {
    Node node;
    double probability;
};

/// ACS proportional probabilities over the unvisited, unblocked nodes, in
/// ascending node order. Throws LopError(NoCandidate) if there are none.
std::vector<Candidate> transition_probabilities(const Instance& instance,
                                                const PheromoneMatrix& tau, const Ant& ant,
                                                const ColonyParams& params);

/// Pseudo-random-proportional rule: with probability q0 the best-scoring
/// candidate (smallest index on ties), otherwise a proportional draw.
/// Consumes one draw for q, plus one more when sampling.
Node acs_select(const Instance& instance, const PheromoneMatrix& tau, const Ant& ant,
                const ColonyParams& params, Rng& rng);

enum class GateOutcome { Normal, Virtual };

/// Normal with probability psl, Virtual otherwise. Consumes exactly one draw.
GateOutcome sam_gate(const Ant& ant, Rng& rng);

/// tau(i, j) <- (1 - rho) tau(i, j) + rho tau0.
void local_update(PheromoneMatrix& tau, Node i, Node j, const ColonyParams& params);

/// Penalty on the retracted edge: tau(prev, cur) <- (1 - rho) tau(prev, cur) - rho tau0.
void step_back_update(PheromoneMatrix& tau, Node prev, Node cur, const ColonyParams& params);

/// tau <- (1 - rho) tau + rho / C_bs on the n - 1 consecutive edges of `best`.
/// With best_value <= 0 only evaporation is applied and false is returned.
bool global_update(PheromoneMatrix& tau, const Permutation& best, Weight best_value,
                   const ColonyParams& params);

/// Builds a full ordering starting from ant.tour (which must hold exactly
/// the start node). Every decision with a retractable last move and at least
/// two candidates draws one gate value in both algorithms; only SB-SAM acts
/// on a Virtual outcome, so ACS-IM and SB-SAM with psl = 1 build the same tour.
Permutation construct_tour(const Instance& instance, PheromoneMatrix& tau, Ant& ant,
                           const ColonyParams& params, Rng& rng);

struct RunResult {
    Weight best_value = 0.0;
    Permutation best_perm;
    std::vector<Weight> iteration_best_trace;
    std::uint64_t seed = 0;
    std::size_t step_backs = 0;

    friend bool operator==(const RunResult&, const RunResult&) = default;
};

/// Greedy seed, then `iterations` colony iterations of m ants, each tour
/// polished by insert-move search, followed by a global update on the
/// best-so-far ordering.
RunResult run(const Instance& instance, const ColonyParams& params, std::uint64_t seed);

} // namespace lopant
