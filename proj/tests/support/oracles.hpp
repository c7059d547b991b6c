#pragma once

// Test-only reference computations. These deliberately avoid the library's
// fast paths: objectives are recomputed from scratch over the edge set and
// moves are applied with plain vector edits.

#include "lopant/lop_core.hpp"

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

namespace oracle {

using lopant::Instance;
using lopant::Node;
using lopant::Permutation;
using lopant::Weight;

// Graph form: sum w(u, v) over ordered pairs with u placed before v.
inline Weight edge_set_objective(const Instance& inst, const std::vector<Node>& order) {
    const std::size_t n = inst.size();
    std::vector<std::size_t> pos(n);
    for (std::size_t p = 0; p < n; ++p) pos[order[p]] = p;
    Weight total = 0.0;
    for (Node u = 0; u < n; ++u) {
        for (Node v = 0; v < n; ++v) {
            if (u != v && pos[u] < pos[v]) total += inst(u, v);
        }
    }
    return total;
}

inline Weight edge_set_objective(const Instance& inst, const Permutation& perm) {
    return edge_set_objective(inst, std::vector<Node>(perm.order().begin(), perm.order().end()));
}

inline std::vector<Node> moved(const std::vector<Node>& order, std::size_t from, std::size_t to) {
    std::vector<Node> out = order;
    const Node x = out[from];
    out.erase(out.begin() + static_cast<std::ptrdiff_t>(from));
    out.insert(out.begin() + static_cast<std::ptrdiff_t>(to), x);
    return out;
}

inline std::vector<Node> swapped(const std::vector<Node>& order, std::size_t a, std::size_t b) {
    std::vector<Node> out = order;
    std::swap(out[a], out[b]);
    return out;
}

inline std::vector<Node> to_vector(const Permutation& p) {
    return {p.order().begin(), p.order().end()};
}

inline Weight insert_delta(const Instance& inst, const std::vector<Node>& order, std::size_t from,
                           std::size_t to) {
    return edge_set_objective(inst, moved(order, from, to)) - edge_set_objective(inst, order);
}

inline Weight swap_delta(const Instance& inst, const std::vector<Node>& order, std::size_t a,
                         std::size_t b) {
    return edge_set_objective(inst, swapped(order, a, b)) - edge_set_objective(inst, order);
}

// Integer-valued random matrix, independent of the library generator.
inline Instance random_instance(std::size_t n, std::mt19937_64& rng, int low = 0, int high = 99) {
    std::uniform_int_distribution<int> dist(low, high);
    std::vector<Weight> w(n * n);
    for (auto& x : w) x = dist(rng);
    return Instance(n, std::move(w));
}

inline std::vector<Node> random_order(std::size_t n, std::mt19937_64& rng) {
    std::vector<Node> order(n);
    for (std::size_t i = 0; i < n; ++i) order[i] = static_cast<Node>(i);
    std::shuffle(order.begin(), order.end(), rng);
    return order;
}

// Subset dynamic program: best(S + v) = best(S) + sum_{u in S} w(u, v).
inline Weight subset_dp_optimum(const Instance& inst) {
    const std::size_t n = inst.size();
    const std::size_t full = std::size_t{1} << n;
    std::vector<Weight> best(full, -1e300);
    best[0] = 0.0;
    for (std::size_t s = 0; s < full; ++s) {
        if (best[s] <= -1e299) continue;
        for (Node v = 0; v < n; ++v) {
            if (s & (std::size_t{1} << v)) continue;
            Weight add = 0.0;
            for (Node u = 0; u < n; ++u) {
                if (s & (std::size_t{1} << u)) add += inst(u, v);
            }
            auto& slot = best[s | (std::size_t{1} << v)];
            slot = std::max(slot, best[s] + add);
        }
    }
    return best[full - 1];
}

inline bool is_permutation_of_n(const std::vector<Node>& order, std::size_t n) {
    if (order.size() != n) return false;
    std::vector<Node> sorted = order;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i < n; ++i) {
        if (sorted[i] != i) return false;
    }
    return true;
}

} // namespace oracle
