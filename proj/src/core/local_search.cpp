#include "lopant/local_search.hpp"

#include "lopant/errors.hpp"

namespace lopant {

std::size_t default_max_passes(std::size_t n) noexcept {
    return n * n;
}

namespace detail {

InsertSearchStats insert_move_search_inplace(const Instance& instance,
                                             std::vector<Node>& order,
                                             std::size_t max_passes) {
    const std::size_t n = order.size();
    InsertSearchStats stats;
    for (std::size_t pass = 0; pass < max_passes; ++pass) {
        Weight best_delta = 0.0;
        std::size_t best_from = 0;
        std::size_t best_to = 0;
        bool found = false;

        auto consider = [&](Weight delta, std::size_t from, std::size_t to) {
            if (!(delta > 0.0)) {
                return;
            }
            if (!found || delta > best_delta ||
                (delta == best_delta &&
                 (from < best_from || (from == best_from && to < best_to)))) {
                best_delta = delta;
                best_from = from;
                best_to = to;
                found = true;
            }
        };

        for (std::size_t from = 0; from < n; ++from) {
            const Node moved = order[from];
            Weight delta = 0.0;
            for (std::size_t k = from; k-- > 0;) {
                delta += instance(moved, order[k]) - instance(order[k], moved);
                consider(delta, from, k);
            }
            delta = 0.0;
            for (std::size_t k = from + 1; k < n; ++k) {
                delta += instance(order[k], moved) - instance(moved, order[k]);
                consider(delta, from, k);
            }
        }

        if (!found) {
            stats.converged = true;
            return stats;
        }
        insert_raw(order, best_from, best_to);
        ++stats.moves;
        stats.gain += best_delta;
    }
    return stats;
}

} // namespace detail

Permutation insert_move_search(const Instance& instance, const Permutation& perm,
                               std::size_t max_passes) {
    if (perm.size() != instance.size()) {
        throw invalid_argument("permutation size does not match the instance");
    }
    std::vector<Node> order(perm.order().begin(), perm.order().end());
    detail::insert_move_search_inplace(instance, order, max_passes);
    return Permutation(std::move(order), Permutation::Unchecked{});
}

} // namespace lopant
