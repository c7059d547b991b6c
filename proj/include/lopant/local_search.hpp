#pragma once

#include "lopant/lop_core.hpp"

#include <cstddef>
#include <vector>

namespace lopant {

/// Default pass budget for insert_move_search: n * n.
std::size_t default_max_passes(std::size_t n) noexcept;

/// Insert-move descent. Each pass scans every (from, to) insert move and
/// applies the best strictly improving one (ties: smallest (from, to)).
/// Stops when no move improves or after max_passes passes.
Permutation insert_move_search(const Instance& instance, const Permutation& perm,
                               std::size_t max_passes);

inline Permutation insert_move_search(const Instance& instance, const Permutation& perm) {
    return insert_move_search(instance, perm, default_max_passes(instance.size()));
}

struct InsertSearchStats {
    std::size_t moves = 0;
    Weight gain = 0.0;
    bool converged = false; ///< stopped because no improving move was left
};

namespace detail {
InsertSearchStats insert_move_search_inplace(const Instance& instance,
                                             std::vector<Node>& order,
                                             std::size_t max_passes);
} // namespace detail

} // namespace lopant
