#pragma once

#include "lopant/lop_core.hpp"

namespace lopant {

/// Best-improvement 2-exchange descent from the identity ordering.
/// Ties go to the lexicographically smallest position pair; only strictly
/// improving swaps are taken, so the result is a swap-local optimum.
Permutation greedy_initial(const Instance& instance);

} // namespace lopant
