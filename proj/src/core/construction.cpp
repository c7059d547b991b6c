#include "lopant/construction.hpp"

#include <vector>

namespace lopant {

namespace {

struct SwapMove {
    std::size_t a = 0;
    std::size_t b = 0;
    Weight delta = 0.0;
};

// advantage[u * (n + 1) + k] = sum over positions p < k of w(u, pi_p) - w(pi_p, u).
// With it every swap delta is O(1), so one full neighbourhood scan is O(n^2).
SwapMove best_swap(const Instance& instance, const std::vector<Node>& order,
                   std::vector<Weight>& advantage) {
    const std::size_t n = order.size();
    const std::size_t stride = n + 1;
    for (Node u = 0; u < n; ++u) {
        Weight acc = 0.0;
        advantage[u * stride] = 0.0;
        for (std::size_t p = 0; p < n; ++p) {
            acc += instance(u, order[p]) - instance(order[p], u);
            advantage[u * stride + p + 1] = acc;
        }
    }

    SwapMove best;
    for (std::size_t a = 0; a + 1 < n; ++a) {
        const Node x = order[a];
        const Weight* adv_x = &advantage[x * stride];
        for (std::size_t b = a + 1; b < n; ++b) {
            const Node y = order[b];
            const Weight* adv_y = &advantage[y * stride];
            const Weight delta = (instance(y, x) - instance(x, y)) +
                                 (adv_y[b] - adv_y[a + 1]) - (adv_x[b] - adv_x[a + 1]);
            if (delta > best.delta) {
                best = {a, b, delta};
            }
        }
    }
    return best;
}

} // namespace

Permutation greedy_initial(const Instance& instance) {
    const std::size_t n = instance.size();
    const Permutation start = Permutation::identity(n);
    std::vector<Node> order(start.order().begin(), start.order().end());
    std::vector<Weight> advantage(n * (n + 1));
    for (;;) {
        const SwapMove move = best_swap(instance, order, advantage);
        if (!(move.delta > 0.0)) {
            break;
        }
        std::swap(order[move.a], order[move.b]);
    }
    return Permutation(std::move(order), Permutation::Unchecked{});
}

} // namespace lopant
