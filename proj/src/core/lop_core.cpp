#include "lopant/lop_core.hpp"

#include "lopant/errors.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <utility>

namespace lopant {

Instance::Instance(std::size_t n, std::vector<Weight> weights, std::string name)
    : n_(n), weights_(std::move(weights)), name_(std::move(name)) {
    if (n_ < 1) {
        throw invalid_argument("instance size must be at least 1");
    }
    if (weights_.size() != n_ * n_) {
        throw invalid_argument("weight matrix has " + std::to_string(weights_.size()) +
                               " entries, expected " + std::to_string(n_ * n_));
    }
    for (std::size_t i = 0; i < n_; ++i) {
        weights_[i * n_ + i] = 0.0;
    }
    for (Weight w : weights_) {
        if (!std::isfinite(w)) {
            throw invalid_argument("weight matrix contains a non-finite entry");
        }
        max_abs_ = std::max(max_abs_, std::abs(w));
    }
}

Instance Instance::from_rows(const std::vector<std::vector<Weight>>& rows, std::string name) {
    const std::size_t n = rows.size();
    std::vector<Weight> flat;
    flat.reserve(n * n);
    for (const auto& r : rows) {
        if (r.size() != n) {
            throw invalid_argument("weight matrix is not square");
        }
        flat.insert(flat.end(), r.begin(), r.end());
    }
    return Instance(n, std::move(flat), std::move(name));
}

bool is_bijection(std::span<const Node> order) {
    std::vector<bool> seen(order.size(), false);
    for (Node v : order) {
        if (v >= order.size() || seen[v]) {
            return false;
        }
        seen[v] = true;
    }
    return true;
}

Permutation::Permutation(std::vector<Node> order) : order_(std::move(order)) {
    if (!is_bijection(order_)) {
        throw invalid_argument("ordering is not a permutation of 0..n-1");
    }
}

Permutation::Permutation(std::vector<Node> order, Unchecked) : order_(std::move(order)) {
    assert(is_bijection(order_));
}

Permutation Permutation::identity(std::size_t n) {
    std::vector<Node> order(n);
    for (std::size_t i = 0; i < n; ++i) {
        order[i] = static_cast<Node>(i);
    }
    return Permutation(std::move(order), Unchecked{});
}

Permutation Permutation::from_one_based(std::span<const std::uint32_t> labels) {
    std::vector<Node> order;
    order.reserve(labels.size());
    for (auto label : labels) {
        if (label == 0) {
            throw invalid_argument("1-based ordering contains label 0");
        }
        order.push_back(label - 1);
    }
    return Permutation(std::move(order));
}

std::vector<std::uint32_t> Permutation::to_one_based() const {
    std::vector<std::uint32_t> labels(order_.size());
    std::transform(order_.begin(), order_.end(), labels.begin(),
                   [](Node v) { return v + 1; });
    return labels;
}

Permutation Permutation::reversed() const {
    return Permutation(std::vector<Node>(order_.rbegin(), order_.rend()), Unchecked{});
}

namespace {

void check_dimension(const Instance& instance, const Permutation& perm) {
    if (perm.size() != instance.size()) {
        throw invalid_argument("permutation has " + std::to_string(perm.size()) +
                               " elements but the instance has " +
                               std::to_string(instance.size()));
    }
}

void check_position(std::size_t pos, std::size_t n, const char* what) {
    if (pos >= n) {
        throw invalid_argument(std::string(what) + " " + std::to_string(pos) +
                               " is out of range for size " + std::to_string(n));
    }
}

} // namespace

Weight objective(const Instance& instance, const Permutation& perm) {
    check_dimension(instance, perm);
    const auto order = perm.order();
    const std::size_t n = order.size();
    Weight total = 0.0;
    for (std::size_t i = 0; i + 1 < n; ++i) {
        const auto row = instance.row(order[i]);
        for (std::size_t j = i + 1; j < n; ++j) {
            total += row[order[j]];
        }
    }
    return total;
}

Weight total_offdiagonal(const Instance& instance) {
    Weight total = 0.0;
    for (Weight w : instance.weights()) {
        total += w;
    }
    return total;
}

namespace detail {

Weight insert_delta_raw(const Instance& instance, std::span<const Node> order,
                        std::size_t from_pos, std::size_t to_pos) noexcept {
    const Node moved = order[from_pos];
    Weight delta = 0.0;
    if (from_pos < to_pos) {
        // moved jumps forward over (from, to]
        for (std::size_t k = from_pos + 1; k <= to_pos; ++k) {
            delta += instance(order[k], moved) - instance(moved, order[k]);
        }
    } else {
        for (std::size_t k = to_pos; k < from_pos; ++k) {
            delta += instance(moved, order[k]) - instance(order[k], moved);
        }
    }
    return delta;
}

Weight swap_delta_raw(const Instance& instance, std::span<const Node> order,
                      std::size_t pos_a, std::size_t pos_b) noexcept {
    if (pos_a == pos_b) {
        return 0.0;
    }
    if (pos_a > pos_b) {
        std::swap(pos_a, pos_b);
    }
    const Node x = order[pos_a];
    const Node y = order[pos_b];
    Weight delta = instance(y, x) - instance(x, y);
    for (std::size_t k = pos_a + 1; k < pos_b; ++k) {
        const Node z = order[k];
        delta += (instance(y, z) - instance(z, y)) + (instance(z, x) - instance(x, z));
    }
    return delta;
}

void insert_raw(std::vector<Node>& order, std::size_t from_pos, std::size_t to_pos) {
    if (from_pos < to_pos) {
        std::rotate(order.begin() + from_pos, order.begin() + from_pos + 1,
                    order.begin() + to_pos + 1);
    } else if (to_pos < from_pos) {
        std::rotate(order.begin() + to_pos, order.begin() + from_pos,
                    order.begin() + from_pos + 1);
    }
}

} // namespace detail

Weight insert_move_delta(const Instance& instance, const Permutation& perm,
                         std::size_t from_pos, std::size_t to_pos) {
    check_dimension(instance, perm);
    check_position(from_pos, perm.size(), "from position");
    check_position(to_pos, perm.size(), "to position");
    return detail::insert_delta_raw(instance, perm.order(), from_pos, to_pos);
}

Permutation apply_insert(const Permutation& perm, std::size_t from_pos, std::size_t to_pos) {
    check_position(from_pos, perm.size(), "from position");
    check_position(to_pos, perm.size(), "to position");
    std::vector<Node> order(perm.order().begin(), perm.order().end());
    detail::insert_raw(order, from_pos, to_pos);
    return Permutation(std::move(order), Permutation::Unchecked{});
}

Weight swap_delta(const Instance& instance, const Permutation& perm, std::size_t pos_a,
                  std::size_t pos_b) {
    check_dimension(instance, perm);
    check_position(pos_a, perm.size(), "position");
    check_position(pos_b, perm.size(), "position");
    return detail::swap_delta_raw(instance, perm.order(), pos_a, pos_b);
}

Permutation apply_swap(const Permutation& perm, std::size_t pos_a, std::size_t pos_b) {
    check_position(pos_a, perm.size(), "position");
    check_position(pos_b, perm.size(), "position");
    std::vector<Node> order(perm.order().begin(), perm.order().end());
    std::swap(order[pos_a], order[pos_b]);
    return Permutation(std::move(order), Permutation::Unchecked{});
}

} // namespace lopant
