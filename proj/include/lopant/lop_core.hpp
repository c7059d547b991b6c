#pragma once

// Linear ordering problem: instances, permutations, objective and the exact
// move deltas shared by the construction and local search modules.
//
// Nodes and positions are 0-based in the C++ API. The CLI and the file formats
// report 1-based orderings.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace lopant {

using Node = std::uint32_t;
using Weight = double;

/// Dense n x n weight matrix. w(i, j) is the gain of placing i before j.
/// The diagonal is forced to zero on construction.
class Instance {
public:
    Instance(std::size_t n, std::vector<Weight> weights, std::string name = {});

    static Instance from_rows(const std::vector<std::vector<Weight>>& rows,
                              std::string name = {});

    std::size_t size() const noexcept { return n_; }
    const std::string& name() const noexcept { return name_; }

    Weight operator()(Node i, Node j) const noexcept { return weights_[i * n_ + j]; }
    std::span<const Weight> row(Node i) const noexcept {
        return {weights_.data() + i * n_, n_};
    }
    std::span<const Weight> weights() const noexcept { return weights_; }

    /// max |w(i, j)| over the matrix, cached at construction.
    Weight max_abs_weight() const noexcept { return max_abs_; }

    friend bool operator==(const Instance& a, const Instance& b) {
        return a.n_ == b.n_ && a.weights_ == b.weights_;
    }

private:
    std::size_t n_;
    std::vector<Weight> weights_;
    std::string name_;
    Weight max_abs_ = 0.0;
};

/// An ordering of the nodes 0..n-1; always a bijection.
class Permutation {
public:
    struct Unchecked {};

    Permutation() = default;
    explicit Permutation(std::vector<Node> order);
    /// Skips validation in release builds; asserts the bijection otherwise.
    Permutation(std::vector<Node> order, Unchecked);

    static Permutation identity(std::size_t n);
    /// Builds from 1-based node labels, as used by the CLI and file formats.
    static Permutation from_one_based(std::span<const std::uint32_t> labels);

    std::size_t size() const noexcept { return order_.size(); }
    Node operator[](std::size_t pos) const noexcept { return order_[pos]; }
    std::span<const Node> order() const noexcept { return order_; }
    std::vector<std::uint32_t> to_one_based() const;

    Permutation reversed() const;

    friend bool operator==(const Permutation&, const Permutation&) = default;
    friend auto operator<=>(const Permutation&, const Permutation&) = default;

private:
    std::vector<Node> order_;
};

bool is_bijection(std::span<const Node> order);

/// Sum of w(pi_i, pi_j) over all position pairs i < j.
Weight objective(const Instance& instance, const Permutation& perm);

/// Sum of all off-diagonal entries; equals objective(p) + objective(reverse(p)).
Weight total_offdiagonal(const Instance& instance);

/// objective(apply_insert(perm, from, to)) - objective(perm) in O(|from - to|).
Weight insert_move_delta(const Instance& instance, const Permutation& perm,
                         std::size_t from_pos, std::size_t to_pos);

/// Removes the element at from_pos and reinserts it so it lands at to_pos.
Permutation apply_insert(const Permutation& perm, std::size_t from_pos,
                         std::size_t to_pos);

/// Objective change from exchanging the elements at pos_a and pos_b.
Weight swap_delta(const Instance& instance, const Permutation& perm,
                  std::size_t pos_a, std::size_t pos_b);

Permutation apply_swap(const Permutation& perm, std::size_t pos_a, std::size_t pos_b);

namespace detail {

// Unchecked kernels over raw orderings; callers validate positions.
Weight insert_delta_raw(const Instance& instance, std::span<const Node> order,
                        std::size_t from_pos, std::size_t to_pos) noexcept;
Weight swap_delta_raw(const Instance& instance, std::span<const Node> order,
                      std::size_t pos_a, std::size_t pos_b) noexcept;
void insert_raw(std::vector<Node>& order, std::size_t from_pos, std::size_t to_pos);

} // namespace detail

} // namespace lopant
