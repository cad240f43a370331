#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Core>

#include "skewrank/graph.hpp"

namespace skewrank {

template <typename Scalar>
using DenseMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

using IntMatrix = DenseMatrix<std::int64_t>;

/// Rank over the rationals by fraction-free (Bareiss) elimination. Every
/// intermediate entry is a minor of the input (or a difference of two products
/// of minors before the exact division), so Scalar must hold roughly the square
/// of the largest minor.
template <typename Derived>
int bareiss_rank(const Eigen::MatrixBase<Derived>& input) {
    using Scalar = typename Derived::Scalar;
    DenseMatrix<Scalar> a = input;
    const Eigen::Index rows = a.rows(), cols = a.cols();
    Scalar prev(1);
    Eigen::Index rank = 0;
    for (Eigen::Index c = 0; c < cols && rank < rows; ++c) {
        Eigen::Index pivot = rank;
        while (pivot < rows && a(pivot, c) == Scalar(0)) ++pivot;
        if (pivot == rows) continue;
        if (pivot != rank) a.row(pivot).swap(a.row(rank));
        for (Eigen::Index i = rank + 1; i < rows; ++i) {
            for (Eigen::Index j = c + 1; j < cols; ++j) {
                Scalar t = a(rank, c) * a(i, j) - a(i, c) * a(rank, j);
                a(i, j) = t / prev;
            }
            a(i, c) = Scalar(0);
        }
        prev = a(rank, c);
        ++rank;
    }
    return static_cast<int>(rank);
}

/// Real skew-symmetric integer matrix whose off-diagonal nonzero pattern is
/// exactly the edge set of `pattern()`.
class SkewIntMatrix {
public:
    SkewIntMatrix() = default;

    /// Throws std::invalid_argument unless `entries` is square, skew-symmetric
    /// with zero diagonal.
    explicit SkewIntMatrix(IntMatrix entries);

    /// a(u,v) = w, a(v,u) = -w for the i-th edge {u<v} of g and weight w = weights[i].
    /// Throws if a weight is zero or the count does not match.
    static SkewIntMatrix from_edge_weights(const Graph& g, std::span<const std::int64_t> weights);

    int dimension() const { return static_cast<int>(entries_.rows()); }
    const IntMatrix& entries() const { return entries_; }
    const Graph& pattern() const { return pattern_; }
    std::int64_t operator()(int i, int j) const { return entries_(i, j); }

    /// True iff a(i,j) != 0 exactly on the edges of g.
    bool has_pattern(const Graph& g) const { return pattern_ == g; }

private:
    IntMatrix entries_;
    Graph pattern_;
};

/// Exact rank. Uses 64-bit arithmetic when the Hadamard bound allows it and
/// arbitrary-precision integers otherwise.
int exact_rank(const IntMatrix& m);
int exact_rank(const SkewIntMatrix& m);

/// "n" line followed by n rows of space-separated integers.
std::string to_text(const SkewIntMatrix& m);

class BudgetExhausted : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline constexpr int kMaxWitnessWeight = 20;
inline constexpr int kMaxWitnessAttempts = 50;

/// Matrix in S^-(g) of rank 2 match(g), from random weights in {1..20}.
/// Throws BudgetExhausted after `budget` unsuccessful draws.
SkewIntMatrix random_max_witness(const Graph& g, int budget = kMaxWitnessAttempts, std::uint64_t seed = 1);

/// Visits signed weight assignments drawn from +-magnitudes. Signs on the edges
/// of a BFS spanning forest are fixed to +: flipping the sign of row and column v
/// preserves rank and pattern and toggles every edge at v, so this loses no rank
/// value. Edges off the forest vary fastest. `visit` returns true to stop;
/// the function returns true iff a visit stopped it.
template <typename Visit>
bool for_each_signed_assignment(const Graph& g, std::span<const int> magnitudes, Visit&& visit);

/// Partition of g's edges (indices into g.edges()) into spanning-forest and
/// remaining edges.
std::pair<std::vector<std::size_t>, std::vector<std::size_t>> spanning_forest_split(const Graph& g);

inline constexpr int kExhaustiveWitnessEdgeCap = 12;

/// A matrix in S^-(g) of rank exactly `target`. Exhaustive (sign-gauge reduced)
/// over entry_set when |E| <= 12, randomized otherwise; `budget` caps the
/// number of rank evaluations either way.
std::optional<SkewIntMatrix> min_witness_search(const Graph& g, int target, std::span<const int> entry_set,
                                                long long budget = 20'000'000, std::uint64_t seed = 1);

/// min_witness_search over {1,2,3}, then over {1..5} if that fails.
std::optional<SkewIntMatrix> min_witness_search(const Graph& g, int target, std::uint64_t seed = 1);

// ---- template definitions -----------------------------------------------

template <typename Visit>
bool for_each_signed_assignment(const Graph& g, std::span<const int> magnitudes, Visit&& visit) {
    const auto [forest, free] = spanning_forest_split(g);
    std::vector<std::vector<std::int64_t>> choices(g.size());
    for (std::size_t e : forest)
        for (int m : magnitudes) choices[e].push_back(m);
    for (std::size_t e : free)
        for (int m : magnitudes) {
            choices[e].push_back(m);
            choices[e].push_back(-m);
        }
    std::vector<std::size_t> order(free.begin(), free.end());
    order.insert(order.end(), forest.begin(), forest.end());

    std::vector<std::size_t> digit(g.size(), 0);
    std::vector<std::int64_t> weights(g.size());
    for (std::size_t e = 0; e < g.size(); ++e) {
        if (choices[e].empty()) return false;
        weights[e] = choices[e][0];
    }
    while (true) {
        if (visit(std::as_const(weights))) return true;
        std::size_t k = 0;
        for (; k < order.size(); ++k) {
            const std::size_t e = order[k];
            if (++digit[e] < choices[e].size()) {
                weights[e] = choices[e][digit[e]];
                break;
            }
            digit[e] = 0;
            weights[e] = choices[e][0];
        }
        if (k == order.size()) return false;
    }
}

}  // namespace skewrank
