#include "skewrank/witness.hpp"

#include <cmath>
#include <deque>
#include <random>
#include <sstream>

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/multiprecision/eigen.hpp>

#include "skewrank/matching.hpp"

namespace skewrank {

SkewIntMatrix::SkewIntMatrix(IntMatrix entries) : entries_(std::move(entries)) {
    if (entries_.rows() != entries_.cols()) throw std::invalid_argument("skew matrix must be square");
    const auto n = entries_.rows();
    std::vector<Edge> edges;
    for (Eigen::Index i = 0; i < n; ++i) {
        if (entries_(i, i) != 0) throw std::invalid_argument("skew matrix must have zero diagonal");
        for (Eigen::Index j = i + 1; j < n; ++j) {
            if (entries_(i, j) != -entries_(j, i)) throw std::invalid_argument("matrix is not skew-symmetric");
            if (entries_(i, j) != 0) edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(j));
        }
    }
    pattern_ = Graph(static_cast<int>(n), edges);
}

SkewIntMatrix SkewIntMatrix::from_edge_weights(const Graph& g, std::span<const std::int64_t> weights) {
    if (weights.size() != g.size()) throw std::invalid_argument("one weight per edge required");
    IntMatrix a = IntMatrix::Zero(g.order(), g.order());
    for (std::size_t k = 0; k < g.size(); ++k) {
        if (weights[k] == 0) throw std::invalid_argument("edge weights must be nonzero");
        const Edge& e = g.edges()[k];
        a(e.u, e.v) = weights[k];
        a(e.v, e.u) = -weights[k];
    }
    return SkewIntMatrix(std::move(a));
}

int exact_rank(const IntMatrix& m) {
    // log2 of the Hadamard bound on every minor
    double log_bound = 0.0;
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        double norm2 = 0.0;
        for (Eigen::Index j = 0; j < m.cols(); ++j) norm2 += static_cast<double>(m(i, j)) * static_cast<double>(m(i, j));
        if (norm2 > 1.0) log_bound += 0.5 * std::log2(norm2);
    }
    if (log_bound < 30.0) return bareiss_rank(m);
    using boost::multiprecision::cpp_int;
    return bareiss_rank(m.cast<cpp_int>());
}

int exact_rank(const SkewIntMatrix& m) { return exact_rank(m.entries()); }

std::string to_text(const SkewIntMatrix& m) {
    std::ostringstream out;
    out << m.dimension() << '\n';
    for (int i = 0; i < m.dimension(); ++i) {
        for (int j = 0; j < m.dimension(); ++j) out << (j ? " " : "") << m(i, j);
        out << '\n';
    }
    return out.str();
}

SkewIntMatrix random_max_witness(const Graph& g, int budget, std::uint64_t seed) {
    const int target = 2 * matching_number(g);
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::int64_t> weight(1, kMaxWitnessWeight);
    std::vector<std::int64_t> w(g.size());
    for (int attempt = 0; attempt < budget; ++attempt) {
        for (auto& x : w) x = weight(rng);
        SkewIntMatrix m = SkewIntMatrix::from_edge_weights(g, w);
        if (exact_rank(m) == target) return m;
    }
    throw BudgetExhausted("no rank-" + std::to_string(target) + " matrix found in " + std::to_string(budget) +
                          " random draws");
}

std::pair<std::vector<std::size_t>, std::vector<std::size_t>> spanning_forest_split(const Graph& g) {
    std::vector<char> seen(static_cast<std::size_t>(g.order()), 0);
    std::vector<char> in_forest(g.size(), 0);
    auto edge_index = [&](Vertex a, Vertex b) {
        const Edge e(a, b);
        return static_cast<std::size_t>(std::lower_bound(g.edges().begin(), g.edges().end(), e) - g.edges().begin());
    };
    for (Vertex s = 0; s < g.order(); ++s) {
        if (seen[static_cast<std::size_t>(s)]) continue;
        seen[static_cast<std::size_t>(s)] = 1;
        std::deque<Vertex> queue{s};
        while (!queue.empty()) {
            Vertex v = queue.front();
            queue.pop_front();
            for (Vertex w : g.neighbors(v)) {
                if (seen[static_cast<std::size_t>(w)]) continue;
                seen[static_cast<std::size_t>(w)] = 1;
                in_forest[edge_index(v, w)] = 1;
                queue.push_back(w);
            }
        }
    }
    std::pair<std::vector<std::size_t>, std::vector<std::size_t>> out;
    for (std::size_t k = 0; k < g.size(); ++k) (in_forest[k] ? out.first : out.second).push_back(k);
    return out;
}

std::optional<SkewIntMatrix> min_witness_search(const Graph& g, int target, std::span<const int> entry_set,
                                                long long budget, std::uint64_t seed) {
    if (target < 0 || target % 2 != 0) return std::nullopt;
    std::optional<SkewIntMatrix> found;
    long long evaluations = 0;
    auto try_weights = [&](const std::vector<std::int64_t>& w) {
        if (++evaluations > budget) return true;
        SkewIntMatrix m = SkewIntMatrix::from_edge_weights(g, w);
        if (exact_rank(m) == target) {
            found = std::move(m);
            return true;
        }
        return false;
    };
    if (static_cast<int>(g.size()) <= kExhaustiveWitnessEdgeCap) {
        for_each_signed_assignment(g, entry_set, try_weights);
        return found;
    }
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::size_t> pick(0, entry_set.size() - 1);
    std::bernoulli_distribution negative(0.5);
    std::vector<std::int64_t> w(g.size());
    while (!found && evaluations < budget) {
        for (auto& x : w) x = entry_set[pick(rng)] * (negative(rng) ? -1 : 1);
        if (try_weights(w)) break;
    }
    return found;
}

std::optional<SkewIntMatrix> min_witness_search(const Graph& g, int target, std::uint64_t seed) {
    static constexpr int kNarrow[] = {1, 2, 3};
    static constexpr int kWide[] = {1, 2, 3, 4, 5};
    if (auto m = min_witness_search(g, target, kNarrow, 200'000, seed)) return m;
    return min_witness_search(g, target, kWide, 200'000, seed);
}

}  // namespace skewrank
