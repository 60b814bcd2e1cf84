#ifndef PMC_GRAPH_HPP
#define PMC_GRAPH_HPP

#include <algorithm>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <pmc/errors.hpp>
#include <pmc/exact_linalg.hpp>
#include <pmc/matrix.hpp>

namespace pmc {

using Edge = std::pair<int, int>;

/// Simple undirected graph on vertices 1..n; edges are stored as sorted
/// pairs u < v with no duplicates.
class Graph {
public:
    Graph() = default;

    Graph(int n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
        if (n_ < 0) throw DomainError("negative vertex count");
        for (auto& [u, v] : edges_) {
            if (u > v) std::swap(u, v);
            if (u == v) throw DomainError("self-loop at vertex " + std::to_string(u));
            if (u < 1 || v > n_)
                throw DomainError("edge (" + std::to_string(u) + "," + std::to_string(v) +
                                  ") out of range for n=" + std::to_string(n_));
        }
        std::sort(edges_.begin(), edges_.end());
        if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end())
            throw DomainError("duplicate edge");
    }

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<Edge>& edges() const { return edges_; }

    RationalMatrix adjacency_matrix() const {
        RationalMatrix a(static_cast<std::size_t>(n_), static_cast<std::size_t>(n_));
        for (const auto& [u, v] : edges_) {
            a(static_cast<std::size_t>(u - 1), static_cast<std::size_t>(v - 1)) = Rational(1);
            a(static_cast<std::size_t>(v - 1), static_cast<std::size_t>(u - 1)) = Rational(1);
        }
        return a;
    }

private:
    int n_ = 0;
    std::vector<Edge> edges_;
};

/// A bipartition of the vertices (labels 1/2) together with the number of
/// edges crossing it.
struct CutCertificate {
    std::vector<int> side; // length n, entries in {1,2}
    long long cut_size = 0;
};

namespace detail {

inline long long cut_size_mask(const Graph& g, std::uint64_t mask) {
    long long count = 0;
    for (const auto& [u, v] : g.edges()) {
        const bool in_u = (mask >> (u - 1)) & 1;
        const bool in_v = (mask >> (v - 1)) & 1;
        if (in_u != in_v) ++count;
    }
    return count;
}

} // namespace detail

/// Number of edges with exactly one endpoint in S.
inline long long cut_size(const Graph& g, const std::vector<int>& s) {
    std::uint64_t mask = 0;
    for (int v : s) {
        if (v < 1 || v > g.vertex_count())
            throw DomainError("vertex " + std::to_string(v) + " out of range");
        mask |= std::uint64_t(1) << (v - 1);
    }
    return detail::cut_size_mask(g, mask);
}

/// Exhaustive maximum cut over all 2^(n-1) bipartitions. Vertex 1 is pinned
/// to side 1; ties go to the lexicographically smallest side vector.
inline CutCertificate max_cut_bruteforce(const Graph& g) {
    const int n = g.vertex_count();
    if (n < 1) throw DomainError("max cut requires at least one vertex");
    if (n > 30) throw DomainError("max cut sweep limited to n <= 30");

    CutCertificate best;
    best.side.assign(static_cast<std::size_t>(n), 1);
    best.cut_size = -1;
    std::vector<int> side(static_cast<std::size_t>(n));
    const std::uint64_t limit = std::uint64_t(1) << (n - 1);
    for (std::uint64_t k = 0; k < limit; ++k) {
        // bit (n-1-i) of k holds vertex i+1's label, so ascending k is
        // lexicographic order on the side vector
        std::uint64_t mask = 0;
        side[0] = 1;
        for (int i = 1; i < n; ++i) {
            const int bit = static_cast<int>((k >> (n - 1 - i)) & 1);
            side[static_cast<std::size_t>(i)] = 1 + bit;
            if (bit) mask |= std::uint64_t(1) << i;
        }
        const long long value = detail::cut_size_mask(g, mask);
        if (value > best.cut_size) {
            best.cut_size = value;
            best.side = side;
        }
    }
    return best;
}

struct RNormInstance {
    RationalMatrix matrix;  // l*I - A(G), strictly diagonally dominant
    Rational threshold;     // decide r(A) >= threshold
};

/// Max-cut to r-norm reduction: with l = 2|E|+1, a cut of size >= K exists
/// iff r(l*I - A(G)) >= n*l - 2|E| + 4K.
inline RNormInstance graph_to_rnorm_instance(const Graph& g, long k) {
    if (k < 1) throw DomainError("reduction requires a positive integer K");
    const int n = g.vertex_count();
    if (n < 1) throw DomainError("reduction requires at least one vertex");
    const long m = g.edge_count();
    const long l = 2 * m + 1;

    RNormInstance inst;
    inst.matrix = -g.adjacency_matrix();
    for (int i = 0; i < n; ++i)
        inst.matrix(static_cast<std::size_t>(i), static_cast<std::size_t>(i)) = Rational(l);
    inst.threshold = Rational(n * l - 2 * m + 4 * k);
    return inst;
}

} // namespace pmc

#endif // PMC_GRAPH_HPP
