#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace domiperf {

inline constexpr int kMaxOrder = 64;

/// Base class for every error the library reports to callers.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A precondition on an argument was violated (bad vertex, loop, cap exceeded...).
class InvalidArgument : public Error {
public:
    using Error::Error;
};

/// A set of vertex indices packed into one machine word.
class VertexSet {
public:
    constexpr VertexSet() = default;
    constexpr explicit VertexSet(std::uint64_t bits) : bits_(bits) {}

    static VertexSet of(std::initializer_list<int> vertices);
    static VertexSet range(int n) { return VertexSet(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1); }
    static constexpr VertexSet single(int v) { return VertexSet(std::uint64_t{1} << v); }

    constexpr std::uint64_t bits() const { return bits_; }
    constexpr bool empty() const { return bits_ == 0; }
    constexpr int size() const { return std::popcount(bits_); }
    constexpr bool contains(int v) const { return (bits_ >> v) & 1U; }
    /// Lowest member; -1 when empty.
    constexpr int first() const { return bits_ == 0 ? -1 : std::countr_zero(bits_); }
    /// Highest member; -1 when empty.
    constexpr int last() const { return bits_ == 0 ? -1 : 63 - std::countl_zero(bits_); }

    constexpr void insert(int v) { bits_ |= std::uint64_t{1} << v; }
    constexpr void erase(int v) { bits_ &= ~(std::uint64_t{1} << v); }

    constexpr bool is_subset_of(VertexSet other) const { return (bits_ & ~other.bits_) == 0; }
    constexpr bool intersects(VertexSet other) const { return (bits_ & other.bits_) != 0; }

    constexpr VertexSet operator|(VertexSet o) const { return VertexSet(bits_ | o.bits_); }
    constexpr VertexSet operator&(VertexSet o) const { return VertexSet(bits_ & o.bits_); }
    constexpr VertexSet operator-(VertexSet o) const { return VertexSet(bits_ & ~o.bits_); }
    constexpr VertexSet& operator|=(VertexSet o) { bits_ |= o.bits_; return *this; }
    constexpr VertexSet& operator&=(VertexSet o) { bits_ &= o.bits_; return *this; }
    constexpr VertexSet& operator-=(VertexSet o) { bits_ &= ~o.bits_; return *this; }
    constexpr bool operator==(const VertexSet&) const = default;

    /// Members in ascending order.
    std::vector<int> to_vector() const;

    /// Lexicographic order on the ascending member sequences ({0,3} < {1,2}, {0} < {0,1}).
    static bool lex_less(VertexSet a, VertexSet b);

    class iterator {
    public:
        using value_type = int;
        using difference_type = std::ptrdiff_t;
        constexpr iterator() = default;
        constexpr explicit iterator(std::uint64_t rest) : rest_(rest) {}
        constexpr int operator*() const { return std::countr_zero(rest_); }
        constexpr iterator& operator++() { rest_ &= rest_ - 1; return *this; }
        constexpr iterator operator++(int) { auto t = *this; ++*this; return t; }
        constexpr bool operator==(const iterator&) const = default;
    private:
        std::uint64_t rest_ = 0;
    };
    constexpr iterator begin() const { return iterator(bits_); }
    constexpr iterator end() const { return iterator(0); }

private:
    std::uint64_t bits_ = 0;
};

/// Shortest-path length; std::nullopt stands for "no path" (infinite).
using Distance = std::optional<int>;

using Edge = std::pair<int, int>;

/// Immutable simple undirected graph on at most 64 vertices.
class Graph {
public:
    Graph() = default;

    /// Builds a graph on `n` vertices. Duplicate pairs collapse; loops and
    /// out-of-range endpoints throw InvalidArgument.
    static Graph build(int n, const std::vector<Edge>& edges);
    /// Same as build() but from adjacency rows; rows must be symmetric and loop-free.
    static Graph from_rows(int n, const std::vector<std::uint64_t>& rows);

    static Graph complete(int n);
    static Graph path(int n);
    static Graph cycle(int n);
    static Graph star(int leaves);
    static Graph empty(int n) { return build(n, {}); }

    int order() const { return n_; }
    int size() const { return m_; }
    VertexSet vertices() const { return VertexSet::range(n_); }

    bool adjacent(int u, int v) const { return (rows_[u] >> v) & 1U; }
    int degree(int v) const { return std::popcount(rows_[v]); }
    VertexSet neighbors(int v) const { return VertexSet(rows_[v]); }
    VertexSet closed_neighbors(int v) const { return VertexSet(rows_[v] | (std::uint64_t{1} << v)); }
    VertexSet neighbors(VertexSet s) const;
    VertexSet closed_neighbors(VertexSet s) const;
    std::uint64_t row(int v) const { return rows_[v]; }

    /// Edges as (u, v) with u < v, in lexicographic order.
    std::vector<Edge> edges() const;
    bool contains(VertexSet s) const { return s.is_subset_of(vertices()); }

    bool operator==(const Graph& other) const;

private:
    int n_ = 0;
    int m_ = 0;
    std::array<std::uint64_t, kMaxOrder> rows_{};
};

/// G[S], relabelled 0..|S|-1 by ascending original index.
Graph induced_subgraph(const Graph& g, VertexSet s);
/// G - v.
Graph delete_vertex(const Graph& g, int v);
/// Relabels vertex v to perm[v].
Graph relabel(const Graph& g, const std::vector<int>& perm);

Distance distance(const Graph& g, int u, int v);
/// BFS distances from `source`; unreachable vertices get std::nullopt.
std::vector<Distance> distances_from(const Graph& g, int source);
/// 0 for n <= 1; std::nullopt when disconnected.
Distance diameter(const Graph& g);

bool is_independent(const Graph& g, VertexSet s);
bool is_dominating(const Graph& g, VertexSet s);

/// Components in order of their smallest vertex.
std::vector<VertexSet> connected_components(const Graph& g);
bool is_connected(const Graph& g);
bool is_tree(const Graph& g);

std::string to_string(VertexSet s, int base = 0);

}  // namespace domiperf
