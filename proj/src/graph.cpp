#include "domiperf/graph.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

namespace domiperf {

VertexSet VertexSet::of(std::initializer_list<int> vertices)
{
    VertexSet s;
    for (int v : vertices) {
        if (v < 0 || v >= kMaxOrder)
            throw InvalidArgument("vertex index out of range: " + std::to_string(v));
        s.insert(v);
    }
    return s;
}

std::vector<int> VertexSet::to_vector() const
{
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(size()));
    for (int v : *this)
        out.push_back(v);
    return out;
}

bool VertexSet::lex_less(VertexSet a, VertexSet b)
{
    auto ia = a.begin();
    auto ib = b.begin();
    for (; ia != a.end() && ib != b.end(); ++ia, ++ib) {
        if (*ia != *ib)
            return *ia < *ib;
    }
    return ia == a.end() && ib != b.end();
}

Graph Graph::build(int n, const std::vector<Edge>& edges)
{
    if (n < 0 || n > kMaxOrder)
        throw InvalidArgument("graph order must be in [0, 64], got " + std::to_string(n));
    Graph g;
    g.n_ = n;
    for (auto [u, v] : edges) {
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw InvalidArgument("edge endpoint out of range: (" + std::to_string(u) + ", " + std::to_string(v) + ")");
        if (u == v)
            throw InvalidArgument("loop at vertex " + std::to_string(u));
        g.rows_[u] |= std::uint64_t{1} << v;
        g.rows_[v] |= std::uint64_t{1} << u;
    }
    int degree_sum = 0;
    for (int v = 0; v < n; ++v)
        degree_sum += std::popcount(g.rows_[v]);
    g.m_ = degree_sum / 2;
    return g;
}

Graph Graph::from_rows(int n, const std::vector<std::uint64_t>& rows)
{
    if (n < 0 || n > kMaxOrder || static_cast<int>(rows.size()) != n)
        throw InvalidArgument("adjacency rows do not match graph order");
    Graph g;
    g.n_ = n;
    const std::uint64_t all = VertexSet::range(n).bits();
    int degree_sum = 0;
    for (int v = 0; v < n; ++v) {
        if ((rows[v] & ~all) != 0 || ((rows[v] >> v) & 1U))
            throw InvalidArgument("adjacency row " + std::to_string(v) + " has a loop or out-of-range bit");
        g.rows_[v] = rows[v];
        degree_sum += std::popcount(rows[v]);
    }
    for (int u = 0; u < n; ++u)
        for (int v : VertexSet(rows[u]))
            if (!g.adjacent(v, u))
                throw InvalidArgument("adjacency rows are not symmetric");
    g.m_ = degree_sum / 2;
    return g;
}

Graph Graph::complete(int n)
{
    std::vector<Edge> e;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            e.emplace_back(u, v);
    return build(n, e);
}

Graph Graph::path(int n)
{
    std::vector<Edge> e;
    for (int v = 0; v + 1 < n; ++v)
        e.emplace_back(v, v + 1);
    return build(n, e);
}

Graph Graph::cycle(int n)
{
    if (n < 3)
        throw InvalidArgument("a cycle needs at least 3 vertices");
    auto e = path(n).edges();
    e.emplace_back(0, n - 1);
    return build(n, e);
}

Graph Graph::star(int leaves)
{
    std::vector<Edge> e;
    for (int v = 1; v <= leaves; ++v)
        e.emplace_back(0, v);
    return build(leaves + 1, e);
}

VertexSet Graph::neighbors(VertexSet s) const
{
    VertexSet out;
    for (int v : s)
        out |= neighbors(v);
    return out;
}

VertexSet Graph::closed_neighbors(VertexSet s) const
{
    return neighbors(s) | s;
}

std::vector<Edge> Graph::edges() const
{
    std::vector<Edge> out;
    out.reserve(static_cast<std::size_t>(m_));
    for (int u = 0; u < n_; ++u)
        for (int v : VertexSet(rows_[u] & ~((std::uint64_t{2} << u) - 1)))
            out.emplace_back(u, v);
    return out;
}

bool Graph::operator==(const Graph& other) const
{
    return n_ == other.n_ && std::equal(rows_.begin(), rows_.begin() + n_, other.rows_.begin());
}

Graph induced_subgraph(const Graph& g, VertexSet s)
{
    if (!g.contains(s))
        throw InvalidArgument("vertex set is not a subset of the graph's vertices");
    std::array<int, kMaxOrder> index{};
    int k = 0;
    for (int v : s)
        index[v] = k++;
    std::vector<std::uint64_t> rows(static_cast<std::size_t>(k), 0);
    for (int v : s)
        for (int w : g.neighbors(v) & s)
            rows[index[v]] |= std::uint64_t{1} << index[w];
    return Graph::from_rows(k, rows);
}

Graph delete_vertex(const Graph& g, int v)
{
    auto s = g.vertices();
    s.erase(v);
    return induced_subgraph(g, s);
}

Graph relabel(const Graph& g, const std::vector<int>& perm)
{
    std::vector<Edge> e;
    for (auto [u, v] : g.edges())
        e.emplace_back(perm[u], perm[v]);
    return Graph::build(g.order(), e);
}

std::vector<Distance> distances_from(const Graph& g, int source)
{
    std::vector<Distance> dist(static_cast<std::size_t>(g.order()));
    VertexSet seen = VertexSet::single(source);
    VertexSet frontier = seen;
    int level = 0;
    while (!frontier.empty()) {
        for (int v : frontier)
            dist[v] = level;
        frontier = g.neighbors(frontier) - seen;
        seen |= frontier;
        ++level;
    }
    return dist;
}

Distance distance(const Graph& g, int u, int v)
{
    if (u < 0 || v < 0 || u >= g.order() || v >= g.order())
        throw InvalidArgument("distance: vertex out of range");
    return distances_from(g, u)[v];
}

Distance diameter(const Graph& g)
{
    int best = 0;
    for (int u = 0; u < g.order(); ++u) {
        for (const auto& d : distances_from(g, u)) {
            if (!d)
                return std::nullopt;
            best = std::max(best, *d);
        }
    }
    return best;
}

bool is_independent(const Graph& g, VertexSet s)
{
    for (int v : s)
        if (g.neighbors(v).intersects(s))
            return false;
    return true;
}

bool is_dominating(const Graph& g, VertexSet s)
{
    return g.closed_neighbors(s) == g.vertices();
}

std::vector<VertexSet> connected_components(const Graph& g)
{
    std::vector<VertexSet> out;
    VertexSet left = g.vertices();
    while (!left.empty()) {
        VertexSet comp = VertexSet::single(left.first());
        VertexSet frontier = comp;
        while (!frontier.empty()) {
            frontier = g.neighbors(frontier) - comp;
            comp |= frontier;
        }
        out.push_back(comp);
        left -= comp;
    }
    return out;
}

bool is_connected(const Graph& g)
{
    return connected_components(g).size() <= 1;
}

bool is_tree(const Graph& g)
{
    return g.order() >= 1 && g.size() == g.order() - 1 && is_connected(g);
}

std::string to_string(VertexSet s, int base)
{
    std::ostringstream os;
    os << '{';
    bool first = true;
    for (int v : s) {
        os << (first ? "" : ",") << v + base;
        first = false;
    }
    os << '}';
    return os.str();
}

}  // namespace domiperf
