#include "domiperf/graph_classes.hpp"

#include "domiperf/patterns.hpp"
#include "domiperf/perfection.hpp"

#include <algorithm>
#include <functional>

namespace domiperf {

namespace {

struct Legs {
    bool ok = false;
    int k = 0;
    int once = 0;   // legs of length 2
    int twice = 0;  // legs of length 3
};

// Reads g as a star around `centre` whose legs have length 1, 2 or 3.
Legs legs_around(const Graph& g, int centre)
{
    Legs legs;
    legs.k = g.degree(centre);
    int covered = 1;
    for (int a : g.neighbors(centre)) {
        int length = 1;
        int prev = centre;
        int cur = a;
        while (g.degree(cur) == 2 && length < 4) {
            const int next = (g.neighbors(cur) - VertexSet::single(prev)).first();
            prev = cur;
            cur = next;
            ++length;
        }
        if (g.degree(cur) != 1 || length > 3)
            return legs;
        covered += length;
        if (length == 2)
            ++legs.once;
        else if (length == 3)
            ++legs.twice;
    }
    legs.ok = covered == g.order();
    return legs;
}

const std::vector<const Pattern*>& h1_h7_h8()
{
    static const std::vector<const Pattern*> family{&pattern("H1"), &pattern("H7"), &pattern("H8")};
    return family;
}

const std::vector<const Pattern*>& h7_h8_h9()
{
    static const std::vector<const Pattern*> family{&pattern("H7"), &pattern("H8"), &pattern("H9")};
    return family;
}

}  // namespace

const char* to_string(TreeClass c)
{
    switch (c) {
    case TreeClass::Singleton: return "SINGLETON";
    case TreeClass::Star: return "STAR";
    case TreeClass::Spider: return "SPIDER";
    case TreeClass::WoundedSpider: return "WOUNDED_SPIDER";
    case TreeClass::Broom3: return "BROOM3";
    case TreeClass::Other: return "OTHER";
    }
    return "OTHER";
}

TreeClass classify_tree(const Graph& g)
{
    if (!is_tree(g))
        throw InvalidArgument("classify_tree: input is not a tree");
    const int n = g.order();
    if (n == 1)
        return TreeClass::Singleton;
    for (int c = 0; c < n; ++c)
        if (g.degree(c) == n - 1)
            return TreeClass::Star;

    std::vector<Legs> shapes;
    for (int c = 0; c < n; ++c)
        if (g.degree(c) >= 2)
            shapes.push_back(legs_around(g, c));
    auto any = [&](auto pred) { return std::any_of(shapes.begin(), shapes.end(), pred); };
    if (any([](const Legs& l) { return l.ok && l.twice == 0 && l.once == l.k; }))
        return TreeClass::Spider;
    if (any([](const Legs& l) { return l.ok && l.twice == 0 && l.once >= 1 && l.once <= l.k - 1; }))
        return TreeClass::WoundedSpider;
    if (any([](const Legs& l) { return l.ok && l.twice == 1 && l.once == 0 && l.k >= 2; }))
        return TreeClass::Broom3;
    return TreeClass::Other;
}

TreeConditions tree_corollary_conditions(const Graph& g)
{
    if (!is_tree(g))
        throw InvalidArgument("tree_corollary_conditions: input is not a tree");
    TreeConditions c;
    c.perfect = perfect_by_theorem(g).perfect;
    c.h1_h7_h8_free = free_of(g, h1_h7_h8()).free;
    int high = 0;
    for (int v = 0; v < g.order(); ++v)
        high += g.degree(v) >= 3 ? 1 : 0;
    const auto d = diameter(g);
    c.diameter_degree = d && *d <= 4 && high <= 1;
    c.taxonomy = classify_tree(g) != TreeClass::Other;
    return c;
}

std::vector<int> maximum_cardinality_search(const Graph& g)
{
    const int n = g.order();
    std::vector<int> order;
    std::vector<int> weight(static_cast<std::size_t>(n), 0);
    VertexSet done;
    for (int step = 0; step < n; ++step) {
        int pick = -1;
        for (int v = 0; v < n; ++v)
            if (!done.contains(v) && (pick < 0 || weight[v] > weight[pick]))
                pick = v;
        order.push_back(pick);
        done.insert(pick);
        for (int w : g.neighbors(pick) - done)
            ++weight[w];
    }
    return order;
}

bool is_chordal(const Graph& g)
{
    VertexSet earlier;
    for (int v : maximum_cardinality_search(g)) {
        const VertexSet back = g.neighbors(v) & earlier;
        for (int u : back)
            if (!(back - VertexSet::single(u)).is_subset_of(g.neighbors(u)))
                return false;
        earlier.insert(v);
    }
    return true;
}

const char* to_string(BlockKind k)
{
    switch (k) {
    case BlockKind::End: return "end";
    case BlockKind::Inner: return "inner";
    case BlockKind::Isolated: return "isolated";
    }
    return "unknown";
}

BlockDecomposition block_decomposition(const Graph& g)
{
    const int n = g.order();
    BlockDecomposition out;
    std::vector<int> disc(static_cast<std::size_t>(n), -1);
    std::vector<int> low(static_cast<std::size_t>(n), 0);
    std::vector<Edge> stack;
    int clock = 0;

    std::function<void(int, int)> dfs = [&](int v, int parent) {
        disc[v] = low[v] = clock++;
        int children = 0;
        for (int w : g.neighbors(v)) {
            if (disc[w] < 0) {
                ++children;
                stack.emplace_back(v, w);
                dfs(w, v);
                low[v] = std::min(low[v], low[w]);
                if (low[w] >= disc[v]) {
                    if (parent >= 0 || children > 1)
                        out.cut_vertices.insert(v);
                    VertexSet block;
                    while (true) {
                        auto [a, b] = stack.back();
                        stack.pop_back();
                        block.insert(a);
                        block.insert(b);
                        if (a == v && b == w)
                            break;
                    }
                    out.blocks.push_back(block);
                }
            } else if (w != parent && disc[w] < disc[v]) {
                stack.emplace_back(v, w);
                low[v] = std::min(low[v], disc[w]);
            }
        }
    };
    for (int v = 0; v < n; ++v) {
        if (disc[v] >= 0)
            continue;
        if (g.degree(v) == 0) {
            disc[v] = clock++;
            out.blocks.push_back(VertexSet::single(v));
            continue;
        }
        dfs(v, -1);
    }

    // Deterministic order: by smallest member, then lexicographically.
    std::sort(out.blocks.begin(), out.blocks.end(), VertexSet::lex_less);
    out.blocks_at.assign(static_cast<std::size_t>(n), 0);
    for (const auto& b : out.blocks) {
        for (int v : b)
            ++out.blocks_at[v];
        const int cuts = (b & out.cut_vertices).size();
        out.kinds.push_back(cuts == 0 ? BlockKind::Isolated : cuts == 1 ? BlockKind::End : BlockKind::Inner);
    }
    return out;
}

bool is_block_graph(const Graph& g)
{
    for (const auto& b : block_decomposition(g).blocks) {
        const int k = b.size();
        int inside = 0;
        for (int v : b)
            inside += (g.neighbors(v) & b).size();
        if (inside != k * (k - 1))
            return false;
    }
    return true;
}

bool block_graph_corollary(const Graph& g)
{
    if (g.order() == 0 || !is_connected(g) || !is_block_graph(g))
        throw InvalidArgument("block_graph_corollary: input must be a connected block graph");
    const int d = *diameter(g);
    if (d <= 2)
        return true;
    const auto bd = block_decomposition(g);
    VertexSet in_three;
    for (int v = 0; v < g.order(); ++v)
        if (bd.blocks_at[v] >= 3)
            in_three.insert(v);
    if (d == 3)
        return in_three.size() <= 1;
    if (d != 4)
        return false;

    bool inner_all_edges = true;
    int large_inner = 0;
    VertexSet large_block;
    for (std::size_t i = 0; i < bd.blocks.size(); ++i) {
        if (bd.kinds[i] != BlockKind::Inner)
            continue;
        if (bd.blocks[i].size() != 2)
            inner_all_edges = false;
        if (bd.blocks[i].size() >= 3) {
            ++large_inner;
            large_block = bd.blocks[i];
        }
    }
    const bool case_a = inner_all_edges && in_three.size() <= 1;
    const bool case_b = large_inner == 1
                        && (in_three.empty() || (in_three.size() == 1 && in_three.is_subset_of(large_block)));
    return case_a || case_b;
}

bool chordal_corollary(const Graph& g)
{
    if (!is_chordal(g))
        throw InvalidArgument("chordal_corollary: input is not chordal");
    return free_of(g, h1_h7_h8()).free;
}

bool claw_free_corollary(const Graph& g)
{
    if (!is_claw_free(g))
        throw InvalidArgument("claw_free_corollary: input is not claw-free");
    return free_of(g, h7_h8_h9()).free;
}

Graph line_graph(const Graph& h)
{
    const auto e = h.edges();
    if (e.size() > static_cast<std::size_t>(kMaxOrder))
        throw InvalidArgument("line_graph: host has more than 64 edges");
    std::vector<Edge> out;
    for (std::size_t i = 0; i < e.size(); ++i)
        for (std::size_t j = i + 1; j < e.size(); ++j)
            if (e[i].first == e[j].first || e[i].first == e[j].second || e[i].second == e[j].first
                || e[i].second == e[j].second)
                out.emplace_back(static_cast<int>(i), static_cast<int>(j));
    return Graph::build(static_cast<int>(e.size()), out);
}

Graph corona_k1(const Graph& h)
{
    const int n = h.order();
    if (2 * n > kMaxOrder)
        throw InvalidArgument("corona_k1: result would exceed 64 vertices");
    auto e = h.edges();
    for (int v = 0; v < n; ++v)
        e.emplace_back(v, n + v);
    return Graph::build(2 * n, e);
}

Graph middle_graph(const Graph& h)
{
    if (h.order() + h.size() > kMaxOrder)
        throw InvalidArgument("middle_graph: result would exceed 64 vertices");
    return line_graph(corona_k1(h));
}

Graph total_graph(const Graph& h)
{
    const int n = h.order();
    const auto e = h.edges();
    if (n + static_cast<int>(e.size()) > kMaxOrder)
        throw InvalidArgument("total_graph: result would exceed 64 vertices");
    auto out = h.edges();
    const auto line = line_graph(h);
    for (auto [a, b] : line.edges())
        out.emplace_back(n + a, n + b);
    for (std::size_t i = 0; i < e.size(); ++i) {
        out.emplace_back(e[i].first, n + static_cast<int>(i));
        out.emplace_back(e[i].second, n + static_cast<int>(i));
    }
    return Graph::build(n + static_cast<int>(e.size()), out);
}

Construction parse_construction(std::string_view name)
{
    if (name == "line")
        return Construction::Line;
    if (name == "corona")
        return Construction::Corona;
    if (name == "middle")
        return Construction::Middle;
    if (name == "total")
        return Construction::Total;
    throw InvalidArgument("unknown construction: " + std::string(name));
}

Graph construct(const Graph& h, Construction c)
{
    switch (c) {
    case Construction::Line: return line_graph(h);
    case Construction::Corona: return corona_k1(h);
    case Construction::Middle: return middle_graph(h);
    case Construction::Total: return total_graph(h);
    }
    throw InvalidArgument("unknown construction");
}

bool line_graph_criterion(const Graph& h)
{
    return !contains_subgraph(h, pattern("TWO_P4")) && !contains_subgraph(h, pattern("P7"))
           && !contains_subgraph(h, pattern("C6"));
}

bool middle_graph_criterion(const Graph& h)
{
    const auto e = h.edges();
    for (std::size_t i = 0; i < e.size(); ++i)
        for (std::size_t j = i + 1; j < e.size(); ++j)
            if (e[i].first != e[j].first && e[i].first != e[j].second && e[i].second != e[j].first
                && e[i].second != e[j].second)
                return false;
    return true;
}

bool middle_graph_star_phrasing(const Graph& h)
{
    int nontrivial = 0;
    for (const auto& comp : connected_components(h)) {
        if (comp.size() < 2)
            continue;
        ++nontrivial;
        const auto sub = induced_subgraph(h, comp);
        if (!is_tree(sub))
            return false;
        bool has_centre = false;
        for (int v = 0; v < sub.order(); ++v)
            has_centre = has_centre || sub.degree(v) == sub.order() - 1;
        if (!has_centre)
            return false;
    }
    return nontrivial <= 1;
}

}  // namespace domiperf
