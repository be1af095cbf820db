#include "domiperf/enumeration.hpp"

#include "domiperf/canonical.hpp"
#include "domiperf/formats.hpp"
#include "domiperf/graph_classes.hpp"
#include "domiperf/patterns.hpp"

#include <algorithm>
#include <memory>
#include <mutex>
#include <set>
#include <unordered_set>

namespace domiperf {

namespace {

Graph add_vertex(const Graph& g, VertexSet neighbours)
{
    const int n = g.order();
    std::vector<std::uint64_t> rows(static_cast<std::size_t>(n + 1), 0);
    for (int v = 0; v < n; ++v)
        rows[v] = g.row(v) | (neighbours.contains(v) ? std::uint64_t{1} << n : 0);
    rows[n] = neighbours.bits();
    return Graph::from_rows(n + 1, rows);
}

// Levels 0..k of the full enumeration, built on demand and shared.
class LevelCache {
public:
    const std::vector<Graph>& level(int order)
    {
        std::lock_guard lock(mutex_);
        if (levels_.empty())
            levels_.push_back({Graph::empty(0)});
        while (static_cast<int>(levels_.size()) <= order) {
            std::vector<Graph> next;
            for (const auto& parent : levels_.back()) {
                auto kids = augment(parent);
                next.insert(next.end(), kids.begin(), kids.end());
            }
            levels_.push_back(std::move(next));
        }
        return levels_[static_cast<std::size_t>(order)];
    }

private:
    std::mutex mutex_;
    std::vector<std::vector<Graph>> levels_;
};

LevelCache& cache()
{
    static LevelCache c;
    return c;
}

class TreeCache {
public:
    const std::vector<Graph>& level(int order)
    {
        std::lock_guard lock(mutex_);
        if (levels_.empty())
            levels_.push_back({Graph::empty(1)});
        while (static_cast<int>(levels_.size()) < order) {
            std::vector<Graph> next;
            for (const auto& parent : levels_.back()) {
                auto kids = grow(parent);
                next.insert(next.end(), kids.begin(), kids.end());
            }
            levels_.push_back(std::move(next));
        }
        return levels_[static_cast<std::size_t>(order - 1)];
    }

private:
    static std::vector<Graph> grow(const Graph& parent)
    {
        const int n = parent.order();
        std::vector<Graph> kids;
        std::unordered_set<std::string> seen;
        for (int u = 0; u < n; ++u) {
            auto child = add_vertex(parent, VertexSet::single(u));
            const auto mine = rooted_tree_code(child, n);
            bool canonical = true;
            for (int leaf = 0; leaf < n && canonical; ++leaf)
                if (child.degree(leaf) == 1 && rooted_tree_code(child, leaf) > mine)
                    canonical = false;
            if (canonical && seen.insert(tree_code(child)).second)
                kids.push_back(std::move(child));
        }
        return kids;
    }

    std::mutex mutex_;
    std::vector<std::vector<Graph>> levels_;
};

TreeCache& tree_cache()
{
    static TreeCache c;
    return c;
}

}  // namespace

const char* to_string(GraphClass c)
{
    switch (c) {
    case GraphClass::All: return "all";
    case GraphClass::Connected: return "connected";
    case GraphClass::Tree: return "tree";
    case GraphClass::Chordal: return "chordal";
    case GraphClass::BlockGraph: return "block";
    case GraphClass::ClawFree: return "claw-free";
    }
    return "all";
}

GraphClass parse_graph_class(std::string_view name)
{
    for (auto c : {GraphClass::All, GraphClass::Connected, GraphClass::Tree, GraphClass::Chordal,
                   GraphClass::BlockGraph, GraphClass::ClawFree})
        if (name == to_string(c))
            return c;
    throw InvalidArgument("unknown graph class: " + std::string(name));
}

bool belongs_to(const Graph& g, GraphClass c)
{
    switch (c) {
    case GraphClass::All: return true;
    case GraphClass::Connected: return is_connected(g);
    case GraphClass::Tree: return is_tree(g);
    case GraphClass::Chordal: return is_chordal(g);
    case GraphClass::BlockGraph: return is_block_graph(g);
    case GraphClass::ClawFree: return is_claw_free(g);
    }
    return false;
}

std::vector<Graph> augment(const Graph& parent)
{
    const int n = parent.order() + 1;
    if (n > kMaxCanonicalOrder)
        throw InvalidArgument("augment: children would exceed the canonical-form cap");
    std::vector<Graph> kids;
    std::unordered_set<std::string> seen;
    const std::uint64_t subsets = std::uint64_t{1} << parent.order();
    for (std::uint64_t s = 0; s < subsets; ++s) {
        const auto child = add_vertex(parent, VertexSet(s));
        const auto form = canonical_form(child);
        const int deletion = static_cast<int>(std::find(form.labeling.begin(), form.labeling.end(), n - 1)
                                              - form.labeling.begin());
        if (!same_orbit(child, n - 1, deletion))
            continue;
        if (seen.insert(form.token).second)
            kids.push_back(parse_graph6(form.token));
    }
    return kids;
}

std::vector<Graph> enumerate_trees(int order)
{
    if (order < 1 || order > kMaxTreeOrder)
        throw InvalidArgument("tree enumeration supports orders 1..12, got " + std::to_string(order));
    return tree_cache().level(order);
}

std::vector<Graph> enumerate_graphs(int order, GraphClass filter)
{
    std::vector<Graph> out;
    for_each_graph(order, filter, [&](const Graph& g) { out.push_back(g); });
    return out;
}

void for_each_graph(int order, GraphClass filter, const std::function<void(const Graph&)>& visit)
{
    if (filter == GraphClass::Tree) {
        for (const auto& t : enumerate_trees(order))
            visit(t);
        return;
    }
    if (order < 0 || order > kMaxEnumerationOrder)
        throw InvalidArgument("graph enumeration supports orders 0..8, got " + std::to_string(order));
    for (const auto& g : cache().level(order))
        if (belongs_to(g, filter))
            visit(g);
}

}  // namespace domiperf
