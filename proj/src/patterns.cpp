#include "domiperf/patterns.hpp"

#include <algorithm>
#include <cctype>

namespace domiperf {

namespace {

Pattern make_pattern(std::string name, int order, std::vector<Edge> one_based)
{
    std::vector<Edge> zero_based;
    zero_based.reserve(one_based.size());
    for (auto [u, v] : one_based)
        zero_based.emplace_back(u - 1, v - 1);
    return Pattern{std::move(name), std::move(one_based), Graph::build(order, zero_based)};
}

Pattern path_pattern(const std::string& name, int order)
{
    std::vector<Edge> e;
    for (int v = 1; v < order; ++v)
        e.emplace_back(v, v + 1);
    return make_pattern(name, order, e);
}

std::vector<Pattern> build_catalog()
{
    const std::vector<Edge> h1 = {{1, 2}, {1, 3}, {1, 5}, {4, 5}, {5, 6}};
    auto h2 = h1;
    h2.emplace_back(3, 4);
    auto h3 = h2;
    h3.emplace_back(3, 6);
    auto h4 = h3;
    h4.insert(h4.end(), {{2, 4}, {2, 6}});

    std::vector<Pattern> out;
    out.push_back(make_pattern("H1", 6, h1));
    out.push_back(make_pattern("H2", 6, h2));
    out.push_back(make_pattern("H3", 6, h3));
    out.push_back(make_pattern("H4", 6, h4));
    out.push_back(make_pattern("H5", 6, {{1, 2}, {1, 3}, {1, 5}, {3, 4}, {4, 5}, {5, 6}, {2, 6}}));
    out.push_back(make_pattern("H6", 6, {{1, 2}, {1, 3}, {1, 5}, {3, 4}, {3, 6}, {4, 5}, {5, 6}, {2, 6}}));
    out.push_back(make_pattern("H7", 6, {{1, 3}, {3, 5}, {2, 4}, {4, 6}}));
    out.push_back(make_pattern("H8", 6, {{1, 2}, {1, 3}, {3, 5}, {2, 4}, {4, 6}}));
    out.push_back(make_pattern("H9", 6, {{1, 2}, {1, 3}, {3, 5}, {5, 6}, {2, 4}, {4, 6}}));
    out.push_back(make_pattern("H10", 6, {{1, 2}, {2, 4}, {3, 4}, {3, 5}, {4, 6}, {5, 6}}));

    out.push_back(make_pattern("CLAW", 4, {{1, 2}, {1, 3}, {1, 4}}));
    for (int k = 2; k <= 7; ++k)
        out.push_back(path_pattern("P" + std::to_string(k), k));
    out.push_back(make_pattern("C6", 6, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {1, 6}}));
    out.push_back(make_pattern("TWO_P3", 6, {{1, 2}, {2, 3}, {4, 5}, {5, 6}}));
    out.push_back(make_pattern("TWO_P4", 8, {{1, 2}, {2, 3}, {3, 4}, {5, 6}, {6, 7}, {7, 8}}));
    return out;
}

bool isomorphic(const Graph& a, const Graph& b)
{
    return a.order() == b.order() && a.size() == b.size() && find_embedding(a, b, MatchMode::Induced).has_value();
}

const Pattern& lookup(const std::vector<Pattern>& all, std::string_view name)
{
    for (const auto& p : all)
        if (p.name == name)
            return p;
    throw InvalidArgument("unknown pattern: " + std::string(name));
}

// Pattern vertices in search order: each next vertex has the most
// already-placed neighbours, then the highest degree, then the lowest index.
std::vector<int> search_order(const Graph& pattern)
{
    const int k = pattern.order();
    std::vector<int> order;
    VertexSet placed;
    for (int step = 0; step < k; ++step) {
        int best = -1;
        std::pair<int, int> key{-1, -1};
        for (int v = 0; v < k; ++v) {
            if (placed.contains(v))
                continue;
            std::pair<int, int> cand{(pattern.neighbors(v) & placed).size(), pattern.degree(v)};
            if (cand > key) {
                key = cand;
                best = v;
            }
        }
        order.push_back(best);
        placed.insert(best);
    }
    return order;
}

class Matcher {
public:
    Matcher(const Graph& host, const Graph& pattern, MatchMode mode)
        : host_(host), pattern_(pattern), mode_(mode), order_(search_order(pattern)), map_(static_cast<std::size_t>(pattern.order()), -1)
    {
        for (int p = 0; p < pattern.order(); ++p) {
            VertexSet ok;
            for (int h = 0; h < host.order(); ++h)
                if (host.degree(h) >= pattern.degree(p))
                    ok.insert(h);
            degree_ok_.push_back(ok);
        }
    }

    std::optional<Embedding> run()
    {
        if (pattern_.order() > host_.order() || pattern_.size() > host_.size())
            return std::nullopt;
        if (extend(0, VertexSet{}))
            return Embedding{map_, mode_};
        return std::nullopt;
    }

private:
    bool extend(std::size_t depth, VertexSet used)
    {
        if (depth == order_.size())
            return true;
        const int p = order_[depth];
        VertexSet cand = degree_ok_[p] - used;
        for (std::size_t i = 0; i < depth && !cand.empty(); ++i) {
            const int q = order_[i];
            const VertexSet hn = host_.neighbors(map_[q]);
            if (pattern_.adjacent(p, q))
                cand &= hn;
            else if (mode_ == MatchMode::Induced)
                cand -= hn;
        }
        for (int h : cand) {
            map_[p] = h;
            VertexSet next = used;
            next.insert(h);
            if (extend(depth + 1, next))
                return true;
        }
        map_[p] = -1;
        return false;
    }

    const Graph& host_;
    const Graph& pattern_;
    MatchMode mode_;
    std::vector<int> order_;
    std::vector<int> map_;
    std::vector<VertexSet> degree_ok_;
};

}  // namespace

VertexSet Embedding::image() const
{
    VertexSet s;
    for (int h : map)
        s.insert(h);
    return s;
}

const std::vector<Pattern>& catalog()
{
    static const std::vector<Pattern> all = [] {
        auto built = build_catalog();
        const bool ok = isomorphic(lookup(built, "H7").graph, lookup(built, "TWO_P3").graph)
                        && isomorphic(lookup(built, "H8").graph, lookup(built, "P6").graph)
                        && isomorphic(lookup(built, "H9").graph, lookup(built, "C6").graph);
        if (!ok)
            throw std::logic_error("pattern catalog: H7/H8/H9 do not match 2P3/P6/C6");
        return built;
    }();
    return all;
}

std::vector<const Pattern*> forbidden_family()
{
    std::vector<const Pattern*> out;
    for (int k = 0; k < 10; ++k)
        out.push_back(&catalog()[static_cast<std::size_t>(k)]);
    return out;
}

const Pattern& pattern(std::string_view name)
{
    std::string upper;
    for (char c : name)
        upper.push_back(static_cast<char>(std::toupper(static_cast<unsigned char>(c))));
    if (upper == "2P3")
        upper = "TWO_P3";
    else if (upper == "2P4")
        upper = "TWO_P4";
    else if (upper == "K13" || upper == "K1,3")
        upper = "CLAW";
    return lookup(catalog(), upper);
}

std::optional<Embedding> find_embedding(const Graph& host, const Graph& pattern, MatchMode mode)
{
    return Matcher(host, pattern, mode).run();
}

std::optional<Embedding> find_induced(const Graph& host, const Pattern& p)
{
    return find_embedding(host, p.graph, MatchMode::Induced);
}

bool contains_subgraph(const Graph& host, const Pattern& p)
{
    return find_embedding(host, p.graph, MatchMode::Subgraph).has_value();
}

bool is_valid_embedding(const Graph& host, const Graph& pattern, const Embedding& e)
{
    if (static_cast<int>(e.map.size()) != pattern.order())
        return false;
    if (e.image().size() != pattern.order())
        return false;
    for (int h : e.map)
        if (h < 0 || h >= host.order())
            return false;
    for (int p = 0; p < pattern.order(); ++p) {
        for (int q = p + 1; q < pattern.order(); ++q) {
            const bool pe = pattern.adjacent(p, q);
            const bool he = host.adjacent(e.map[p], e.map[q]);
            if (pe && !he)
                return false;
            if (e.mode == MatchMode::Induced && !pe && he)
                return false;
        }
    }
    return true;
}

ForbiddenResult free_of(const Graph& host, const std::vector<const Pattern*>& family)
{
    for (const Pattern* p : family) {
        if (auto e = find_induced(host, *p))
            return ForbiddenResult{false, PatternMatch{p->name, std::move(*e)}};
    }
    return ForbiddenResult{};
}

ForbiddenResult forbidden_free(const Graph& host)
{
    static const auto family = forbidden_family();
    return free_of(host, family);
}

bool is_claw_free(const Graph& g)
{
    return !find_induced(g, pattern("CLAW")).has_value();
}

}  // namespace domiperf
