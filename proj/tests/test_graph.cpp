#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "domiperf/enumeration.hpp"
#include "domiperf/graph.hpp"

#include <algorithm>

using namespace domiperf;

namespace {

Graph h7() { return Graph::build(6, {{0, 2}, {2, 4}, {1, 3}, {3, 5}}); }

// Centre 0, legs 0-(2i-1)-(2i) for i = 1..4.
Graph spider4()
{
    std::vector<Edge> e;
    for (int i = 1; i <= 4; ++i) {
        e.emplace_back(0, 2 * i - 1);
        e.emplace_back(2 * i - 1, 2 * i);
    }
    return Graph::build(9, e);
}

std::vector<int> degrees(const Graph& g)
{
    std::vector<int> d;
    for (int v : g.vertices())
        d.push_back(g.degree(v));
    std::sort(d.begin(), d.end());
    return d;
}

}  // namespace

TEST_CASE("build")
{
    auto e = Graph::build(0, {});
    CHECK(e.order() == 0);
    CHECK(e.size() == 0);

    CHECK(degrees(h7()) == std::vector<int>{1, 1, 1, 1, 2, 2});

    auto dup = Graph::build(3, {{0, 1}, {1, 0}, {0, 1}});
    CHECK(dup.size() == 1);

    CHECK_THROWS_AS(Graph::build(3, {{1, 1}}), InvalidArgument);
    CHECK_THROWS_AS(Graph::build(3, {{0, 3}}), InvalidArgument);
    CHECK_THROWS_AS(Graph::build(3, {{-1, 2}}), InvalidArgument);
    CHECK_THROWS_AS(Graph::build(65, {}), InvalidArgument);
    CHECK_NOTHROW(Graph::build(64, {{0, 63}}));
}

TEST_CASE("vertex sets")
{
    auto s = VertexSet::of({0, 3, 5});
    CHECK(s.size() == 3);
    CHECK(s.first() == 0);
    CHECK(s.last() == 5);
    CHECK(s.to_vector() == std::vector<int>{0, 3, 5});
    CHECK(VertexSet::lex_less(VertexSet::of({0, 3}), VertexSet::of({1, 2})));
    CHECK(VertexSet::lex_less(VertexSet::of({0}), VertexSet::of({0, 1})));
    CHECK_FALSE(VertexSet::lex_less(VertexSet::of({0, 1}), VertexSet::of({0, 1})));
    CHECK(to_string(s, 1) == "{1,4,6}");
    CHECK(VertexSet::range(64).size() == 64);
}

TEST_CASE("induced subgraph")
{
    auto p6 = Graph::path(6);
    CHECK(induced_subgraph(p6, p6.vertices()) == p6);
    CHECK(induced_subgraph(p6, VertexSet::of({0, 1, 2})) == Graph::path(3));
    auto c6 = Graph::cycle(6);
    for (int v = 0; v < 6; ++v) {
        auto p5 = induced_subgraph(c6, c6.vertices() - VertexSet::single(v));
        CHECK(p5.size() == 4);
        CHECK(is_tree(p5));
        CHECK(diameter(p5) == Distance{4});
    }
    // Relabelling is by ascending original index.
    auto g = Graph::build(5, {{1, 4}, {3, 4}});
    CHECK(induced_subgraph(g, VertexSet::of({1, 3, 4})) == Graph::build(3, {{0, 2}, {1, 2}}));
}

TEST_CASE("distances")
{
    auto p6 = Graph::path(6);
    CHECK(distance(p6, 0, 5) == Distance{5});
    CHECK_FALSE(distance(h7(), 0, 1).has_value());
    CHECK(distance(Graph::cycle(6), 0, 3) == Distance{3});
    CHECK(diameter(Graph::complete(4)) == Distance{1});
    CHECK(diameter(p6) == Distance{5});
    CHECK(diameter(spider4()) == Distance{4});
    CHECK(diameter(Graph::empty(1)) == Distance{0});
    CHECK(diameter(Graph::empty(0)) == Distance{0});
    CHECK_FALSE(diameter(h7()).has_value());
}

TEST_CASE("independence and domination predicates")
{
    CHECK(is_independent(Graph::cycle(5), VertexSet{}));
    CHECK_FALSE(is_independent(Graph::complete(3), VertexSet::of({0, 2})));
    CHECK(is_independent(h7(), VertexSet::of({0, 4, 1, 5})));
    CHECK(is_dominating(Graph::cycle(5), Graph::cycle(5).vertices()));
    auto h1 = Graph::build(6, {{0, 1}, {0, 2}, {0, 4}, {3, 4}, {4, 5}});
    CHECK(is_dominating(h1, VertexSet::of({0, 4})));
    CHECK_FALSE(is_dominating(Graph::path(6), VertexSet::of({0})));
}

TEST_CASE("components and trees")
{
    CHECK(connected_components(h7()).size() == 2);
    CHECK(connected_components(h7())[0] == VertexSet::of({0, 2, 4}));
    CHECK(is_tree(Graph::path(6)));
    CHECK_FALSE(is_tree(Graph::cycle(6)));
    CHECK_FALSE(is_tree(Graph::empty(0)));
    CHECK(is_tree(Graph::empty(1)));
    CHECK_FALSE(is_tree(Graph::empty(2)));
}

TEST_CASE("relabel and delete")
{
    auto g = Graph::build(3, {{0, 1}});
    CHECK(relabel(g, {2, 0, 1}) == Graph::build(3, {{2, 0}}));
    CHECK(delete_vertex(Graph::path(4), 1) == Graph::build(3, {{1, 2}}));
}

TEST_CASE("property: induced subgraphs stay simple and symmetric")
{
    for (const auto& g : enumerate_graphs(6)) {
        for (std::uint64_t s = 0; s < 64; s += 5) {
            auto h = induced_subgraph(g, VertexSet(s));
            int degree_sum = 0;
            for (int u : h.vertices()) {
                CHECK_FALSE(h.adjacent(u, u));
                degree_sum += h.degree(u);
                for (int v : h.vertices())
                    CHECK(h.adjacent(u, v) == h.adjacent(v, u));
            }
            CHECK(degree_sum == 2 * h.size());
        }
    }
}

TEST_CASE("property: distance is a metric on every component, n <= 7")
{
    for (int n = 1; n <= 7; ++n) {
        for (const auto& g : enumerate_graphs(n)) {
            std::vector<std::vector<Distance>> d;
            for (int u : g.vertices())
                d.push_back(distances_from(g, u));
            int longest = 0;
            for (int u = 0; u < n; ++u) {
                CHECK(d[u][u] == Distance{0});
                for (int v = 0; v < n; ++v) {
                    CHECK(d[u][v] == d[v][u]);
                    if (d[u][v])
                        longest = std::max(longest, *d[u][v]);
                    for (int w = 0; w < n; ++w)
                        if (d[u][v] && d[v][w])
                            CHECK(*d[u][w] <= *d[u][v] + *d[v][w]);
                }
            }
            if (is_connected(g))
                CHECK(diameter(g) == Distance{longest});
            else
                CHECK_FALSE(diameter(g).has_value());
        }
    }
}
