#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "domiperf/canonical.hpp"
#include "domiperf/enumeration.hpp"
#include "domiperf/graph_classes.hpp"
#include "domiperf/patterns.hpp"
#include "domiperf/perfection.hpp"

#include "oracles.hpp"

#include <set>

using namespace domiperf;

namespace {

bool isomorphic(const Graph& a, const Graph& b) { return canonical_form(a) == canonical_form(b); }

// K_{1,k} with every edge subdivided `once` times, except `twice` legs subdivided twice.
Graph star_with_legs(int k, int once, int twice)
{
    std::vector<Edge> e;
    int next = 1;
    for (int leg = 0; leg < k; ++leg) {
        const int length = leg < once ? 2 : leg < once + twice ? 3 : 1;
        int prev = 0;
        for (int step = 0; step < length; ++step) {
            e.emplace_back(prev, next);
            prev = next++;
        }
    }
    return Graph::build(next, e);
}

// Chordless cycle of length >= 4 among the induced subgraphs, by brute force.
bool has_hole(const Graph& g)
{
    for (std::uint64_t s = 0; s < (std::uint64_t{1} << g.order()); ++s) {
        if (__builtin_popcountll(s) < 4)
            continue;
        const auto h = induced_subgraph(g, VertexSet(s));
        bool two_regular = true;
        for (int v : h.vertices())
            two_regular = two_regular && h.degree(v) == 2;
        if (two_regular && is_connected(h))
            return true;
    }
    return false;
}

bool has_induced_diamond(const Graph& g)
{
    const auto diamond = Graph::build(4, {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3}});
    return oracle::embeds(g, diamond, true);
}

int components(const Graph& g) { return static_cast<int>(connected_components(g).size()); }

}  // namespace

TEST_CASE("tree taxonomy")
{
    CHECK(classify_tree(Graph::empty(1)) == TreeClass::Singleton);
    CHECK(classify_tree(Graph::star(4)) == TreeClass::Star);
    CHECK(classify_tree(Graph::star(1)) == TreeClass::Star);
    CHECK(classify_tree(star_with_legs(4, 4, 0)) == TreeClass::Spider);
    CHECK(classify_tree(Graph::path(4)) == TreeClass::WoundedSpider);
    CHECK(classify_tree(star_with_legs(4, 3, 0)) == TreeClass::WoundedSpider);
    CHECK(classify_tree(star_with_legs(5, 0, 1)) == TreeClass::Broom3);
    CHECK(classify_tree(star_with_legs(4, 0, 1)) == TreeClass::Broom3);
    CHECK(classify_tree(Graph::path(6)) == TreeClass::Other);
    CHECK(classify_tree(star_with_legs(3, 1, 1)) == TreeClass::Other);
    CHECK_THROWS_AS(classify_tree(Graph::cycle(4)), InvalidArgument);
    CHECK(std::string(to_string(TreeClass::WoundedSpider)) == "WOUNDED_SPIDER");
}

TEST_CASE("tree conditions")
{
    // Wounded spider on 7 vertices: centre 6, legs 6-3-2 and 6-5-4, leaves 0 and 1.
    const auto wounded = Graph::build(7, {{6, 3}, {3, 2}, {6, 5}, {5, 4}, {6, 0}, {6, 1}});
    for (const auto& t : {star_with_legs(5, 0, 1), star_with_legs(4, 0, 1), star_with_legs(4, 4, 0), wounded,
                          Graph::star(4), Graph::empty(1)}) {
        const auto c = tree_corollary_conditions(t);
        CHECK(c.perfect);
        CHECK(c.all_equal());
    }
    const auto p6 = tree_corollary_conditions(Graph::path(6));
    CHECK_FALSE(p6.perfect);
    CHECK_FALSE(p6.h1_h7_h8_free);
    CHECK_FALSE(p6.diameter_degree);
    CHECK_FALSE(p6.taxonomy);
    for (int n = 1; n <= 10; ++n)
        for (const auto& t : enumerate_trees(n))
            CHECK(tree_corollary_conditions(t).all_equal());
}

TEST_CASE("chordality")
{
    for (int n = 1; n <= 9; ++n)
        for (const auto& t : enumerate_trees(n))
            CHECK(is_chordal(t));
    CHECK_FALSE(is_chordal(Graph::cycle(6)));
    CHECK(is_chordal(Graph::complete(5)));
    CHECK(is_chordal(Graph::empty(0)));
    const auto mcs = maximum_cardinality_search(Graph::cycle(5));
    CHECK(std::set<int>(mcs.begin(), mcs.end()).size() == 5);
}

TEST_CASE("oracle: chordal iff no hole; block graph iff chordal and diamond-free, n <= 7")
{
    for (int n = 1; n <= 7; ++n)
        for (const auto& g : enumerate_graphs(n)) {
            CHECK(is_chordal(g) == !has_hole(g));
            CHECK(is_block_graph(g) == (is_chordal(g) && !has_induced_diamond(g)));
        }
}

TEST_CASE("block decomposition examples")
{
    const auto p4 = block_decomposition(Graph::path(4));
    CHECK(p4.blocks.size() == 3);
    CHECK(p4.cut_vertices == VertexSet::of({1, 2}));
    CHECK(std::count(p4.kinds.begin(), p4.kinds.end(), BlockKind::End) == 2);
    CHECK(std::count(p4.kinds.begin(), p4.kinds.end(), BlockKind::Inner) == 1);
    CHECK(p4.blocks_at == std::vector<int>{1, 2, 2, 1});

    const auto k4 = block_decomposition(Graph::complete(4));
    CHECK(k4.blocks.size() == 1);
    CHECK(k4.cut_vertices.empty());
    CHECK(k4.kinds[0] == BlockKind::Isolated);

    const auto broom = block_decomposition(star_with_legs(4, 0, 1));
    for (auto b : broom.blocks)
        CHECK(b.size() == 2);

    const auto isolated = block_decomposition(Graph::empty(2));
    CHECK(isolated.blocks.size() == 2);
}

TEST_CASE("property: block decompositions, n <= 7")
{
    for (int n = 1; n <= 7; ++n)
        for (const auto& g : enumerate_graphs(n)) {
            const auto d = block_decomposition(g);
            // Cut vertices by brute force.
            VertexSet cuts;
            for (int v : g.vertices()) {
                if (components(delete_vertex(g, v)) > components(g) - (g.degree(v) == 0 ? 1 : 0))
                    cuts.insert(v);
            }
            CHECK(d.cut_vertices == cuts);
            for (std::size_t i = 0; i < d.blocks.size(); ++i) {
                CHECK(is_connected(induced_subgraph(g, d.blocks[i])));
                for (std::size_t j = i + 1; j < d.blocks.size(); ++j)
                    CHECK((d.blocks[i] & d.blocks[j]).size() <= 1);
                const int inside = (d.blocks[i] & d.cut_vertices).size();
                if (d.kinds[i] == BlockKind::End)
                    CHECK(inside == 1);
                if (d.kinds[i] == BlockKind::Inner)
                    CHECK(inside >= 2);
                if (d.kinds[i] == BlockKind::Isolated)
                    CHECK(inside == 0);
            }
            for (auto [u, v] : g.edges()) {
                int holding = 0;
                for (auto b : d.blocks)
                    holding += b.contains(u) && b.contains(v);
                CHECK(holding == 1);
            }
        }
}

TEST_CASE("block graphs")
{
    CHECK(is_block_graph(Graph::path(5)));
    CHECK_FALSE(is_block_graph(Graph::cycle(6)));
    auto k4_pendant = Graph::build(5, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}, {3, 4}});
    CHECK(is_block_graph(k4_pendant));
    CHECK(block_graph_corollary(Graph::complete(4)));
    CHECK_FALSE(block_graph_corollary(Graph::path(6)));
    CHECK(block_graph_corollary(star_with_legs(4, 4, 0)));
    CHECK_THROWS_AS(block_graph_corollary(Graph::cycle(5)), InvalidArgument);
    CHECK_THROWS_AS(block_graph_corollary(Graph::empty(2)), InvalidArgument);
    for (int n = 1; n <= 7; ++n)
        for (const auto& g : enumerate_graphs(n, GraphClass::BlockGraph)) {
            CHECK(is_chordal(g));
            if (is_connected(g))
                CHECK(block_graph_corollary(g) == perfect_by_theorem(g).perfect);
        }
}

TEST_CASE("chordal and claw-free reductions")
{
    CHECK(chordal_corollary(Graph::path(5)));
    CHECK_FALSE(chordal_corollary(pattern("H1").graph));
    CHECK_THROWS_AS(chordal_corollary(Graph::cycle(6)), InvalidArgument);
    CHECK_FALSE(claw_free_corollary(Graph::cycle(6)));
    CHECK_THROWS_AS(claw_free_corollary(Graph::star(3)), InvalidArgument);
    for (int n = 1; n <= 7; ++n)
        for (const auto& g : enumerate_graphs(n)) {
            if (is_chordal(g))
                CHECK(chordal_corollary(g) == perfect_by_theorem(g).perfect);
            if (is_claw_free(g))
                CHECK(claw_free_corollary(g) == perfect_by_theorem(g).perfect);
        }
}

TEST_CASE("constructions")
{
    CHECK(line_graph(Graph::star(3)) == Graph::complete(3));
    CHECK(isomorphic(corona_k1(Graph::complete(2)), Graph::path(4)));
    CHECK(isomorphic(middle_graph(Graph::complete(2)), Graph::path(3)));
    CHECK(line_graph(Graph::path(7)) == Graph::path(6));
    CHECK(corona_k1(Graph::path(3)).order() == 6);
    CHECK(corona_k1(Graph::path(3)).adjacent(1, 4));
    CHECK(isomorphic(total_graph(Graph::complete(2)), Graph::complete(3)));
    const auto t3 = total_graph(Graph::path(3));
    CHECK(t3.order() == 5);
    CHECK(t3.size() == 7);
    CHECK(line_graph(Graph::empty(3)).order() == 0);
    CHECK_THROWS_AS(line_graph(Graph::complete(13)), InvalidArgument);
    CHECK_THROWS_AS(corona_k1(Graph::empty(33)), InvalidArgument);
    CHECK(construct(Graph::complete(2), parse_construction("middle")) == middle_graph(Graph::complete(2)));
    CHECK_THROWS_AS(parse_construction("square"), InvalidArgument);
}

TEST_CASE("oracle: line graph adjacency is edge incidence")
{
    for (const auto& h : enumerate_graphs(6)) {
        const auto e = h.edges();
        const auto l = line_graph(h);
        REQUIRE(l.order() == static_cast<int>(e.size()));
        for (std::size_t i = 0; i < e.size(); ++i)
            for (std::size_t j = 0; j < e.size(); ++j) {
                const bool share = i != j
                                   && (e[i].first == e[j].first || e[i].first == e[j].second
                                       || e[i].second == e[j].first || e[i].second == e[j].second);
                CHECK(l.adjacent(static_cast<int>(i), static_cast<int>(j)) == share);
            }
    }
}

TEST_CASE("line and middle graph criteria")
{
    CHECK_FALSE(line_graph_criterion(Graph::cycle(6)));
    CHECK(line_graph_criterion(Graph::star(5)));
    CHECK_FALSE(line_graph_criterion(Graph::path(7)));
    const auto two_k2 = Graph::build(4, {{0, 1}, {2, 3}});
    CHECK_FALSE(middle_graph_criterion(two_k2));
    CHECK(middle_graph_criterion(Graph::star(4)));
    CHECK(middle_graph_criterion(Graph::complete(3)));
    CHECK_FALSE(middle_graph_star_phrasing(Graph::complete(3)));
    CHECK(middle_graph_star_phrasing(Graph::star(4)));
    CHECK(perfect_by_theorem(middle_graph(Graph::complete(3))).perfect);
    for (int n = 1; n <= 6; ++n)
        for (const auto& h : enumerate_graphs(n)) {
            CHECK(line_graph_criterion(h) == perfect_by_theorem(line_graph(h)).perfect);
            if (n <= 5)
                CHECK(middle_graph_criterion(h) == perfect_by_theorem(middle_graph(h)).perfect);
        }
}
