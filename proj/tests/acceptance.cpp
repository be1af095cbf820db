// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include "domiperf/canonical.hpp"
#include "domiperf/enumeration.hpp"
#include "domiperf/formats.hpp"
#include "domiperf/graph_classes.hpp"
#include "domiperf/invariants.hpp"
#include "domiperf/patterns.hpp"
#include "domiperf/perfection.hpp"

#include "oracles.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <sstream>
#include <string>

using namespace domiperf;

namespace {

struct Result {
    bool pass = false;
    std::string detail;
};

struct Criterion {
    int id;
    const char* title;
    double limit_seconds;  // 0: no time bound
    std::function<Result()> run;
};

std::vector<Graph> all_up_to(int order_max, GraphClass filter = GraphClass::All)
{
    std::vector<Graph> out;
    for (int n = 1; n <= order_max; ++n)
        for_each_graph(n, filter, [&](const Graph& g) { out.push_back(g); });
    return out;
}

std::string count_line(std::size_t checked, std::size_t bad, const char* what = "disagreements")
{
    std::ostringstream os;
    os << checked << " checked, " << bad << ' ' << what;
    return os.str();
}

Result parameter_table()
{
    std::size_t bad = 0;
    std::ostringstream os;
    for (int k = 1; k <= 10; ++k) {
        const auto& g = pattern("H" + std::to_string(k)).graph;
        const int gamma = domination_number(g).value;
        const int i = independent_domination_number(g).value;
        const int ac = common_independence_number(g);
        const int expected_i = k <= 4 ? 3 : 2;
        if (gamma != 2 || i != expected_i || ac != 3)
            ++bad;
        os << "H" << k << "=(" << gamma << ',' << i << ',' << ac << ") ";
    }
    return {bad == 0, os.str()};
}

Result minimality()
{
    int ok = 0;
    for (auto* p : forbidden_family())
        ok += is_minimal_imperfect(p->graph) ? 1 : 0;
    return {ok == 10, std::to_string(ok) + "/10 minimal imperfect"};
}

Result chain()
{
    std::size_t bad = 0, checked = 0;
    for (const auto& g : all_up_to(8)) {
        ++checked;
        const int gamma = domination_number(g).value;
        const int i = independent_domination_number(g).value;
        const int ac = common_independence_number(g);
        const int a = independence_number(g).value;
        if (!(gamma <= i && i <= ac && ac <= a))
            ++bad;
    }
    return {bad == 0 && checked == 13598, count_line(checked, bad, "violations")};
}

Result definition_vs_theorem()
{
    std::size_t bad = 0, checked = 0, imperfect = 0;
    for (const auto& g : all_up_to(8)) {
        ++checked;
        const bool d = perfect_by_definition(g).perfect;
        imperfect += d ? 0 : 1;
        bad += d != perfect_by_theorem(g).perfect ? 1 : 0;
    }
    return {bad == 0, count_line(checked, bad) + ", " + std::to_string(imperfect) + " imperfect"};
}

Result gamma2_route()
{
    std::size_t bad = 0, checked = 0;
    for (const auto& g : all_up_to(8)) {
        ++checked;
        const bool g2 = perfect_by_gamma2(g).perfect;
        if (g2 != perfect_by_definition(g).perfect || g2 != perfect_by_theorem(g).perfect)
            ++bad;
    }
    return {bad == 0, count_line(checked, bad)};
}

Result census()
{
    std::set<std::string> catalog;
    for (auto* p : forbidden_family())
        catalog.insert(canonical_form(p->graph).token);
    std::ostringstream os;
    bool pass = true;
    for (int n = 1; n <= 7; ++n) {
        const auto found = search_minimal_imperfect(n);
        os << n << ':' << found.size() << ' ';
        if (n != 6) {
            pass = pass && found.empty();
            continue;
        }
        std::set<std::string> tokens;
        for (const auto& g : found)
            tokens.insert(canonical_form(g).token);
        pass = pass && found.size() == 10 && tokens == catalog;
    }
    return {pass, os.str()};
}

Result trees()
{
    std::size_t bad = 0, checked = 0;
    for (int n = 1; n <= 12; ++n)
        for (const auto& t : enumerate_trees(n)) {
            ++checked;
            bad += tree_corollary_conditions(t).all_equal() ? 0 : 1;
        }
    const auto twelve = enumerate_trees(12).size();
    return {bad == 0 && twelve == 551, count_line(checked, bad) + ", " + std::to_string(twelve) + " trees of order 12"};
}

Result chordal()
{
    std::size_t bad = 0, checked = 0;
    for (const auto& g : all_up_to(8, GraphClass::Chordal)) {
        ++checked;
        bad += free_of(g, {&pattern("H1"), &pattern("H7"), &pattern("H8")}).free != perfect_by_theorem(g).perfect;
    }
    return {bad == 0 && checked > 0, count_line(checked, bad)};
}

Result claw_free()
{
    std::size_t bad = 0, checked = 0;
    for (const auto& g : all_up_to(8, GraphClass::ClawFree)) {
        ++checked;
        bad += free_of(g, {&pattern("H7"), &pattern("H8"), &pattern("H9")}).free != perfect_by_theorem(g).perfect;
    }
    return {bad == 0 && checked > 0, count_line(checked, bad)};
}

Result line_graphs()
{
    std::size_t bad = 0, checked = 0;
    for (const auto& h : all_up_to(7)) {
        ++checked;
        bad += line_graph_criterion(h) != perfect_by_theorem(line_graph(h)).perfect;
    }
    return {bad == 0, count_line(checked, bad)};
}

Result middle_graphs()
{
    std::size_t bad = 0, checked = 0;
    std::ostringstream note;
    for (const auto& h : all_up_to(5)) {
        ++checked;
        const bool criterion = middle_graph_criterion(h);
        bad += criterion != perfect_by_theorem(middle_graph(h)).perfect;
        if (criterion != middle_graph_star_phrasing(h))
            note << ' ' << emit_graph6(h);
    }
    const bool k3_recorded = middle_graph_criterion(Graph::complete(3)) && !middle_graph_star_phrasing(Graph::complete(3));
    return {bad == 0, count_line(checked, bad) + "; note: hosts meeting the matching condition but not the star form:"
                          + note.str() + (k3_recorded ? " (includes K3)" : "")};
}

Result round_trip()
{
    std::size_t bad = 0, checked = 0;
    for (int n = 0; n <= 8; ++n)
        for (const auto& g : enumerate_graphs(n)) {
            ++checked;
            const auto token = emit_graph6(g);
            bad += parse_graph6(token) != g;
            const auto canonical = canonical_form(g).token;
            bad += emit_graph6(parse_graph6(canonical)) != canonical;
        }
    return {bad == 0, count_line(checked, bad, "mismatches")};
}

Result enumeration_counts()
{
    const std::vector<std::size_t> expected{11, 34, 156, 1044, 12346};
    std::ostringstream os;
    bool pass = true;
    for (int n = 4; n <= 8; ++n) {
        const auto graphs = enumerate_graphs(n);
        std::set<std::string> generated;
        for (const auto& g : graphs)
            generated.insert(canonical_form(g).token);
        pass = pass && generated.size() == graphs.size() && graphs.size() == expected[n - 4];
        if (n <= 6) {
            // Every labelled graph, bucketed by canonical form.
            std::set<std::string> classes;
            for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << (n * (n - 1) / 2)); ++bits)
                classes.insert(canonical_form(oracle::labelled(n, bits)).token);
            pass = pass && classes == generated;
        } else {
            // Classes weighted by n!/|Aut| must account for every labelled graph exactly once.
            std::uint64_t factorial = 1, labelled = 0;
            for (int i = 2; i <= n; ++i)
                factorial *= static_cast<std::uint64_t>(i);
            for (const auto& g : graphs)
                labelled += factorial / oracle::automorphism_count(g);
            pass = pass && labelled == (std::uint64_t{1} << (n * (n - 1) / 2));
        }
        os << n << ':' << graphs.size() << ' ';
    }
    return {pass, os.str()};
}

Result solver_oracles()
{
    std::size_t bad = 0, checked = 0;
    for (const auto& g : all_up_to(7)) {
        ++checked;
        bad += domination_number(g).value != oracle::gamma(g);
        bad += independent_domination_number(g).value != oracle::ind_dom(g);
        bad += independence_number(g).value != oracle::alpha(g);
        bad += common_independence_number(g) != oracle::alpha_c_direct(g);
    }
    return {bad == 0, count_line(checked, bad)};
}

}  // namespace

int main()
{
    const std::vector<Criterion> criteria{
        {1, "parameter table of H1..H10", 1.0, parameter_table},
        {2, "H1..H10 are minimal imperfect", 10.0, minimality},
        {3, "chain gamma <= i <= alpha_c <= alpha, order <= 8", 120.0, chain},
        {4, "definition = forbidden subgraphs, order <= 8", 600.0, definition_vs_theorem},
        {5, "gamma = 2 route agrees with both, order <= 8", 0.0, gamma2_route},
        {6, "minimal imperfect census, orders 1..7", 0.0, census},
        {7, "tree conditions agree, order <= 12", 60.0, trees},
        {8, "chordal: {H1,H7,H8}-free = perfect, order <= 8", 0.0, chordal},
        {9, "claw-free: {H7,H8,H9}-free = perfect, order <= 8", 0.0, claw_free},
        {10, "line graphs: host criterion = perfect, hosts <= 7", 300.0, line_graphs},
        {11, "middle graphs: matching criterion = perfect, hosts <= 5", 0.0, middle_graphs},
        {12, "graph6 round trips, order <= 8", 0.0, round_trip},
        {13, "enumeration counts against oracles, orders 4..8", 0.0, enumeration_counts},
        {14, "solvers against exhaustive search, order <= 7", 0.0, solver_oracles},
    };
    int failures = 0;
    for (const auto& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Result r;
        try {
            r = c.run();
        } catch (const std::exception& e) {
            r = {false, std::string("exception: ") + e.what()};
        }
        const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        bool pass = r.pass;
        if (c.limit_seconds > 0 && seconds > c.limit_seconds) {
            pass = false;
            r.detail += " (over the time bound)";
        }
        failures += pass ? 0 : 1;
        std::printf("%s  %2d  %-55s %8.2fs  %s\n", pass ? "PASS" : "FAIL", c.id, c.title, seconds, r.detail.c_str());
        std::fflush(stdout);
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
    return failures == 0 ? 0 : 1;
}
