#include "domiperf/verification.hpp"

#include "domiperf/formats.hpp"
#include "domiperf/graph_classes.hpp"
#include "domiperf/invariants.hpp"
#include "domiperf/parallel.hpp"
#include "domiperf/perfection.hpp"
#include "domiperf/serialization.hpp"

#include <algorithm>
#include <chrono>
#include <stdexcept>

namespace domiperf {

namespace {

using Json = nlohmann::json;
using Clock = std::chrono::steady_clock;

struct Outcome {
    bool agree = true;
    Json verdicts;
};

// Accumulates sweeps into one report; counterexamples are sorted and capped in finish().
class Tally {
public:
    explicit Tally(std::string suite) : start_(Clock::now()) { report_.suite = std::move(suite); }

    VerificationReport& report() { return report_; }

    // Evaluates `check` on every graph concurrently, then folds results in input order.
    template <class Check>
    Json sweep(const std::string& name, const std::vector<Graph>& graphs, Check check)
    {
        std::vector<Outcome> outcomes(graphs.size());
        parallel_for(graphs.size(), [&](std::size_t i) { outcomes[i] = check(graphs[i]); });
        std::size_t agreements = 0;
        for (std::size_t i = 0; i < graphs.size(); ++i) {
            if (outcomes[i].agree) {
                ++agreements;
                continue;
            }
            found_.push_back({name, emit_graph6(graphs[i]), std::move(outcomes[i].verdicts)});
        }
        report_.checked += graphs.size();
        report_.agreements += agreements;
        report_.counterexample_total += graphs.size() - agreements;
        return {{"sweep", name}, {"checked", graphs.size()}, {"agreements", agreements},
                {"counterexamples", graphs.size() - agreements}};
    }

    VerificationReport finish()
    {
        std::sort(found_.begin(), found_.end(), [](const Counterexample& a, const Counterexample& b) {
            return std::tie(a.sweep, a.graph6) < std::tie(b.sweep, b.graph6);
        });
        if (found_.size() > kMaxListedCounterexamples)
            found_.resize(kMaxListedCounterexamples);
        report_.counterexamples = std::move(found_);
        report_.elapsed_seconds = std::chrono::duration<double>(Clock::now() - start_).count();
        return std::move(report_);
    }

private:
    VerificationReport report_;
    std::vector<Counterexample> found_;
    Clock::time_point start_;
};

void require_order(int order_max, int cap, const char* what)
{
    if (order_max < 1 || order_max > cap)
        throw InvalidArgument(std::string(what) + ": order must be in 1.." + std::to_string(cap) + ", got "
                              + std::to_string(order_max));
}

std::vector<Graph> graphs_up_to(int order_max, GraphClass filter, int order_min = 1)
{
    std::vector<Graph> out;
    for (int n = order_min; n <= order_max; ++n)
        for_each_graph(n, filter, [&](const Graph& g) { out.push_back(g); });
    return out;
}

Json universe(int order_min, int order_max, GraphClass filter)
{
    return {{"order_min", order_min}, {"order_max", order_max}, {"class", to_string(filter)}};
}

}  // namespace

Json VerificationReport::to_json(bool with_timing) const
{
    auto listed = Json::array();
    for (const auto& c : counterexamples)
        listed.push_back({{"sweep", c.sweep}, {"graph6", c.graph6}, {"verdicts", c.verdicts}});
    Json out{
        {"suite", suite},
        {"universe", universe},
        {"checked", checked},
        {"agreements", agreements},
        {"counterexample_total", counterexample_total},
        {"counterexamples", listed},
        {"notes", notes},
        {"details", details},
        {"ok", ok()},
    };
    if (with_timing)
        out["elapsed_seconds"] = elapsed_seconds;
    return out;
}

VerificationReport verify_theorem(int order_max)
{
    require_order(order_max, kMaxEnumerationOrder, "verify_theorem");
    Tally tally("theorem");
    tally.report().universe = universe(1, order_max, GraphClass::All);

    auto per_order = Json::array();
    std::size_t def_vs_thm = 0, g2_vs_def = 0, g2_vs_thm = 0, unsound = 0, imperfect_total = 0;
    auto minimal = Json::array();
    for (int n = 1; n <= order_max; ++n) {
        const auto graphs = enumerate_graphs(n);
        std::vector<int> flags(graphs.size(), 0);
        enum : int { DefThm = 1, G2Def = 2, G2Thm = 4, Unsound = 8, Imperfect = 16, Minimal = 32 };
        auto summary = tally.sweep("theorem", graphs, [&](const Graph& g) {
            const auto def = perfect_by_definition(g);
            const auto g2 = perfect_by_gamma2(g);
            const auto thm = perfect_by_theorem(g);
            int f = 0;
            f |= def.perfect != thm.perfect ? DefThm : 0;
            f |= g2.perfect != def.perfect ? G2Def : 0;
            f |= g2.perfect != thm.perfect ? G2Thm : 0;
            const bool sound = witness_is_sound(g, def) && witness_is_sound(g, g2) && witness_is_sound(g, thm);
            f |= sound ? 0 : Unsound;
            f |= def.perfect ? 0 : Imperfect;
            f |= !def.perfect && def.subgraph->vertices == g.vertices() ? Minimal : 0;
            flags[static_cast<std::size_t>(&g - graphs.data())] = f;
            Outcome out;
            out.agree = (f & (DefThm | G2Def | G2Thm | Unsound)) == 0;
            if (!out.agree)
                out.verdicts = {{"definition", verdict_json(def)},
                                {"gamma2", verdict_json(g2)},
                                {"theorem", verdict_json(thm)},
                                {"witnesses_sound", sound}};
            return out;
        });
        std::size_t imperfect = 0, minimal_here = 0;
        for (std::size_t i = 0; i < graphs.size(); ++i) {
            const int f = flags[i];
            def_vs_thm += (f & DefThm) != 0;
            g2_vs_def += (f & G2Def) != 0;
            g2_vs_thm += (f & G2Thm) != 0;
            unsound += (f & Unsound) != 0;
            imperfect += (f & Imperfect) != 0;
            if (f & Minimal) {
                ++minimal_here;
                minimal.push_back(emit_graph6(graphs[i]));
            }
        }
        imperfect_total += imperfect;
        summary["order"] = n;
        summary["imperfect"] = imperfect;
        summary["minimal_imperfect"] = minimal_here;
        per_order.push_back(summary);
    }
    auto& d = tally.report().details;
    d["per_order"] = per_order;
    d["disagreements"] = {{"definition_vs_theorem", def_vs_thm},
                          {"gamma2_vs_definition", g2_vs_def},
                          {"gamma2_vs_theorem", g2_vs_thm},
                          {"unsound_witnesses", unsound}};
    d["imperfect"] = imperfect_total;
    d["minimal_imperfect"] = minimal;
    return tally.finish();
}

VerificationReport verify_chain(int order_max)
{
    require_order(order_max, kMaxEnumerationOrder, "verify_chain");
    Tally tally("chain");
    tally.report().universe = universe(1, order_max, GraphClass::All);
    auto per_order = Json::array();
    for (int n = 1; n <= order_max; ++n) {
        auto summary = tally.sweep("chain", enumerate_graphs(n), [](const Graph& g) {
            Outcome out;
            try {
                const auto p = parameter_profile(g);
                const bool witnesses = is_dominating(g, p.witness_gamma) && p.witness_gamma.size() == p.gamma
                                       && is_dominating(g, p.witness_ind_dom)
                                       && is_independent(g, p.witness_ind_dom)
                                       && p.witness_ind_dom.size() == p.ind_dom
                                       && is_independent(g, p.witness_ind) && p.witness_ind.size() == p.ind
                                       && *std::min_element(p.per_vertex_ind.begin(), p.per_vertex_ind.end())
                                              == p.common_ind;
                if (!witnesses) {
                    out.agree = false;
                    out.verdicts = profile_json(p);
                }
            } catch (const std::logic_error& e) {
                out.agree = false;
                out.verdicts = {{"error", e.what()}};
            }
            return out;
        });
        summary["order"] = n;
        per_order.push_back(summary);
    }
    tally.report().details["per_order"] = per_order;
    return tally.finish();
}

CorollaryOrders CorollaryOrders::for_order(int order_max)
{
    CorollaryOrders o;
    o.graphs = order_max;
    o.trees = order_max == kMaxEnumerationOrder ? kMaxTreeOrder : order_max;
    o.line_hosts = std::min(order_max, 7);
    o.middle_hosts = std::min(order_max, 5);
    return o;
}

VerificationReport verify_corollaries(int order_max)
{
    require_order(order_max, kMaxEnumerationOrder, "verify_corollaries");
    return verify_corollaries(CorollaryOrders::for_order(order_max));
}

VerificationReport verify_corollaries(const CorollaryOrders& orders)
{
    require_order(orders.graphs, kMaxEnumerationOrder, "verify_corollaries (graphs)");
    require_order(orders.trees, kMaxTreeOrder, "verify_corollaries (trees)");
    require_order(orders.line_hosts, std::min(7, kMaxEnumerationOrder), "verify_corollaries (line hosts)");
    require_order(orders.middle_hosts, std::min(5, kMaxEnumerationOrder), "verify_corollaries (middle hosts)");

    Tally tally("corollaries");
    tally.report().universe = {{"graphs", universe(1, orders.graphs, GraphClass::All)},
                               {"trees", universe(1, orders.trees, GraphClass::Tree)},
                               {"line_hosts", universe(1, orders.line_hosts, GraphClass::All)},
                               {"middle_hosts", universe(1, orders.middle_hosts, GraphClass::All)}};
    auto sweeps = Json::array();
    auto& report = tally.report();

    auto theorem = [](const Graph& g) { return perfect_by_theorem(g).perfect; };

    sweeps.push_back(tally.sweep("trees", graphs_up_to(orders.trees, GraphClass::Tree), [](const Graph& g) {
        const auto c = tree_corollary_conditions(g);
        Outcome out;
        out.agree = c.all_equal();
        if (!out.agree)
            out.verdicts = {{"perfect", c.perfect},
                            {"h1_h7_h8_free", c.h1_h7_h8_free},
                            {"diameter_degree", c.diameter_degree},
                            {"taxonomy", c.taxonomy},
                            {"class", to_string(classify_tree(g))}};
        return out;
    }));

    sweeps.push_back(
        tally.sweep("chordal", graphs_up_to(orders.graphs, GraphClass::Chordal), [&](const Graph& g) {
            Outcome out;
            const bool reduced = chordal_corollary(g);
            const bool full = theorem(g);
            out.agree = reduced == full;
            if (!out.agree)
                out.verdicts = {{"h1_h7_h8_free", reduced}, {"perfect", full}};
            return out;
        }));

    sweeps.push_back(
        tally.sweep("claw_free", graphs_up_to(orders.graphs, GraphClass::ClawFree), [&](const Graph& g) {
            Outcome out;
            const bool reduced = claw_free_corollary(g);
            const bool full = theorem(g);
            out.agree = reduced == full;
            if (!out.agree)
                out.verdicts = {{"h7_h8_h9_free", reduced}, {"perfect", full}};
            return out;
        }));

    const auto block_graphs = graphs_up_to(orders.graphs, GraphClass::BlockGraph);
    std::vector<Graph> connected_blocks;
    std::copy_if(block_graphs.begin(), block_graphs.end(), std::back_inserter(connected_blocks),
                 [](const Graph& g) { return is_connected(g); });
    sweeps.push_back(tally.sweep("block_graph", connected_blocks, [&](const Graph& g) {
        Outcome out;
        const bool conditions = block_graph_corollary(g);
        const bool full = theorem(g);
        out.agree = conditions == full;
        if (!out.agree) {
            auto diam = diameter(g);
            out.verdicts = {{"conditions", conditions}, {"perfect", full}, {"diameter", diam ? *diam : -1}};
        }
        return out;
    }));

    sweeps.push_back(tally.sweep("block_graph_is_chordal", block_graphs, [](const Graph& g) {
        Outcome out;
        out.agree = is_chordal(g);
        if (!out.agree)
            out.verdicts = {{"chordal", false}};
        return out;
    }));

    const auto line_hosts = graphs_up_to(orders.line_hosts, GraphClass::All);
    sweeps.push_back(tally.sweep("line_graph", line_hosts, [&](const Graph& h) {
        Outcome out;
        const auto l = line_graph(h);
        const bool criterion = line_graph_criterion(h);
        const bool full = theorem(l);
        out.agree = criterion == full;
        if (!out.agree)
            out.verdicts = {{"criterion", criterion}, {"perfect_line_graph", full}, {"line_graph", emit_graph6(l)}};
        return out;
    }));
    sweeps.push_back(tally.sweep("line_graph_is_claw_free", line_hosts, [](const Graph& h) {
        Outcome out;
        out.agree = is_claw_free(line_graph(h));
        if (!out.agree)
            out.verdicts = {{"claw_free", false}};
        return out;
    }));

    const auto middle_hosts = graphs_up_to(orders.middle_hosts, GraphClass::All);
    sweeps.push_back(tally.sweep("middle_graph", middle_hosts, [&](const Graph& h) {
        Outcome out;
        const auto m = middle_graph(h);
        const bool criterion = middle_graph_criterion(h);
        const bool full = theorem(m);
        out.agree = criterion == full;
        if (!out.agree)
            out.verdicts = {{"criterion", criterion}, {"perfect_middle_graph", full}, {"middle_graph", emit_graph6(m)}};
        return out;
    }));

    // Hosts where "no two disjoint edges" and "nontrivial component is a star" part ways.
    auto phrasing = Json::array();
    for (const auto& h : middle_hosts) {
        if (middle_graph_criterion(h) == middle_graph_star_phrasing(h))
            continue;
        Graph nontrivial = induced_subgraph(h, [&] {
            VertexSet s;
            for (int v : h.vertices())
                if (h.degree(v) > 0)
                    s.insert(v);
            return s;
        }());
        phrasing.push_back({{"host", emit_graph6(h)},
                            {"order", h.order()},
                            {"matching_criterion", middle_graph_criterion(h)},
                            {"star_phrasing", middle_graph_star_phrasing(h)},
                            {"nontrivial_part_is_triangle", nontrivial == Graph::complete(3)},
                            {"middle_graph_perfect", theorem(middle_graph(h))}});
    }
    if (!phrasing.empty()) {
        bool all_triangles = true, all_perfect = true;
        for (const auto& p : phrasing) {
            all_triangles = all_triangles && p["nontrivial_part_is_triangle"].get<bool>();
            all_perfect = all_perfect && p["middle_graph_perfect"].get<bool>();
        }
        report.notes.push_back(
            "middle graphs: " + std::to_string(phrasing.size())
            + " host(s) have no two disjoint edges but no star as their nontrivial component"
            + (all_triangles ? " (K3, possibly with isolated vertices)" : "")
            + "; their middle graphs are " + (all_perfect ? "perfect" : "not all perfect")
            + ", so the matching criterion is the reading that holds");
    }
    report.details["sweeps"] = sweeps;
    report.details["middle_graph_phrasing"] = phrasing;
    return tally.finish();
}

VerificationReport combine(const std::vector<VerificationReport>& parts, std::string suite)
{
    VerificationReport out;
    out.suite = std::move(suite);
    out.universe = Json::object();
    std::vector<Counterexample> all;
    for (const auto& p : parts) {
        out.universe[p.suite] = p.universe;
        out.checked += p.checked;
        out.agreements += p.agreements;
        out.counterexample_total += p.counterexample_total;
        out.elapsed_seconds += p.elapsed_seconds;
        out.notes.insert(out.notes.end(), p.notes.begin(), p.notes.end());
        out.details[p.suite] = p.details;
        for (const auto& c : p.counterexamples)
            all.push_back({p.suite + "/" + c.sweep, c.graph6, c.verdicts});
    }
    if (all.size() > kMaxListedCounterexamples)
        all.resize(kMaxListedCounterexamples);
    out.counterexamples = std::move(all);
    return out;
}

}  // namespace domiperf
