#include "domiperf/perfection.hpp"

#include "domiperf/enumeration.hpp"
#include "domiperf/invariants.hpp"
#include "domiperf/subset_tables.hpp"

namespace domiperf {

namespace {

void require_order(const Graph& g, int cap)
{
    if (cap > kernels::kMaxTableOrder)
        throw InvalidArgument("subset cap may not exceed 20");
    if (g.order() < 1)
        throw InvalidArgument("perfection is checked on graphs with at least one vertex");
    if (g.order() > cap)
        throw InvalidArgument("graph order " + std::to_string(g.order()) + " exceeds the subset cap "
                              + std::to_string(cap));
}

}  // namespace

const char* to_string(PerfectionMethod m)
{
    switch (m) {
    case PerfectionMethod::Definition: return "definition";
    case PerfectionMethod::Gamma2: return "gamma2";
    case PerfectionMethod::Theorem: return "theorem";
    }
    return "unknown";
}

PerfectionMethod parse_method(std::string_view name)
{
    if (name == "definition")
        return PerfectionMethod::Definition;
    if (name == "gamma2")
        return PerfectionMethod::Gamma2;
    if (name == "theorem")
        return PerfectionMethod::Theorem;
    throw InvalidArgument("unknown method: " + std::string(name));
}

PerfectionVerdict perfect_by_definition(const Graph& g, int cap)
{
    require_order(g, cap);
    const auto tables = compute_subset_tables(g);
    PerfectionVerdict verdict;
    verdict.method = PerfectionMethod::Definition;
    for (std::uint32_t s : subsets_by_size_then_lex(g.order())) {
        if (tables.gamma[s] != tables.common_ind[s]) {
            verdict.perfect = false;
            verdict.subgraph = SubgraphWitness{VertexSet(s), static_cast<int>(tables.gamma[s]),
                                               static_cast<int>(tables.common_ind[s])};
            break;
        }
    }
    return verdict;
}

PerfectionVerdict perfect_by_gamma2(const Graph& g, int cap)
{
    require_order(g, cap);
    PerfectionVerdict verdict;
    verdict.method = PerfectionMethod::Gamma2;
    for (std::uint32_t s : subsets_by_size_then_lex(g.order())) {
        if (std::popcount(s) < 2)
            continue;
        const VertexSet h(s);
        const auto sub = induced_subgraph(g, h);
        if (domination_number(sub).value != 2)
            continue;
        if (common_independence_number(sub) == 3) {
            verdict.perfect = false;
            verdict.subgraph = SubgraphWitness{h, 2, 3};
            break;
        }
    }
    return verdict;
}

PerfectionVerdict perfect_by_theorem(const Graph& g)
{
    auto found = forbidden_free(g);
    PerfectionVerdict verdict;
    verdict.method = PerfectionMethod::Theorem;
    verdict.perfect = found.free;
    verdict.pattern = std::move(found.witness);
    return verdict;
}

PerfectionVerdict classify(const Graph& g, PerfectionMethod method, int cap)
{
    switch (method) {
    case PerfectionMethod::Definition: return perfect_by_definition(g, cap);
    case PerfectionMethod::Gamma2: return perfect_by_gamma2(g, cap);
    case PerfectionMethod::Theorem: return perfect_by_theorem(g);
    }
    throw InvalidArgument("unknown method");
}

bool is_minimal_imperfect(const Graph& g, int cap)
{
    require_order(g, cap);
    const auto tables = compute_subset_tables(g);
    const std::uint32_t full = static_cast<std::uint32_t>(g.vertices().bits());
    if (tables.gamma[full] >= tables.common_ind[full])
        return false;
    for (std::uint32_t s = 1; s < full; ++s)
        if (tables.gamma[s] != tables.common_ind[s])
            return false;
    return true;
}

std::vector<Graph> search_minimal_imperfect(int order)
{
    if (order < 1 || order > kMaxEnumerationOrder)
        throw InvalidArgument("minimal imperfect search supports orders 1..8");
    std::vector<Graph> found;
    for (const auto& g : enumerate_graphs(order)) {
        if (domination_number(g).value >= common_independence_number(g))
            continue;
        bool deleted_perfect = true;
        for (int v = 0; v < g.order() && deleted_perfect; ++v) {
            if (g.order() > 1)
                deleted_perfect = perfect_by_definition(delete_vertex(g, v)).perfect;
        }
        if (deleted_perfect && is_minimal_imperfect(g))
            found.push_back(g);
    }
    return found;
}

bool witness_is_sound(const Graph& g, const PerfectionVerdict& verdict)
{
    if (verdict.perfect)
        return !verdict.subgraph && !verdict.pattern;
    if (verdict.subgraph) {
        const auto& w = *verdict.subgraph;
        if (w.vertices.empty() || !g.contains(w.vertices))
            return false;
        const auto sub = induced_subgraph(g, w.vertices);
        return domination_number(sub).value == w.gamma && common_independence_number(sub) == w.common_ind
               && w.gamma < w.common_ind;
    }
    if (verdict.pattern) {
        const auto& p = pattern(verdict.pattern->pattern);
        return is_valid_embedding(g, p.graph, verdict.pattern->embedding);
    }
    return false;
}

}  // namespace domiperf
