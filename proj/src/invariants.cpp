#include "domiperf/invariants.hpp"

#include <algorithm>

namespace domiperf {

namespace {

void require_nonempty(const Graph& g, const char* what)
{
    if (g.order() == 0)
        throw InvalidArgument(std::string(what) + " is undefined for the empty graph");
}

std::uint64_t above(int v)
{
    return v >= 63 ? 0 : ~((std::uint64_t{2} << v) - 1);
}

// Lexicographic k-subset search for a dominating set, optionally independent.
// Vertices are picked in ascending order, so the first hit is the lex-smallest
// dominating set of size k.
class DominationSearch {
public:
    DominationSearch(const Graph& g, bool independent)
        : all_(g.vertices().bits()), independent_(independent)
    {
        for (int v = 0; v < g.order(); ++v) {
            closed_[v] = g.closed_neighbors(v).bits();
            max_closed_ = std::max(max_closed_, g.degree(v) + 1);
        }
    }

    bool find(int k, VertexSet& out)
    {
        return extend(0, all_, 0, k, out);
    }

private:
    // `allowed` holds vertices that may still be picked (>= next index, and
    // outside N[chosen] in the independent variant).
    bool extend(std::uint64_t chosen, std::uint64_t allowed, std::uint64_t dominated, int picks, VertexSet& out)
    {
        if (dominated == all_) {
            out = VertexSet(chosen);
            return true;
        }
        if (picks == 0)
            return false;
        const std::uint64_t undominated = all_ & ~dominated;
        if (std::popcount(undominated) > picks * max_closed_)
            return false;
        for (std::uint64_t rest = undominated; rest != 0; rest &= rest - 1) {
            const int u = std::countr_zero(rest);
            if ((closed_[u] & allowed) == 0)
                return false;
        }
        for (std::uint64_t cand = allowed; cand != 0; cand &= cand - 1) {
            const int v = std::countr_zero(cand);
            // The lowest undominated vertex must be covered by v or a later pick.
            const int lowest = std::countr_zero(undominated);
            if ((closed_[lowest] & allowed & ~((std::uint64_t{1} << v) - 1)) == 0)
                break;
            std::uint64_t next_allowed = allowed & above(v);
            if (independent_)
                next_allowed &= ~closed_[v];
            if (extend(chosen | (std::uint64_t{1} << v), next_allowed, dominated | closed_[v], picks - 1, out))
                return true;
        }
        return false;
    }

    std::uint64_t all_;
    bool independent_;
    int max_closed_ = 1;
    std::array<std::uint64_t, kMaxOrder> closed_{};
};

int greedy_dominating_size(const Graph& g)
{
    std::uint64_t undominated = g.vertices().bits();
    int size = 0;
    while (undominated != 0) {
        int best = -1;
        int gain = -1;
        for (int v = 0; v < g.order(); ++v) {
            const int c = std::popcount(g.closed_neighbors(v).bits() & undominated);
            if (c > gain) {
                gain = c;
                best = v;
            }
        }
        undominated &= ~g.closed_neighbors(best).bits();
        ++size;
    }
    return size;
}

int greedy_maximal_independent_size(const Graph& g)
{
    std::uint64_t left = g.vertices().bits();
    int size = 0;
    while (left != 0) {
        int best = -1;
        int deg = kMaxOrder + 1;
        for (std::uint64_t r = left; r != 0; r &= r - 1) {
            const int v = std::countr_zero(r);
            const int d = std::popcount(g.row(v) & left);
            if (d < deg) {
                deg = d;
                best = v;
            }
        }
        left &= ~g.closed_neighbors(best).bits();
        ++size;
    }
    return size;
}

Solution minimum_dominating(const Graph& g, bool independent)
{
    const int n = g.order();
    int max_degree = 0;
    for (int v = 0; v < n; ++v)
        max_degree = std::max(max_degree, g.degree(v));
    const int lower = std::max(1, (n + max_degree) / (max_degree + 1));
    const int upper = independent ? greedy_maximal_independent_size(g) : greedy_dominating_size(g);
    DominationSearch search(g, independent);
    for (int k = lower; k <= upper; ++k) {
        VertexSet witness;
        if (search.find(k, witness))
            return {k, witness};
    }
    throw std::logic_error("domination search exceeded its greedy upper bound");
}

// Branch and bound for alpha(G[P]) on max-degree vertices, with the
// degree <= 1 reduction.
class IndependenceSearch {
public:
    explicit IndependenceSearch(const Graph& g) : g_(g) {}

    int solve(std::uint64_t within)
    {
        best_ = 0;
        branch(within, 0);
        return best_;
    }

private:
    void branch(std::uint64_t p, int size)
    {
        while (true) {
            if (p == 0) {
                best_ = std::max(best_, size);
                return;
            }
            if (size + std::popcount(p) <= best_)
                return;
            int pick = -1;
            int max_deg = -1;
            int max_v = -1;
            for (std::uint64_t r = p; r != 0; r &= r - 1) {
                const int v = std::countr_zero(r);
                const int d = std::popcount(g_.row(v) & p);
                if (d <= 1) {
                    pick = v;
                    break;
                }
                if (d > max_deg) {
                    max_deg = d;
                    max_v = v;
                }
            }
            if (pick < 0) {
                branch(p & ~g_.closed_neighbors(max_v).bits(), size + 1);
                p &= ~(std::uint64_t{1} << max_v);
                continue;
            }
            p &= ~g_.closed_neighbors(pick).bits();
            ++size;
        }
    }

    const Graph& g_;
    int best_ = 0;
};

}  // namespace

Solution domination_number(const Graph& g)
{
    require_nonempty(g, "domination number");
    return minimum_dominating(g, false);
}

Solution independent_domination_number(const Graph& g)
{
    require_nonempty(g, "independent domination number");
    return minimum_dominating(g, true);
}

int independence_number(const Graph& g, VertexSet within)
{
    if (!g.contains(within))
        throw InvalidArgument("independence_number: vertex set outside the graph");
    IndependenceSearch search(g);
    return search.solve(within.bits());
}

Solution independence_number(const Graph& g)
{
    IndependenceSearch search(g);
    const int alpha = search.solve(g.vertices().bits());
    VertexSet witness;
    std::uint64_t remaining = g.vertices().bits();
    int need = alpha;
    while (need > 0) {
        const int v = std::countr_zero(remaining);
        const std::uint64_t rest = remaining & above(v) & ~g.row(v);
        if (1 + search.solve(rest) >= need) {
            witness.insert(v);
            --need;
            remaining = rest;
        } else {
            remaining &= ~(std::uint64_t{1} << v);
        }
    }
    return {alpha, witness};
}

int max_independent_with(const Graph& g, int v)
{
    if (v < 0 || v >= g.order())
        throw InvalidArgument("max_independent_with: vertex out of range");
    return 1 + independence_number(g, g.vertices() - g.closed_neighbors(v));
}

int common_independence_number(const Graph& g)
{
    require_nonempty(g, "common independence number");
    int best = g.order();
    for (int v = 0; v < g.order(); ++v)
        best = std::min(best, max_independent_with(g, v));
    return best;
}

VertexSet private_neighborhood(const Graph& g, int v, VertexSet s)
{
    if (!g.contains(s) || !s.contains(v))
        throw InvalidArgument("private_neighborhood: vertex must belong to the set");
    VertexSet out;
    for (int w = 0; w < g.order(); ++w)
        if ((g.closed_neighbors(w) & s) == VertexSet::single(v))
            out.insert(w);
    return out;
}

ParameterProfile parameter_profile(const Graph& g)
{
    require_nonempty(g, "parameter profile");
    ParameterProfile p;
    const auto dom = domination_number(g);
    const auto idom = independent_domination_number(g);
    const auto ind = independence_number(g);
    p.gamma = dom.value;
    p.witness_gamma = dom.witness;
    p.ind_dom = idom.value;
    p.witness_ind_dom = idom.witness;
    p.ind = ind.value;
    p.witness_ind = ind.witness;
    p.per_vertex_ind.reserve(static_cast<std::size_t>(g.order()));
    for (int v = 0; v < g.order(); ++v)
        p.per_vertex_ind.push_back(max_independent_with(g, v));
    p.common_ind = *std::min_element(p.per_vertex_ind.begin(), p.per_vertex_ind.end());
    if (!(p.gamma <= p.ind_dom && p.ind_dom <= p.common_ind && p.common_ind <= p.ind))
        throw std::logic_error("parameter chain gamma <= i <= alpha_c <= alpha violated");
    return p;
}

}  // namespace domiperf
