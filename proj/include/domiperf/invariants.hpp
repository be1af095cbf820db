#pragma once

#include "domiperf/graph.hpp"

#include <vector>

namespace domiperf {

/// An optimal value together with a witness attaining it.
struct Solution {
    int value = 0;
    VertexSet witness;
};

/// gamma(G) with the lexicographically smallest minimum dominating set. Requires n >= 1.
Solution domination_number(const Graph& g);

/// i(G) with the lexicographically smallest minimum independent dominating set. Requires n >= 1.
Solution independent_domination_number(const Graph& g);

/// alpha(G) with the lexicographically smallest maximum independent set. alpha of the empty graph is 0.
Solution independence_number(const Graph& g);

/// alpha(G[within]) without building the induced subgraph.
int independence_number(const Graph& g, VertexSet within);

/// Size of a largest independent set that contains v.
int max_independent_with(const Graph& g, int v);

/// alpha_c(G): the minimum over v of max_independent_with(G, v). Requires n >= 1.
int common_independence_number(const Graph& g);

/// pn[v, S] = { w : N[w] ∩ S = {v} }. Requires v ∈ S.
VertexSet private_neighborhood(const Graph& g, int v, VertexSet s);

struct ParameterProfile {
    int gamma = 0;
    int ind_dom = 0;
    int common_ind = 0;
    int ind = 0;
    VertexSet witness_gamma;
    VertexSet witness_ind_dom;
    VertexSet witness_ind;
    /// alpha_v for every vertex v.
    std::vector<int> per_vertex_ind;
};

/// All four parameters plus witnesses. Throws std::logic_error if
/// gamma <= i <= alpha_c <= alpha fails, which would be a defect in the solvers.
ParameterProfile parameter_profile(const Graph& g);

}  // namespace domiperf
