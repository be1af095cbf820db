#pragma once

#include "domiperf/graph.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace domiperf {

inline constexpr int kMaxCanonicalOrder = 10;

/// Labelling-independent representative of a graph.
struct CanonicalForm {
    int order = 0;
    /// graph6 token of the canonically relabelled graph.
    std::string token;
    /// labeling[v] is the canonical position of vertex v.
    std::vector<int> labeling;

    bool operator==(const CanonicalForm& o) const { return order == o.order && token == o.token; }
};

/// Canonical form by partition refinement plus individualisation search
/// (minimum adjacency code over the search tree, automorphism pruning). n <= 10.
CanonicalForm canonical_form(const Graph& g);

/// Same search with an initial vertex colouring; the code covers colours in
/// their sorted order. Used for orbit tests. n <= 10.
CanonicalForm canonical_form(const Graph& g, const std::vector<int>& colours);

/// Orbit id (smallest vertex of the orbit) of every vertex under Aut(G). n <= 10.
std::vector<int> vertex_orbits(const Graph& g);

/// True iff some automorphism of g maps u to v. n <= 10.
bool same_orbit(const Graph& g, int u, int v);

/// AHU code of a tree rooted at `root`.
std::string rooted_tree_code(const Graph& tree, int root);
/// Isomorphism-invariant code for a free tree (minimum rooted code over the centres). Any n <= 64.
std::string tree_code(const Graph& tree);

}  // namespace domiperf
