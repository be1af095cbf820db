#pragma once

#include "domiperf/graph.hpp"
#include "domiperf/patterns.hpp"

#include <optional>
#include <string>
#include <vector>

namespace domiperf {

inline constexpr int kDefaultSubsetCap = 16;

enum class PerfectionMethod { Definition, Gamma2, Theorem };

const char* to_string(PerfectionMethod m);
/// "definition", "gamma2" or "theorem"; throws InvalidArgument otherwise.
PerfectionMethod parse_method(std::string_view name);

/// An induced subgraph G[vertices] with gamma < alpha_c.
struct SubgraphWitness {
    VertexSet vertices;
    int gamma = 0;
    int common_ind = 0;
};

/// Whether gamma(H) = alpha_c(H) holds for every induced subgraph H. Imperfect
/// verdicts carry either a subgraph witness (definition, gamma2) or a
/// forbidden-pattern embedding (theorem).
struct PerfectionVerdict {
    bool perfect = true;
    PerfectionMethod method = PerfectionMethod::Definition;
    std::optional<SubgraphWitness> subgraph;
    std::optional<PatternMatch> pattern;
};

/// Checks every nonempty induced subgraph; the witness is the smallest, then
/// lexicographically first, violating vertex set. Requires 1 <= n <= cap (cap <= 20).
PerfectionVerdict perfect_by_definition(const Graph& g, int cap = kDefaultSubsetCap);

/// Checks only induced subgraphs with gamma(H) = 2, flagging alpha_c(H) = 3.
/// Uses the branch-and-bound solvers per subgraph, independent of the subset tables.
PerfectionVerdict perfect_by_gamma2(const Graph& g, int cap = kDefaultSubsetCap);

/// Perfect iff no H1..H10 is an induced subgraph.
PerfectionVerdict perfect_by_theorem(const Graph& g);

PerfectionVerdict classify(const Graph& g, PerfectionMethod method, int cap = kDefaultSubsetCap);

/// gamma(G) < alpha_c(G) while every proper nonempty induced subgraph has gamma = alpha_c.
bool is_minimal_imperfect(const Graph& g, int cap = kDefaultSubsetCap);

/// All minimal imperfect graphs of the given order (<= 8), up to isomorphism, in canonical labelling.
std::vector<Graph> search_minimal_imperfect(int order);

/// Recomputes the witness's claimed values (or re-checks the embedding edge by edge).
bool witness_is_sound(const Graph& g, const PerfectionVerdict& verdict);

}  // namespace domiperf
