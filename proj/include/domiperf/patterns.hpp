#pragma once

#include "domiperf/graph.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace domiperf {

/// A named catalog graph. `edges` use labels 1..order.
struct Pattern {
    std::string name;
    std::vector<Edge> edges;
    Graph graph;

    int order() const { return graph.order(); }
};

enum class MatchMode { Induced, Subgraph };

/// Injective map pattern vertex -> host vertex.
struct Embedding {
    std::vector<int> map;
    MatchMode mode = MatchMode::Induced;

    VertexSet image() const;
    bool operator==(const Embedding&) const = default;
};

/// H1..H10 followed by CLAW, P2..P7, C6, TWO_P3, TWO_P4.
const std::vector<Pattern>& catalog();
/// The ten minimal imperfect graphs H1..H10, in order.
std::vector<const Pattern*> forbidden_family();
/// Case-insensitive lookup; also accepts "2P3"/"2P4" for TWO_P3/TWO_P4. Throws InvalidArgument.
const Pattern& pattern(std::string_view name);

/// First embedding in backtracking order, or nothing.
std::optional<Embedding> find_embedding(const Graph& host, const Graph& pattern, MatchMode mode);
std::optional<Embedding> find_induced(const Graph& host, const Pattern& p);
bool contains_subgraph(const Graph& host, const Pattern& p);

/// Checks an embedding edge by edge against the host.
bool is_valid_embedding(const Graph& host, const Graph& pattern, const Embedding& e);

struct PatternMatch {
    std::string pattern;
    Embedding embedding;
};

struct ForbiddenResult {
    bool free = true;
    std::optional<PatternMatch> witness;
};

/// Tries the given patterns in order and reports the first one found as an induced subgraph.
ForbiddenResult free_of(const Graph& host, const std::vector<const Pattern*>& family);
/// free_of(host, H1..H10).
ForbiddenResult forbidden_free(const Graph& host);

bool is_claw_free(const Graph& g);

}  // namespace domiperf
