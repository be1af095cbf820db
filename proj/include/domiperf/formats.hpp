#pragma once

#include "domiperf/graph.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace domiperf {

/// A malformed graph6 token or edge-list text. `offset()` is the byte offset
/// into the token (graph6) or the 1-based line number (edge lists).
class ParseError : public Error {
public:
    enum class Kind { BadLength, BadByte, NonzeroPadding, Truncated, TrailingBytes, BadNumber, BadLabel, Empty };

    ParseError(Kind kind, std::size_t offset, const std::string& what);

    Kind kind() const { return kind_; }
    std::size_t offset() const { return offset_; }

private:
    Kind kind_;
    std::size_t offset_;
};

/// A graph read from a stream together with where it came from.
struct GraphRecord {
    std::size_t line = 0;
    Graph graph;
    std::string token;
};

/// Short-form graph6 only (n <= 62).
Graph parse_graph6(std::string_view token);
std::string emit_graph6(const Graph& g);

/// "n" on the first line, then one 1-based "u v" pair per line.
Graph parse_edge_list(std::string_view text);
std::string emit_edge_list(const Graph& g);

/// Undirected DOT; `labels` (optional) replace the default 1-based vertex names.
std::string emit_dot(const Graph& g, const std::vector<std::string>& labels = {});

/// One graph6 token per non-blank line; '#' starts a comment line.
std::vector<GraphRecord> read_graph6_stream(std::string_view text);
/// Edge-list graphs separated by blank lines.
std::vector<GraphRecord> read_edge_list_stream(std::string_view text);

}  // namespace domiperf
