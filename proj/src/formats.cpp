#include "domiperf/formats.hpp"

#include <charconv>
#include <sstream>

namespace domiperf {

namespace {

constexpr int kGraph6Bias = 63;
constexpr int kGraph6MaxShort = 62;

std::string_view trim(std::string_view s)
{
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r'))
        s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
        s.remove_suffix(1);
    return s;
}

std::vector<std::string_view> split_lines(std::string_view text)
{
    std::vector<std::string_view> lines;
    std::size_t start = 0;
    while (start <= text.size()) {
        auto end = text.find('\n', start);
        if (end == std::string_view::npos) {
            if (start < text.size())
                lines.push_back(text.substr(start));
            break;
        }
        lines.push_back(text.substr(start, end - start));
        start = end + 1;
    }
    return lines;
}

}  // namespace

ParseError::ParseError(Kind kind, std::size_t offset, const std::string& what)
    : Error(what), kind_(kind), offset_(offset)
{
}

Graph parse_graph6(std::string_view token)
{
    if (token.empty())
        throw ParseError(ParseError::Kind::Empty, 0, "graph6: empty token");
    const int header = static_cast<unsigned char>(token[0]);
    if (header < kGraph6Bias || header > kGraph6Bias + kGraph6MaxShort)
        throw ParseError(ParseError::Kind::BadLength, 0,
                         "graph6: length byte " + std::to_string(header) + " outside the short form 63..125");
    const int n = header - kGraph6Bias;
    const std::size_t bits = static_cast<std::size_t>(n) * static_cast<std::size_t>(n - 1) / 2;
    const std::size_t body = (bits + 5) / 6;

    for (std::size_t i = 1; i < token.size(); ++i) {
        const int c = static_cast<unsigned char>(token[i]);
        if (c < kGraph6Bias || c > kGraph6Bias + 63)
            throw ParseError(ParseError::Kind::BadByte, i,
                             "graph6: byte " + std::to_string(c) + " at offset " + std::to_string(i) + " outside 63..126");
    }
    if (token.size() - 1 < body)
        throw ParseError(ParseError::Kind::Truncated, token.size(),
                         "graph6: expected " + std::to_string(body) + " body bytes, got " + std::to_string(token.size() - 1));
    if (token.size() - 1 > body)
        throw ParseError(ParseError::Kind::TrailingBytes, body + 1, "graph6: trailing bytes after the adjacency body");

    std::vector<std::uint64_t> rows(static_cast<std::size_t>(n), 0);
    std::size_t k = 0;
    for (int v = 1; v < n; ++v) {
        for (int u = 0; u < v; ++u, ++k) {
            const int byte = static_cast<unsigned char>(token[1 + k / 6]) - kGraph6Bias;
            if ((byte >> (5 - k % 6)) & 1) {
                rows[u] |= std::uint64_t{1} << v;
                rows[v] |= std::uint64_t{1} << u;
            }
        }
    }
    if (body > 0) {
        const int last = static_cast<unsigned char>(token[body]) - kGraph6Bias;
        const std::size_t used = bits - (body - 1) * 6;
        if ((last & ((1 << (6 - used)) - 1)) != 0)
            throw ParseError(ParseError::Kind::NonzeroPadding, body, "graph6: nonzero padding bits in the last byte");
    }
    return Graph::from_rows(n, rows);
}

std::string emit_graph6(const Graph& g)
{
    const int n = g.order();
    if (n > kGraph6MaxShort)
        throw InvalidArgument("graph6: only orders up to 62 are supported");
    std::string out(1, static_cast<char>(kGraph6Bias + n));
    int acc = 0;
    int filled = 0;
    for (int v = 1; v < n; ++v) {
        for (int u = 0; u < v; ++u) {
            acc = (acc << 1) | (g.adjacent(u, v) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(kGraph6Bias + acc));
                acc = 0;
                filled = 0;
            }
        }
    }
    if (filled > 0)
        out.push_back(static_cast<char>(kGraph6Bias + (acc << (6 - filled))));
    return out;
}

Graph parse_edge_list(std::string_view text)
{
    int n = -1;
    std::vector<Edge> edges;
    std::size_t line_no = 0;
    for (auto raw : split_lines(text)) {
        ++line_no;
        auto line = trim(raw);
        if (line.empty() || line.front() == '#')
            continue;
        std::vector<int> values;
        std::size_t pos = 0;
        while (pos < line.size()) {
            while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t'))
                ++pos;
            if (pos == line.size())
                break;
            int value = 0;
            auto [ptr, ec] = std::from_chars(line.data() + pos, line.data() + line.size(), value);
            const bool at_separator = ptr == line.data() + line.size() || *ptr == ' ' || *ptr == '\t';
            if (ec != std::errc{} || !at_separator)
                throw ParseError(ParseError::Kind::BadNumber, line_no,
                                 "edge list line " + std::to_string(line_no) + ": non-numeric token");
            values.push_back(value);
            pos = static_cast<std::size_t>(ptr - line.data());
        }
        if (n < 0) {
            if (values.size() != 1 || values[0] < 0 || values[0] > kMaxOrder)
                throw ParseError(ParseError::Kind::BadNumber, line_no,
                                 "edge list line " + std::to_string(line_no) + ": expected the vertex count (0..64)");
            n = values[0];
            continue;
        }
        if (values.size() != 2)
            throw ParseError(ParseError::Kind::BadNumber, line_no,
                             "edge list line " + std::to_string(line_no) + ": expected \"u v\"");
        const int u = values[0];
        const int v = values[1];
        if (u < 1 || v < 1 || u > n || v > n || u == v)
            throw ParseError(ParseError::Kind::BadLabel, line_no,
                             "edge list line " + std::to_string(line_no) + ": label out of range or loop");
        edges.emplace_back(u - 1, v - 1);
    }
    if (n < 0)
        throw ParseError(ParseError::Kind::Empty, line_no, "edge list: missing vertex count");
    return Graph::build(n, edges);
}

std::string emit_edge_list(const Graph& g)
{
    std::ostringstream os;
    os << g.order() << '\n';
    for (auto [u, v] : g.edges())
        os << u + 1 << ' ' << v + 1 << '\n';
    return os.str();
}

std::string emit_dot(const Graph& g, const std::vector<std::string>& labels)
{
    auto name = [&](int v) {
        return v < static_cast<int>(labels.size()) ? labels[v] : std::to_string(v + 1);
    };
    std::ostringstream os;
    os << "graph G {\n";
    for (int v = 0; v < g.order(); ++v)
        os << "  \"" << name(v) << "\";\n";
    for (auto [u, v] : g.edges())
        os << "  \"" << name(u) << "\" -- \"" << name(v) << "\";\n";
    os << "}\n";
    return os.str();
}

std::vector<GraphRecord> read_graph6_stream(std::string_view text)
{
    std::vector<GraphRecord> out;
    std::size_t line_no = 0;
    for (auto raw : split_lines(text)) {
        ++line_no;
        auto line = trim(raw);
        if (line.empty() || line.front() == '#')
            continue;
        // Optional ">>graph6<<" header as written by nauty's tools.
        if (line.starts_with(">>graph6<<"))
            line.remove_prefix(10);
        try {
            out.push_back(GraphRecord{line_no, parse_graph6(line), std::string(line)});
        } catch (const ParseError& e) {
            throw ParseError(e.kind(), e.offset(), "line " + std::to_string(line_no) + ": " + e.what());
        }
    }
    return out;
}

std::vector<GraphRecord> read_edge_list_stream(std::string_view text)
{
    std::vector<GraphRecord> out;
    std::string block;
    std::size_t block_start = 0;
    std::size_t line_no = 0;
    auto flush = [&] {
        if (block.empty())
            return;
        try {
            auto g = parse_edge_list(block);
            out.push_back(GraphRecord{block_start, g, g.order() <= 62 ? emit_graph6(g) : std::string{}});
        } catch (const ParseError& e) {
            // Re-anchor the block-relative line number to the whole stream.
            const auto line = block_start + e.offset() - 1;
            throw ParseError(e.kind(), line, std::string(e.what()) + " (input line " + std::to_string(line) + ")");
        }
        block.clear();
    };
    for (auto raw : split_lines(text)) {
        ++line_no;
        if (trim(raw).empty()) {
            flush();
            continue;
        }
        if (block.empty())
            block_start = line_no;
        block.append(raw);
        block.push_back('\n');
    }
    flush();
    return out;
}

}  // namespace domiperf
