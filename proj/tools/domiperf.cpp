#include "domiperf/enumeration.hpp"
#include "domiperf/formats.hpp"
#include "domiperf/graph_classes.hpp"
#include "domiperf/invariants.hpp"
#include "domiperf/parallel.hpp"
#include "domiperf/perfection.hpp"
#include "domiperf/serialization.hpp"
#include "domiperf/verification.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <iterator>

using namespace domiperf;
using Json = nlohmann::json;

namespace {

enum Exit { Ok = 0, Negative = 1, Usage = 2 };

struct Options {
    std::string input;
    std::string output;
    std::string format = "graph6";
    std::string method = "theorem";
    std::string construction = "line";
    std::string suite = "all";
    int order = 6;
    int cap = kDefaultSubsetCap;
};

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

std::string slurp(const std::string& path)
{
    if (path.empty() || path == "-")
        return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw UsageError("cannot open " + path);
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

std::vector<GraphRecord> read_inputs(const Options& o)
{
    const auto text = slurp(o.input);
    if (o.format == "graph6")
        return read_graph6_stream(text);
    return read_edge_list_stream(text);
}

// Output sink: the --output file if given, stdout otherwise.
class Sink {
public:
    explicit Sink(const std::string& path)
    {
        if (!path.empty()) {
            file_.open(path);
            if (!file_)
                throw UsageError("cannot write " + path);
        }
    }
    std::ostream& out() { return file_.is_open() ? file_ : std::cout; }

private:
    std::ofstream file_;
};

Json record_header(const GraphRecord& r)
{
    return {{"line", r.line}, {"token", r.token}, {"n", r.graph.order()}, {"m", r.graph.size()}};
}

// Runs `work` on every record concurrently and prints the results in input order.
// `work` returns the record plus an exit code.
template <class Work>
int per_record(const Options& o, Work work)
{
    const auto records = read_inputs(o);
    std::vector<std::pair<Json, int>> results(records.size());
    parallel_for(records.size(), [&](std::size_t i) {
        auto header = record_header(records[i]);
        try {
            results[i] = work(records[i], std::move(header));
        } catch (const Error& e) {
            header = record_header(records[i]);
            header["error"] = e.what();
            results[i] = {std::move(header), Usage};
        }
    });
    Sink sink(o.output);
    int code = Ok;
    for (const auto& [json, c] : results) {
        sink.out() << json.dump() << '\n';
        code = std::max(code, c);
    }
    return code;
}

int cmd_compute(const Options& o)
{
    return per_record(o, [](const GraphRecord& r, Json rec) -> std::pair<Json, int> {
        if (r.graph.order() == 0)
            throw InvalidArgument("parameters are undefined for the graph with no vertices");
        rec.update(profile_json(parameter_profile(r.graph)));
        return {std::move(rec), Ok};
    });
}

int cmd_classify(const Options& o)
{
    const auto method = parse_method(o.method);
    return per_record(o, [&](const GraphRecord& r, Json rec) -> std::pair<Json, int> {
        const auto verdict = classify(r.graph, method, o.cap);
        rec.update(verdict_json(verdict));
        return {std::move(rec), verdict.perfect ? Ok : Negative};
    });
}

void write_graph(std::ostream& out, const Graph& g, const std::string& format)
{
    if (format == "graph6")
        out << emit_graph6(g) << '\n';
    else
        out << emit_edge_list(g) << '\n';
}

int cmd_construct(const Options& o)
{
    const auto construction = parse_construction(o.construction);
    const auto records = read_inputs(o);
    std::vector<Graph> built;
    for (const auto& r : records) {
        try {
            built.push_back(construct(r.graph, construction));
        } catch (const Error& e) {
            throw UsageError("line " + std::to_string(r.line) + ": " + e.what());
        }
        if (o.format == "graph6" && built.back().order() > 62)
            throw UsageError("line " + std::to_string(r.line) + ": result has more than 62 vertices; use --format edges");
    }
    Sink sink(o.output);
    for (const auto& g : built)
        write_graph(sink.out(), g, o.format);
    return Ok;
}

int cmd_verify(const Options& o)
{
    if (o.order < 1 || o.order > kMaxEnumerationOrder)
        throw UsageError("--order must be in 1.." + std::to_string(kMaxEnumerationOrder));
    VerificationReport report;
    if (o.suite == "theorem")
        report = verify_theorem(o.order);
    else if (o.suite == "chain")
        report = verify_chain(o.order);
    else if (o.suite == "corollaries")
        report = verify_corollaries(o.order);
    else
        report = combine({verify_chain(o.order), verify_theorem(o.order), verify_corollaries(o.order)}, "all");
    Sink sink(o.output);
    sink.out() << report.to_json().dump() << '\n';
    return report.ok() ? Ok : Negative;
}

int cmd_search_minimal(const Options& o)
{
    if (o.order < 1 || o.order > kMaxEnumerationOrder)
        throw UsageError("--order must be in 1.." + std::to_string(kMaxEnumerationOrder));
    Sink sink(o.output);
    for (const auto& g : search_minimal_imperfect(o.order))
        sink.out() << emit_graph6(g) << '\n';
    return Ok;
}

void add_input_options(CLI::App* cmd, Options& o)
{
    cmd->add_option("input", o.input, "Input file (default: standard input)");
    cmd->add_option("--format", o.format, "Input format")->check(CLI::IsMember({"graph6", "edges"}));
    cmd->add_option("--output,-o", o.output, "Write output to this file");
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Exact domination and common-independence invariants, and common domination perfection"};
    app.require_subcommand(1);
    Options o;

    auto* compute = app.add_subcommand("compute", "gamma, i, alpha_c and alpha with witnesses, one JSON record per graph");
    add_input_options(compute, o);

    auto* classify_cmd = app.add_subcommand("classify", "Decide common domination perfection per graph");
    add_input_options(classify_cmd, o);
    classify_cmd->add_option("--method", o.method, "Decision method")
        ->check(CLI::IsMember({"definition", "gamma2", "theorem"}));
    classify_cmd->add_option("--cap", o.cap, "Largest order for the subset-based methods")->check(CLI::Range(1, 20));

    auto* construct_cmd = app.add_subcommand("construct", "Line, corona, middle or total graph of each input");
    add_input_options(construct_cmd, o);
    construct_cmd->add_option("--construction", o.construction, "Construction")
        ->check(CLI::IsMember({"line", "corona", "middle", "total"}));

    auto* verify = app.add_subcommand("verify", "Exhaustive verification over all graphs up to an order");
    verify->add_option("--order", o.order, "Largest order (1..8)");
    verify->add_option("--suite", o.suite, "Suite")->check(CLI::IsMember({"theorem", "corollaries", "chain", "all"}));
    verify->add_option("--output,-o", o.output, "Write the report to this file");

    auto* search = app.add_subcommand("search-minimal", "Minimal imperfect graphs of one order, as graph6");
    search->add_option("--order", o.order, "Order (1..8)");
    search->add_option("--output,-o", o.output, "Write output to this file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? Ok : Usage;
    }

    try {
        if (compute->parsed())
            return cmd_compute(o);
        if (classify_cmd->parsed())
            return cmd_classify(o);
        if (construct_cmd->parsed())
            return cmd_construct(o);
        if (verify->parsed())
            return cmd_verify(o);
        return cmd_search_minimal(o);
    } catch (const UsageError& e) {
        std::cerr << "domiperf: " << e.what() << '\n';
    } catch (const Error& e) {
        std::cerr << "domiperf: " << e.what() << '\n';
    }
    return Usage;
}
