#include "domiperf/canonical.hpp"

#include "domiperf/formats.hpp"

#include <algorithm>
#include <numeric>

namespace domiperf {

namespace {

using Partition = std::vector<std::vector<int>>;

// Splits cells by neighbour counts into every cell until stable. The result
// depends only on the graph and the incoming ordered partition, never on
// vertex names, so it commutes with relabelling.
void refine(const Graph& g, Partition& cells)
{
    const int n = g.order();
    std::vector<int> cell_of(static_cast<std::size_t>(n));
    while (true) {
        for (std::size_t c = 0; c < cells.size(); ++c)
            for (int v : cells[c])
                cell_of[v] = static_cast<int>(c);

        Partition next;
        next.reserve(static_cast<std::size_t>(n));
        bool split = false;
        for (const auto& cell : cells) {
            if (cell.size() == 1) {
                next.push_back(cell);
                continue;
            }
            std::vector<std::pair<std::vector<int>, int>> keyed;
            keyed.reserve(cell.size());
            for (int v : cell) {
                std::vector<int> counts(cells.size(), 0);
                for (int w : g.neighbors(v))
                    ++counts[cell_of[w]];
                keyed.emplace_back(std::move(counts), v);
            }
            std::sort(keyed.begin(), keyed.end());
            std::size_t start = 0;
            for (std::size_t i = 1; i <= keyed.size(); ++i) {
                if (i == keyed.size() || keyed[i].first != keyed[start].first) {
                    std::vector<int> part;
                    for (std::size_t j = start; j < i; ++j)
                        part.push_back(keyed[j].second);
                    next.push_back(std::move(part));
                    start = i;
                }
            }
            if (next.size() > 0 && next.back().size() != cell.size())
                split = true;
        }
        cells = std::move(next);
        if (!split)
            return;
    }
}

class CanonicalSearch {
public:
    explicit CanonicalSearch(const Graph& g) : g_(g), n_(g.order()) {}

    void run(Partition cells, std::vector<int>& prefix)
    {
        refine(g_, cells);
        std::size_t target = cells.size();
        for (std::size_t c = 0; c < cells.size(); ++c)
            if (cells[c].size() > 1 && (target == cells.size() || cells[c].size() < cells[target].size()))
                target = c;
        if (target == cells.size()) {
            leaf(cells);
            return;
        }
        std::vector<int> explored;
        const std::vector<int> candidates = cells[target];
        for (int v : candidates) {
            if (equivalent_to_explored(v, explored, prefix))
                continue;
            explored.push_back(v);
            Partition child;
            child.reserve(cells.size() + 1);
            for (std::size_t c = 0; c < cells.size(); ++c) {
                if (c != target) {
                    child.push_back(cells[c]);
                    continue;
                }
                child.push_back({v});
                std::vector<int> rest;
                for (int w : cells[c])
                    if (w != v)
                        rest.push_back(w);
                child.push_back(std::move(rest));
            }
            prefix.push_back(v);
            run(std::move(child), prefix);
            prefix.pop_back();
        }
    }

    std::uint64_t best_code() const { return best_code_; }
    const std::vector<int>& best_labeling() const { return best_lab_; }

private:
    std::uint64_t code_of(const std::vector<int>& inverse) const
    {
        std::uint64_t code = 0;
        for (int j = 1; j < n_; ++j)
            for (int i = 0; i < j; ++i)
                code = (code << 1) | (g_.adjacent(inverse[i], inverse[j]) ? 1U : 0U);
        return code;
    }

    void leaf(const Partition& cells)
    {
        std::vector<int> lab(static_cast<std::size_t>(n_));
        std::vector<int> inverse(static_cast<std::size_t>(n_));
        for (std::size_t c = 0; c < cells.size(); ++c) {
            lab[cells[c][0]] = static_cast<int>(c);
            inverse[c] = cells[c][0];
        }
        const std::uint64_t code = code_of(inverse);
        if (!have_leaf_) {
            have_leaf_ = true;
            first_code_ = best_code_ = code;
            first_lab_ = best_lab_ = lab;
            first_inverse_ = best_inverse_ = inverse;
            return;
        }
        if (code == first_code_)
            record_automorphism(first_inverse_, lab);
        else if (code == best_code_)
            record_automorphism(best_inverse_, lab);
        else if (code < best_code_) {
            best_code_ = code;
            best_lab_ = lab;
            best_inverse_ = inverse;
        }
    }

    // v -> other^-1(lab(v)) is an automorphism when both labellings give the same code.
    void record_automorphism(const std::vector<int>& other_inverse, const std::vector<int>& lab)
    {
        std::vector<int> sigma(static_cast<std::size_t>(n_));
        bool identity = true;
        for (int v = 0; v < n_; ++v) {
            sigma[v] = other_inverse[lab[v]];
            identity = identity && sigma[v] == v;
        }
        if (!identity)
            automorphisms_.push_back(std::move(sigma));
    }

    // Prunes v when an automorphism fixing the prefix pointwise maps an explored vertex to v.
    bool equivalent_to_explored(int v, const std::vector<int>& explored, const std::vector<int>& prefix) const
    {
        if (explored.empty() || automorphisms_.empty())
            return false;
        std::vector<int> parent(static_cast<std::size_t>(n_));
        std::iota(parent.begin(), parent.end(), 0);
        auto find = [&](int x) {
            while (parent[x] != x)
                x = parent[x] = parent[parent[x]];
            return x;
        };
        for (const auto& sigma : automorphisms_) {
            bool fixes = std::all_of(prefix.begin(), prefix.end(), [&](int p) { return sigma[p] == p; });
            if (!fixes)
                continue;
            for (int x = 0; x < n_; ++x) {
                const int a = find(x);
                const int b = find(sigma[x]);
                if (a != b)
                    parent[a] = b;
            }
        }
        const int root = find(v);
        return std::any_of(explored.begin(), explored.end(), [&](int u) { return find(u) == root; });
    }

    const Graph& g_;
    int n_;
    bool have_leaf_ = false;
    std::uint64_t first_code_ = 0;
    std::uint64_t best_code_ = 0;
    std::vector<int> first_lab_, best_lab_, first_inverse_, best_inverse_;
    std::vector<std::vector<int>> automorphisms_;
};

void require_canonical_order(const Graph& g)
{
    if (g.order() > kMaxCanonicalOrder)
        throw InvalidArgument("canonical forms support at most 10 vertices, got " + std::to_string(g.order()));
}

}  // namespace

CanonicalForm canonical_form(const Graph& g, const std::vector<int>& colours)
{
    require_canonical_order(g);
    const int n = g.order();
    if (static_cast<int>(colours.size()) != n)
        throw InvalidArgument("canonical_form: one colour per vertex required");
    CanonicalForm out;
    out.order = n;
    if (n == 0) {
        out.token = emit_graph6(g);
        return out;
    }
    std::vector<int> distinct = colours;
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    Partition cells(distinct.size());
    for (int v = 0; v < n; ++v) {
        const auto idx = std::lower_bound(distinct.begin(), distinct.end(), colours[v]) - distinct.begin();
        cells[static_cast<std::size_t>(idx)].push_back(v);
    }
    CanonicalSearch search(g);
    std::vector<int> prefix;
    search.run(std::move(cells), prefix);
    out.labeling = search.best_labeling();
    out.token = emit_graph6(relabel(g, out.labeling));
    return out;
}

CanonicalForm canonical_form(const Graph& g)
{
    return canonical_form(g, std::vector<int>(static_cast<std::size_t>(g.order()), 0));
}

bool same_orbit(const Graph& g, int u, int v)
{
    if (u == v)
        return true;
    if (g.degree(u) != g.degree(v))
        return false;
    std::vector<int> cu(static_cast<std::size_t>(g.order()), 1);
    std::vector<int> cv = cu;
    cu[u] = 0;
    cv[v] = 0;
    return canonical_form(g, cu).token == canonical_form(g, cv).token;
}

std::vector<int> vertex_orbits(const Graph& g)
{
    require_canonical_order(g);
    const int n = g.order();
    std::vector<std::string> marked(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) {
        std::vector<int> c(static_cast<std::size_t>(n), 1);
        c[v] = 0;
        marked[v] = canonical_form(g, c).token;
    }
    std::vector<int> orbit(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) {
        orbit[v] = v;
        for (int u = 0; u < v; ++u) {
            if (marked[u] == marked[v]) {
                orbit[v] = orbit[u];
                break;
            }
        }
    }
    return orbit;
}

namespace {

std::string rooted_code(const Graph& tree, int v, int parent)
{
    std::vector<std::string> children;
    for (int w : tree.neighbors(v))
        if (w != parent)
            children.push_back(rooted_code(tree, w, v));
    std::sort(children.begin(), children.end());
    std::string out = "(";
    for (const auto& c : children)
        out += c;
    out += ')';
    return out;
}

}  // namespace

std::string rooted_tree_code(const Graph& tree, int root)
{
    if (!is_tree(tree))
        throw InvalidArgument("rooted_tree_code: input is not a tree");
    return rooted_code(tree, root, -1);
}

std::string tree_code(const Graph& tree)
{
    if (!is_tree(tree))
        throw InvalidArgument("tree_code: input is not a tree");
    VertexSet left = tree.vertices();
    while (left.size() > 2) {
        VertexSet leaves;
        for (int v : left)
            if ((tree.neighbors(v) & left).size() <= 1)
                leaves.insert(v);
        left -= leaves;
    }
    std::string best;
    for (int c : left) {
        auto code = rooted_code(tree, c, -1);
        if (best.empty() || code < best)
            best = std::move(code);
    }
    return best;
}

}  // namespace domiperf
