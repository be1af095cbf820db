#pragma once

#include "domiperf/graph.hpp"

#include <array>
#include <string>
#include <vector>

namespace domiperf {

// ---------------------------------------------------------------------------
// Trees
// ---------------------------------------------------------------------------

/// Most specific label wins: SINGLETON > STAR > SPIDER > WOUNDED_SPIDER > BROOM3 > OTHER.
enum class TreeClass { Singleton, Star, Spider, WoundedSpider, Broom3, Other };

const char* to_string(TreeClass c);

/// Star K_{1,k} (k >= 1); spider = every star edge subdivided once; wounded
/// spider = at most k-1 edges subdivided once; BROOM3 = K_{1,k} (k >= 2) with
/// one edge subdivided twice. Throws InvalidArgument for non-trees.
TreeClass classify_tree(const Graph& g);

struct TreeConditions {
    bool perfect = false;          ///< no H1..H10 (theorem test)
    bool h1_h7_h8_free = false;
    bool diameter_degree = false;  ///< diam <= 4 and at most one vertex of degree >= 3
    bool taxonomy = false;         ///< K1, spider, wounded spider or BROOM3
    bool all_equal() const
    {
        return perfect == h1_h7_h8_free && perfect == diameter_degree && perfect == taxonomy;
    }
};

TreeConditions tree_corollary_conditions(const Graph& g);

// ---------------------------------------------------------------------------
// Chordal graphs, blocks, block graphs
// ---------------------------------------------------------------------------

/// Maximum cardinality search ordering (vertices in visit order).
std::vector<int> maximum_cardinality_search(const Graph& g);
/// The reverse of an MCS order is a perfect elimination ordering iff g is chordal.
bool is_chordal(const Graph& g);

enum class BlockKind { End, Inner, Isolated };

const char* to_string(BlockKind k);

struct BlockDecomposition {
    std::vector<VertexSet> blocks;
    VertexSet cut_vertices;
    /// End: exactly one cut vertex. Inner: at least two. Isolated: none (a whole component).
    std::vector<BlockKind> kinds;
    /// Number of blocks containing v, for every vertex v (0 for no vertices).
    std::vector<int> blocks_at;
};

/// Blocks via articulation-point search; an isolated vertex forms its own block.
BlockDecomposition block_decomposition(const Graph& g);

bool is_block_graph(const Graph& g);

/// Block-graph characterisation with diameter cases. Requires a connected block graph.
bool block_graph_corollary(const Graph& g);

/// Requires a chordal graph: perfect iff {H1, H7, H8}-free.
bool chordal_corollary(const Graph& g);
/// Requires a claw-free graph: perfect iff {H7, H8, H9}-free.
bool claw_free_corollary(const Graph& g);

// ---------------------------------------------------------------------------
// Constructions
// ---------------------------------------------------------------------------

/// Vertices are the edges of h in lexicographic endpoint order. m(h) <= 64.
Graph line_graph(const Graph& h);
/// h plus a pendant vertex n + v attached to each v. 2n <= 64.
Graph corona_k1(const Graph& h);
/// line_graph(corona_k1(h)).
Graph middle_graph(const Graph& h);
/// Vertices V(h) (0..n-1) then E(h) in lexicographic order. n + m <= 64.
Graph total_graph(const Graph& h);

enum class Construction { Line, Corona, Middle, Total };
Construction parse_construction(std::string_view name);
Graph construct(const Graph& h, Construction c);

/// perfect(L(h)) iff none of 2P4, P7, C6 is a (not necessarily induced) subgraph of h.
bool line_graph_criterion(const Graph& h);
/// perfect(M(h)) iff h has no two vertex-disjoint edges.
bool middle_graph_criterion(const Graph& h);
/// The alternative reading: at most one nontrivial component, and it is a star.
bool middle_graph_star_phrasing(const Graph& h);

}  // namespace domiperf
