#pragma once

#include "domiperf/graph.hpp"

#include <functional>
#include <string_view>
#include <vector>

namespace domiperf {

inline constexpr int kMaxEnumerationOrder = 8;
inline constexpr int kMaxTreeOrder = 12;

enum class GraphClass { All, Connected, Tree, Chordal, BlockGraph, ClawFree };

const char* to_string(GraphClass c);
GraphClass parse_graph_class(std::string_view name);
bool belongs_to(const Graph& g, GraphClass c);

/// One representative per isomorphism class, in canonical labelling, in a
/// fixed generation order. Orders <= 8, or <= 12 for GraphClass::Tree.
std::vector<Graph> enumerate_graphs(int order, GraphClass filter = GraphClass::All);

/// Streams the same sequence as enumerate_graphs().
void for_each_graph(int order, GraphClass filter, const std::function<void(const Graph&)>& visit);

/// Non-isomorphic trees by leaf augmentation (canonical deletion of the leaf
/// with the largest rooted code). Orders 1..12.
std::vector<Graph> enumerate_trees(int order);

/// Children of `parent` under canonical augmentation: graphs on parent.order()+1
/// vertices whose canonical deletion vertex is the new vertex, one per class.
std::vector<Graph> augment(const Graph& parent);

}  // namespace domiperf
