#pragma once

#include "domiperf/graph.hpp"
#include "domiperf/kernels.hpp"

#include <cstdint>
#include <vector>

namespace domiperf {

/// gamma and alpha_c of every induced subgraph G[T], indexed by the bitmask of T.
/// Entry 0 (the empty subgraph) holds 0 in both tables.
struct SubsetTables {
    int order = 0;
    std::vector<std::uint32_t> gamma;
    std::vector<std::uint32_t> common_ind;
    std::vector<std::uint32_t> ind;
};

/// Requires n <= kernels::kMaxTableOrder. Cost is O(3^n) for gamma and O(n 2^n) for the rest.
SubsetTables compute_subset_tables(const Graph& g, kernels::Backend backend = kernels::best_available());

/// Every subset of {0..n-1} as a bitmask, ordered by size and then lexicographically
/// on the ascending member sequence. Cached per n; n <= kernels::kMaxTableOrder.
const std::vector<std::uint32_t>& subsets_by_size_then_lex(int n);

}  // namespace domiperf
