#include "domiperf/subset_tables.hpp"

#include <algorithm>
#include <array>
#include <limits>
#include <memory>
#include <mutex>

namespace domiperf {

SubsetTables compute_subset_tables(const Graph& g, kernels::Backend backend)
{
    const int n = g.order();
    if (n > kernels::kMaxTableOrder)
        throw InvalidArgument("subset tables support at most 20 vertices, got " + std::to_string(n));
    const std::size_t size = std::size_t{1} << n;

    std::vector<std::uint32_t> closed(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v)
        closed[v] = static_cast<std::uint32_t>(g.closed_neighbors(v).bits());

    SubsetTables t;
    t.order = n;
    std::vector<std::uint32_t> unions(size);
    t.ind.resize(size);
    t.common_ind.resize(size);
    kernels::fill_union_table(closed, unions, backend);
    kernels::fill_independence_table(closed, t.ind, backend);
    kernels::fill_common_independence_table(closed, t.ind, t.common_ind, backend);

    // gamma(G[H]) = min |T| over T ⊆ H ⊆ N[T]: sweep every T over the
    // interval of sets it dominates.
    t.gamma.assign(size, std::numeric_limits<std::uint32_t>::max());
    for (std::uint32_t s = 0; s < size; ++s) {
        const auto k = static_cast<std::uint32_t>(std::popcount(s));
        const std::uint32_t free = unions[s] & ~s;
        std::uint32_t sub = free;
        while (true) {
            auto& slot = t.gamma[s | sub];
            slot = std::min(slot, k);
            if (sub == 0)
                break;
            sub = (sub - 1) & free;
        }
    }
    return t;
}

const std::vector<std::uint32_t>& subsets_by_size_then_lex(int n)
{
    if (n < 0 || n > kernels::kMaxTableOrder)
        throw InvalidArgument("subset ordering supports at most 20 vertices");
    static std::array<std::unique_ptr<std::vector<std::uint32_t>>, kernels::kMaxTableOrder + 1> cache;
    static std::mutex mutex;
    std::lock_guard lock(mutex);
    auto& slot = cache[static_cast<std::size_t>(n)];
    if (!slot) {
        std::vector<std::uint32_t> all(std::size_t{1} << n);
        for (std::uint32_t s = 0; s < all.size(); ++s)
            all[s] = s;
        std::sort(all.begin(), all.end(), [](std::uint32_t a, std::uint32_t b) {
            const int pa = std::popcount(a);
            const int pb = std::popcount(b);
            if (pa != pb)
                return pa < pb;
            return VertexSet::lex_less(VertexSet(a), VertexSet(b));
        });
        slot = std::make_unique<std::vector<std::uint32_t>>(std::move(all));
    }
    return *slot;
}

}  // namespace domiperf
