#include "domiperf/kernels.hpp"

#include <algorithm>
#include <limits>

namespace domiperf::kernels::scalar {

void fill_union_table(std::span<const std::uint32_t> closed_rows, std::span<std::uint32_t> table)
{
    table[0] = 0;
    for (std::size_t b = 0; b < closed_rows.size(); ++b) {
        const std::size_t half = std::size_t{1} << b;
        for (std::size_t lo = 0; lo < half; ++lo)
            table[half + lo] = table[lo] | closed_rows[b];
    }
}

void fill_independence_table(std::span<const std::uint32_t> closed_rows, std::span<std::uint32_t> table)
{
    table[0] = 0;
    for (std::size_t b = 0; b < closed_rows.size(); ++b) {
        const std::size_t half = std::size_t{1} << b;
        const std::uint32_t keep = ~closed_rows[b];
        for (std::size_t lo = 0; lo < half; ++lo)
            table[half + lo] = std::max(table[lo], 1 + table[lo & keep]);
    }
}

void fill_common_independence_table(std::span<const std::uint32_t> closed_rows, std::span<const std::uint32_t> alpha,
                                    std::span<std::uint32_t> table)
{
    const std::size_t size = std::size_t{1} << closed_rows.size();
    table[0] = 0;
    for (std::size_t t = 1; t < size; ++t) {
        std::uint32_t best = std::numeric_limits<std::uint32_t>::max();
        for (std::size_t v = 0; v < closed_rows.size(); ++v)
            if ((t >> v) & 1U)
                best = std::min(best, 1 + alpha[t & ~closed_rows[v]]);
        table[t] = best;
    }
}

}  // namespace domiperf::kernels::scalar
