#include "domiperf/kernels.hpp"

#include <cstdlib>
#include <stdexcept>
#include <string_view>

namespace domiperf::kernels {

namespace {

void check_shapes(std::size_t rows, std::size_t table_size)
{
    if (rows > static_cast<std::size_t>(kMaxTableOrder))
        throw std::invalid_argument("subset tables support at most 20 vertices");
    if (table_size != (std::size_t{1} << rows))
        throw std::invalid_argument("subset table must have 2^n entries");
}

}  // namespace

const char* name(Backend backend)
{
    switch (backend) {
    case Backend::Scalar: return "scalar";
    case Backend::Avx2: return "avx2";
    }
    return "unknown";
}

bool available(Backend backend)
{
    switch (backend) {
    case Backend::Scalar: return true;
    case Backend::Avx2:
#if defined(__x86_64__) || defined(_M_X64)
        return __builtin_cpu_supports("avx2");
#else
        return false;
#endif
    }
    return false;
}

Backend best_available()
{
    if (const char* forced = std::getenv("DOMIPERF_KERNELS"); forced && std::string_view(forced) == "scalar")
        return Backend::Scalar;
    return available(Backend::Avx2) ? Backend::Avx2 : Backend::Scalar;
}

void fill_union_table(std::span<const std::uint32_t> closed_rows, std::span<std::uint32_t> table, Backend backend)
{
    check_shapes(closed_rows.size(), table.size());
    if (backend == Backend::Avx2 && available(Backend::Avx2))
        avx2::fill_union_table(closed_rows, table);
    else
        scalar::fill_union_table(closed_rows, table);
}

void fill_independence_table(std::span<const std::uint32_t> closed_rows, std::span<std::uint32_t> table, Backend backend)
{
    check_shapes(closed_rows.size(), table.size());
    if (backend == Backend::Avx2 && available(Backend::Avx2))
        avx2::fill_independence_table(closed_rows, table);
    else
        scalar::fill_independence_table(closed_rows, table);
}

void fill_common_independence_table(std::span<const std::uint32_t> closed_rows, std::span<const std::uint32_t> alpha,
                                    std::span<std::uint32_t> table, Backend backend)
{
    check_shapes(closed_rows.size(), table.size());
    check_shapes(closed_rows.size(), alpha.size());
    if (backend == Backend::Avx2 && available(Backend::Avx2))
        avx2::fill_common_independence_table(closed_rows, alpha, table);
    else
        scalar::fill_common_independence_table(closed_rows, alpha, table);
}

}  // namespace domiperf::kernels
