#pragma once

// Whole-power-set table kernels used by the definition-based perfection checks.
//
// Every table is indexed by a vertex subset encoded as a bitmask T over
// {0, ..., n-1}, so a table has exactly 2^n entries. `closed_rows[v]` is N[v]
// as a mask. The scalar kernels are the reference; the AVX2 variants must
// produce identical tables.

#include <cstdint>
#include <span>

namespace domiperf::kernels {

inline constexpr int kMaxTableOrder = 20;

enum class Backend { Scalar, Avx2 };

const char* name(Backend backend);
bool available(Backend backend);
/// Fastest backend the running CPU supports. Set DOMIPERF_KERNELS=scalar to force the reference path.
Backend best_available();

/// table[T] = N[T].
void fill_union_table(std::span<const std::uint32_t> closed_rows, std::span<std::uint32_t> table, Backend backend);

/// table[T] = alpha(G[T]).
void fill_independence_table(std::span<const std::uint32_t> closed_rows, std::span<std::uint32_t> table, Backend backend);

/// table[T] = min over v in T of 1 + alpha(G[T \ N[v]]), i.e. alpha_c(G[T]); table[0] = 0.
/// `alpha` must be the output of fill_independence_table for the same graph.
void fill_common_independence_table(std::span<const std::uint32_t> closed_rows, std::span<const std::uint32_t> alpha,
                                    std::span<std::uint32_t> table, Backend backend);

namespace scalar {
void fill_union_table(std::span<const std::uint32_t> closed_rows, std::span<std::uint32_t> table);
void fill_independence_table(std::span<const std::uint32_t> closed_rows, std::span<std::uint32_t> table);
void fill_common_independence_table(std::span<const std::uint32_t> closed_rows, std::span<const std::uint32_t> alpha,
                                    std::span<std::uint32_t> table);
}  // namespace scalar

namespace avx2 {
void fill_union_table(std::span<const std::uint32_t> closed_rows, std::span<std::uint32_t> table);
void fill_independence_table(std::span<const std::uint32_t> closed_rows, std::span<std::uint32_t> table);
void fill_common_independence_table(std::span<const std::uint32_t> closed_rows, std::span<const std::uint32_t> alpha,
                                    std::span<std::uint32_t> table);
}  // namespace avx2

}  // namespace domiperf::kernels
