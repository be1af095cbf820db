#include "domiperf/kernels.hpp"

#if defined(__x86_64__) || defined(_M_X64)
#define DOMIPERF_HAVE_AVX2_TU 1
#include <immintrin.h>
#else
#define DOMIPERF_HAVE_AVX2_TU 0
#endif

#include <stdexcept>

namespace domiperf::kernels::avx2 {

#if DOMIPERF_HAVE_AVX2_TU

namespace {

constexpr std::size_t kLanes = 8;

__attribute__((target("avx2"))) inline __m256i lane_offsets()
{
    return _mm256_setr_epi32(0, 1, 2, 3, 4, 5, 6, 7);
}

}  // namespace

__attribute__((target("avx2")))
void fill_union_table(std::span<const std::uint32_t> closed_rows, std::span<std::uint32_t> table)
{
    table[0] = 0;
    for (std::size_t b = 0; b < closed_rows.size(); ++b) {
        const std::size_t half = std::size_t{1} << b;
        if (half < kLanes) {
            for (std::size_t lo = 0; lo < half; ++lo)
                table[half + lo] = table[lo] | closed_rows[b];
            continue;
        }
        const __m256i row = _mm256_set1_epi32(static_cast<int>(closed_rows[b]));
        for (std::size_t lo = 0; lo < half; lo += kLanes) {
            const __m256i low = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(table.data() + lo));
            _mm256_storeu_si256(reinterpret_cast<__m256i*>(table.data() + half + lo), _mm256_or_si256(low, row));
        }
    }
}

__attribute__((target("avx2")))
void fill_independence_table(std::span<const std::uint32_t> closed_rows, std::span<std::uint32_t> table)
{
    table[0] = 0;
    const __m256i one = _mm256_set1_epi32(1);
    for (std::size_t b = 0; b < closed_rows.size(); ++b) {
        const std::size_t half = std::size_t{1} << b;
        const std::uint32_t keep = ~closed_rows[b];
        if (half < kLanes) {
            for (std::size_t lo = 0; lo < half; ++lo) {
                const std::uint32_t without = table[lo];
                const std::uint32_t with = 1 + table[lo & keep];
                table[half + lo] = without > with ? without : with;
            }
            continue;
        }
        const __m256i keep_v = _mm256_set1_epi32(static_cast<int>(keep));
        const auto* base = reinterpret_cast<const int*>(table.data());
        for (std::size_t lo = 0; lo < half; lo += kLanes) {
            const __m256i index = _mm256_add_epi32(_mm256_set1_epi32(static_cast<int>(lo)), lane_offsets());
            const __m256i rest = _mm256_and_si256(index, keep_v);
            const __m256i with = _mm256_add_epi32(_mm256_i32gather_epi32(base, rest, 4), one);
            const __m256i without = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(table.data() + lo));
            _mm256_storeu_si256(reinterpret_cast<__m256i*>(table.data() + half + lo), _mm256_max_epu32(with, without));
        }
    }
}

__attribute__((target("avx2")))
void fill_common_independence_table(std::span<const std::uint32_t> closed_rows, std::span<const std::uint32_t> alpha,
                                    std::span<std::uint32_t> table)
{
    const std::size_t n = closed_rows.size();
    const std::size_t size = std::size_t{1} << n;
    if (size < kLanes) {
        scalar::fill_common_independence_table(closed_rows, alpha, table);
        return;
    }
    const __m256i one = _mm256_set1_epi32(1);
    const __m256i none = _mm256_set1_epi32(-1);
    const auto* base = reinterpret_cast<const int*>(alpha.data());
    for (std::size_t t = 0; t < size; t += kLanes) {
        const __m256i index = _mm256_add_epi32(_mm256_set1_epi32(static_cast<int>(t)), lane_offsets());
        __m256i best = none;
        for (std::size_t v = 0; v < n; ++v) {
            const __m256i bit = _mm256_set1_epi32(1 << v);
            const __m256i member = _mm256_cmpeq_epi32(_mm256_and_si256(index, bit), bit);
            const __m256i rest = _mm256_andnot_si256(_mm256_set1_epi32(static_cast<int>(closed_rows[v])), index);
            const __m256i candidate = _mm256_add_epi32(_mm256_i32gather_epi32(base, rest, 4), one);
            best = _mm256_min_epu32(best, _mm256_blendv_epi8(none, candidate, member));
        }
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(table.data() + t), best);
    }
    table[0] = 0;
}

#else

void fill_union_table(std::span<const std::uint32_t>, std::span<std::uint32_t>)
{
    throw std::logic_error("AVX2 kernels are not compiled for this architecture");
}

void fill_independence_table(std::span<const std::uint32_t>, std::span<std::uint32_t>)
{
    throw std::logic_error("AVX2 kernels are not compiled for this architecture");
}

void fill_common_independence_table(std::span<const std::uint32_t>, std::span<const std::uint32_t>, std::span<std::uint32_t>)
{
    throw std::logic_error("AVX2 kernels are not compiled for this architecture");
}

#endif

}  // namespace domiperf::kernels::avx2
