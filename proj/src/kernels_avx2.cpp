#include "cword/kernels.hpp"

#if defined(CWORD_HAVE_AVX2)

#include <immintrin.h>

namespace cword::kernels::detail {

namespace {

inline __m256i load32(const char* p) {
    return _mm256_loadu_si256(reinterpret_cast<const __m256i*>(p));
}

} // namespace

std::size_t count_byte_avx2(std::string_view s, char b) {
    const char* p = s.data();
    std::size_t n = s.size();
    const __m256i needle = _mm256_set1_epi8(b);
    std::size_t total = 0;
    std::size_t i = 0;
    for (; i + 32 <= n; i += 32) {
        __m256i eq = _mm256_cmpeq_epi8(load32(p + i), needle);
        total += static_cast<std::size_t>(
            __builtin_popcount(static_cast<unsigned>(_mm256_movemask_epi8(eq))));
    }
    for (; i < n; ++i)
        total += (p[i] == b);
    return total;
}

void find_byte_avx2(std::string_view s, char b, std::vector<std::size_t>& out) {
    const char* p = s.data();
    std::size_t n = s.size();
    const __m256i needle = _mm256_set1_epi8(b);
    std::size_t i = 0;
    for (; i + 32 <= n; i += 32) {
        __m256i eq = _mm256_cmpeq_epi8(load32(p + i), needle);
        unsigned mask = static_cast<unsigned>(_mm256_movemask_epi8(eq));
        while (mask) {
            unsigned bit = static_cast<unsigned>(__builtin_ctz(mask));
            out.push_back(i + bit);
            mask &= mask - 1;
        }
    }
    for (; i < n; ++i)
        if (p[i] == b)
            out.push_back(i);
}

void find_pair_avx2(std::string_view s, char b0, char b1, std::vector<std::size_t>& out) {
    std::size_t n = s.size();
    if (n < 2)
        return;
    const char* p = s.data();
    const __m256i n0 = _mm256_set1_epi8(b0);
    const __m256i n1 = _mm256_set1_epi8(b1);
    std::size_t i = 0;
    // Positions i..i+31 need bytes up to i+32, hence the i+33 <= n bound.
    for (; i + 33 <= n; i += 32) {
        __m256i eq0 = _mm256_cmpeq_epi8(load32(p + i), n0);
        __m256i eq1 = _mm256_cmpeq_epi8(load32(p + i + 1), n1);
        unsigned mask =
            static_cast<unsigned>(_mm256_movemask_epi8(_mm256_and_si256(eq0, eq1)));
        while (mask) {
            unsigned bit = static_cast<unsigned>(__builtin_ctz(mask));
            out.push_back(i + bit);
            mask &= mask - 1;
        }
    }
    for (; i + 1 < n; ++i)
        if (p[i] == b0 && p[i + 1] == b1)
            out.push_back(i);
}

} // namespace cword::kernels::detail

#endif // CWORD_HAVE_AVX2
