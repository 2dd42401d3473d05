#include "cword/kernels.hpp"

#if defined(CWORD_HAVE_NEON)

#include <arm_neon.h>

namespace cword::kernels::detail {

namespace {

// Packs the high bit of each byte lane into a 16-bit mask (one bit per lane).
inline unsigned movemask16(uint8x16_t eq) {
    const uint8x16_t bits = {1, 2, 4, 8, 16, 32, 64, 128, 1, 2, 4, 8, 16, 32, 64, 128};
    uint8x16_t masked = vandq_u8(eq, bits);
    uint8x8_t lo = vget_low_u8(masked);
    uint8x8_t hi = vget_high_u8(masked);
    return static_cast<unsigned>(vaddv_u8(lo)) | (static_cast<unsigned>(vaddv_u8(hi)) << 8);
}

} // namespace

std::size_t count_byte_neon(std::string_view s, char b) {
    const auto* p = reinterpret_cast<const uint8_t*>(s.data());
    std::size_t n = s.size();
    const uint8x16_t needle = vdupq_n_u8(static_cast<uint8_t>(b));
    std::size_t total = 0;
    std::size_t i = 0;
    for (; i + 16 <= n; i += 16) {
        uint8x16_t eq = vceqq_u8(vld1q_u8(p + i), needle);
        // Equal lanes are 0xFF; shift to 0x01 and sum across the vector.
        total += vaddvq_u8(vshrq_n_u8(eq, 7));
    }
    for (; i < n; ++i)
        total += (p[i] == static_cast<uint8_t>(b));
    return total;
}

void find_byte_neon(std::string_view s, char b, std::vector<std::size_t>& out) {
    const auto* p = reinterpret_cast<const uint8_t*>(s.data());
    std::size_t n = s.size();
    const uint8x16_t needle = vdupq_n_u8(static_cast<uint8_t>(b));
    std::size_t i = 0;
    for (; i + 16 <= n; i += 16) {
        unsigned mask = movemask16(vceqq_u8(vld1q_u8(p + i), needle));
        while (mask) {
            unsigned bit = static_cast<unsigned>(__builtin_ctz(mask));
            out.push_back(i + bit);
            mask &= mask - 1;
        }
    }
    for (; i < n; ++i)
        if (p[i] == static_cast<uint8_t>(b))
            out.push_back(i);
}

void find_pair_neon(std::string_view s, char b0, char b1, std::vector<std::size_t>& out) {
    std::size_t n = s.size();
    if (n < 2)
        return;
    const auto* p = reinterpret_cast<const uint8_t*>(s.data());
    const uint8x16_t n0 = vdupq_n_u8(static_cast<uint8_t>(b0));
    const uint8x16_t n1 = vdupq_n_u8(static_cast<uint8_t>(b1));
    std::size_t i = 0;
    for (; i + 17 <= n; i += 16) {
        uint8x16_t eq0 = vceqq_u8(vld1q_u8(p + i), n0);
        uint8x16_t eq1 = vceqq_u8(vld1q_u8(p + i + 1), n1);
        unsigned mask = movemask16(vandq_u8(eq0, eq1));
        while (mask) {
            unsigned bit = static_cast<unsigned>(__builtin_ctz(mask));
            out.push_back(i + bit);
            mask &= mask - 1;
        }
    }
    for (; i + 1 < n; ++i)
        if (p[i] == static_cast<uint8_t>(b0) && p[i + 1] == static_cast<uint8_t>(b1))
            out.push_back(i);
}

} // namespace cword::kernels::detail

#endif // CWORD_HAVE_NEON
