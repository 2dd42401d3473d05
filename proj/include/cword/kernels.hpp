#pragma once

#include <cstddef>
#include <string_view>
#include <vector>

// Byte-scan kernels behind the word-level operations. Each kernel has a
// portable scalar reference implementation and, where the target supports it,
// a SIMD variant (AVX2 on x86-64, NEON on aarch64). The active backend is
// picked once at startup from CPU features and can be overridden for
// equivalence testing.

namespace cword::kernels {

enum class Backend { scalar, avx2, neon };

/// Backends compiled into this binary and usable on this CPU.
std::vector<Backend> available();

/// Currently active backend.
Backend active();

/// Force a specific backend; throws std::invalid_argument if unavailable.
/// The CWORD_KERNEL environment variable ("scalar", "avx2", "neon") is
/// honored once at startup.
void force(Backend b);

const char* name(Backend b);

/// Number of positions i with s[i] == b.
std::size_t count_byte(std::string_view s, char b);

/// Replace `out` with all positions i (ascending) where s[i] == b.
void find_byte(std::string_view s, char b, std::vector<std::size_t>& out);

/// Replace `out` with all positions i (ascending) where s[i] == b0 and
/// s[i+1] == b1.
void find_pair(std::string_view s, char b0, char b1, std::vector<std::size_t>& out);

namespace detail {
std::size_t count_byte_scalar(std::string_view s, char b);
void find_byte_scalar(std::string_view s, char b, std::vector<std::size_t>& out);
void find_pair_scalar(std::string_view s, char b0, char b1, std::vector<std::size_t>& out);

#if defined(CWORD_HAVE_AVX2)
std::size_t count_byte_avx2(std::string_view s, char b);
void find_byte_avx2(std::string_view s, char b, std::vector<std::size_t>& out);
void find_pair_avx2(std::string_view s, char b0, char b1, std::vector<std::size_t>& out);
#endif
#if defined(CWORD_HAVE_NEON)
std::size_t count_byte_neon(std::string_view s, char b);
void find_byte_neon(std::string_view s, char b, std::vector<std::size_t>& out);
void find_pair_neon(std::string_view s, char b0, char b1, std::vector<std::size_t>& out);
#endif
} // namespace detail

} // namespace cword::kernels
