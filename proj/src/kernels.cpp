#include "cword/kernels.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <cstring>
#include <stdexcept>
#include <string>

namespace cword::kernels {

namespace detail {

std::size_t count_byte_scalar(std::string_view s, char b) {
    std::size_t n = 0;
    for (char c : s)
        n += (c == b);
    return n;
}

void find_byte_scalar(std::string_view s, char b, std::vector<std::size_t>& out) {
    for (std::size_t i = 0; i < s.size(); ++i)
        if (s[i] == b)
            out.push_back(i);
}

void find_pair_scalar(std::string_view s, char b0, char b1, std::vector<std::size_t>& out) {
    if (s.size() < 2)
        return;
    for (std::size_t i = 0; i + 1 < s.size(); ++i)
        if (s[i] == b0 && s[i + 1] == b1)
            out.push_back(i);
}

} // namespace detail

namespace {

struct Dispatch {
    std::size_t (*count_byte)(std::string_view, char);
    void (*find_byte)(std::string_view, char, std::vector<std::size_t>&);
    void (*find_pair)(std::string_view, char, char, std::vector<std::size_t>&);
};

constexpr Dispatch kScalar{detail::count_byte_scalar, detail::find_byte_scalar,
                           detail::find_pair_scalar};
#if defined(CWORD_HAVE_AVX2)
constexpr Dispatch kAvx2{detail::count_byte_avx2, detail::find_byte_avx2,
                         detail::find_pair_avx2};
#endif
#if defined(CWORD_HAVE_NEON)
constexpr Dispatch kNeon{detail::count_byte_neon, detail::find_byte_neon,
                         detail::find_pair_neon};
#endif

bool backend_usable(Backend b) {
    switch (b) {
    case Backend::scalar:
        return true;
    case Backend::avx2:
#if defined(CWORD_HAVE_AVX2)
        return __builtin_cpu_supports("avx2") != 0;
#else
        return false;
#endif
    case Backend::neon:
#if defined(CWORD_HAVE_NEON)
        return true; // NEON is baseline on aarch64
#else
        return false;
#endif
    }
    return false;
}

const Dispatch& table_for(Backend b) {
    switch (b) {
#if defined(CWORD_HAVE_AVX2)
    case Backend::avx2:
        return kAvx2;
#endif
#if defined(CWORD_HAVE_NEON)
    case Backend::neon:
        return kNeon;
#endif
    default:
        return kScalar;
    }
}

Backend pick_default() {
    if (const char* env = std::getenv("CWORD_KERNEL")) {
        std::string v(env);
        if (v == "scalar")
            return Backend::scalar;
        if (v == "avx2" && backend_usable(Backend::avx2))
            return Backend::avx2;
        if (v == "neon" && backend_usable(Backend::neon))
            return Backend::neon;
        // Unknown or unusable request falls through to auto-detection.
    }
    if (backend_usable(Backend::avx2))
        return Backend::avx2;
    if (backend_usable(Backend::neon))
        return Backend::neon;
    return Backend::scalar;
}

std::atomic<Backend> g_active{pick_default()};

} // namespace

std::vector<Backend> available() {
    std::vector<Backend> v{Backend::scalar};
    if (backend_usable(Backend::avx2))
        v.push_back(Backend::avx2);
    if (backend_usable(Backend::neon))
        v.push_back(Backend::neon);
    return v;
}

Backend active() { return g_active.load(std::memory_order_relaxed); }

void force(Backend b) {
    if (!backend_usable(b))
        throw std::invalid_argument(std::string("kernel backend unavailable: ") + name(b));
    g_active.store(b, std::memory_order_relaxed);
}

const char* name(Backend b) {
    switch (b) {
    case Backend::scalar:
        return "scalar";
    case Backend::avx2:
        return "avx2";
    case Backend::neon:
        return "neon";
    }
    return "?";
}

std::size_t count_byte(std::string_view s, char b) {
    return table_for(active()).count_byte(s, b);
}

void find_byte(std::string_view s, char b, std::vector<std::size_t>& out) {
    out.clear();
    table_for(active()).find_byte(s, b, out);
}

void find_pair(std::string_view s, char b0, char b1, std::vector<std::size_t>& out) {
    out.clear();
    table_for(active()).find_pair(s, b0, b1, out);
}

} // namespace cword::kernels
