#include "cword/kernels.hpp"

#include <doctest.h>

#include <algorithm>
#include <random>
#include <string>
#include <vector>

namespace {

using namespace cword;

// Reference answers computed the dumb way, independent of the scalar kernels.
std::size_t naive_count(const std::string& s, char b) {
    return static_cast<std::size_t>(std::count(s.begin(), s.end(), b));
}

std::vector<std::size_t> naive_find(const std::string& s, char b) {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < s.size(); ++i)
        if (s[i] == b)
            out.push_back(i);
    return out;
}

std::vector<std::size_t> naive_find_pair(const std::string& s, char b0, char b1) {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i + 1 < s.size(); ++i)
        if (s[i] == b0 && s[i + 1] == b1)
            out.push_back(i);
    return out;
}

std::string random_word(std::mt19937& rng, std::size_t len, int sigma) {
    std::uniform_int_distribution<int> pick(0, sigma - 1);
    std::string s(len, '?');
    for (char& c : s)
        c = static_cast<char>('a' + pick(rng));
    return s;
}

// Restore whatever backend was active when the test started.
struct BackendGuard {
    kernels::Backend saved = kernels::active();
    ~BackendGuard() { kernels::force(saved); }
};

} // namespace

TEST_SUITE("kernels") {

TEST_CASE("scalar backend is always available") {
    auto backends = kernels::available();
    REQUIRE(!backends.empty());
    CHECK(backends.front() == kernels::Backend::scalar);
    CHECK(kernels::name(kernels::Backend::scalar) == std::string("scalar"));
}

TEST_CASE("forcing an uncompiled backend throws") {
    auto backends = kernels::available();
    for (kernels::Backend b : {kernels::Backend::avx2, kernels::Backend::neon}) {
        if (std::find(backends.begin(), backends.end(), b) == backends.end())
            CHECK_THROWS_AS(kernels::force(b), std::invalid_argument);
    }
}

TEST_CASE("handcrafted cases on every backend") {
    BackendGuard guard;
    for (kernels::Backend b : kernels::available()) {
        kernels::force(b);
        INFO("backend ", std::string(kernels::name(b)));

        CHECK(kernels::count_byte("", 'a') == 0);
        CHECK(kernels::count_byte("aaaa", 'a') == 4);
        CHECK(kernels::count_byte("abcabc", 'c') == 2);

        std::vector<std::size_t> out;
        kernels::find_byte("abcabc", 'b', out);
        CHECK(out == std::vector<std::size_t>{1, 4});
        kernels::find_byte("", 'b', out);
        CHECK(out.empty());

        kernels::find_pair("ababab", 'a', 'b', out);
        CHECK(out == std::vector<std::size_t>{0, 2, 4});
        kernels::find_pair("aaa", 'a', 'a', out); // overlapping pairs count
        CHECK(out == std::vector<std::size_t>{0, 1});
        kernels::find_pair("x", 'x', 'x', out);
        CHECK(out.empty());
    }
}

TEST_CASE("random equivalence against the naive oracle") {
    BackendGuard guard;
    std::mt19937 rng(20250814);
    // Lengths straddle the SIMD block width so remainders get exercised.
    std::vector<std::size_t> lengths = {0, 1, 7, 31, 32, 33, 63, 64, 65, 100, 1000, 4096, 10001};
    for (std::size_t len : lengths) {
        std::string s = random_word(rng, len, 3);
        char b0 = 'a', b1 = 'b';
        std::size_t want_count = naive_count(s, b0);
        auto want_find = naive_find(s, b0);
        auto want_pair = naive_find_pair(s, b0, b1);
        for (kernels::Backend b : kernels::available()) {
            kernels::force(b);
            INFO("backend ", std::string(kernels::name(b)), " len ", len);
            CHECK(kernels::count_byte(s, b0) == want_count);
            std::vector<std::size_t> out;
            kernels::find_byte(s, b0, out);
            CHECK(out == want_find);
            kernels::find_pair(s, b0, b1, out);
            CHECK(out == want_pair);
        }
    }
}

TEST_CASE("pair straddling a SIMD block boundary") {
    BackendGuard guard;
    // Place the pair so its two bytes land in different 32-byte blocks.
    std::string s(64, 'z');
    s[31] = 'a';
    s[32] = 'b';
    for (kernels::Backend b : kernels::available()) {
        kernels::force(b);
        std::vector<std::size_t> out;
        kernels::find_pair(s, 'a', 'b', out);
        CHECK(out == std::vector<std::size_t>{31});
    }
}

} // TEST_SUITE
