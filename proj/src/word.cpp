#include "cword/word.hpp"

#include "cword/errors.hpp"
#include "cword/kernels.hpp"

#include <algorithm>
#include <stdexcept>

namespace cword {

Word::Word(AlphabetPtr alphabet, std::string letters)
    : alphabet_(std::move(alphabet)), letters_(std::move(letters)) {
    if (!alphabet_)
        throw std::invalid_argument("word requires an alphabet");
    if (!alphabet_->covers(letters_))
        throw std::invalid_argument("word contains a letter outside its alphabet");
}

Word rotate(const Word& w, std::size_t k) {
    if (k > w.size())
        throw std::invalid_argument("rotation offset exceeds word length");
    if (k == 0 || k == w.size())
        return w;
    std::string out;
    out.reserve(w.size());
    out.append(w.letters(), k, std::string::npos);
    out.append(w.letters(), 0, k);
    return Word(w.alphabet(), std::move(out));
}

std::vector<Word> distinct_rotations(const Word& w) {
    if (w.is_empty())
        throw std::invalid_argument("the empty word has no rotations");
    // Materializing all rotations costs |w|^2 bytes; refuse absurd inputs
    // instead of thrashing (32768^2 = 1 GiB).
    if (w.size() > 32768)
        throw resource_error("rotation set of a word this long exceeds the memory budget");
    std::vector<Word> rots;
    rots.reserve(w.size());
    for (std::size_t k = 0; k < w.size(); ++k)
        rots.push_back(rotate(w, k));
    const Alphabet& order = *w.alphabet();
    std::sort(rots.begin(), rots.end(), [&order](const Word& a, const Word& b) {
        return order.compare(a.letters(), b.letters()) < 0;
    });
    rots.erase(std::unique(rots.begin(), rots.end(),
                           [](const Word& a, const Word& b) { return a.letters() == b.letters(); }),
               rots.end());
    return rots;
}

// Booth's least-rotation algorithm: two candidate offsets i, j advance with a
// shared match length k over the doubled word. Comparisons use the alphabet's
// declaration order, not byte order.
std::size_t least_rotation_offset(std::string_view s, const Alphabet& order) {
    if (s.empty())
        throw std::invalid_argument("the empty word has no rotations");
    const std::size_t n = s.size();
    auto at = [&](std::size_t idx) { return order.rank(s[idx % n]); };
    std::size_t i = 0, j = 1, k = 0;
    while (i < n && j < n && k < n) {
        int a = at(i + k), b = at(j + k);
        if (a == b) {
            ++k;
            continue;
        }
        if (a > b)
            i = std::max(i + k + 1, j); // i cannot be least; skip past the mismatch
        else
            j = std::max(j + k + 1, i);
        if (i == j)
            ++j;
        k = 0;
    }
    return std::min(i, j);
}

Word canonical_rotation(const Word& w) {
    if (w.is_empty())
        throw std::invalid_argument("the empty word has no rotations");
    return rotate(w, least_rotation_offset(w.view(), *w.alphabet()));
}

std::size_t count_letter(const Word& w, char x) {
    return kernels::count_byte(w.view(), x);
}

std::vector<std::size_t> find_occurrences(std::string_view haystack, std::string_view needle) {
    if (needle.empty())
        throw std::invalid_argument("occurrence search requires a nonempty pattern");
    std::vector<std::size_t> out;
    if (needle.size() > haystack.size())
        return out;
    if (needle.size() == 1) {
        kernels::find_byte(haystack, needle[0], out);
        return out;
    }
    if (needle.size() == 2) {
        kernels::find_pair(haystack, needle[0], needle[1], out);
        return out;
    }
    // KMP: guaranteed linear even on the highly repetitive words produced by
    // iterated morphisms, where skip-based searchers degrade.
    const std::size_t m = needle.size();
    std::vector<std::size_t> fail(m, 0);
    for (std::size_t i = 1, k = 0; i < m; ++i) {
        while (k > 0 && needle[i] != needle[k])
            k = fail[k - 1];
        if (needle[i] == needle[k])
            ++k;
        fail[i] = k;
    }
    for (std::size_t i = 0, k = 0; i < haystack.size(); ++i) {
        while (k > 0 && haystack[i] != needle[k])
            k = fail[k - 1];
        if (haystack[i] == needle[k])
            ++k;
        if (k == m) {
            out.push_back(i + 1 - m);
            k = fail[k - 1];
        }
    }
    return out;
}

std::vector<std::size_t> find_occurrences(const Word& haystack, const Word& needle) {
    return find_occurrences(haystack.view(), needle.view());
}

} // namespace cword
