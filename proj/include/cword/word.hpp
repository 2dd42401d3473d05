#pragma once

#include "cword/alphabet.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace cword {

/// A finite word over a declared alphabet. Immutable after construction;
/// the empty word is valid.
class Word {
public:
    Word(AlphabetPtr alphabet, std::string letters);

    static Word empty(AlphabetPtr alphabet) { return Word(std::move(alphabet), ""); }

    std::size_t size() const noexcept { return letters_.size(); }
    bool is_empty() const noexcept { return letters_.empty(); }
    char operator[](std::size_t i) const { return letters_[i]; }

    const std::string& letters() const noexcept { return letters_; }
    std::string_view view() const noexcept { return letters_; }
    const AlphabetPtr& alphabet() const noexcept { return alphabet_; }

    bool same_alphabet(const Word& other) const noexcept {
        return alphabet_ == other.alphabet_ || *alphabet_ == *other.alphabet_;
    }

    bool operator==(const Word& other) const noexcept {
        return letters_ == other.letters_ && same_alphabet(other);
    }
    bool operator!=(const Word& other) const noexcept { return !(*this == other); }

    /// Lexicographic order under the alphabet's declaration order.
    bool operator<(const Word& other) const { return alphabet_->compare(letters_, other.letters_) < 0; }

private:
    AlphabetPtr alphabet_;
    std::string letters_;
};

/// w[k..] ++ w[..k]. Requires 0 <= k <= |w|; k == |w| (and k == 0) is the
/// identity.
Word rotate(const Word& w, std::size_t k);

/// All distinct rotations of a nonempty word, sorted by alphabet order.
/// Cardinality is |w| divided by the smallest period of w dividing |w|.
std::vector<Word> distinct_rotations(const Word& w);

/// Offset of the lexicographically least rotation (least offset among equal
/// rotations), in O(|w|).
std::size_t least_rotation_offset(std::string_view s, const Alphabet& order);

/// The lexicographically least rotation of a nonempty word.
Word canonical_rotation(const Word& w);

/// Number of occurrences of letter x in w; rotation-invariant.
std::size_t count_letter(const Word& w, char x);

/// Start positions of all (possibly overlapping) occurrences of `needle`,
/// ascending. Requires a nonempty needle; linear time.
std::vector<std::size_t> find_occurrences(std::string_view haystack, std::string_view needle);
std::vector<std::size_t> find_occurrences(const Word& haystack, const Word& needle);

} // namespace cword
