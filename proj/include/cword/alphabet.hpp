#pragma once

#include <array>
#include <memory>
#include <string>
#include <string_view>

namespace cword {

/// An ordered alphabet of distinct single-character letters. Declaration
/// order defines the lexicographic order used everywhere (least rotations,
/// class enumeration), independently of byte values.
class Alphabet {
public:
    explicit Alphabet(std::string_view symbols);

    std::size_t size() const noexcept { return symbols_.size(); }
    const std::string& symbols() const noexcept { return symbols_; }

    bool contains(char c) const noexcept { return rank_[byte(c)] >= 0; }

    /// Position of `c` in declaration order, or -1 if absent.
    int rank(char c) const noexcept { return rank_[byte(c)]; }

    char at(std::size_t i) const { return symbols_.at(i); }

    /// Validates that every letter of `w` belongs to this alphabet.
    bool covers(std::string_view w) const noexcept;

    /// Alphabets compare by symbol sequence, so two independently constructed
    /// alphabets with the same declaration order are interchangeable.
    bool operator==(const Alphabet& other) const noexcept { return symbols_ == other.symbols_; }
    bool operator!=(const Alphabet& other) const noexcept { return !(*this == other); }

    /// Lexicographic comparison of raw letter sequences under this alphabet's
    /// order: <0, 0, >0 like memcmp.
    int compare(std::string_view a, std::string_view b) const noexcept;

private:
    static std::size_t byte(char c) noexcept { return static_cast<unsigned char>(c); }

    std::string symbols_;
    std::array<int, 256> rank_;
};

using AlphabetPtr = std::shared_ptr<const Alphabet>;

AlphabetPtr make_alphabet(std::string_view symbols);

} // namespace cword
