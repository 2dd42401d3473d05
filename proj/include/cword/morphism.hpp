#pragma once

#include "cword/alphabet.hpp"
#include "cword/word.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace cword {

/// A morphism between free monoids, stored as one image word per source
/// letter. Immutable after construction.
class Morphism {
public:
    /// `images[i]` is the image of the i-th source letter (declaration order).
    Morphism(AlphabetPtr source, AlphabetPtr target, std::vector<std::string> images);

    static Morphism identity(AlphabetPtr alphabet);

    const AlphabetPtr& source() const noexcept { return source_; }
    const AlphabetPtr& target() const noexcept { return target_; }
    const std::vector<std::string>& images() const noexcept { return images_; }

    /// Image of a single source letter.
    const std::string& image(char letter) const;

    std::size_t min_image_len() const noexcept { return min_image_len_; }
    std::size_t max_image_len() const noexcept { return max_image_len_; }
    bool is_erasing() const noexcept { return min_image_len_ == 0; }
    bool is_endomorphism() const noexcept { return *source_ == *target_; }

    /// Letters x with image starting with x and |image| >= 2; iterating the
    /// morphism on such a letter yields an infinite fixed point.
    std::vector<char> prolongable_letters() const;

    std::string apply(std::string_view w) const;
    Word apply(const Word& w) const;

    bool operator==(const Morphism& other) const;
    bool operator!=(const Morphism& other) const { return !(*this == other); }

private:
    AlphabetPtr source_;
    AlphabetPtr target_;
    std::vector<std::string> images_;
    std::size_t min_image_len_;
    std::size_t max_image_len_;
};

/// outer ∘ inner: images[x] = outer(inner(x)). Requires inner.target =
/// outer.source.
Morphism compose(const Morphism& outer, const Morphism& inner);

/// n-fold composition of an endomorphism; power(m, 0) is the identity on
/// m.source.
Morphism power(const Morphism& m, unsigned n);

/// Incrementally materialized prefix of the fixed point m^ω(seed). The buffer
/// only ever grows; previously emitted letters never change.
class FixedPointStream {
public:
    /// Requires an endomorphism and a prolongable seed letter.
    FixedPointStream(Morphism m, char seed);

    /// Grow the buffer to at least `min_len` letters.
    void ensure(std::size_t min_len);

    const std::string& buffer() const noexcept { return buffer_; }
    const Morphism& morphism() const noexcept { return morphism_; }
    char seed() const noexcept { return seed_; }

private:
    Morphism morphism_;
    char seed_;
    std::string buffer_;
    std::size_t expanded_ = 0; // letters of buffer_ whose images are already appended
};

/// First `min_len` letters of the fixed point m^ω(seed). Deterministic; a call
/// with larger `min_len` returns an extension.
std::string fixed_point_prefix(const Morphism& m, char seed, std::size_t min_len);

/// Parse the rule-per-line text format:
///
///     # comment
///     alphabet: 01234        (optional; declares the source letter order)
///     0 -> 01
///     1 ->                   (empty right-hand side is the empty word)
///
/// Without the header, the source alphabet is the left-hand letters in first
/// appearance order. The target alphabet is the source when every image letter
/// belongs to it (an endomorphism), otherwise the image letters in first
/// appearance order. Throws parse_error with a line number on malformed input.
Morphism parse_morphism(std::string_view text);

/// Inverse of parse_morphism for the rule lines; parse(format(m)) == m for
/// morphisms whose alphabets are inferable (all presets are).
std::string format_morphism(const Morphism& m);

} // namespace cword
