#pragma once

#include "cword/alphabet.hpp"
#include "cword/morphism.hpp"

#include <cstddef>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

namespace cword {

struct StringViewHash {
    using is_transparent = void;
    std::size_t operator()(std::string_view s) const noexcept {
        return std::hash<std::string_view>{}(s);
    }
};
struct StringViewEq {
    using is_transparent = void;
    bool operator()(std::string_view a, std::string_view b) const noexcept { return a == b; }
};
using StringSet = std::unordered_set<std::string, StringViewHash, StringViewEq>;

/// Default cap on the bytes a factor-set construction may allocate for members.
inline constexpr std::size_t default_factor_budget = std::size_t{512} << 20;

/// The exact set of factors of length <= bound of some infinite word.
/// Immutable; closed under taking sub-factors.
class FactorSet {
public:
    FactorSet(std::string subject, AlphabetPtr alphabet, std::size_t bound, StringSet members);

    const std::string& subject() const noexcept { return subject_; }
    const AlphabetPtr& alphabet() const noexcept { return alphabet_; }
    std::size_t bound() const noexcept { return bound_; }
    std::size_t size() const noexcept { return members_.size(); }
    const StringSet& members() const noexcept { return members_; }

    /// Exact membership for |u| <= bound; the empty word is always a factor.
    /// Queries beyond the bound throw (they would be unsound to answer).
    bool contains(std::string_view u) const;

    /// Members of one length, sorted by alphabet order.
    std::vector<std::string> members_of_length(std::size_t len) const;

    /// Length of the longest member avoiding letter x entirely (0 if none).
    /// Conclusive as a statement about the infinite word only when < bound.
    std::size_t max_length_avoiding(char x) const;

private:
    std::string subject_;
    AlphabetPtr alphabet_;
    std::size_t bound_;
    StringSet members_;
};

/// Exact factors of length <= k of the fixed point m^ω(seed), by iterating
/// image windows to a fixpoint. Requires a non-erasing endomorphism and a
/// prolongable seed: non-erasure guarantees every length-ℓ factor of m(w) sits
/// inside m(u) for a factor u of w with |u| <= max(ℓ, 1), which makes the
/// fixpoint both sound and complete.
FactorSet closure_factor_set(const Morphism& m, char seed, std::size_t k,
                             std::size_t budget_bytes = default_factor_budget);

/// Exact factors of length <= k of coder(underlying word). Every such factor
/// sits inside coder(u) for an underlying factor u with
/// |u| <= ceil(k / coder.min_image_len) + 1, so the underlying set must reach
/// at least that bound.
FactorSet coded_factor_set(const FactorSet& underlying, const Morphism& coder, std::size_t k,
                           std::size_t budget_bytes = default_factor_budget);

} // namespace cword
