#pragma once

#include "cword/factor_set.hpp"
#include "cword/membership.hpp"
#include "cword/word.hpp"

#include <optional>
#include <string_view>
#include <vector>

namespace cword {

/// The set of rotations of a word, represented by its least rotation.
struct ConjugacyClass {
    Word canonical;             // least rotation under alphabet order
    std::vector<Word> elements; // all distinct rotations, sorted
    std::size_t index;          // occurrences of letter '1' (0 when the alphabet has none)

    std::size_t length() const noexcept { return canonical.size(); }
};

/// Class of a nonempty word.
ConjugacyClass class_of(const Word& w);

/// A witness that some rotation of a class is missing from a word's factors.
struct AvoidanceCertificate {
    ConjugacyClass cls;
    Word missing_rotation;
    std::size_t offset;  // rotation offset at which the scan found the gap
    std::string source;  // "factor-set" or "decider"
    std::optional<MembershipVerdict> verdict; // present when a decider produced it
};

/// Complete iff every element of the class is in the universe; otherwise the
/// certificate names the missing rotation with the least offset from the
/// canonical form. The class must fit within the universe bound.
std::optional<AvoidanceCertificate> is_complete(const ConjugacyClass& c, const FactorSet& universe);

/// All complete classes with 2 <= length <= max_len (and index <= max_index
/// when given), deduplicated by canonical form, sorted by (length, canonical).
std::vector<ConjugacyClass> complete_classes_up_to(const FactorSet& universe, std::size_t max_len,
                                                   std::optional<std::size_t> max_index = {});

/// Scan the rotations of w (offsets ascending from w itself) for one that is
/// not a factor; empty result means the class of w is complete. Requires
/// |w| >= 2 and, for the factor-set form, |w| within the universe bound.
std::optional<AvoidanceCertificate> class_avoided_in_word(const Word& w, const FactorSet& universe);
std::optional<AvoidanceCertificate> class_avoided_in_word(const Word& w,
                                                          const MembershipDecider& decider,
                                                          Level level);

/// Least k with a = rotate(b, k), when a is a rotation of b at all.
std::optional<std::size_t> conjugacy_offset(std::string_view a, std::string_view b);

/// Re-verify a certificate: the missing rotation must be an element of the
/// class, sit at the stated offset, and its non-membership must re-derive.
bool replay(const AvoidanceCertificate& cert, const FactorSet& universe);
bool replay(const AvoidanceCertificate& cert, const MembershipDecider& decider, Level level);

} // namespace cword
