#include "cword/conjugacy.hpp"

#include <algorithm>
#include <stdexcept>

namespace cword {

ConjugacyClass class_of(const Word& w) {
    if (w.is_empty())
        throw std::invalid_argument("the empty word has no conjugacy class");
    ConjugacyClass c{canonical_rotation(w), distinct_rotations(w), 0};
    if (w.alphabet()->contains('1'))
        c.index = count_letter(c.canonical, '1');
    return c;
}

std::optional<AvoidanceCertificate> is_complete(const ConjugacyClass& c, const FactorSet& universe) {
    if (c.length() > universe.bound())
        throw std::invalid_argument("class is longer than the universe bound");
    for (std::size_t k = 0; k < c.length(); ++k) {
        Word r = rotate(c.canonical, k);
        if (!universe.contains(r.view()))
            return AvoidanceCertificate{c, std::move(r), k, "factor-set", std::nullopt};
    }
    return std::nullopt;
}

std::vector<ConjugacyClass> complete_classes_up_to(const FactorSet& universe, std::size_t max_len,
                                                   std::optional<std::size_t> max_index) {
    if (max_len > universe.bound())
        throw std::invalid_argument("enumeration bound exceeds the universe bound");
    std::vector<ConjugacyClass> out;
    for (std::size_t len = 2; len <= max_len; ++len) {
        for (const std::string& u : universe.members_of_length(len)) {
            // Each class is visited exactly once, through its canonical member.
            if (least_rotation_offset(u, *universe.alphabet()) != 0)
                continue;
            ConjugacyClass c = class_of(Word(universe.alphabet(), u));
            if (max_index && c.index > *max_index)
                continue;
            if (!is_complete(c, universe))
                out.push_back(std::move(c));
        }
    }
    return out;
}

std::optional<AvoidanceCertificate> class_avoided_in_word(const Word& w, const FactorSet& universe) {
    if (w.size() < 2)
        throw std::invalid_argument("conjugacy classes need length at least 2");
    if (w.size() > universe.bound())
        throw std::invalid_argument("word is longer than the universe bound; use the decider form");
    for (std::size_t k = 0; k < w.size(); ++k) {
        Word r = rotate(w, k);
        if (!universe.contains(r.view()))
            return AvoidanceCertificate{class_of(w), std::move(r), k, "factor-set", std::nullopt};
    }
    return std::nullopt;
}

std::optional<AvoidanceCertificate> class_avoided_in_word(const Word& w,
                                                          const MembershipDecider& decider,
                                                          Level level) {
    if (w.size() < 2)
        throw std::invalid_argument("conjugacy classes need length at least 2");
    for (std::size_t k = 0; k < w.size(); ++k) {
        Word r = rotate(w, k);
        MembershipVerdict v = decider.decide(r.view(), level);
        if (!v.is_factor)
            return AvoidanceCertificate{class_of(w), std::move(r), k, "decider", std::move(v)};
    }
    return std::nullopt;
}

std::optional<std::size_t> conjugacy_offset(std::string_view a, std::string_view b) {
    if (a.size() != b.size())
        return std::nullopt;
    if (a.empty())
        return 0;
    std::string doubled(b);
    doubled += b;
    for (std::size_t p : find_occurrences(doubled, a))
        if (p < b.size())
            return p;
    return std::nullopt;
}

namespace {

bool element_of_class(const AvoidanceCertificate& cert) {
    const std::string& m = cert.missing_rotation.letters();
    if (!conjugacy_offset(m, cert.cls.canonical.letters()))
        return false;
    return std::any_of(cert.cls.elements.begin(), cert.cls.elements.end(),
                       [&m](const Word& e) { return e.letters() == m; });
}

} // namespace

bool replay(const AvoidanceCertificate& cert, const FactorSet& universe) {
    if (!element_of_class(cert))
        return false;
    if (cert.missing_rotation.size() > universe.bound())
        return false;
    return !universe.contains(cert.missing_rotation.view());
}

bool replay(const AvoidanceCertificate& cert, const MembershipDecider& decider, Level level) {
    if (!element_of_class(cert))
        return false;
    if (cert.verdict) {
        if (cert.verdict->word != cert.missing_rotation.letters() || cert.verdict->is_factor)
            return false;
        return replay(*cert.verdict, decider);
    }
    if (cert.missing_rotation.size() > decider.factor_set(level).bound())
        return false;
    return !decider.factor_set(level).contains(cert.missing_rotation.view());
}

} // namespace cword
