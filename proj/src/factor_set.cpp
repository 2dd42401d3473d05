#include "cword/factor_set.hpp"

#include "cword/errors.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace cword {

namespace {

// Rough per-member bookkeeping cost beyond the character data itself (hash
// node + std::string header). Used only to enforce the memory budget.
constexpr std::size_t member_overhead = 48;

// Accumulates members and tracks an approximate byte budget.
struct BudgetedSet {
    StringSet members;
    std::size_t bytes = 0;
    std::size_t budget;

    explicit BudgetedSet(std::size_t budget_bytes) : budget(budget_bytes) {}

    // Returns true when u was new.
    bool add(std::string_view u) {
        if (members.find(u) != members.end())
            return false;
        bytes += u.size() + member_overhead;
        if (bytes > budget)
            throw resource_error("factor-set construction exceeded its memory budget");
        members.emplace(u);
        return true;
    }
};

// All factors of img of length <= k that start inside the first image block
// (length first_len) and end inside the last image block (length last_len).
// For a one-letter pre-image the blocks coincide and this is every factor.
template <typename Sink>
void spanning_windows(std::string_view img, std::size_t first_len, std::size_t last_len,
                      std::size_t k, Sink&& sink) {
    const std::size_t last_start = img.size() - last_len;
    for (std::size_t s = 0; s < first_len; ++s) {
        std::size_t e = std::max(s + 1, last_start + 1);
        for (; e <= img.size(); ++e) {
            if (e - s > k)
                break;
            sink(img.substr(s, e - s));
        }
    }
}

} // namespace

FactorSet::FactorSet(std::string subject, AlphabetPtr alphabet, std::size_t bound, StringSet members)
    : subject_(std::move(subject)), alphabet_(std::move(alphabet)), bound_(bound),
      members_(std::move(members)) {
    if (!alphabet_)
        throw std::invalid_argument("factor set requires an alphabet");
}

bool FactorSet::contains(std::string_view u) const {
    if (u.size() > bound_)
        throw std::invalid_argument("membership query exceeds the factor-set bound");
    if (u.empty())
        return true;
    return members_.find(u) != members_.end();
}

std::vector<std::string> FactorSet::members_of_length(std::size_t len) const {
    std::vector<std::string> out;
    for (const std::string& u : members_)
        if (u.size() == len)
            out.push_back(u);
    std::sort(out.begin(), out.end(),
              [this](const std::string& a, const std::string& b) { return alphabet_->compare(a, b) < 0; });
    return out;
}

std::size_t FactorSet::max_length_avoiding(char x) const {
    std::size_t best = 0;
    for (const std::string& u : members_)
        if (u.size() > best && u.find(x) == std::string::npos)
            best = u.size();
    return best;
}

FactorSet closure_factor_set(const Morphism& m, char seed, std::size_t k, std::size_t budget_bytes) {
    if (!m.is_endomorphism())
        throw std::invalid_argument("factor closure requires an endomorphism");
    if (m.is_erasing())
        throw std::invalid_argument("factor closure requires a non-erasing morphism");
    std::vector<char> prolongable = m.prolongable_letters();
    if (std::find(prolongable.begin(), prolongable.end(), seed) == prolongable.end())
        throw std::invalid_argument("seed letter is not prolongable for this morphism");
    if (k == 0)
        throw std::invalid_argument("factor-set bound must be at least 1");

    BudgetedSet set(budget_bytes);
    std::vector<std::string> work;
    auto add = [&](std::string_view u) {
        if (u.empty() || u.size() > k)
            return;
        if (set.add(u))
            work.emplace_back(u);
    };

    // Every factor of length <= k of some iterate m^N(seed) descends, window
    // by window, to a factor of the seed itself, so {seed} is a complete
    // starting point for the fixpoint iteration.
    add(std::string_view(&seed, 1));

    while (!work.empty()) {
        std::string u = std::move(work.back());
        work.pop_back();

        // Sub-factor closure: dropping one letter at either end generates all
        // sub-factors transitively.
        std::string_view uv = u;
        add(uv.substr(0, uv.size() - 1));
        add(uv.substr(1));

        // Windows of m(u) longer than k are of no use; skip the expansion
        // when even the shortest spanning window (covering the whole middle)
        // would overshoot.
        if (u.size() >= 2 && (u.size() - 2) * m.min_image_len() + 2 > k)
            continue;

        std::string img = m.apply(uv);
        spanning_windows(img, m.image(u.front()).size(), m.image(u.back()).size(), k, add);
    }

    std::string subject = "fixed point of seed '";
    subject.push_back(seed);
    subject += "'";
    return FactorSet(std::move(subject), m.source(), k, std::move(set.members));
}

FactorSet coded_factor_set(const FactorSet& underlying, const Morphism& coder, std::size_t k,
                           std::size_t budget_bytes) {
    if (coder.is_erasing())
        throw std::invalid_argument("coded factor sets require a non-erasing coding morphism");
    if (*coder.source() != *underlying.alphabet())
        throw std::invalid_argument("coding morphism source does not match the underlying alphabet");
    if (k == 0)
        throw std::invalid_argument("factor-set bound must be at least 1");

    // A coded factor of length <= k spans at most this many underlying
    // letters (both endpoints may sit strictly inside their end images).
    const std::size_t span = (k + coder.min_image_len() - 1) / coder.min_image_len() + 1;
    if (underlying.bound() < span)
        throw std::invalid_argument("underlying factor-set bound is too small for the requested coded bound");

    BudgetedSet set(budget_bytes);
    for (const std::string& u : underlying.members()) {
        if (u.size() > span)
            continue;
        std::string img = coder.apply(u);
        spanning_windows(img, coder.image(u.front()).size(), coder.image(u.back()).size(), k,
                         [&](std::string_view w) { set.add(w); });
    }

    return FactorSet("coding of [" + underlying.subject() + "]", coder.target(), k,
                     std::move(set.members));
}

} // namespace cword
