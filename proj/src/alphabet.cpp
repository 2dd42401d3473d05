#include "cword/alphabet.hpp"

#include <stdexcept>

namespace cword {

Alphabet::Alphabet(std::string_view symbols) : symbols_(symbols) {
    if (symbols_.empty())
        throw std::invalid_argument("alphabet must contain at least one letter");
    rank_.fill(-1);
    for (std::size_t i = 0; i < symbols_.size(); ++i) {
        char c = symbols_[i];
        if (rank_[byte(c)] >= 0)
            throw std::invalid_argument(std::string("duplicate letter in alphabet: ") + c);
        rank_[byte(c)] = static_cast<int>(i);
    }
}

bool Alphabet::covers(std::string_view w) const noexcept {
    for (char c : w)
        if (rank_[byte(c)] < 0)
            return false;
    return true;
}

int Alphabet::compare(std::string_view a, std::string_view b) const noexcept {
    std::size_t n = a.size() < b.size() ? a.size() : b.size();
    for (std::size_t i = 0; i < n; ++i) {
        int d = rank_[byte(a[i])] - rank_[byte(b[i])];
        if (d != 0)
            return d;
    }
    if (a.size() == b.size())
        return 0;
    return a.size() < b.size() ? -1 : 1;
}

AlphabetPtr make_alphabet(std::string_view symbols) {
    return std::make_shared<const Alphabet>(symbols);
}

} // namespace cword
