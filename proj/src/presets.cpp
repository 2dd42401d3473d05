#include "cword/presets.hpp"

namespace cword::presets {

AlphabetPtr underlying_alphabet() {
    static AlphabetPtr a = make_alphabet("01234");
    return a;
}

AlphabetPtr coded_alphabet() {
    static AlphabetPtr a = make_alphabet("abcde");
    return a;
}

Morphism base_endomorphism() {
    return Morphism(underlying_alphabet(), underlying_alphabet(),
                    {"01", "2", "03", "24", "23"});
}

Morphism base_coding() {
    return Morphism(underlying_alphabet(), coded_alphabet(),
                    {"abcd", "", "eacd", "becd", "be"});
}

Morphism expanded_endomorphism() {
    return Morphism(underlying_alphabet(), underlying_alphabet(),
                    {"01203", "0124", "0120323", "01240324", "01240323"});
}

Morphism expanded_coding() {
    return Morphism(underlying_alphabet(), coded_alphabet(),
                    {"abcdeacd", "abcdbecd", "abcdeacdbe", "abcdbecdeacdbecd", "abcdbecdeacdbe"});
}

} // namespace cword::presets
