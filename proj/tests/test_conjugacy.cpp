#include "cword/conjugacy.hpp"

#include "cword/presets.hpp"

#include <doctest.h>

#include <algorithm>
#include <string>
#include <vector>

namespace {

using namespace cword;

const AlphabetPtr digits = make_alphabet("01234");
const AlphabetPtr abc = make_alphabet("abcde");

const Morphism& f() {
    static const Morphism m = presets::expanded_endomorphism();
    return m;
}
const Morphism& g() {
    static const Morphism m = presets::expanded_coding();
    return m;
}

const FactorSet& underlying15() {
    static const FactorSet s = closure_factor_set(f(), '0', 15);
    return s;
}

const MembershipDecider& decider() {
    static const MembershipDecider d(f(), '0', "01", g(), "ab", DeciderConfig{40});
    return d;
}

} // namespace

TEST_SUITE("conjugacy") {

TEST_CASE("class_of basics") {
    ConjugacyClass c = class_of(Word(digits, "30"));
    CHECK(c.canonical.letters() == "03");
    CHECK(c.length() == 2);
    CHECK(c.index == 0);
    REQUIRE(c.elements.size() == 2);
    CHECK(c.elements[0].letters() == "03");
    CHECK(c.elements[1].letters() == "30");

    CHECK(class_of(Word(digits, "0124")).index == 1);
    CHECK(class_of(Word(digits, "1211")).index == 3);
    CHECK(class_of(Word(digits, "2")).elements.size() == 1);
    // no letter '1' in this alphabet, so the index is defined as 0
    CHECK(class_of(Word(abc, "ab")).index == 0);
    CHECK_THROWS_AS(class_of(Word(digits, "")), std::invalid_argument);
}

TEST_CASE("index and completeness do not depend on the chosen representative") {
    std::string w = "0120301240";
    ConjugacyClass base = class_of(Word(digits, w));
    for (std::size_t k = 0; k < w.size(); ++k) {
        ConjugacyClass c = class_of(rotate(Word(digits, w), k));
        CHECK(c.canonical == base.canonical);
        CHECK(c.index == base.index);
        CHECK(is_complete(c, underlying15()).has_value() ==
              is_complete(base, underlying15()).has_value());
    }
}

TEST_CASE("complete classes: the two-letter class of 03") {
    ConjugacyClass c = class_of(Word(digits, "03"));
    CHECK(!is_complete(c, underlying15())); // nullopt: every rotation occurs
}

TEST_CASE("the class of the fourth iterate is avoided, with several missing rotations") {
    std::string w = power(presets::base_endomorphism(), 4).apply("2");
    REQUIRE(w == "0120301240324");
    ConjugacyClass c = class_of(Word(digits, w));
    CHECK(c.canonical.letters() == w); // the iterate is already canonical
    auto cert = is_complete(c, underlying15());
    REQUIRE(cert.has_value());
    // the scan stops at the least missing offset, which precedes the
    // headline rotation by one
    CHECK(cert->offset == 11);
    CHECK(cert->missing_rotation.letters() == "2401203012403");
    CHECK(cert->source == "factor-set");
    CHECK(replay(*cert, underlying15()));
    // the rotation quoted alongside the class elsewhere is missing as well
    CHECK(!underlying15().contains("4012030124032"));
}

TEST_CASE("is_complete refuses classes beyond the universe bound") {
    std::string w(20, '0');
    w += "1";
    CHECK_THROWS_AS(is_complete(class_of(Word(digits, w)), underlying15()),
                    std::invalid_argument);
}

TEST_CASE("low-index enumeration finds exactly the six short classes") {
    auto classes = complete_classes_up_to(underlying15(), 15, 1);
    std::vector<std::string> canon;
    for (const ConjugacyClass& c : classes)
        canon.push_back(c.canonical.letters());
    CHECK(canon == std::vector<std::string>{"03", "23", "0124", "0324", "01203", "01240323"});
    // sorted by (length, alphabet order) and free of duplicates
    CHECK(std::is_sorted(canon.begin(), canon.end(), [](const auto& a, const auto& b) {
        return a.size() != b.size() ? a.size() < b.size() : a < b;
    }));
}

TEST_CASE("without the index filter the same bound yields more classes") {
    auto all = complete_classes_up_to(underlying15(), 15);
    auto low = complete_classes_up_to(underlying15(), 15, 1);
    CHECK(all.size() > low.size()); // e.g. the full class of the 15-letter iterate of '4'
}

TEST_CASE("coded word has no complete classes up to length 40") {
    FactorSet u = closure_factor_set(f(), '0', 6); // ceil(40/8)+1
    FactorSet coded = coded_factor_set(u, g(), 40);
    CHECK(complete_classes_up_to(coded, 40).empty());
}

TEST_CASE("enumeration below length 2 is empty") {
    CHECK(complete_classes_up_to(underlying15(), 1).empty());
}

TEST_CASE("enumeration beyond the universe bound is refused") {
    CHECK_THROWS_AS(complete_classes_up_to(underlying15(), 16), std::invalid_argument);
}

TEST_CASE("class_avoided_in_word over the factor set") {
    // complete class: no avoidance certificate
    CHECK(!class_avoided_in_word(Word(digits, "03"), underlying15()));
    // the iterate class again, via the scanning form
    auto cert = class_avoided_in_word(Word(digits, "0120301240324"), underlying15());
    REQUIRE(cert.has_value());
    CHECK(cert->missing_rotation.letters() == "2401203012403");
    CHECK(replay(*cert, underlying15()));
    // too long for the universe: directed to the decider form
    std::string longw(16, '0');
    CHECK_THROWS_AS(class_avoided_in_word(Word(digits, longw), underlying15()),
                    std::invalid_argument);
    CHECK_THROWS_AS(class_avoided_in_word(Word(digits, "0"), underlying15()),
                    std::invalid_argument);
}

TEST_CASE("class_avoided_in_word through the decider, with replayable verdicts") {
    // a large construction: the coded image of the two-letter factor 23
    std::string w = g().apply("23");
    REQUIRE(w.size() == 26);
    auto cert = class_avoided_in_word(Word(abc, w), decider(), Level::coded);
    REQUIRE(cert.has_value());
    CHECK(cert->source == "decider");
    REQUIRE(cert->verdict.has_value());
    CHECK(!cert->verdict->is_factor);
    CHECK(replay(*cert, decider(), Level::coded));

    // the coded image itself occurs, so the certificate names a proper rotation
    CHECK(cert->offset > 0);
}

TEST_CASE("a class whose every rotation occurs yields no certificate from the decider") {
    CHECK(!class_avoided_in_word(Word(digits, "03"), decider(), Level::underlying));
    CHECK(!class_avoided_in_word(Word(digits, "01203"), decider(), Level::underlying));
}

TEST_CASE("even the two-letter coded classes are avoided") {
    // 'b' is never followed by 'a' in the coded word, so the class of "ab"
    // misses the rotation "ba"
    auto cert = class_avoided_in_word(Word(abc, "ab"), decider(), Level::coded);
    REQUIRE(cert.has_value());
    CHECK(cert->offset == 1);
    CHECK(cert->missing_rotation.letters() == "ba");
    CHECK(replay(*cert, decider(), Level::coded));
}

TEST_CASE("conjugacy_offset") {
    CHECK(conjugacy_offset("abcd", "abcd") == 0);
    CHECK(conjugacy_offset("bcda", "abcd") == 1);
    CHECK(conjugacy_offset("dabc", "abcd") == 3);
    CHECK(conjugacy_offset("abab", "baba") == 1);
    CHECK(conjugacy_offset("aaaa", "aaaa") == 0); // least offset wins
    CHECK(!conjugacy_offset("abce", "abcd"));
    CHECK(!conjugacy_offset("abc", "abcd"));
    CHECK(conjugacy_offset("", "") == 0);
}

TEST_CASE("replay rejects doctored avoidance certificates") {
    auto cert = is_complete(class_of(Word(digits, "0120301240324")), underlying15());
    REQUIRE(cert.has_value());
    REQUIRE(replay(*cert, underlying15()));

    // swap in a rotation that does occur
    AvoidanceCertificate occurs = *cert;
    occurs.missing_rotation = cert->cls.canonical;
    CHECK(!replay(occurs, underlying15()));

    // swap in a non-factor that is not in the class at all
    AvoidanceCertificate foreign = *cert;
    foreign.missing_rotation = Word(digits, "232");
    CHECK(!replay(foreign, underlying15()));
}

TEST_CASE("decider-backed certificates survive a JSON round-trip of their verdict") {
    auto cert = class_avoided_in_word(Word(digits, "4012030124032"), decider(),
                                      Level::underlying);
    REQUIRE(cert.has_value());
    REQUIRE(cert->verdict.has_value());
    AvoidanceCertificate copy = *cert;
    copy.verdict = verdict_from_json(verdict_to_json(*cert->verdict));
    CHECK(replay(copy, decider(), Level::underlying));
}

} // TEST_SUITE
