#include "cword/morphism.hpp"

#include "cword/errors.hpp"
#include "cword/presets.hpp"

#include <doctest.h>

#include <string>
#include <vector>

namespace {

using namespace cword;

} // namespace

TEST_SUITE("morphism") {

TEST_CASE("construction checks image count and target coverage") {
    AlphabetPtr ab = make_alphabet("ab");
    CHECK_NOTHROW(Morphism(ab, ab, {"ab", "a"}));
    CHECK_THROWS_AS(Morphism(ab, ab, {"ab"}), std::invalid_argument);          // missing image
    CHECK_THROWS_AS(Morphism(ab, ab, {"ab", "ax"}), std::invalid_argument);    // foreign letter
}

TEST_CASE("apply concatenates images; the empty word maps to itself") {
    const Morphism F = presets::base_endomorphism();
    CHECK(F.apply("0") == "01");
    CHECK(F.apply("01") == "012");
    CHECK(F.apply("") == "");
    CHECK(F.apply("43210") == "232403201");
}

TEST_CASE("erasing images are applied as the empty word") {
    const Morphism G = presets::base_coding();
    CHECK(G.is_erasing());
    CHECK(G.image('1') == "");
    CHECK(G.apply("011") == "abcd");
    CHECK(G.apply("11111") == "");
    CHECK(G.min_image_len() == 0);
    CHECK(G.max_image_len() == 4);
}

TEST_CASE("min and max image lengths") {
    const Morphism f = presets::expanded_endomorphism();
    CHECK(f.min_image_len() == 4); // the image of '1'
    CHECK(f.max_image_len() == 8);
    const Morphism g = presets::expanded_coding();
    CHECK(g.min_image_len() == 8);
    CHECK(g.max_image_len() == 16);
    CHECK(!g.is_erasing());
}

TEST_CASE("compose applies the outer morphism to every image") {
    const Morphism F = presets::base_endomorphism();
    const Morphism G = presets::base_coding();
    Morphism GF = compose(G, F);
    CHECK(GF.image('0') == G.apply(F.image('0')));
    CHECK(GF.image('4') == G.apply(F.image('4')));
    CHECK(*GF.source() == *F.source());
    CHECK(*GF.target() == *G.target());
    // alphabet mismatch must be rejected
    CHECK_THROWS_AS(compose(F, G), std::invalid_argument);
}

TEST_CASE("power iterates an endomorphism") {
    const Morphism F = presets::base_endomorphism();
    CHECK(power(F, 0) == Morphism::identity(F.source()));
    CHECK(power(F, 1) == F);
    CHECK(power(F, 2) == compose(F, F));
    CHECK(power(F, 3).apply("0") == F.apply(F.apply(F.apply("0"))));
    CHECK_THROWS_AS(power(presets::base_coding(), 2), std::invalid_argument); // not an endomorphism
}

TEST_CASE("prolongable letters") {
    const Morphism F = presets::base_endomorphism();
    CHECK(F.prolongable_letters() == std::vector<char>{'0'}); // only F(0)=01 starts with 0
    AlphabetPtr ab = make_alphabet("ab");
    Morphism both(ab, ab, {"ab", "ba"});
    CHECK(both.prolongable_letters() == std::vector<char>{'a', 'b'});
}

TEST_CASE("fixed point prefixes are stable under extension") {
    const Morphism f = presets::expanded_endomorphism();
    std::string p10 = fixed_point_prefix(f, '0', 10);
    std::string p200 = fixed_point_prefix(f, '0', 200);
    CHECK(p10.size() == 10);
    CHECK(p200.size() == 200);
    CHECK(p200.compare(0, 10, p10) == 0);
    CHECK(p10 == "0120301240");

    // iterating the stream yields the same letters
    FixedPointStream stream(f, '0');
    stream.ensure(200);
    CHECK(stream.buffer().compare(0, 200, p200) == 0);
}

TEST_CASE("the fixed point is genuinely fixed") {
    const Morphism f = presets::expanded_endomorphism();
    std::string p = fixed_point_prefix(f, '0', 500);
    std::string fp = f.apply(p);
    CHECK(fp.compare(0, 500, p) == 0);
}

TEST_CASE("prefixes of the two generating endomorphisms coincide") {
    // f is checked elsewhere to be the third power of F, so the fixed points
    // must agree letter for letter.
    std::string a = fixed_point_prefix(presets::base_endomorphism(), '0', 3000);
    std::string b = fixed_point_prefix(presets::expanded_endomorphism(), '0', 3000);
    CHECK(a == b);
}

TEST_CASE("non-prolongable seeds are rejected") {
    const Morphism f = presets::expanded_endomorphism();
    CHECK_THROWS_AS(FixedPointStream(f, '1'), std::invalid_argument);
    CHECK_THROWS_AS(fixed_point_prefix(f, '7', 5), std::invalid_argument);
}

TEST_CASE("parse: plain rules") {
    Morphism m = parse_morphism("0 -> 01\n1 -> 2\n2 -> 03\n3 -> 24\n4 -> 23\n");
    CHECK(m == presets::base_endomorphism());
}

TEST_CASE("parse: comments, blanks, CRLF and the alphabet header") {
    Morphism m = parse_morphism("# the base endomorphism\r\n"
                                "alphabet: 01234\r\n"
                                "\r\n"
                                "0 -> 01   # seed rule\r\n"
                                "1 -> 2\n2 -> 03\n3 -> 24\n4 -> 23\n");
    CHECK(m == presets::base_endomorphism());
}

TEST_CASE("parse: empty right-hand side is the empty image") {
    Morphism m = parse_morphism("0 -> abcd\n1 ->\n2 -> eacd\n3 -> becd\n4 -> be\n");
    CHECK(m == presets::base_coding());
    CHECK(m.image('1').empty());
}

TEST_CASE("parse: the header fixes letter order even against appearance order") {
    Morphism m = parse_morphism("alphabet: ba\na -> b\nb -> ab\n");
    CHECK(m.source()->symbols() == "ba");
    CHECK(m.image('a') == "b");
}

TEST_CASE("parse errors carry line numbers") {
    auto line_of = [](const char* text) {
        try {
            parse_morphism(text);
        } catch (const parse_error& e) {
            return e.line();
        }
        return -1;
    };
    CHECK(line_of("0 -> 01\nbogus line\n") == 2);
    CHECK(line_of("01 -> 0\n") == 1);                        // multi-letter lhs
    CHECK(line_of("0 -> 01\n0 -> 10\n") == 2);               // duplicate rule
    CHECK(line_of("alphabet: 01\nalphabet: 01\n0 -> 0\n") == 2);
    CHECK(line_of("alphabet: 001\n0 -> 0\n") == 1);          // repeated letter
    CHECK_THROWS_AS(parse_morphism("alphabet: 01\n0 -> 01\n"), parse_error); // missing rule
    CHECK_THROWS_AS(parse_morphism(""), parse_error);        // no rules at all
}

TEST_CASE("format/parse round-trips every preset table") {
    for (const Morphism& m : {presets::base_endomorphism(), presets::base_coding(),
                              presets::expanded_endomorphism(), presets::expanded_coding()}) {
        CHECK(parse_morphism(format_morphism(m)) == m);
    }
}

TEST_CASE("identity morphism") {
    AlphabetPtr d = make_alphabet("01234");
    Morphism id = Morphism::identity(d);
    CHECK(id.apply("42013") == "42013");
    CHECK(id.is_endomorphism());
}

} // TEST_SUITE
