#include "cword/verifier.hpp"

#include "cword/conjugacy.hpp"
#include "cword/presets.hpp"

#include <doctest.h>

#include <string>
#include <vector>

namespace {

using namespace cword;
using namespace cword::verifier;

// Strip fields that legitimately vary between runs before comparing reports.
nlohmann::json stable(nlohmann::json report) {
    for (auto& check : report["checks"])
        check.erase("elapsed_ms");
    return report;
}

} // namespace

TEST_SUITE("verifier") {

TEST_CASE("preset tables load and are mutually consistent") {
    Tables t = preset_tables();
    CHECK(power(t.F, 3) == t.f);
    CHECK(compose(t.G, power(t.F, 2)) == t.g);
}

TEST_CASE("every family states facts that hold") {
    REQUIRE(families().size() == 4);
    for (const TWordFamily& fam : families()) {
        CHECK(!fam.adjacency.empty());
        CHECK(fam.affixes.size() == 4);
        CHECK(&family_by_seed(fam.seed) == &fam);
    }
    CHECK_THROWS_AS(family_by_seed("99"), std::invalid_argument);
}

TEST_CASE("constructed words at d=0 have the documented shapes") {
    Tables t = preset_tables();
    // (family seed, expected length, expected rotation offset of T in target)
    struct Expected {
        const char* seed;
        std::size_t length;
        std::size_t offset;
    };
    for (Expected e : {Expected{"23", 26, 9}, Expected{"0324", 48, 17}}) {
        TWordPair p = build_t_word(family_by_seed(e.seed), 0, t.f, t.g);
        CHECK(p.target == t.g.apply(e.seed));
        CHECK(p.T.size() == e.length);
        auto off = conjugacy_offset(p.T, p.target);
        REQUIRE(off.has_value());
        CHECK(*off == e.offset);
    }
    CHECK(build_t_word(family_by_seed("01240323"), 0, t.f, t.g).T.size() == 90);
    CHECK(build_t_word(family_by_seed("01203"), 0, t.f, t.g).T.size() == 50);
}

TEST_CASE("the 23-family word at d=0 is the expected literal") {
    Tables t = preset_tables();
    TWordPair p = build_t_word(family_by_seed("23"), 0, t.f, t.g);
    // left "e" ++ g(3) ++ g(01203) truncated shape: rotation of g(23) at offset 9
    std::string target = t.g.apply("23");
    CHECK(p.T == target.substr(9) + target.substr(0, 9));
}

TEST_CASE("constructed words track their targets for every d") {
    Tables t = preset_tables();
    for (const TWordFamily& fam : families()) {
        for (unsigned d = 0; d <= 3; ++d) {
            TWordPair p = build_t_word(fam, d, t.f, t.g);
            CHECK(p.target == t.g.apply(/*f^d(seed)=*/[&] {
                std::string w = fam.seed;
                for (unsigned i = 0; i < d; ++i)
                    w = t.f.apply(w);
                return w;
            }()));
            CHECK(p.T.size() == p.target.size());
            CHECK(conjugacy_offset(p.T, p.target).has_value());
        }
    }
}

TEST_CASE("full report passes on the preset tables") {
    Config cfg;
    cfg.max_d = 2; // keep the suite quick; the acceptance run covers d <= 5
    VerificationReport rep = full_report(preset_tables(), cfg);
    for (const CheckResult& c : rep.checks) {
        INFO(c.name, ": ", c.detail);
        CHECK(c.status == "pass");
    }
    CHECK(rep.all_passed());
    // 16 shared checks plus, per family, one facts check and d=0..2
    CHECK(rep.checks.size() == 16 + 4 * 4);
}

TEST_CASE("report ordering and content are deterministic") {
    Config cfg;
    cfg.max_d = 1;
    nlohmann::json a = stable(full_report(preset_tables(), cfg).to_json());
    nlohmann::json b = stable(full_report(preset_tables(), cfg).to_json());
    CHECK(a == b);
    CHECK(a["summary"]["failed"] == 0);
    CHECK(a["summary"]["total"] == a["checks"].size());
}

TEST_CASE("the text rendering carries one line per check plus a summary") {
    Config cfg;
    cfg.max_d = 0;
    VerificationReport rep = full_report(preset_tables(), cfg);
    std::string text = rep.to_text();
    std::size_t lines = 0;
    for (char c : text)
        lines += c == '\n';
    CHECK(lines == rep.checks.size() + 1);
    CHECK(text.find("PASS  tables/underlying-composition") == 0);
    CHECK(text.find("0 failed") != std::string::npos);
}

TEST_CASE("a corrupted coding table fails exactly the composition check") {
    Tables t = preset_tables();
    std::vector<std::string> images = t.G.images();
    images[1] = "x";
    t.G = Morphism(t.G.source(), make_alphabet("abcdex"), std::move(images));
    Config cfg;
    cfg.max_d = 0;
    VerificationReport rep = full_report(t, cfg);
    CHECK(!rep.all_passed());
    for (const CheckResult& c : rep.checks) {
        if (c.name == "tables/coded-composition")
            CHECK(c.status == "fail");
        else
            CHECK(c.status == "pass");
    }
}

TEST_CASE("a corrupted expanded table fails loudly across dependent checks") {
    Tables t = preset_tables();
    std::vector<std::string> images = t.f.images();
    images[0] = "01204"; // no longer the cube of F
    t.f = Morphism(t.f.source(), t.f.target(), std::move(images));
    Config cfg;
    cfg.max_d = 0;
    VerificationReport rep = full_report(t, cfg);
    CHECK(!rep.all_passed());
    std::size_t failures = 0;
    for (const CheckResult& c : rep.checks)
        failures += c.status == "fail";
    CHECK(failures >= 2); // the table identity plus whatever downstream depends on f
}

TEST_CASE("d=0 checks are flagged as the empty-product reading") {
    Config cfg;
    cfg.max_d = 0;
    VerificationReport rep = full_report(preset_tables(), cfg);
    bool found = false;
    for (const CheckResult& c : rep.checks)
        if (c.name == "t-word/23/d=0") {
            found = true;
            CHECK(c.params.contains("note"));
        }
    CHECK(found);
}

} // TEST_SUITE
