#include "cword/verifier.hpp"

#include "cword/conjugacy.hpp"
#include "cword/errors.hpp"
#include "cword/presets.hpp"
#include "cword/word.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <optional>
#include <sstream>

namespace cword::verifier {

Tables preset_tables() {
    return {presets::base_endomorphism(), presets::base_coding(), presets::expanded_endomorphism(),
            presets::expanded_coding()};
}

namespace {

using steady = std::chrono::steady_clock;

double ms_since(steady::time_point t0) {
    return std::chrono::duration<double, std::milli>(steady::now() - t0).count();
}

// Run one check body with timing; domain errors inside a check mark it failed,
// resource exhaustion aborts the whole run (the caller maps it to exit 3).
CheckResult run_check(std::string name, nlohmann::json params,
                      const std::function<void(CheckResult&)>& body) {
    CheckResult r;
    r.name = std::move(name);
    r.params = params.is_null() ? nlohmann::json::object() : std::move(params);
    r.status = "pass";
    steady::time_point t0 = steady::now();
    try {
        body(r);
    } catch (const resource_error&) {
        throw;
    } catch (const std::exception& e) {
        r.status = "fail";
        r.detail = std::string("error: ") + e.what();
    }
    r.elapsed_ms = ms_since(t0);
    return r;
}

void fail(CheckResult& r, std::string detail, nlohmann::json witness = nullptr) {
    r.status = "fail";
    r.detail = std::move(detail);
    if (!witness.is_null())
        r.witness = std::move(witness);
}

bool ends_with(std::string_view s, std::string_view suffix) {
    return s.size() >= suffix.size() &&
           s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

bool starts_with(std::string_view s, std::string_view prefix) {
    return s.size() >= prefix.size() && s.compare(0, prefix.size(), prefix) == 0;
}

std::string canonical_str(std::string_view w, const Alphabet& order) {
    std::size_t k = least_rotation_offset(w, order);
    std::string out(w.substr(k));
    out += w.substr(0, k);
    return out;
}

// Per-letter comparison of two morphisms, as a witness object on mismatch.
std::optional<nlohmann::json> table_diff(const Morphism& got, const Morphism& expected) {
    nlohmann::json diff = nlohmann::json::object();
    if (*got.source() != *expected.source())
        diff["source"] = {{"got", got.source()->symbols()}, {"expected", expected.source()->symbols()}};
    if (*got.target() != *expected.target())
        diff["target"] = {{"got", got.target()->symbols()}, {"expected", expected.target()->symbols()}};
    std::size_t n = std::min(got.images().size(), expected.images().size());
    for (std::size_t i = 0; i < n; ++i) {
        if (got.images()[i] != expected.images()[i]) {
            std::string key(1, expected.source()->symbols()[i]);
            diff[key] = {{"got", got.images()[i]}, {"expected", expected.images()[i]}};
        }
    }
    if (diff.empty())
        return std::nullopt;
    return diff;
}

std::string iterate(const Morphism& m, std::string w, unsigned d) {
    for (unsigned i = 0; i < d; ++i)
        w = m.apply(w);
    return w;
}

std::string fact_description(const AdjacencyFact& fact) {
    std::string s = fact.before ? "letters before '" : "letters after '";
    s += fact.core;
    s += "' = {";
    s += fact.letters;
    s += "}";
    return s;
}

std::string fact_description(const AffixFact& fact) {
    std::string s = "'";
    s += fact.literal;
    s += fact.suffix ? "' is a suffix of " : "' is a prefix of ";
    s += fact.coded ? "g(" : "f(";
    s.push_back(fact.in_letter);
    s += ") and not of ";
    s += fact.coded ? "g(" : "f(";
    s.push_back(fact.out_letter);
    s += ")";
    return s;
}

} // namespace

const std::vector<TWordFamily>& families() {
    static const std::vector<TWordFamily> fams = {
        {"23",
         "232",
         "e",
         "3",
         false,
         "01203",
         false,
         "abcdeacdb",
         {{"3", true, "02"}, {"3", false, "02"}},
         {{"e", true, true, '2', '0'},
          {"23", true, false, '2', '0'},
          {"abcdeacdb", false, true, '2', '0'},
          {"012032", false, false, '2', '0'}}},
        {"0324",
         "32403",
         "acdbecd",
         "24",
         true,
         "01240",
         false,
         "abcdbecde",
         {{"2", true, "13"}, {"0", false, "13"}},
         {{"acdbecd", true, true, '3', '1'},
          {"324", true, false, '3', '1'},
          {"abcdbecde", false, true, '3', '1'},
          {"012403", false, false, '3', '1'}}},
        {"01240323",
         "403230124",
         "ecdeacdbe",
         "0323",
         false,
         "012",
         true,
         "abcdb",
         {{"03", true, "24"}, {"12", false, "04"}},
         {{"ecdeacdbe", true, true, '4', '2'},
          {"40323", true, false, '4', '2'},
          {"abcdb", false, true, '4', '0'},
          {"0124", false, false, '4', '0'}}},
        {"01203",
         "030120",
         "d",
         "3",
         false,
         "012",
         true,
         "abcdeac",
         {{"3", true, "02"}, {"012", false, "04"}},
         {{"d", true, true, '0', '2'},
          {"03", true, false, '0', '2'},
          {"abcdeac", false, true, '0', '4'},
          {"0120", false, false, '0', '4'}}},
    };
    return fams;
}

const TWordFamily& family_by_seed(std::string_view seed) {
    for (const TWordFamily& fam : families())
        if (fam.seed == seed)
            return fam;
    throw std::invalid_argument("no such construction family: " + std::string(seed));
}

TWordPair build_t_word(const TWordFamily& family, unsigned d, const Morphism& f,
                       const Morphism& g) {
    // Ascending product: asc . f(asc) . ... . f^d(asc).
    std::string rising;
    {
        std::string cur = family.asc;
        for (unsigned i = 0;; ++i) {
            rising += cur;
            if (i == d)
                break;
            cur = f.apply(cur);
        }
    }
    std::string T = family.left + g.apply(rising);

    if (family.middle)
        T += g.apply(iterate(f, "0", d));

    // Descending product: f^top(desc) . ... . f(desc) . desc; empty when the
    // top exponent is negative (the d = 0 case of the "top = d-1" families).
    if (family.desc_from_d || d >= 1) {
        unsigned top = family.desc_from_d ? d : d - 1;
        std::vector<std::string> powers;
        powers.reserve(top + 1);
        std::string cur = family.desc;
        for (unsigned i = 0;; ++i) {
            powers.push_back(cur);
            if (i == top)
                break;
            cur = f.apply(cur);
        }
        std::string falling;
        for (auto it = powers.rbegin(); it != powers.rend(); ++it)
            falling += *it;
        T += g.apply(falling);
    }

    T += family.right;
    return {std::move(T), g.apply(iterate(f, family.seed, d))};
}

bool VerificationReport::all_passed() const {
    return std::all_of(checks.begin(), checks.end(),
                       [](const CheckResult& c) { return c.status != "fail"; });
}

std::string VerificationReport::to_text() const {
    std::ostringstream out;
    std::size_t passed = 0, failed = 0, skipped = 0;
    for (const CheckResult& c : checks) {
        std::string tag = c.status == "pass" ? "PASS" : (c.status == "fail" ? "FAIL" : "SKIP");
        out << tag << "  " << c.name;
        if (!c.detail.empty())
            out << " -- " << c.detail;
        out << "  [" << static_cast<long long>(c.elapsed_ms + 0.5) << " ms]\n";
        (c.status == "pass" ? passed : c.status == "fail" ? failed : skipped)++;
    }
    out << checks.size() << " checks: " << passed << " passed, " << failed << " failed, "
        << skipped << " skipped\n";
    return out.str();
}

nlohmann::json VerificationReport::to_json() const {
    nlohmann::json arr = nlohmann::json::array();
    std::size_t passed = 0, failed = 0, skipped = 0;
    for (const CheckResult& c : checks) {
        nlohmann::json witness = c.witness;
        if (!c.detail.empty()) {
            if (!witness.is_object())
                witness = nlohmann::json::object();
            witness["detail"] = c.detail;
        }
        arr.push_back(nlohmann::json{{"check", c.name},
                                     {"params", c.params},
                                     {"status", c.status},
                                     {"witness", witness},
                                     {"elapsed_ms", c.elapsed_ms}});
        (c.status == "pass" ? passed : c.status == "fail" ? failed : skipped)++;
    }
    return nlohmann::json{{"checks", arr},
                          {"summary", nlohmann::json{{"total", checks.size()},
                                                     {"passed", passed},
                                                     {"failed", failed},
                                                     {"skipped", skipped}}}};
}

VerificationReport full_report(const Tables& t, const Config& cfg) {
    VerificationReport rep;
    auto add = [&rep](CheckResult r) { rep.checks.push_back(std::move(r)); };

    // -- pure table identities ------------------------------------------------
    add(run_check("tables/underlying-composition", {}, [&](CheckResult& r) {
        Morphism f3 = power(t.F, 3);
        if (auto diff = table_diff(f3, t.f))
            fail(r, "third power of F does not reproduce the f table", *diff);
    }));
    add(run_check("tables/coded-composition", {}, [&](CheckResult& r) {
        Morphism gc = compose(t.G, power(t.F, 2));
        if (auto diff = table_diff(gc, t.g))
            fail(r, "G composed with the square of F does not reproduce the g table", *diff);
    }));

    // -- shared machinery: factor sets + de-substitution decider -------------
    const std::size_t base_bound =
        std::max({cfg.base_bound, cfg.max_class_len, cfg.class_enum_bound});
    std::optional<MembershipDecider> decider;
    std::string setup_error;
    try {
        decider.emplace(t.f, presets::seed, presets::underlying_marker, t.g, presets::coded_marker,
                        DeciderConfig{base_bound, cfg.max_depth, cfg.budget_bytes});
    } catch (const resource_error&) {
        throw;
    } catch (const std::exception& e) {
        setup_error = e.what();
    }

    // Check bodies that need the decider; a broken setup fails them loudly
    // instead of skipping silently.
    auto run_with_decider = [&](std::string name, nlohmann::json params,
                                const std::function<void(CheckResult&)>& body) {
        if (!setup_error.empty()) {
            CheckResult r;
            r.name = std::move(name);
            r.params = params.is_null() ? nlohmann::json::object() : std::move(params);
            r.status = "fail";
            r.detail = "decider unavailable: " + setup_error;
            return r;
        }
        return run_check(std::move(name), std::move(params), body);
    };

    // -- marker claims --------------------------------------------------------
    add(run_with_decider("marker/underlying", {{"marker", presets::underlying_marker}},
                         [&](CheckResult& r) {
                             MarkerCheck mc =
                                 verify_marker({presets::underlying_marker, Level::underlying}, t.f,
                                               decider->factor_set(Level::underlying));
                             if (!mc.verified)
                                 fail(r, mc.witness);
                         }));
    add(run_with_decider("marker/coded", {{"marker", presets::coded_marker}}, [&](CheckResult& r) {
        MarkerCheck mc = verify_marker({presets::coded_marker, Level::coded}, t.g,
                                       decider->factor_set(Level::underlying));
        if (!mc.verified)
            fail(r, mc.witness);
    }));

    // -- printed iterates -----------------------------------------------------
    add(run_check("iterates/F4(2)", {}, [&](CheckResult& r) {
        std::string got = power(t.F, 4).apply("2");
        if (got != "0120301240324")
            fail(r, "fourth F-iterate of '2' differs", {{"got", got}});
    }));
    add(run_check("iterates/F5(2)", {}, [&](CheckResult& r) {
        std::string got = power(t.F, 5).apply("2");
        if (got != "012030124012032301240323")
            fail(r, "fifth F-iterate of '2' differs", {{"got", got}});
    }));

    // -- complete classes of index <= 1 ---------------------------------------
    add(run_with_decider("classes/underlying/low-index", {{"max_index", 1}}, [&](CheckResult& r) {
        const FactorSet& U = decider->factor_set(Level::underlying);
        std::size_t gap = U.max_length_avoiding('1');
        if (gap + 1 >= U.bound()) {
            fail(r, "gap between occurrences of '1' not conclusively bounded at this factor bound");
            return;
        }
        // A word with at most one '1' splits into at most two 1-free factors
        // around it, so its length is at most 2*gap + 1.
        std::size_t length_bound = 2 * gap + 1;
        r.params["segment_without_1"] = gap;
        r.params["length_bound"] = length_bound;

        std::vector<ConjugacyClass> classes = complete_classes_up_to(U, length_bound, 1);
        std::vector<std::string> actual;
        for (const ConjugacyClass& c : classes)
            actual.push_back(c.canonical.letters());

        std::vector<std::string> expected;
        for (const std::string& w :
             {t.F.apply("2"), power(t.F, 2).apply("2"), t.F.apply("4"), power(t.F, 2).apply("4"),
              t.f.image('4'), t.f.image('0')})
            expected.push_back(canonical_str(w, *U.alphabet()));
        std::sort(expected.begin(), expected.end(), [&U](const std::string& a, const std::string& b) {
            return a.size() != b.size() ? a.size() < b.size() : U.alphabet()->compare(a, b) < 0;
        });

        r.witness = {{"classes", actual}};
        if (actual != expected)
            fail(r, "complete low-index classes differ from the expected six",
                 {{"expected", expected}, {"actual", actual}});
    }));

    // -- the two explicit non-factor conjugates --------------------------------
    for (auto [name, word, power_n] :
         {std::tuple{"conjugates/F4(2)", "4012030124032", 4u},
          std::tuple{"conjugates/F5(2)", "301203012401203230124032", 5u}}) {
        add(run_with_decider(name, {{"word", word}}, [&, word, power_n](CheckResult& r) {
            std::string target = power(t.F, power_n).apply("2");
            std::optional<std::size_t> offset = conjugacy_offset(word, target);
            if (!offset) {
                fail(r, "word is not a rotation of the iterate", {{"iterate", target}});
                return;
            }
            MembershipVerdict v = decider->decide(word, Level::underlying);
            if (v.is_factor) {
                fail(r, "conjugate unexpectedly occurs in the fixed point");
                return;
            }
            if (!replay(v, *decider)) {
                fail(r, "certificate replay failed");
                return;
            }
            r.witness = {{"rotation_offset", *offset}, {"certificate_nodes", v.nodes.size()}};
        }));
    }

    // -- all complete classes up to the enumeration bound ----------------------
    add(run_with_decider("classes/underlying/enumeration", {{"bound", cfg.class_enum_bound}},
                         [&](CheckResult& r) {
                             const FactorSet& U = decider->factor_set(Level::underlying);
                             std::vector<ConjugacyClass> classes =
                                 complete_classes_up_to(U, cfg.class_enum_bound);
                             std::vector<std::string> actual;
                             for (const ConjugacyClass& c : classes)
                                 actual.push_back(c.canonical.letters());

                             // The expected family: F(2), F^2(2), the F-iterates
                             // of 4 and the f-iterates of 0 that fit the bound.
                             std::vector<std::string> expected;
                             expected.push_back(canonical_str(t.F.apply("2"), *U.alphabet()));
                             expected.push_back(
                                 canonical_str(power(t.F, 2).apply("2"), *U.alphabet()));
                             for (std::string w = t.F.apply("4"); w.size() <= cfg.class_enum_bound;
                                  w = t.F.apply(w))
                                 expected.push_back(canonical_str(w, *U.alphabet()));
                             for (std::string w = t.f.apply("0"); w.size() <= cfg.class_enum_bound;
                                  w = t.f.apply(w))
                                 expected.push_back(canonical_str(w, *U.alphabet()));
                             std::sort(expected.begin(), expected.end(),
                                       [&U](const std::string& a, const std::string& b) {
                                           return a.size() != b.size()
                                                      ? a.size() < b.size()
                                                      : U.alphabet()->compare(a, b) < 0;
                                       });
                             expected.erase(std::unique(expected.begin(), expected.end()),
                                            expected.end());

                             r.witness = {{"classes", actual}};
                             if (actual != expected)
                                 fail(r, "complete classes differ from the expected family",
                                      {{"expected", expected}, {"actual", actual}});
                         }));

    // -- coded-level checks -----------------------------------------------------
    add(run_check("coded/class-length-threshold", {{"max_class_len", cfg.max_class_len}},
                  [&](CheckResult& r) {
                      std::size_t len_a = t.g.apply(t.F.apply("2")).size();
                      std::size_t len_b = t.g.apply(power(t.F, 2).apply("2")).size();
                      r.witness = {{"coded_length_F(2)", len_a}, {"coded_length_F2(2)", len_b}};
                      if (!(len_a < len_b && len_b == 40 && len_b <= cfg.max_class_len))
                          fail(r, "coded lengths of the two short classes fall outside the "
                                  "exhaustive search bound");
                  }));

    add(run_with_decider(
        "classes/coded/exhaustive", {{"max_len", cfg.max_class_len}}, [&](CheckResult& r) {
            const FactorSet& W = decider->factor_set(Level::coded);
            std::vector<ConjugacyClass> classes = complete_classes_up_to(W, cfg.max_class_len);
            std::vector<std::size_t> counts(cfg.max_class_len + 1, 0);
            for (const std::string& u : W.members())
                if (u.size() <= cfg.max_class_len)
                    counts[u.size()]++;
            nlohmann::json per_length = nlohmann::json::array();
            for (std::size_t len = 1; len <= cfg.max_class_len; ++len)
                per_length.push_back(counts[len]);
            r.witness = {{"factor_counts_by_length", per_length}};
            if (!classes.empty()) {
                std::vector<std::string> found;
                for (const ConjugacyClass& c : classes)
                    found.push_back(c.canonical.letters());
                fail(r, "complete classes exist in the coded word", {{"classes", found}});
            }
        }));

    // -- forbidden underlying words --------------------------------------------
    for (const char* w : {"232", "32403", "403230124", "030120"}) {
        add(run_with_decider(std::string("forbidden/") + w, {{"word", w}},
                             [&, w](CheckResult& r) {
                                 if (decider->factor_set(Level::underlying).contains(w))
                                     fail(r, "word occurs in the fixed point after all");
                             }));
    }

    // -- the four T-word constructions ------------------------------------------
    for (const TWordFamily& fam : families()) {
        add(run_with_decider("t-word/" + fam.seed + "/facts", {{"family", fam.seed}},
                             [&](CheckResult& r) {
                                 const FactorSet& U = decider->factor_set(Level::underlying);
                                 nlohmann::json outcomes = nlohmann::json::array();
                                 bool all_ok = true;
                                 for (const AdjacencyFact& fact : fam.adjacency) {
                                     std::string got;
                                     for (char x : U.alphabet()->symbols()) {
                                         std::string w = fact.before
                                                             ? std::string(1, x) + fact.core
                                                             : fact.core + std::string(1, x);
                                         if (U.contains(w))
                                             got.push_back(x);
                                     }
                                     bool ok = got == fact.letters;
                                     all_ok = all_ok && ok;
                                     outcomes.push_back(
                                         {{"fact", fact_description(fact)}, {"ok", ok}});
                                 }
                                 for (const AffixFact& fact : fam.affixes) {
                                     const Morphism& m = fact.coded ? t.g : t.f;
                                     auto holds = [&](char letter) {
                                         return fact.suffix
                                                    ? ends_with(m.image(letter), fact.literal)
                                                    : starts_with(m.image(letter), fact.literal);
                                     };
                                     bool ok = holds(fact.in_letter) && !holds(fact.out_letter);
                                     all_ok = all_ok && ok;
                                     outcomes.push_back(
                                         {{"fact", fact_description(fact)}, {"ok", ok}});
                                 }
                                 r.witness = {{"facts", outcomes}};
                                 if (!all_ok)
                                     fail(r, "one of the affix/adjacency facts does not hold",
                                          r.witness);
                             }));

        for (unsigned d = 0; d <= cfg.max_d; ++d) {
            nlohmann::json params = {{"family", fam.seed}, {"d", d}};
            if (d == 0)
                params["note"] = "products over empty exponent ranges are empty";
            add(run_with_decider("t-word/" + fam.seed + "/d=" + std::to_string(d),
                                 std::move(params), [&, d](CheckResult& r) {
                                     TWordPair p = build_t_word(fam, d, t.f, t.g);
                                     if (p.T.size() != p.target.size()) {
                                         fail(r, "constructed word and its target differ in length",
                                              {{"T_length", p.T.size()},
                                               {"target_length", p.target.size()}});
                                         return;
                                     }
                                     std::optional<std::size_t> offset =
                                         conjugacy_offset(p.T, p.target);
                                     if (!offset) {
                                         fail(r, "constructed word is not a rotation of its target");
                                         return;
                                     }
                                     MembershipVerdict v = decider->decide(p.T, Level::coded);
                                     if (v.is_factor) {
                                         fail(r, "constructed word occurs in the coded word");
                                         return;
                                     }
                                     if (!replay(v, *decider)) {
                                         fail(r, "certificate replay failed");
                                         return;
                                     }
                                     bool forbidden_absent = !decider->factor_set(Level::underlying)
                                                                  .contains(fam.forbidden);
                                     r.witness = {{"length", p.T.size()},
                                                  {"rotation_offset", *offset},
                                                  {"certificate_nodes", v.nodes.size()},
                                                  {"forbidden_word", fam.forbidden},
                                                  {"forbidden_absent", forbidden_absent}};
                                     if (!forbidden_absent)
                                         fail(r, "the underlying word the construction collapses "
                                                 "onto occurs after all");
                                 }));
        }
    }

    return rep;
}

} // namespace cword::verifier
