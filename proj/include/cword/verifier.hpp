#pragma once

#include "cword/factor_set.hpp"
#include "cword/membership.hpp"
#include "cword/morphism.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace cword::verifier {

/// The four morphism tables the whole verification is about. f and g are
/// independent tables; their composition identities are the first checks.
struct Tables {
    Morphism F; // generating endomorphism
    Morphism G; // erasing coding
    Morphism f; // expanded endomorphism (claimed F^3)
    Morphism g; // expanded coding (claimed G∘F^2)
};

Tables preset_tables();

struct Config {
    unsigned max_d = 5;                // T-word constructions for d = 0..max_d
    std::size_t max_class_len = 100;   // exhaustive coded class search bound
    std::size_t class_enum_bound = 40; // complete-class comparison bound (underlying)
    std::size_t base_bound = 200;      // decider lookup bound
    std::size_t max_depth = 64;
    std::size_t budget_bytes = default_factor_budget;
};

struct CheckResult {
    std::string name;
    nlohmann::json params = nlohmann::json::object();
    std::string status; // "pass" | "fail" | "skipped"
    std::string detail; // one-line explanation (failures and notable passes)
    nlohmann::json witness;
    double elapsed_ms = 0.0;

    bool passed() const { return status == "pass"; }
};

struct VerificationReport {
    std::vector<CheckResult> checks;

    bool all_passed() const;
    std::string to_text() const;
    nlohmann::json to_json() const;
};

/// {x : x·core is a factor} (before=true) or {x : core·x is a factor},
/// expected as a sorted letter string.
struct AdjacencyFact {
    std::string core;
    bool before;
    std::string letters;
};

/// `literal` is a suffix/prefix of image(in_letter) and not of
/// image(out_letter), under g (coded=true) or f.
struct AffixFact {
    std::string literal;
    bool suffix;
    bool coded;
    char in_letter;
    char out_letter;
};

/// One rotated-witness construction: T = left ++ g(asc ++ f(asc) ++ ... ++
/// f^d(asc)) ++ [g(f^d(0))] ++ g(f^top(desc) ++ ... ++ f(desc) ++ desc) ++
/// right, a rotation of g(f^d(seed)) that de-substitutes onto the forbidden
/// underlying word.
struct TWordFamily {
    std::string seed;      // target is g(f^d(seed))
    std::string forbidden; // underlying word the construction collapses onto
    std::string left;      // literal head of T
    std::string asc;       // ascending product word (exponents 0..d)
    bool middle;           // insert g(f^d("0")) between the products
    std::string desc;      // descending product word
    bool desc_from_d;      // top exponent is d (true) or d-1 (false)
    std::string right;     // literal tail of T
    std::vector<AdjacencyFact> adjacency;
    std::vector<AffixFact> affixes;
};

const std::vector<TWordFamily>& families();

struct TWordPair {
    std::string T;
    std::string target;
};

TWordPair build_t_word(const TWordFamily& family, unsigned d, const Morphism& f, const Morphism& g);

/// Convenience: look a family up by its seed word ("23", "0324", ...).
const TWordFamily& family_by_seed(std::string_view seed);

/// Run every check in deterministic order.
VerificationReport full_report(const Tables& tables, const Config& config);

} // namespace cword::verifier
