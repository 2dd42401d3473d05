// Command-line front end: generation, membership queries, class enumeration,
// and the full verification run, over the built-in tables or user-supplied
// morphism files.

#include "cword/conjugacy.hpp"
#include "cword/errors.hpp"
#include "cword/membership.hpp"
#include "cword/morphism.hpp"
#include "cword/presets.hpp"
#include "cword/verifier.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

namespace {

struct CommonOpts {
    std::string preset = cword::presets::name;
    std::string path_F, path_G, path_f, path_g;
    std::string output;
    std::size_t budget_mb = cword::default_factor_budget >> 20;
};

void add_common_options(CLI::App* cmd, CommonOpts& c) {
    cmd->add_option("--preset", c.preset, "Built-in table set")
        ->check(CLI::IsMember({std::string(cword::presets::name)}));
    cmd->add_option("--table-F", c.path_F, "Morphism file overriding the base endomorphism F");
    cmd->add_option("--table-G", c.path_G, "Morphism file overriding the base coding G");
    cmd->add_option("--table-f", c.path_f, "Morphism file overriding the expanded endomorphism f");
    cmd->add_option("--table-g", c.path_g, "Morphism file overriding the expanded coding g");
    cmd->add_option("--output", c.output, "Write output to this file instead of stdout");
    cmd->add_option("--budget-mb", c.budget_mb, "Memory budget for factor-set construction (MiB)");
}

cword::Morphism load_morphism(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw std::invalid_argument("cannot open morphism file: " + path);
    std::ostringstream text;
    text << in.rdbuf();
    return cword::parse_morphism(text.str());
}

cword::verifier::Tables resolve_tables(const CommonOpts& c) {
    cword::verifier::Tables t = cword::verifier::preset_tables();
    if (!c.path_F.empty())
        t.F = load_morphism(c.path_F);
    if (!c.path_G.empty())
        t.G = load_morphism(c.path_G);
    if (!c.path_f.empty())
        t.f = load_morphism(c.path_f);
    if (!c.path_g.empty())
        t.g = load_morphism(c.path_g);
    return t;
}

void emit(const std::string& text, const std::string& path) {
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw std::invalid_argument("cannot open output file: " + path);
    out << text;
}

int run_generate(const CommonOpts& c, cword::Level level, std::size_t length) {
    cword::verifier::Tables t = resolve_tables(c);
    std::string word;
    if (length > 0 && level == cword::Level::underlying) {
        word = cword::fixed_point_prefix(t.f, cword::presets::seed, length);
    } else if (length > 0) {
        cword::FixedPointStream stream(t.f, cword::presets::seed);
        std::size_t consumed = 0;
        while (word.size() < length) {
            stream.ensure(consumed + 1);
            word += t.g.image(stream.buffer()[consumed++]);
        }
        word.resize(length);
    }
    emit(word, c.output); // the word itself, no trailing newline
    return 0;
}

int run_member(const CommonOpts& c, cword::Level level, const std::string& word,
               std::size_t l0, std::size_t depth_limit, const std::string& format) {
    cword::verifier::Tables t = resolve_tables(c);
    cword::MembershipDecider decider(
        t.f, cword::presets::seed, cword::presets::underlying_marker, t.g,
        cword::presets::coded_marker,
        cword::DeciderConfig{l0, depth_limit, c.budget_mb << 20});
    cword::MembershipVerdict v = decider.decide(word, level);
    if (format == "json") {
        emit(cword::verdict_to_json(v).dump(2) + "\n", c.output);
    } else {
        std::string line = "'" + word + "' is " + (v.is_factor ? "a factor" : "not a factor") +
                           " of the " + std::string(cword::level_name(level)) + " word\n";
        emit(line, c.output);
    }
    return v.is_factor ? 0 : 1;
}

int run_classes(const CommonOpts& c, cword::Level level, std::size_t max_len,
                std::optional<std::size_t> max_index, const std::string& format) {
    cword::verifier::Tables t = resolve_tables(c);
    const std::size_t budget = c.budget_mb << 20;
    std::vector<cword::ConjugacyClass> classes;
    if (level == cword::Level::underlying) {
        cword::FactorSet u =
            cword::closure_factor_set(t.f, cword::presets::seed, std::max<std::size_t>(max_len, 1),
                                      budget);
        classes = cword::complete_classes_up_to(u, max_len, max_index);
    } else {
        std::size_t k = std::max<std::size_t>(max_len, 1);
        std::size_t span = (k + t.g.min_image_len() - 1) / t.g.min_image_len() + 1;
        cword::FactorSet u = cword::closure_factor_set(t.f, cword::presets::seed, span, budget);
        cword::FactorSet w = cword::coded_factor_set(u, t.g, k, budget);
        classes = cword::complete_classes_up_to(w, max_len, max_index);
    }
    if (format == "json") {
        nlohmann::json arr = nlohmann::json::array();
        for (const cword::ConjugacyClass& cls : classes)
            arr.push_back({{"canonical", cls.canonical.letters()},
                           {"length", cls.length()},
                           {"index", cls.index},
                           {"rotations", cls.elements.size()}});
        emit(nlohmann::json{{"classes", arr}, {"count", classes.size()}}.dump(2) + "\n", c.output);
    } else {
        std::ostringstream out;
        for (const cword::ConjugacyClass& cls : classes)
            out << cls.canonical.letters() << "  (length " << cls.length() << ", index "
                << cls.index << ", " << cls.elements.size() << " rotations)\n";
        out << classes.size() << " complete classes\n";
        emit(out.str(), c.output);
    }
    return 0;
}

int run_verify(const CommonOpts& c, const cword::verifier::Config& cfg, const std::string& format) {
    cword::verifier::Tables t = resolve_tables(c);
    cword::verifier::VerificationReport report = cword::verifier::full_report(t, cfg);
    if (format == "json")
        emit(report.to_json().dump(2) + "\n", c.output);
    else
        emit(report.to_text(), c.output);
    return report.all_passed() ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Morphic-word toolkit: generation, factor membership, conjugacy classes"};
    app.require_subcommand(1);

    std::string level_name = "coded";
    const auto level_check = CLI::IsMember({"underlying", "coded"});

    CommonOpts gen_common;
    std::size_t gen_length = 0;
    CLI::App* gen = app.add_subcommand("generate", "Emit a prefix of the generated infinite word");
    add_common_options(gen, gen_common);
    gen->add_option("--level", level_name, "Which of the two words to generate")->check(level_check);
    gen->add_option("--length", gen_length, "Prefix length in letters")->required();

    CommonOpts mem_common;
    std::string mem_word;
    std::size_t mem_l0 = 200, mem_depth = 64;
    std::string mem_format = "text";
    CLI::App* mem = app.add_subcommand("member", "Decide whether a word occurs as a factor");
    add_common_options(mem, mem_common);
    mem->add_option("--level", level_name, "Which word to test against")->check(level_check);
    mem->add_option("word", mem_word, "The word to test")->required();
    mem->add_option("--l0", mem_l0, "Direct-lookup bound for short words");
    mem->add_option("--depth-limit", mem_depth, "Maximum de-substitution recursion depth");
    mem->add_option("--format", mem_format, "Output format")
        ->check(CLI::IsMember({"text", "json"}));

    CommonOpts cls_common;
    std::size_t cls_max_len = 40;
    std::optional<std::size_t> cls_max_index;
    std::string cls_format = "text";
    CLI::App* cls = app.add_subcommand("classes", "Enumerate complete conjugacy classes");
    add_common_options(cls, cls_common);
    cls->add_option("--level", level_name, "Which word to enumerate over")->check(level_check);
    cls->add_option("--max-len", cls_max_len, "Largest class length to consider");
    cls->add_option("--max-index", cls_max_index, "Keep only classes of at most this index");
    cls->add_option("--format", cls_format, "Output format")
        ->check(CLI::IsMember({"text", "json"}));

    CommonOpts ver_common;
    cword::verifier::Config ver_cfg;
    std::string ver_format = "text";
    CLI::App* ver = app.add_subcommand("verify-paper", "Run the full verification suite");
    add_common_options(ver, ver_common);
    ver->add_option("--max-d", ver_cfg.max_d, "Largest exponent checked per construction family");
    ver->add_option("--max-class-len", ver_cfg.max_class_len,
                    "Exhaustive coded class search bound");
    ver->add_option("--class-enum-bound", ver_cfg.class_enum_bound,
                    "Underlying class enumeration bound");
    ver->add_option("--l0", ver_cfg.base_bound, "Direct-lookup bound for the membership decider");
    ver->add_option("--depth-limit", ver_cfg.max_depth, "Maximum de-substitution recursion depth");
    ver->add_option("--format", ver_format, "Output format")
        ->check(CLI::IsMember({"text", "json"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*gen)
            return run_generate(gen_common, cword::level_from_name(level_name), gen_length);
        if (*mem)
            return run_member(mem_common, cword::level_from_name(level_name), mem_word, mem_l0,
                              mem_depth, mem_format);
        if (*cls)
            return run_classes(cls_common, cword::level_from_name(level_name), cls_max_len,
                               cls_max_index, cls_format);
        if (*ver) {
            ver_cfg.budget_bytes = ver_common.budget_mb << 20;
            return run_verify(ver_common, ver_cfg, ver_format);
        }
    } catch (const cword::resource_error& e) {
        std::cerr << "resource budget exceeded: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
