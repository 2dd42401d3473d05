#include "cword/membership.hpp"

#include "cword/errors.hpp"
#include "cword/word.hpp"

#include <algorithm>
#include <stdexcept>

namespace cword {

std::string_view level_name(Level level) {
    return level == Level::underlying ? "underlying" : "coded";
}

Level level_from_name(std::string_view name) {
    if (name == "underlying")
        return Level::underlying;
    if (name == "coded")
        return Level::coded;
    throw std::invalid_argument("unknown level name: " + std::string(name));
}

std::string_view node_kind_name(NodeKind kind) {
    switch (kind) {
    case NodeKind::lookup: return "lookup";
    case NodeKind::no_marker: return "no-marker";
    case NodeKind::segment_mismatch: return "segment-mismatch";
    case NodeKind::desubstitution: return "desubstitution";
    }
    throw std::logic_error("unreachable node kind");
}

NodeKind node_kind_from_name(std::string_view name) {
    if (name == "lookup")
        return NodeKind::lookup;
    if (name == "no-marker")
        return NodeKind::no_marker;
    if (name == "segment-mismatch")
        return NodeKind::segment_mismatch;
    if (name == "desubstitution")
        return NodeKind::desubstitution;
    throw std::invalid_argument("unknown derivation node kind: " + std::string(name));
}

MarkerCheck verify_marker(const MarkerSpec& spec, const Morphism& m, const FactorSet& factor2) {
    const std::string& marker = spec.marker;
    if (marker.empty())
        throw std::invalid_argument("marker must be nonempty");
    if (marker.size() > m.min_image_len())
        throw std::invalid_argument("marker longer than the shortest image; junction scan would be incomplete");
    if (factor2.bound() < 2)
        throw std::invalid_argument("marker verification needs the 2-letter factor set");
    if (*factor2.alphabet() != *m.source())
        throw std::invalid_argument("factor set alphabet does not match the morphism source");

    // (ii) no occurrence inside a single image at a positive offset.
    for (char x : m.source()->symbols()) {
        for (std::size_t p : find_occurrences(m.image(x), marker)) {
            if (p == 0)
                continue;
            std::string w = "marker occurs inside the image of '";
            w.push_back(x);
            w += "' at offset " + std::to_string(p);
            return {false, std::move(w)};
        }
    }

    // (iii) no occurrence straddling a realizable junction of two images.
    for (const std::string& xy : factor2.members_of_length(2)) {
        std::string junction = m.image(xy[0]) + m.image(xy[1]);
        std::size_t boundary = m.image(xy[0]).size();
        for (std::size_t p : find_occurrences(junction, marker)) {
            if (p < boundary && p + marker.size() > boundary) {
                std::string w = "marker straddles the junction of images '";
                w.push_back(xy[0]);
                w += "','";
                w.push_back(xy[1]);
                w += "' at offset " + std::to_string(p);
                return {false, std::move(w)};
            }
        }
    }

    // (i) the marker is how every image begins.
    for (char x : m.source()->symbols()) {
        if (m.image(x).compare(0, marker.size(), marker) != 0) {
            std::string w = "marker is not a prefix of the image of '";
            w.push_back(x);
            w += "'";
            return {false, std::move(w)};
        }
    }

    return {true, ""};
}

namespace {

std::string memo_key(Level level, std::string_view word) {
    std::string key(1, level == Level::underlying ? 'u' : 'c');
    key += word;
    return key;
}

bool ends_with(std::string_view s, std::string_view suffix) {
    return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

bool starts_with(std::string_view s, std::string_view prefix) {
    return s.size() >= prefix.size() && s.compare(0, prefix.size(), prefix) == 0;
}

std::string clip(std::string_view s) {
    constexpr std::size_t limit = 80;
    if (s.size() <= limit)
        return std::string(s);
    return std::string(s.substr(0, limit)) + "...";
}

std::vector<std::pair<std::string, char>> build_image_index(const Morphism& m) {
    std::vector<std::pair<std::string, char>> index;
    index.reserve(m.images().size());
    for (std::size_t i = 0; i < m.images().size(); ++i)
        index.emplace_back(m.images()[i], m.source()->symbols()[i]);
    std::sort(index.begin(), index.end());
    for (std::size_t i = 1; i < index.size(); ++i)
        if (index[i].first == index[i - 1].first)
            throw std::invalid_argument("image table is not injective; segments would be ambiguous");
    return index;
}

// Letter whose image equals seg, if any (the index is sorted and injective).
std::optional<char> letter_of_image(const std::vector<std::pair<std::string, char>>& index,
                                    std::string_view seg) {
    auto it = std::lower_bound(index.begin(), index.end(), seg,
                               [](const auto& entry, std::string_view s) { return entry.first < s; });
    if (it != index.end() && it->first == seg)
        return it->second;
    return std::nullopt;
}

// Letters whose image could sit across the left window edge: the fragment is
// a proper suffix of the image.
std::vector<char> left_fragment_letters(const Morphism& m, std::string_view fragment) {
    std::vector<char> out;
    for (char x : m.source()->symbols())
        if (m.image(x).size() > fragment.size() && ends_with(m.image(x), fragment))
            out.push_back(x);
    return out;
}

// Letters whose image could start at the last marker: either the fragment is
// a prefix of the image, or it is the whole image followed by the beginning
// of the next image's marker (an image boundary hidden in the last
// |marker|-1 positions of the window).
std::vector<char> right_fragment_letters(const Morphism& m, std::string_view marker,
                                         std::string_view fragment) {
    std::vector<char> out;
    for (char z : m.source()->symbols()) {
        const std::string& img = m.image(z);
        if (fragment.size() <= img.size()) {
            if (starts_with(img, fragment))
                out.push_back(z);
        } else {
            std::string_view rest = fragment.substr(img.size());
            if (rest.size() < marker.size() && starts_with(fragment, img) && starts_with(marker, rest))
                out.push_back(z);
        }
    }
    return out;
}

} // namespace

MembershipDecider::MembershipDecider(Morphism m, char seed, std::string underlying_marker,
                                     DeciderConfig config)
    : MembershipDecider(std::move(m), seed, std::move(underlying_marker), std::nullopt, "",
                        config) {}

MembershipDecider::MembershipDecider(Morphism m, char seed, std::string underlying_marker,
                                     Morphism coder, std::string coded_marker, DeciderConfig config)
    : MembershipDecider(std::move(m), seed, std::move(underlying_marker),
                        std::optional<Morphism>(std::move(coder)), std::move(coded_marker),
                        config) {}

MembershipDecider::MembershipDecider(Morphism m, char seed, std::string underlying_marker,
                                     std::optional<Morphism> coder, std::string coded_marker,
                                     DeciderConfig config)
    : morphism_(std::move(m)), seed_(seed), coder_(std::move(coder)), config_(config) {
    // The "no marker occurrence => non-factor" rule needs every window longer
    // than the base bound to contain a whole image start; 2*max_image + 2 is a
    // safe floor for that.
    std::size_t floor = 2 * morphism_.max_image_len() + 2;
    if (coder_)
        floor = std::max(floor, 2 * coder_->max_image_len() + 2);
    if (config_.base_bound < floor)
        throw std::invalid_argument("base lookup bound is too small for the image lengths (need >= " +
                                    std::to_string(floor) + ")");

    underlying_data_.marker = std::move(underlying_marker);
    underlying_data_.image_to_letter = build_image_index(morphism_);

    std::size_t underlying_bound = config_.base_bound;
    if (coder_) {
        if (coder_->is_erasing())
            throw std::invalid_argument("the coded level requires a non-erasing coding morphism");
        if (*coder_->source() != *morphism_.source())
            throw std::invalid_argument("coding morphism source does not match the fixed point's alphabet");
        std::size_t span = (config_.base_bound + coder_->min_image_len() - 1) / coder_->min_image_len() + 1;
        underlying_bound = std::max(underlying_bound, span);
        coded_data_.marker = std::move(coded_marker);
        coded_data_.image_to_letter = build_image_index(*coder_);
    }

    underlying_set_ = closure_factor_set(morphism_, seed_, underlying_bound, config_.budget_bytes);

    MarkerCheck uc = verify_marker({underlying_data_.marker, Level::underlying}, morphism_,
                                   *underlying_set_);
    if (!uc.verified)
        throw std::invalid_argument("marker claim refuted at the underlying level: " + uc.witness);

    if (coder_) {
        MarkerCheck cc = verify_marker({coded_data_.marker, Level::coded}, *coder_, *underlying_set_);
        if (!cc.verified)
            throw std::invalid_argument("marker claim refuted at the coded level: " + cc.witness);
        coded_set_ = coded_factor_set(*underlying_set_, *coder_, config_.base_bound,
                                      config_.budget_bytes);
    }
}

const FactorSet& MembershipDecider::factor_set(Level level) const {
    if (level == Level::underlying)
        return *underlying_set_;
    if (!coded_set_)
        throw std::invalid_argument("decider was built without a coded level");
    return *coded_set_;
}

const Morphism& MembershipDecider::level_morphism(Level level) const {
    if (level == Level::underlying)
        return morphism_;
    if (!coder_)
        throw std::invalid_argument("decider was built without a coded level");
    return *coder_;
}

const std::string& MembershipDecider::marker(Level level) const {
    return data(level).marker;
}

const MembershipDecider::LevelData& MembershipDecider::data(Level level) const {
    if (level == Level::underlying)
        return underlying_data_;
    if (!coder_)
        throw std::invalid_argument("decider was built without a coded level");
    return coded_data_;
}

MembershipVerdict MembershipDecider::decide(std::string_view word, Level level) const {
    const Alphabet& sigma =
        level == Level::underlying ? *morphism_.source() : *level_morphism(level).target();
    for (char x : word)
        if (!sigma.contains(x))
            throw std::invalid_argument(std::string("candidate contains a letter outside the ") +
                                        std::string(level_name(level)) + " alphabet: '" + x + "'");

    std::vector<DerivationNode> nodes;
    std::unordered_map<std::string, std::size_t> memo;
    std::size_t root = decide_rec(word, level, 0, nodes, memo);

    MembershipVerdict v;
    v.word = std::string(word);
    v.level = level;
    v.is_factor = nodes[root].is_factor;
    v.root = root;
    v.nodes = std::move(nodes);
    return v;
}

std::size_t MembershipDecider::decide_rec(std::string_view word, Level level, std::size_t depth,
                                          std::vector<DerivationNode>& nodes,
                                          std::unordered_map<std::string, std::size_t>& memo) const {
    std::string key = memo_key(level, word);
    if (auto it = memo.find(key); it != memo.end())
        return it->second;
    if (depth > config_.max_depth)
        throw resource_error("de-substitution recursion exceeded the configured depth limit");

    DerivationNode node;
    node.word = std::string(word);
    node.level = level;

    if (word.size() <= config_.base_bound) {
        node.kind = NodeKind::lookup;
        node.is_factor = factor_set(level).contains(word);
    } else {
        const LevelData& lv = data(level);
        const Morphism& m = level_morphism(level);
        std::vector<std::size_t> occ = find_occurrences(word, lv.marker);

        if (occ.empty()) {
            // Any window this long must contain a whole image and hence a
            // marker occurrence; none means the word cannot be a factor.
            node.kind = NodeKind::no_marker;
            node.is_factor = false;
            node.detail = "no marker occurrence in a word longer than the lookup bound";
        } else {
            // Marker occurrences are exactly the image starts visible in the
            // window, so the segmentation below is forced, not a choice.
            std::string interior;
            std::optional<std::pair<std::size_t, std::string>> mismatch;
            for (std::size_t i = 0; i + 1 < occ.size(); ++i) {
                std::string_view seg = word.substr(occ[i], occ[i + 1] - occ[i]);
                if (std::optional<char> letter = letter_of_image(lv.image_to_letter, seg)) {
                    interior.push_back(*letter);
                } else {
                    mismatch = {occ[i], std::string(seg)};
                    break;
                }
            }

            if (mismatch) {
                node.kind = NodeKind::segment_mismatch;
                node.is_factor = false;
                node.detail = "segment at offset " + std::to_string(mismatch->first) +
                              " equals no image: " + clip(mismatch->second);
            } else {
                node.kind = NodeKind::desubstitution;
                node.interior = interior;

                std::string_view left = word.substr(0, occ.front());
                std::string_view right = word.substr(occ.back());
                std::vector<std::optional<char>> prepends;
                if (left.empty()) {
                    prepends.push_back(std::nullopt);
                } else {
                    for (char x : left_fragment_letters(m, left))
                        prepends.emplace_back(x);
                    if (prepends.empty())
                        node.detail = "left fragment '" + clip(left) + "' is a suffix of no image";
                }
                std::vector<char> appends = right_fragment_letters(m, lv.marker, right);
                if (appends.empty() && node.detail.empty())
                    node.detail = "right fragment '" + clip(right) + "' starts no image";

                bool any = false;
                for (const std::optional<char>& x : prepends) {
                    for (char z : appends) {
                        std::string child;
                        child.reserve(interior.size() + 2);
                        if (x)
                            child.push_back(*x);
                        child += interior;
                        child.push_back(z);
                        std::size_t idx = decide_rec(child, Level::underlying, depth + 1, nodes, memo);
                        any = any || nodes[idx].is_factor;
                        node.completions.push_back({x, z, idx});
                    }
                }
                node.is_factor = any;
            }
        }
    }

    nodes.push_back(std::move(node));
    std::size_t idx = nodes.size() - 1;
    memo.emplace(std::move(key), idx);
    return idx;
}

nlohmann::json verdict_to_json(const MembershipVerdict& v) {
    nlohmann::json nodes = nlohmann::json::array();
    for (const DerivationNode& n : v.nodes) {
        nlohmann::json jn{{"word", n.word},
                          {"level", level_name(n.level)},
                          {"verdict", n.is_factor ? "factor" : "non-factor"},
                          {"kind", node_kind_name(n.kind)}};
        if (!n.detail.empty())
            jn["detail"] = n.detail;
        if (n.kind == NodeKind::desubstitution) {
            jn["interior"] = n.interior;
            nlohmann::json comps = nlohmann::json::array();
            for (const Completion& c : n.completions) {
                nlohmann::json jc{{"append", std::string(1, c.append)}, {"child", c.child}};
                if (c.prepend)
                    jc["prepend"] = std::string(1, *c.prepend);
                comps.push_back(std::move(jc));
            }
            jn["completions"] = std::move(comps);
        }
        nodes.push_back(std::move(jn));
    }
    return nlohmann::json{{"word", v.word},
                          {"level", level_name(v.level)},
                          {"verdict", v.is_factor ? "factor" : "non-factor"},
                          {"root", v.root},
                          {"nodes", std::move(nodes)}};
}

namespace {

bool json_verdict_to_bool(const nlohmann::json& j) {
    std::string s = j.get<std::string>();
    if (s == "factor")
        return true;
    if (s == "non-factor")
        return false;
    throw std::invalid_argument("unknown verdict string: " + s);
}

char single_char(const nlohmann::json& j, const char* what) {
    std::string s = j.get<std::string>();
    if (s.size() != 1)
        throw std::invalid_argument(std::string(what) + " must be a single letter");
    return s[0];
}

} // namespace

MembershipVerdict verdict_from_json(const nlohmann::json& j) {
    MembershipVerdict v;
    v.word = j.at("word").get<std::string>();
    v.level = level_from_name(j.at("level").get<std::string>());
    v.is_factor = json_verdict_to_bool(j.at("verdict"));
    v.root = j.at("root").get<std::size_t>();
    for (const nlohmann::json& jn : j.at("nodes")) {
        DerivationNode n;
        n.word = jn.at("word").get<std::string>();
        n.level = level_from_name(jn.at("level").get<std::string>());
        n.is_factor = json_verdict_to_bool(jn.at("verdict"));
        n.kind = node_kind_from_name(jn.at("kind").get<std::string>());
        if (jn.contains("detail"))
            n.detail = jn.at("detail").get<std::string>();
        if (jn.contains("interior"))
            n.interior = jn.at("interior").get<std::string>();
        if (jn.contains("completions")) {
            for (const nlohmann::json& jc : jn.at("completions")) {
                Completion c;
                if (jc.contains("prepend"))
                    c.prepend = single_char(jc.at("prepend"), "prepend");
                c.append = single_char(jc.at("append"), "append");
                c.child = jc.at("child").get<std::size_t>();
                n.completions.push_back(c);
            }
        }
        v.nodes.push_back(std::move(n));
    }
    return v;
}

bool replay(const MembershipVerdict& v, const MembershipDecider& decider) {
    if (v.root >= v.nodes.size())
        return false;
    const DerivationNode& root = v.nodes[v.root];
    if (root.word != v.word || root.level != v.level || root.is_factor != v.is_factor)
        return false;

    const DeciderConfig& cfg = decider.config();
    for (std::size_t i = 0; i < v.nodes.size(); ++i) {
        const DerivationNode& n = v.nodes[i];
        switch (n.kind) {
        case NodeKind::lookup: {
            if (n.word.size() > cfg.base_bound)
                return false;
            if (decider.factor_set(n.level).contains(n.word) != n.is_factor)
                return false;
            break;
        }
        case NodeKind::no_marker: {
            if (n.word.size() <= cfg.base_bound || n.is_factor)
                return false;
            if (!find_occurrences(n.word, decider.marker(n.level)).empty())
                return false;
            break;
        }
        case NodeKind::segment_mismatch: {
            if (n.word.size() <= cfg.base_bound || n.is_factor)
                return false;
            const Morphism& m = decider.level_morphism(n.level);
            std::vector<std::size_t> occ = find_occurrences(n.word, decider.marker(n.level));
            bool found = false;
            for (std::size_t s = 0; s + 1 < occ.size() && !found; ++s) {
                std::string_view seg = std::string_view(n.word).substr(occ[s], occ[s + 1] - occ[s]);
                bool matches = false;
                for (const std::string& img : m.images())
                    matches = matches || img == seg;
                found = !matches;
            }
            if (!found)
                return false;
            break;
        }
        case NodeKind::desubstitution: {
            if (n.word.size() <= cfg.base_bound)
                return false;
            const Morphism& m = decider.level_morphism(n.level);
            const std::string& marker = decider.marker(n.level);
            std::vector<std::size_t> occ = find_occurrences(n.word, marker);
            if (occ.empty())
                return false;
            std::string interior;
            for (std::size_t s = 0; s + 1 < occ.size(); ++s) {
                std::string_view seg = std::string_view(n.word).substr(occ[s], occ[s + 1] - occ[s]);
                bool matched = false;
                for (std::size_t r = 0; r < m.images().size(); ++r) {
                    if (m.images()[r] == seg) {
                        interior.push_back(m.source()->symbols()[r]);
                        matched = true;
                        break;
                    }
                }
                if (!matched)
                    return false; // segments all parse in a genuine desubstitution node
            }
            if (interior != n.interior)
                return false;

            std::string_view left = std::string_view(n.word).substr(0, occ.front());
            std::string_view right = std::string_view(n.word).substr(occ.back());
            std::vector<std::optional<char>> prepends;
            if (left.empty()) {
                prepends.push_back(std::nullopt);
            } else {
                for (char x : left_fragment_letters(m, left))
                    prepends.emplace_back(x);
            }
            std::vector<char> appends = right_fragment_letters(m, marker, right);

            std::size_t expect = prepends.size() * appends.size();
            if (n.completions.size() != expect)
                return false;
            std::size_t ci = 0;
            bool any = false;
            for (const std::optional<char>& x : prepends) {
                for (char z : appends) {
                    const Completion& c = n.completions[ci++];
                    if (c.prepend != x || c.append != z)
                        return false;
                    if (c.child >= i) // children precede parents: the OR is well-founded
                        return false;
                    const DerivationNode& child = v.nodes[c.child];
                    std::string expected;
                    if (x)
                        expected.push_back(*x);
                    expected += interior;
                    expected.push_back(z);
                    if (child.word != expected || child.level != Level::underlying)
                        return false;
                    any = any || child.is_factor;
                }
            }
            if (n.is_factor != any)
                return false;
            break;
        }
        }
    }
    return true;
}

} // namespace cword
