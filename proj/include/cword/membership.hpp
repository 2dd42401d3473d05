#pragma once

#include "cword/factor_set.hpp"
#include "cword/morphism.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace cword {

/// The two tiers of the subject word: the fixed point itself ("underlying")
/// and its image under the coding morphism ("coded").
enum class Level { underlying, coded };

std::string_view level_name(Level level);
Level level_from_name(std::string_view name);

/// A claimed segmentation anchor: `marker` occurs in the level's infinite word
/// only as the image-prefix of every letter.
struct MarkerSpec {
    std::string marker;
    Level level;
};

struct MarkerCheck {
    bool verified;
    std::string witness; // refutation site (offset or junction); empty when verified
};

/// Check the marker claim against the image table: the marker must (i) prefix
/// every image, (ii) occur nowhere inside an image at a positive offset, and
/// (iii) not straddle any image junction realizable per the 2-letter factor
/// set of the underlying word. `factor2` must cover length 2 and use m's
/// source alphabet; the marker must not be longer than the shortest image.
MarkerCheck verify_marker(const MarkerSpec& spec, const Morphism& m, const FactorSet& factor2);

enum class NodeKind { lookup, no_marker, segment_mismatch, desubstitution };

std::string_view node_kind_name(NodeKind kind);
NodeKind node_kind_from_name(std::string_view name);

/// One way of completing the stub fragments of a de-substitution step; the
/// pre-image candidate is prepend? ++ interior ++ append.
struct Completion {
    std::optional<char> prepend; // letter whose image supplies the left fragment
    char append;                 // letter whose image starts the right fragment
    std::size_t child;           // node index of the pre-image candidate
};

struct DerivationNode {
    std::string word;
    Level level;
    bool is_factor;
    NodeKind kind;
    std::string detail;   // human-readable context (mismatching segment, ...)
    std::string interior; // de-substitution: letters read off the complete segments
    std::vector<Completion> completions;
};

/// A membership verdict together with its derivation DAG; `nodes[root]`
/// concerns `word` itself and children are reachable through completions.
struct MembershipVerdict {
    std::string word;
    Level level;
    bool is_factor;
    std::size_t root = 0;
    std::vector<DerivationNode> nodes;
};

nlohmann::json verdict_to_json(const MembershipVerdict& v);
MembershipVerdict verdict_from_json(const nlohmann::json& j);

struct DeciderConfig {
    std::size_t base_bound = 200; // words up to this length answered by lookup
    std::size_t max_depth = 64;
    std::size_t budget_bytes = default_factor_budget;
};

/// Exact factor membership for words of any length: direct factor-set lookup
/// up to the base bound, and marker-guided de-substitution above it. The
/// marker claims are machine-verified at construction; construction refuses
/// configurations whose answers could be unsound.
class MembershipDecider {
public:
    /// Underlying level only: the fixed point m^ω(seed).
    MembershipDecider(Morphism m, char seed, std::string underlying_marker,
                      DeciderConfig config = {});

    /// Both levels: the fixed point and coder(fixed point).
    MembershipDecider(Morphism m, char seed, std::string underlying_marker, Morphism coder,
                      std::string coded_marker, DeciderConfig config = {});

    MembershipVerdict decide(std::string_view word, Level level) const;

    bool has_coded() const noexcept { return coder_.has_value(); }
    const DeciderConfig& config() const noexcept { return config_; }
    const FactorSet& factor_set(Level level) const;
    const Morphism& level_morphism(Level level) const; // f for underlying, coder for coded
    const std::string& marker(Level level) const;

private:
    struct LevelData {
        std::string marker;
        std::vector<std::pair<std::string, char>> image_to_letter; // sorted by image
    };

    MembershipDecider(Morphism m, char seed, std::string underlying_marker,
                      std::optional<Morphism> coder, std::string coded_marker,
                      DeciderConfig config);

    const LevelData& data(Level level) const;
    std::size_t decide_rec(std::string_view word, Level level, std::size_t depth,
                           std::vector<DerivationNode>& nodes,
                           std::unordered_map<std::string, std::size_t>& memo) const;

    Morphism morphism_;
    char seed_;
    std::optional<Morphism> coder_;
    DeciderConfig config_;
    std::optional<FactorSet> underlying_set_;
    std::optional<FactorSet> coded_set_;
    LevelData underlying_data_;
    LevelData coded_data_;
};

/// Re-derive every node of a certificate against the decider's morphisms and
/// factor sets; true iff the whole DAG is consistent and supports its verdict.
bool replay(const MembershipVerdict& v, const MembershipDecider& decider);

} // namespace cword
