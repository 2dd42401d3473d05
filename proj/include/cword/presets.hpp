#pragma once

#include "cword/alphabet.hpp"
#include "cword/morphism.hpp"

#include <string>

namespace cword::presets {

/// Name accepted by the CLI's --preset flag.
inline constexpr const char* name = "paper";

AlphabetPtr underlying_alphabet(); // 01234
AlphabetPtr coded_alphabet();      // abcde

/// The generating endomorphism F over {0..4}.
Morphism base_endomorphism();
/// The erasing coding G from {0..4} to {a..e}.
Morphism base_coding();
/// The expanded endomorphism f, stored as its own table (the composition
/// identity f = F^3 is something the verifier checks, not assumes).
Morphism expanded_endomorphism();
/// The expanded non-erasing coding g, likewise an independent table (g = G∘F^2
/// is checked).
Morphism expanded_coding();

inline constexpr char seed = '0';
inline constexpr const char* underlying_marker = "01";
inline constexpr const char* coded_marker = "ab";

} // namespace cword::presets
