#pragma once

// JSON forms of patterns, POPs and characters. Rendering is compact and
// deterministic (keys in schema order); parse() throws std::invalid_argument
// on malformed or inconsistent input.
//
//   pattern    {"rank": r, "eta": [[..], ..], "lambda": [[..], ..]}
//   POP        pattern keys plus "overlays": [{"i", "j", "barred", "parts"}, ..]
//   character  {"rank": r, "terms": [{"grade", "weight", "mult"}, ..]}
//
// A restricted pattern has r - 1 lambda rows. Overlays follow
// overlay_positions(). Character multiplicities that do not fit in a signed
// 64-bit integer are written as decimal strings.

#include <string>
#include <string_view>

#include "spweyl/characters.hpp"
#include "spweyl/patterns.hpp"
#include "spweyl/pops.hpp"

namespace spweyl {

std::string to_json(const PatternC& p);
std::string to_json(const RestrictedPattern& p);
std::string to_json(const Pop& p);
std::string to_json(const RestrictedPop& p);
std::string to_json(const GradedCharacter& ch);

PatternC pattern_from_json(std::string_view text);
RestrictedPattern restricted_pattern_from_json(std::string_view text);
Pop pop_from_json(std::string_view text);
RestrictedPop restricted_pop_from_json(std::string_view text);
GradedCharacter character_from_json(std::string_view text);

}  // namespace spweyl
