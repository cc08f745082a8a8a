#pragma once

#include <string>
#include <string_view>

namespace texttile {

// Rule-set identifier, bumped whenever the stemming rules change so that
// persisted term tables can be tied to the normalization that produced them.
inline constexpr const char* kStemmerVersion = "porter-1980.1";

// Suffix-stripping stemmer over the classic Porter rule set. Expects a
// lowercase word; words of length <= 2 are returned unchanged.
std::string porter_stem(std::string word);

}  // namespace texttile
