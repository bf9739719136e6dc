#ifndef LAMINA_IO_HPP
#define LAMINA_IO_HPP

#include <string>
#include <string_view>

#include "lamina/cancellation.hpp"
#include "lamina/language.hpp"
#include "lamina/morphism.hpp"

namespace lamina {

/// {"alphabet": ["a","b"], "horizon": n, "exact": bool, "words": [...]}
/// with the words sorted by (length, letter order); byte-stable.
std::string to_json(const FactorLanguage& language);
FactorLanguage language_from_json(std::string_view text);

/// {"images": {"a": "ab", ...}, "inverse": {...}}; the alphabet is inferred
/// from the image keys.
std::string to_json(const Automorphism& alpha);
Automorphism automorphism_from_json(std::string_view text);

std::string to_json(const BbtEstimate& estimate);

/// Substitution rules in the compact CLI form "a:ab,b:a".
Endomorphism parse_rules(const Alphabet& alphabet, std::string_view rules);

}  // namespace lamina

#endif
