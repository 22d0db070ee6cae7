#pragma once

#include <optional>
#include <string_view>

#include "stanley/monomial.hpp"

namespace stanley {

// Text grammar used by the CLI and by witness serialization:
//
//   monomial := "1" | term ("*" term)*
//   term     := "x" INDEX ("^" EXP)?
//   ideal    := "0" | monomial ("," monomial)*
//
// Indices are 1-based, whitespace is ignored, repeated variables in one
// monomial multiply together. Errors carry the byte offset of the first
// bad character.

Monomial parse_monomial(std::string_view text, int n);

// Parses an ideal and minimalizes it. If `n` is absent the ambient is the
// largest variable index appearing in the text.
MonomialIdeal parse_ideal(std::string_view text, std::optional<int> n = {});

// Parses I and J in a shared ambient (defaulting to the largest index seen
// in either text) and validates the factor.
FactorModule parse_factor(std::string_view text_I, std::string_view text_J,
                          std::optional<int> n = {});

}  // namespace stanley
