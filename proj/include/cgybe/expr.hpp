#pragma once

#include <string_view>

#include "cgybe/laurent.hpp"

namespace cgybe {

/// Parses a small Laurent expression language:
///
///   expr    := ['-'] term (('+' | '-') term)*
///   term    := factor ('*' factor)*
///   factor  := primary ['^' ['-'] integer]
///   primary := integer | 'q' | 'p' | '(' expr ')'
///
/// plus the preset "hecke" for q - q^-1. Whitespace is ignored. Negative
/// powers require a unit base. Throws std::invalid_argument on bad input.
LaurentQP parse_laurent(std::string_view text);

}  // namespace cgybe
