#pragma once

#include "siltkit/quiver.hpp"

namespace siltkit {

/* Input language, one declaration per line:
 *
 *   algebra <name>
 *   vertex <id> ...
 *   arrow <id> : <v> -> <w> [deg <n>]
 *   rel <term> [(+|-) <term>] ...     term = [rational] a*b*c
 *   # comment
 *
 * Signs between terms are separate tokens. Coefficients are integers or
 * fractions like 3/4. */
AlgebraPresentation parse_dsl(const std::string& text);

std::string print_dsl(const AlgebraPresentation& pres);

}  // namespace siltkit
