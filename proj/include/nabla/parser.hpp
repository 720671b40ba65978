#pragma once

#include "nabla/operators.hpp"

#include <string>
#include <string_view>

namespace nabla {

/// Parses an operator word written outermost first, e.g. "div curl grad",
/// "∇3 ∘ ∇1" or "curl.curl". Operators: grad|∇1|nabla1, curl|∇2|nabla2,
/// div|∇3|nabla3 (case-insensitive). Separators: whitespace, "∘", "o", ".".
/// Throws ParseError carrying a code-point offset into `text`.
Chain parse_chain(std::string_view text);

/// Canonical spelling: lowercase names joined by single spaces.
std::string format_chain(const Chain& chain);

}  // namespace nabla
