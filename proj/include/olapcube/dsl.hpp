#pragma once

#include <string>

#include "olapcube/combinatorics.hpp"
#include "olapcube/olap_ops.hpp"

namespace olapcube {

// `view := IDENT ('|' IDENT (',' IDENT)*)?` — the first identifier is the
// horizontal axis, the rest are pivots in written order. Syntax problems
// raise ParseError with a 1-based column; a repeated dimension raises
// DomainError.
ViewSpec parse_view_expr(const std::string& text);

// Inverse of parse_view_expr: `h|p1,p2` with no spaces.
std::string format_view_expr(const ViewSpec& view);

// `filter := clause (';' clause)*; clause := IDENT '=' VALUE (',' VALUE)*`.
// Values are trimmed; a dimension named twice raises DomainError.
DiceFilter parse_filter_expr(const std::string& text);

// Filter grammar restricted to one value per clause; used for cell keys.
CellKey parse_key_expr(const std::string& text);

}  // namespace olapcube
