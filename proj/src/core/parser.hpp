#pragma once

#include <string_view>
#include <vector>

#include "core/ast.hpp"
#include "core/token.hpp"

namespace idioscan {

// Parses a full token sequence into an expression tree; every token must be
// consumed. Throws ParseError on any violation.
ExprTree parse(const std::vector<Token>& tokens);

// tokenize + parse in one call.
ExprTree parse_condition(std::string_view span_text);

}  // namespace idioscan
