#pragma once

#include <string>
#include <string_view>

#include "core/ast.hpp"

namespace idioscan {

enum class AbstractionLevel : std::uint8_t { L1, L2 };

inline const char* level_name(AbstractionLevel lv) {
    return lv == AbstractionLevel::L1 ? "L1" : "L2";
}

// Structure-preserving copy with all leaf content erased; node types and
// operator lexemes survive.
ExprTree abstract_l1(const ExprTree& tree);

// Keeps the top `depth` levels of an L1 tree; any node at the cut that still
// has children collapses to a non_terminal_expr leaf. With prune_leaves,
// leaves at the cut are collapsed as well.
ExprTree abstract_l2(const ExprTree& l1_tree, int depth = 1, bool prune_leaves = false);

// Pre-order parenthesized form: `(node_type ("op") (child)(child))`.
std::string serialize(const ExprTree& tree);

// Inverse of serialize for canonical pattern text. Throws PatternError
// (offset relative to `text`) on malformed syntax or an invalid tree.
ExprTree parse_serialized(std::string_view text);

// True when `tree` is a pattern the abstraction pipeline could produce:
// correct arities, operator lexemes legal for their node type, and
// field_identifier / arg_list only in their one allowed position. `why`
// receives a diagnostic on failure when non-null.
bool validate_pattern(const ExprTree& tree, std::string* why = nullptr);

// Renders a parser-produced tree back to compilable-looking condition text,
// substituting fixed placeholder lexemes for erased leaves. Re-parsing the
// result reproduces the tree's structure. Not defined for trees containing
// non_terminal_expr.
std::string unparse(const ExprTree& tree);

}  // namespace idioscan
