#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace idioscan {

// Node vocabulary of parsed condition expressions.
enum class NodeType : std::uint8_t {
    Identifier,
    Number,
    StringLiteral,
    CharLiteral,
    Null,
    TrueLit,
    FalseLit,
    FieldIdentifier,
    FieldExpr,
    SubscriptExpr,
    CallExpr,
    ArgList,
    UnaryExpr,
    BinaryExpr,
    ParenthesizedExpr,
    ConditionalExpr,
    CommaExpr,
    NonTerminalExpr,
};

inline constexpr std::size_t kNodeTypeCount = 18;

const char* node_type_name(NodeType t);
bool node_type_from_name(std::string_view name, NodeType& out);

// Types that never carry children.
bool is_leaf_type(NodeType t);
// Types whose serialization carries an operator lexeme.
bool node_takes_op(NodeType t);

// Operator vocabulary shared by the parser, pattern validation, and the
// symbol alphabet.
bool is_op_char(char c);
bool is_unary_op_lexeme(std::string_view op);
bool is_binary_op_lexeme(std::string_view op);

struct ExprTree {
    NodeType type = NodeType::Identifier;
    std::string op;    // operator lexeme; only UnaryExpr/BinaryExpr
    std::string text;  // leaf lexeme; erased by abstraction
    std::vector<ExprTree> children;

    bool is_leaf() const { return children.empty(); }
};

// Structural equality; leaf text and op lexemes both compared.
bool same_tree(const ExprTree& a, const ExprTree& b);

// Structural equality ignoring leaf text (shape + ops only).
bool same_shape(const ExprTree& a, const ExprTree& b);

}  // namespace idioscan
