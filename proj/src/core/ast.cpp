#include "core/ast.hpp"

#include <array>

namespace idioscan {

namespace {

struct NameEntry {
    NodeType type;
    const char* name;
};

constexpr std::array<NameEntry, kNodeTypeCount> kNames = {{
    {NodeType::Identifier, "identifier"},
    {NodeType::Number, "number"},
    {NodeType::StringLiteral, "string_literal"},
    {NodeType::CharLiteral, "char_literal"},
    {NodeType::Null, "null"},
    {NodeType::TrueLit, "true_lit"},
    {NodeType::FalseLit, "false_lit"},
    {NodeType::FieldIdentifier, "field_identifier"},
    {NodeType::FieldExpr, "field_expr"},
    {NodeType::SubscriptExpr, "subscript_expr"},
    {NodeType::CallExpr, "call_expr"},
    {NodeType::ArgList, "arg_list"},
    {NodeType::UnaryExpr, "unary_expr"},
    {NodeType::BinaryExpr, "binary_expr"},
    {NodeType::ParenthesizedExpr, "parenthesized_expr"},
    {NodeType::ConditionalExpr, "conditional_expr"},
    {NodeType::CommaExpr, "comma_expr"},
    {NodeType::NonTerminalExpr, "non_terminal_expr"},
}};

}  // namespace

const char* node_type_name(NodeType t) {
    for (const auto& e : kNames) {
        if (e.type == t) return e.name;
    }
    return "?";
}

bool node_type_from_name(std::string_view name, NodeType& out) {
    for (const auto& e : kNames) {
        if (name == e.name) {
            out = e.type;
            return true;
        }
    }
    return false;
}

bool is_leaf_type(NodeType t) {
    switch (t) {
        case NodeType::Identifier:
        case NodeType::Number:
        case NodeType::StringLiteral:
        case NodeType::CharLiteral:
        case NodeType::Null:
        case NodeType::TrueLit:
        case NodeType::FalseLit:
        case NodeType::FieldIdentifier:
        case NodeType::NonTerminalExpr:
            return true;
        default:
            return false;
    }
}

bool node_takes_op(NodeType t) {
    return t == NodeType::UnaryExpr || t == NodeType::BinaryExpr;
}

bool is_op_char(char c) {
    constexpr std::string_view kOpChars = "!%&*+,-/:<=>?^|~";
    return kOpChars.find(c) != std::string_view::npos;
}

bool is_unary_op_lexeme(std::string_view op) {
    return op == "!" || op == "~" || op == "-" || op == "+" || op == "*" || op == "&";
}

bool is_binary_op_lexeme(std::string_view op) {
    constexpr std::string_view kBinary[] = {
        "*",  "/",  "%",  "+",  "-",  "<<", ">>", "<",  "<=", ">",
        ">=", "==", "!=", "&",  "^",  "|",  "&&", "||", "=",  "+=",
        "-=", "*=", "/=", "%=", "&=", "|=", "^=", "<<=", ">>=",
    };
    for (std::string_view b : kBinary) {
        if (op == b) return true;
    }
    return false;
}

bool same_tree(const ExprTree& a, const ExprTree& b) {
    if (a.type != b.type || a.op != b.op || a.text != b.text) return false;
    if (a.children.size() != b.children.size()) return false;
    for (std::size_t i = 0; i < a.children.size(); ++i) {
        if (!same_tree(a.children[i], b.children[i])) return false;
    }
    return true;
}

bool same_shape(const ExprTree& a, const ExprTree& b) {
    if (a.type != b.type || a.op != b.op) return false;
    if (a.children.size() != b.children.size()) return false;
    for (std::size_t i = 0; i < a.children.size(); ++i) {
        if (!same_shape(a.children[i], b.children[i])) return false;
    }
    return true;
}

}  // namespace idioscan
