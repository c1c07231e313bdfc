#include "core/abstraction.hpp"

#include <cctype>

#include "core/errors.hpp"

namespace idioscan {
namespace {

// field_identifier and arg_list exist only in one fixed slot each; everything
// else is a free-standing expression.
bool is_expr_type(NodeType t) {
    return t != NodeType::FieldIdentifier && t != NodeType::ArgList;
}

bool child_ok(NodeType parent, std::size_t index, NodeType child) {
    if (parent == NodeType::FieldExpr) {
        if (index == 0) return is_expr_type(child);
        if (index == 1)
            return child == NodeType::FieldIdentifier || child == NodeType::NonTerminalExpr;
        return false;
    }
    if (parent == NodeType::CallExpr) {
        if (index == 0) return is_expr_type(child);
        if (index == 1) return child == NodeType::ArgList || child == NodeType::NonTerminalExpr;
        return false;
    }
    return is_expr_type(child);
}

bool arity_ok(NodeType t, std::size_t n) {
    switch (t) {
        case NodeType::UnaryExpr:
        case NodeType::ParenthesizedExpr:
            return n == 1;
        case NodeType::FieldExpr:
        case NodeType::SubscriptExpr:
        case NodeType::CallExpr:
        case NodeType::BinaryExpr:
            return n == 2;
        case NodeType::ConditionalExpr:
            return n == 3;
        case NodeType::CommaExpr:
            return n >= 2;
        case NodeType::ArgList:
            return true;
        default:  // leaves
            return n == 0;
    }
}

bool op_ok(NodeType t, const std::string& op) {
    if (t == NodeType::UnaryExpr) return is_unary_op_lexeme(op);
    if (t == NodeType::BinaryExpr) return is_binary_op_lexeme(op);
    return op.empty();
}

bool validate_node(const ExprTree& n, std::string* why) {
    if (!op_ok(n.type, n.op)) {
        if (why) *why = std::string("bad operator '") + n.op + "' for " + node_type_name(n.type);
        return false;
    }
    if (!arity_ok(n.type, n.children.size())) {
        if (why)
            *why = std::string(node_type_name(n.type)) + " with " +
                   std::to_string(n.children.size()) + " children";
        return false;
    }
    for (std::size_t i = 0; i < n.children.size(); ++i) {
        const ExprTree& c = n.children[i];
        if (!child_ok(n.type, i, c.type)) {
            if (why)
                *why = std::string(node_type_name(c.type)) + " not allowed as child " +
                       std::to_string(i) + " of " + node_type_name(n.type);
            return false;
        }
        if (!validate_node(c, why)) return false;
    }
    return true;
}

void serialize_into(const ExprTree& n, std::string& out) {
    out += '(';
    out += node_type_name(n.type);
    if (node_takes_op(n.type)) {
        out += " (\"";
        out += n.op;
        out += "\")";
    }
    if (!n.children.empty()) {
        out += ' ';
        for (const ExprTree& c : n.children) serialize_into(c, out);
    }
    out += ')';
}

class SerializedReader {
  public:
    explicit SerializedReader(std::string_view s) : s_(s) {}

    ExprTree run() {
        ExprTree tree = parse_node();
        if (pos_ != s_.size()) throw PatternError(pos_, "end of pattern");
        std::string why;
        if (!validate_pattern(tree, &why)) throw PatternError(0, why);
        return tree;
    }

  private:
    std::string_view s_;
    std::size_t pos_ = 0;

    char peek(std::size_t ahead = 0) const {
        return pos_ + ahead < s_.size() ? s_[pos_ + ahead] : '\0';
    }

    void expect(char c, const char* what) {
        if (peek() != c) throw PatternError(pos_, what);
        ++pos_;
    }

    ExprTree parse_node() {
        expect('(', "'('");
        std::size_t start = pos_;
        while (pos_ < s_.size() &&
               (std::islower(static_cast<unsigned char>(s_[pos_])) != 0 || s_[pos_] == '_' ||
                std::isdigit(static_cast<unsigned char>(s_[pos_])) != 0)) {
            ++pos_;
        }
        std::string_view name = s_.substr(start, pos_ - start);
        ExprTree node;
        if (name.empty() || !node_type_from_name(name, node.type))
            throw PatternError(start, "node type name");
        if (peek() == ' ' && peek(1) == '(' && peek(2) == '"') {
            pos_ += 3;
            std::size_t op_start = pos_;
            while (peek() != '"') {
                if (pos_ >= s_.size() || !is_op_char(s_[pos_]))
                    throw PatternError(pos_, "operator character");
                ++pos_;
            }
            if (pos_ == op_start) throw PatternError(pos_, "operator character");
            node.op = std::string(s_.substr(op_start, pos_ - op_start));
            expect('"', "'\"'");
            expect(')', "')'");
        }
        if (peek() == ' ') {
            ++pos_;
            if (peek() != '(') throw PatternError(pos_, "'('");
            while (peek() == '(') node.children.push_back(parse_node());
        }
        expect(')', "')'");
        return node;
    }
};

std::string placeholder(const ExprTree& n) {
    if (!n.text.empty()) return n.text;
    switch (n.type) {
        case NodeType::Identifier: return "x";
        case NodeType::Number: return "0";
        case NodeType::StringLiteral: return "\"s\"";
        case NodeType::CharLiteral: return "'c'";
        case NodeType::Null: return "NULL";
        case NodeType::TrueLit: return "true";
        case NodeType::FalseLit: return "false";
        case NodeType::FieldIdentifier: return "f";
        default: return "x";
    }
}

void unparse_into(const ExprTree& n, std::string& out) {
    switch (n.type) {
        case NodeType::FieldExpr:
            unparse_into(n.children[0], out);
            out += '.';
            out += placeholder(n.children[1]);
            return;
        case NodeType::SubscriptExpr:
            unparse_into(n.children[0], out);
            out += '[';
            unparse_into(n.children[1], out);
            out += ']';
            return;
        case NodeType::CallExpr: {
            unparse_into(n.children[0], out);
            out += '(';
            const ExprTree& args = n.children[1];
            for (std::size_t i = 0; i < args.children.size(); ++i) {
                if (i > 0) out += ", ";
                unparse_into(args.children[i], out);
            }
            out += ')';
            return;
        }
        case NodeType::UnaryExpr: {
            out += n.op;
            std::string operand;
            unparse_into(n.children[0], operand);
            // Address-of abutting another '&' would lex as the && operator.
            if (!n.op.empty() && n.op.back() == '&' && !operand.empty() && operand.front() == '&')
                out += ' ';
            out += operand;
            return;
        }
        case NodeType::BinaryExpr:
            unparse_into(n.children[0], out);
            out += ' ';
            out += n.op;
            out += ' ';
            unparse_into(n.children[1], out);
            return;
        case NodeType::ParenthesizedExpr:
            out += '(';
            unparse_into(n.children[0], out);
            out += ')';
            return;
        case NodeType::ConditionalExpr:
            unparse_into(n.children[0], out);
            out += " ? ";
            unparse_into(n.children[1], out);
            out += " : ";
            unparse_into(n.children[2], out);
            return;
        case NodeType::CommaExpr:
            for (std::size_t i = 0; i < n.children.size(); ++i) {
                if (i > 0) out += ", ";
                unparse_into(n.children[i], out);
            }
            return;
        default:
            out += placeholder(n);
            return;
    }
}

}  // namespace

ExprTree abstract_l1(const ExprTree& tree) {
    ExprTree out;
    out.type = tree.type;
    out.op = tree.op;
    out.children.reserve(tree.children.size());
    for (const ExprTree& c : tree.children) out.children.push_back(abstract_l1(c));
    return out;
}

ExprTree abstract_l2(const ExprTree& l1_tree, int depth, bool prune_leaves) {
    if (depth <= 0) {
        if (!l1_tree.is_leaf() || prune_leaves) {
            ExprTree cut;
            cut.type = NodeType::NonTerminalExpr;
            return cut;
        }
        ExprTree out;
        out.type = l1_tree.type;
        out.op = l1_tree.op;
        return out;
    }
    ExprTree out;
    out.type = l1_tree.type;
    out.op = l1_tree.op;
    out.children.reserve(l1_tree.children.size());
    for (const ExprTree& c : l1_tree.children)
        out.children.push_back(abstract_l2(c, depth - 1, prune_leaves));
    return out;
}

std::string serialize(const ExprTree& tree) {
    std::string out;
    serialize_into(tree, out);
    return out;
}

ExprTree parse_serialized(std::string_view text) { return SerializedReader(text).run(); }

bool validate_pattern(const ExprTree& tree, std::string* why) {
    if (!is_expr_type(tree.type)) {
        if (why) *why = std::string(node_type_name(tree.type)) + " cannot be a pattern root";
        return false;
    }
    return validate_node(tree, why);
}

std::string unparse(const ExprTree& tree) {
    std::string out;
    unparse_into(tree, out);
    return out;
}

}  // namespace idioscan
