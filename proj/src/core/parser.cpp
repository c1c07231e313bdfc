#include "core/parser.hpp"

#include <string>

#include "core/errors.hpp"

namespace idioscan {
namespace {

int binary_precedence(const std::string& op) {
    if (op == "||") return 1;
    if (op == "&&") return 2;
    if (op == "|") return 3;
    if (op == "^") return 4;
    if (op == "&") return 5;
    if (op == "==" || op == "!=") return 6;
    if (op == "<" || op == "<=" || op == ">" || op == ">=") return 7;
    if (op == "<<" || op == ">>") return 8;
    if (op == "+" || op == "-") return 9;
    if (op == "*" || op == "/" || op == "%") return 10;
    return 0;  // not a (plain) binary operator
}

bool is_assign_op(const std::string& op) {
    return op == "=" || op == "+=" || op == "-=" || op == "*=" || op == "/=" ||
           op == "%=" || op == "&=" || op == "|=" || op == "^=" || op == "<<=" ||
           op == ">>=";
}

bool is_unary_op(const std::string& op) {
    return op == "!" || op == "~" || op == "-" || op == "+" || op == "*" || op == "&";
}

ExprTree leaf(NodeType t, std::string text) {
    ExprTree n;
    n.type = t;
    n.text = std::move(text);
    return n;
}

class Parser {
  public:
    explicit Parser(const std::vector<Token>& toks) : toks_(toks) {}

    ExprTree run() {
        if (toks_.empty()) throw ParseError(0, "non-empty condition");
        ExprTree tree = parse_expression();
        if (pos_ != toks_.size()) throw ParseError(toks_[pos_].offset, "end of condition");
        return tree;
    }

  private:
    const std::vector<Token>& toks_;
    std::size_t pos_ = 0;

    bool at_end() const { return pos_ >= toks_.size(); }
    const Token& peek() const { return toks_[pos_]; }
    const Token& advance() { return toks_[pos_++]; }

    std::size_t here() const {
        if (!at_end()) return peek().offset;
        const Token& last = toks_.back();
        return last.offset + last.lexeme.size();
    }

    bool check(TokenKind k) const { return !at_end() && peek().kind == k; }

    bool check_op(const char* lexeme) const {
        return check(TokenKind::Operator) && peek().lexeme == lexeme;
    }

    void expect(TokenKind k, const char* what) {
        if (!check(k)) throw ParseError(here(), what);
        ++pos_;
    }

    // expression := assignment (',' assignment)*   -- flattened n-ary
    ExprTree parse_expression() {
        ExprTree first = parse_assignment();
        if (!check(TokenKind::Comma)) return first;
        ExprTree seq;
        seq.type = NodeType::CommaExpr;
        seq.children.push_back(std::move(first));
        while (check(TokenKind::Comma)) {
            advance();
            seq.children.push_back(parse_assignment());
        }
        return seq;
    }

    // assignment := conditional | conditional assign-op assignment  (right-assoc)
    ExprTree parse_assignment() {
        ExprTree lhs = parse_conditional();
        if (check(TokenKind::Operator) && is_assign_op(peek().lexeme)) {
            std::string op = advance().lexeme;
            ExprTree rhs = parse_assignment();
            ExprTree node;
            node.type = NodeType::BinaryExpr;
            node.op = std::move(op);
            node.children.push_back(std::move(lhs));
            node.children.push_back(std::move(rhs));
            return node;
        }
        return lhs;
    }

    // conditional := binary | binary '?' expression ':' assignment
    ExprTree parse_conditional() {
        ExprTree cond = parse_binary(1);
        if (!check(TokenKind::Question)) return cond;
        advance();
        ExprTree mid = parse_expression();
        expect(TokenKind::Colon, "':'");
        ExprTree third = parse_assignment();
        ExprTree node;
        node.type = NodeType::ConditionalExpr;
        node.children.push_back(std::move(cond));
        node.children.push_back(std::move(mid));
        node.children.push_back(std::move(third));
        return node;
    }

    // Precedence climbing over left-associative binary operators.
    ExprTree parse_binary(int min_prec) {
        ExprTree lhs = parse_unary();
        while (check(TokenKind::Operator)) {
            int prec = binary_precedence(peek().lexeme);
            if (prec < min_prec || prec == 0) break;
            std::string op = advance().lexeme;
            ExprTree rhs = parse_binary(prec + 1);
            ExprTree node;
            node.type = NodeType::BinaryExpr;
            node.op = std::move(op);
            node.children.push_back(std::move(lhs));
            node.children.push_back(std::move(rhs));
            lhs = std::move(node);
        }
        return lhs;
    }

    ExprTree parse_unary() {
        if (check(TokenKind::Operator) && is_unary_op(peek().lexeme)) {
            const Token& tok = advance();
            std::string op = tok.lexeme;
            ExprTree operand = parse_unary();
            if (op == "+") return operand;  // semantically inert
            if (op == "-" && operand.type == NodeType::Number) {
                // Negated literal stays one number leaf: "-2" is a constant,
                // not an operation on one.
                operand.text.insert(0, "-");
                return operand;
            }
            ExprTree node;
            node.type = NodeType::UnaryExpr;
            node.op = std::move(op);
            node.children.push_back(std::move(operand));
            return node;
        }
        return parse_postfix();
    }

    ExprTree parse_postfix() {
        ExprTree base = parse_primary();
        for (;;) {
            if (check_op(".") || check_op("->")) {
                advance();
                if (!check(TokenKind::Identifier)) throw ParseError(here(), "member name");
                ExprTree node;
                node.type = NodeType::FieldExpr;
                node.children.push_back(std::move(base));
                node.children.push_back(leaf(NodeType::FieldIdentifier, advance().lexeme));
                base = std::move(node);
            } else if (check(TokenKind::OpenParen)) {
                advance();
                ExprTree args;
                args.type = NodeType::ArgList;
                if (!check(TokenKind::CloseParen)) {
                    args.children.push_back(parse_assignment());
                    while (check(TokenKind::Comma)) {
                        advance();
                        args.children.push_back(parse_assignment());
                    }
                }
                expect(TokenKind::CloseParen, "')'");
                ExprTree node;
                node.type = NodeType::CallExpr;
                node.children.push_back(std::move(base));
                node.children.push_back(std::move(args));
                base = std::move(node);
            } else if (check(TokenKind::OpenBracket)) {
                advance();
                ExprTree index = parse_expression();
                expect(TokenKind::CloseBracket, "']'");
                ExprTree node;
                node.type = NodeType::SubscriptExpr;
                node.children.push_back(std::move(base));
                node.children.push_back(std::move(index));
                base = std::move(node);
            } else {
                return base;
            }
        }
    }

    ExprTree parse_primary() {
        if (at_end()) throw ParseError(here(), "expression");
        const Token& tok = peek();
        switch (tok.kind) {
            case TokenKind::Identifier: advance(); return leaf(NodeType::Identifier, tok.lexeme);
            case TokenKind::Number: advance(); return leaf(NodeType::Number, tok.lexeme);
            case TokenKind::StringLit: advance(); return leaf(NodeType::StringLiteral, tok.lexeme);
            case TokenKind::CharLit: advance(); return leaf(NodeType::CharLiteral, tok.lexeme);
            case TokenKind::KeywordNull: advance(); return leaf(NodeType::Null, tok.lexeme);
            case TokenKind::KeywordTrue: advance(); return leaf(NodeType::TrueLit, tok.lexeme);
            case TokenKind::KeywordFalse: advance(); return leaf(NodeType::FalseLit, tok.lexeme);
            case TokenKind::OpenParen: {
                advance();
                ExprTree inner = parse_expression();
                expect(TokenKind::CloseParen, "')'");
                ExprTree node;
                node.type = NodeType::ParenthesizedExpr;
                node.children.push_back(std::move(inner));
                return node;
            }
            default: throw ParseError(tok.offset, "expression");
        }
    }
};

}  // namespace

ExprTree parse(const std::vector<Token>& tokens) { return Parser(tokens).run(); }

ExprTree parse_condition(std::string_view span_text) { return parse(tokenize(span_text)); }

}  // namespace idioscan
