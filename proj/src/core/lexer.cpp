#include "core/token.hpp"

#include <array>
#include <cctype>
#include <string_view>

#include "core/errors.hpp"

namespace idioscan {
namespace {

bool is_ident_start(unsigned char c) {
    return std::isalpha(c) != 0 || c == '_' || c >= 0x80;
}

bool is_ident_continue(unsigned char c) {
    return std::isalnum(c) != 0 || c == '_' || c >= 0x80;
}

bool is_digit(unsigned char c) { return std::isdigit(c) != 0; }

// pp-number continuation: digits, letters, '.', digit separators, and
// sign characters directly after an exponent marker.
std::size_t scan_number(std::string_view s, std::size_t start) {
    std::size_t i = start;
    while (i < s.size()) {
        unsigned char c = static_cast<unsigned char>(s[i]);
        if (std::isalnum(c) != 0 || c == '.' || c == '_' || c == '\'') {
            ++i;
            continue;
        }
        if ((c == '+' || c == '-') && i > start) {
            unsigned char prev = static_cast<unsigned char>(s[i - 1]);
            if (prev == 'e' || prev == 'E' || prev == 'p' || prev == 'P') {
                ++i;
                continue;
            }
        }
        break;
    }
    return i;
}

// Consumes a quoted literal (string or char) including escapes; returns the
// index one past the closing quote.
std::size_t scan_quoted(std::string_view s, std::size_t start, char quote) {
    std::size_t i = start + 1;
    while (i < s.size()) {
        char c = s[i];
        if (c == '\\' && i + 1 < s.size()) {
            i += 2;
            continue;
        }
        if (c == quote) return i + 1;
        ++i;
    }
    throw ParseError(start, quote == '"' ? "closing '\"'" : "closing '\\''");
}

bool keyword_kind(std::string_view word, TokenKind& out) {
    if (word == "NULL" || word == "nullptr") {
        out = TokenKind::KeywordNull;
        return true;
    }
    if (word == "true" || word == "TRUE") {
        out = TokenKind::KeywordTrue;
        return true;
    }
    if (word == "false" || word == "FALSE") {
        out = TokenKind::KeywordFalse;
        return true;
    }
    return false;
}

constexpr std::array<std::string_view, 2> kOps3 = {"<<=", ">>="};
constexpr std::array<std::string_view, 17> kOps2 = {
    "<<", ">>", "<=", ">=", "==", "!=", "&&", "||", "+=",
    "-=", "*=", "/=", "%=", "&=", "|=", "^=", "->",
};
constexpr std::string_view kOps1 = "!~+-*/%<>=&^|.";

}  // namespace

std::vector<Token> tokenize(std::string_view s) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < s.size()) {
        unsigned char c = static_cast<unsigned char>(s[i]);
        if (std::isspace(c) != 0) {
            ++i;
            continue;
        }
        // Comments count as whitespace inside a span.
        if (c == '/' && i + 1 < s.size() && s[i + 1] == '/') {
            while (i < s.size() && s[i] != '\n') ++i;
            continue;
        }
        if (c == '/' && i + 1 < s.size() && s[i + 1] == '*') {
            std::size_t end = s.find("*/", i + 2);
            i = (end == std::string_view::npos) ? s.size() : end + 2;
            continue;
        }
        if (is_ident_start(c)) {
            std::size_t j = i + 1;
            while (j < s.size() && is_ident_continue(static_cast<unsigned char>(s[j]))) ++j;
            std::string_view word = s.substr(i, j - i);
            TokenKind kind = TokenKind::Identifier;
            keyword_kind(word, kind);
            out.push_back({kind, std::string(word), i});
            i = j;
            continue;
        }
        if (is_digit(c) || (c == '.' && i + 1 < s.size() && is_digit(static_cast<unsigned char>(s[i + 1])))) {
            std::size_t j = scan_number(s, i);
            out.push_back({TokenKind::Number, std::string(s.substr(i, j - i)), i});
            i = j;
            continue;
        }
        if (c == '"') {
            std::size_t j = scan_quoted(s, i, '"');
            out.push_back({TokenKind::StringLit, std::string(s.substr(i, j - i)), i});
            i = j;
            continue;
        }
        if (c == '\'') {
            std::size_t j = scan_quoted(s, i, '\'');
            out.push_back({TokenKind::CharLit, std::string(s.substr(i, j - i)), i});
            i = j;
            continue;
        }
        switch (c) {
            case '(': out.push_back({TokenKind::OpenParen, "(", i}); ++i; continue;
            case ')': out.push_back({TokenKind::CloseParen, ")", i}); ++i; continue;
            case '[': out.push_back({TokenKind::OpenBracket, "[", i}); ++i; continue;
            case ']': out.push_back({TokenKind::CloseBracket, "]", i}); ++i; continue;
            case ',': out.push_back({TokenKind::Comma, ",", i}); ++i; continue;
            case '?': out.push_back({TokenKind::Question, "?", i}); ++i; continue;
            case ':': out.push_back({TokenKind::Colon, ":", i}); ++i; continue;
            default: break;
        }
        bool matched = false;
        for (std::string_view op : kOps3) {
            if (s.substr(i, op.size()) == op) {
                out.push_back({TokenKind::Operator, std::string(op), i});
                i += op.size();
                matched = true;
                break;
            }
        }
        if (matched) continue;
        for (std::string_view op : kOps2) {
            if (s.substr(i, op.size()) == op) {
                out.push_back({TokenKind::Operator, std::string(op), i});
                i += op.size();
                matched = true;
                break;
            }
        }
        if (matched) continue;
        if (kOps1.find(static_cast<char>(c)) != std::string_view::npos) {
            out.push_back({TokenKind::Operator, std::string(1, static_cast<char>(c)), i});
            ++i;
            continue;
        }
        throw UnknownCharacterError(i, static_cast<char>(c));
    }
    return out;
}

}  // namespace idioscan
