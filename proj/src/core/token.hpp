#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace idioscan {

enum class TokenKind : std::uint8_t {
    Identifier,
    Number,
    StringLit,
    CharLit,
    KeywordNull,
    KeywordTrue,
    KeywordFalse,
    Operator,
    OpenParen,
    CloseParen,
    OpenBracket,
    CloseBracket,
    Comma,
    Question,
    Colon,
};

struct Token {
    TokenKind kind;
    std::string lexeme;
    std::size_t offset;  // 0-based position in the condition span
};

// Maximal-munch tokenization of one condition span. Whitespace and comments
// are skipped. Throws UnknownCharacterError for anything outside the
// vocabulary.
std::vector<Token> tokenize(std::string_view span_text);

}  // namespace idioscan
