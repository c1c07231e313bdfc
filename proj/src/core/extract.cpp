#include "core/extract.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include "core/errors.hpp"

namespace idioscan {
namespace {

bool ident_continue(unsigned char c) {
    return std::isalnum(c) != 0 || c == '_' || c >= 0x80;
}

// Replaces every byte that is not part of a well-formed UTF-8 sequence with
// '?'. One byte in, one byte out.
std::string sanitize(std::string bytes) {
    std::size_t i = 0;
    const std::size_t n = bytes.size();
    while (i < n) {
        unsigned char c = static_cast<unsigned char>(bytes[i]);
        if (c < 0x80) {
            ++i;
            continue;
        }
        std::size_t cont = 0;
        unsigned char lo = 0x80;
        unsigned char hi = 0xBF;
        if (c >= 0xC2 && c <= 0xDF) {
            cont = 1;
        } else if (c >= 0xE0 && c <= 0xEF) {
            cont = 2;
            if (c == 0xE0) lo = 0xA0;       // no overlong
            if (c == 0xED) hi = 0x9F;       // no surrogates
        } else if (c >= 0xF0 && c <= 0xF4) {
            cont = 3;
            if (c == 0xF0) lo = 0x90;       // no overlong
            if (c == 0xF4) hi = 0x8F;       // ≤ U+10FFFF
        } else {
            bytes[i++] = '?';
            continue;
        }
        bool ok = i + cont < n;
        for (std::size_t k = 1; ok && k <= cont; ++k) {
            unsigned char cc = static_cast<unsigned char>(bytes[i + k]);
            unsigned char klo = (k == 1) ? lo : 0x80;
            unsigned char khi = (k == 1) ? hi : 0xBF;
            if (cc < klo || cc > khi) ok = false;
        }
        if (ok) {
            i += cont + 1;
        } else {
            bytes[i++] = '?';
        }
    }
    return bytes;
}

SourceFile::Language language_from_path(const std::string& path) {
    std::filesystem::path p(path);
    std::string ext = p.extension().string();
    if (ext == ".c" || ext == ".h") return SourceFile::Language::C;
    return SourceFile::Language::Cpp;
}

class Scanner {
  public:
    Scanner(const SourceFile& file, ExtractionDiagnostics* diag) : f_(file), diag_(diag) {}

    std::vector<ConditionSpan> run() {
        while (i_ < s().size()) step();
        return std::move(spans_);
    }

  private:
    const SourceFile& f_;
    ExtractionDiagnostics* diag_;
    std::vector<ConditionSpan> spans_;
    std::size_t i_ = 0;
    std::size_t line_ = 1;
    std::size_t line_start_ = 0;
    bool line_blank_ = true;  // nothing but whitespace so far on this line

    const std::string& s() const { return f_.content; }

    char at(std::size_t p) const { return p < s().size() ? s()[p] : '\0'; }

    void newline(std::size_t pos_of_nl) {
        ++line_;
        line_start_ = pos_of_nl + 1;
        line_blank_ = true;
    }

    void discard() {
        if (diag_ != nullptr) ++diag_->discarded;
    }

    // --- shared sub-scanners; advance i_ past the construct ---

    void skip_line_comment() {  // at "//"
        i_ += 2;
        while (i_ < s().size() && s()[i_] != '\n') ++i_;
    }

    void skip_block_comment() {  // at "/*"
        i_ += 2;
        while (i_ < s().size()) {
            if (s()[i_] == '\n') newline(i_);
            else if (s()[i_] == '*' && at(i_ + 1) == '/') {
                i_ += 2;
                return;
            }
            ++i_;
        }
    }

    void skip_quoted(char quote) {  // at the opening quote
        ++i_;
        while (i_ < s().size()) {
            char c = s()[i_];
            if (c == '\\' && i_ + 1 < s().size()) {
                if (s()[i_ + 1] == '\n') newline(i_ + 1);
                i_ += 2;
                continue;
            }
            if (c == '\n') return;  // tolerate unterminated literals
            ++i_;
            if (c == quote) return;
        }
    }

    // Word of identifier characters ending just before `end`.
    std::string_view word_before(std::size_t end) const {
        std::size_t start = end;
        while (start > 0 && ident_continue(static_cast<unsigned char>(s()[start - 1]))) --start;
        return std::string_view(s()).substr(start, end - start);
    }

    bool is_raw_string_prefix(std::size_t quote_pos) const {
        std::string_view w = word_before(quote_pos);
        return w == "R" || w == "LR" || w == "uR" || w == "UR" || w == "u8R";
    }

    void skip_raw_string(std::size_t quote_pos) {  // at the `"` after R
        std::size_t d_start = quote_pos + 1;
        std::size_t d_end = d_start;
        while (d_end < s().size() && s()[d_end] != '(' && s()[d_end] != '\n' &&
               d_end - d_start <= 16) {
            ++d_end;
        }
        if (at(d_end) != '(') {  // not actually a raw string; treat as plain
            i_ = quote_pos;
            skip_quoted('"');
            return;
        }
        std::string closer = ")" + std::string(s(), d_start, d_end - d_start) + "\"";
        std::size_t end = s().find(closer, d_end + 1);
        if (end == std::string::npos) {
            for (std::size_t p = d_end; p < s().size(); ++p)
                if (s()[p] == '\n') newline(p);
            i_ = s().size();
            return;
        }
        for (std::size_t p = quote_pos; p < end; ++p)
            if (s()[p] == '\n') newline(p);
        i_ = end + closer.size();
    }

    // `'` is a digit separator when glued to an identifier/number character
    // and not a literal prefix (L'x', u'x', U'x', u8'x').
    bool is_digit_separator(std::size_t quote_pos) const {
        if (quote_pos == 0) return false;
        unsigned char prev = static_cast<unsigned char>(s()[quote_pos - 1]);
        if (!ident_continue(prev)) return false;
        std::string_view w = word_before(quote_pos);
        return !(w == "L" || w == "u" || w == "U" || w == "u8");
    }

    void skip_preprocessor() {  // at '#'
        while (i_ < s().size()) {
            if (s()[i_] == '\n') {
                bool continued = (i_ > 0 && s()[i_ - 1] == '\\') ||
                                 (i_ > 1 && s()[i_ - 1] == '\r' && s()[i_ - 2] == '\\');
                if (continued) {
                    newline(i_);
                    ++i_;
                    continue;
                }
                return;  // main loop handles the newline
            }
            ++i_;
        }
    }

    void step() {
        char c = s()[i_];
        if (c == '\n') {
            newline(i_);
            ++i_;
            return;
        }
        if (std::isspace(static_cast<unsigned char>(c)) != 0) {
            ++i_;
            return;
        }
        if (c == '#' && line_blank_) {
            line_blank_ = false;
            skip_preprocessor();
            return;
        }
        line_blank_ = false;
        if (c == '/' && at(i_ + 1) == '/') {
            skip_line_comment();
            return;
        }
        if (c == '/' && at(i_ + 1) == '*') {
            skip_block_comment();
            return;
        }
        if (c == '"') {
            if (is_raw_string_prefix(i_)) skip_raw_string(i_);
            else skip_quoted('"');
            return;
        }
        if (c == '\'') {
            if (is_digit_separator(i_)) ++i_;
            else skip_quoted('\'');
            return;
        }
        if (c == 'i' && at(i_ + 1) == 'f' &&
            (i_ == 0 || !ident_continue(static_cast<unsigned char>(s()[i_ - 1]))) &&
            !ident_continue(static_cast<unsigned char>(at(i_ + 2)))) {
            try_extract_if();
            return;
        }
        ++i_;
    }

    // Skips whitespace/comments from `p` WITHOUT touching scanner state;
    // returns the next significant position. Line counting is deferred until
    // we know whether the `if` matched.
    std::size_t peek_skip_trivia(std::size_t p) const {
        while (p < s().size()) {
            char c = s()[p];
            if (std::isspace(static_cast<unsigned char>(c)) != 0) {
                ++p;
                continue;
            }
            if (c == '/' && p + 1 < s().size() && s()[p + 1] == '/') {
                p += 2;
                while (p < s().size() && s()[p] != '\n') ++p;
                continue;
            }
            if (c == '/' && p + 1 < s().size() && s()[p + 1] == '*') {
                std::size_t end = s().find("*/", p + 2);
                p = (end == std::string::npos) ? s().size() : end + 2;
                continue;
            }
            break;
        }
        return p;
    }

    void try_extract_if() {
        const std::size_t if_pos = i_;
        const std::size_t if_line = line_;
        const std::size_t if_col = if_pos - line_start_ + 1;
        std::size_t p = peek_skip_trivia(if_pos + 2);
        if (s().compare(p, 9, "constexpr") == 0 && !ident_continue(static_cast<unsigned char>(at(p + 9)))) {
            p = peek_skip_trivia(p + 9);
        }
        if (at(p) != '(') {  // bare `if` token; resume normally after it
            i_ = if_pos + 2;
            return;
        }
        // Count lines crossed between `if` and `(`.
        for (std::size_t q = if_pos; q < p; ++q)
            if (s()[q] == '\n') newline(q);
        extract_span(p, if_line, if_col);
    }

    // `open` points at `(`. Scans to the balancing `)` with full literal and
    // comment awareness; a preprocessor line starting inside kills the span.
    void extract_span(std::size_t open, std::size_t if_line, std::size_t if_col) {
        std::size_t depth = 1;
        i_ = open + 1;
        line_blank_ = false;
        while (i_ < s().size()) {
            char c = s()[i_];
            if (c == '\n') {
                newline(i_);
                ++i_;
                continue;
            }
            if (std::isspace(static_cast<unsigned char>(c)) != 0) {
                ++i_;
                continue;
            }
            if (c == '#' && line_blank_) {
                // Directive cuts through the condition: drop the span and
                // let the main loop resume at the directive.
                discard();
                return;
            }
            line_blank_ = false;
            if (c == '/' && at(i_ + 1) == '/') {
                skip_line_comment();
                continue;
            }
            if (c == '/' && at(i_ + 1) == '*') {
                skip_block_comment();
                continue;
            }
            if (c == '"') {
                if (is_raw_string_prefix(i_)) skip_raw_string(i_);
                else skip_quoted('"');
                continue;
            }
            if (c == '\'') {
                if (is_digit_separator(i_)) ++i_;
                else skip_quoted('\'');
                continue;
            }
            if (c == '(') ++depth;
            if (c == ')') {
                if (--depth == 0) {
                    std::string text = s().substr(open + 1, i_ - open - 1);
                    ++i_;
                    bool blank = true;
                    for (char tc : text) {
                        if (std::isspace(static_cast<unsigned char>(tc)) == 0) {
                            blank = false;
                            break;
                        }
                    }
                    if (blank) {
                        discard();
                        return;
                    }
                    spans_.push_back({f_.path, if_line, if_col, std::move(text)});
                    return;
                }
            }
            ++i_;
        }
        discard();  // end of file before balance
    }
};

}  // namespace

SourceFile SourceFile::from_bytes(std::string path, std::string bytes) {
    SourceFile f;
    f.language = language_from_path(path);
    f.path = std::move(path);
    f.content = sanitize(std::move(bytes));
    return f;
}

SourceFile SourceFile::read(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    if (!in) throw IoError(p.string(), "cannot open for reading");
    std::ostringstream buf;
    buf << in.rdbuf();
    if (in.bad()) throw IoError(p.string(), "read failed");
    return from_bytes(p.string(), buf.str());
}

std::vector<ConditionSpan> extract_conditions(const SourceFile& file,
                                              ExtractionDiagnostics* diag) {
    return Scanner(file, diag).run();
}

}  // namespace idioscan
