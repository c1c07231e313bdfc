#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

namespace idioscan {

struct SourceFile {
    enum class Language : std::uint8_t { C, Cpp };

    std::string path;
    std::string content;  // sanitized: invalid UTF-8 bytes replaced byte-for-byte
    Language language = Language::Cpp;

    // Sanitizes the byte payload; replacement is 1:1 so byte columns stay
    // stable.
    static SourceFile from_bytes(std::string path, std::string bytes);
    static SourceFile read(const std::filesystem::path& p);  // throws IoError
};

struct ConditionSpan {
    std::string file;
    std::size_t line = 0;    // 1-based, at the `i` of `if`
    std::size_t column = 0;  // 1-based byte column
    std::string text;        // strictly between `(` and its balancing `)`
};

struct ExtractionDiagnostics {
    // Spans abandoned mid-extraction: unbalanced at end of file, empty after
    // trimming, or cut by a preprocessor directive starting inside them.
    std::uint64_t discarded = 0;
};

// Lexical scan for `if (...)` spans: `if` must be a standalone token outside
// strings, char literals, comments, and preprocessor lines. `if constexpr`
// is recognized; `else if` yields the inner span.
std::vector<ConditionSpan> extract_conditions(const SourceFile& file,
                                              ExtractionDiagnostics* diag = nullptr);

}  // namespace idioscan
