#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace idioscan {

// A character outside the condition token vocabulary.
class UnknownCharacterError : public std::runtime_error {
public:
    UnknownCharacterError(std::size_t offset, char ch)
        : std::runtime_error("unknown character '" + std::string(1, ch) + "' at offset " +
                             std::to_string(offset)),
          offset_(offset), ch_(ch) {}

    std::size_t offset() const { return offset_; }
    char character() const { return ch_; }

private:
    std::size_t offset_;
    char ch_;
};

// Condition span does not parse as an expression. Callers skip the span.
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t offset, const std::string& expected)
        : std::runtime_error("parse error at offset " + std::to_string(offset) + ": expected " +
                             expected),
          offset_(offset), expected_(expected) {}

    std::size_t offset() const { return offset_; }
    const std::string& expected() const { return expected_; }

private:
    std::size_t offset_;
    std::string expected_;
};

// Malformed serialized pattern text.
class PatternError : public std::runtime_error {
public:
    PatternError(std::size_t offset, const std::string& what)
        : std::runtime_error("bad pattern at offset " + std::to_string(offset) + ": " + what),
          offset_(offset) {}

    std::size_t offset() const { return offset_; }

private:
    std::size_t offset_;
};

// Malformed dictionary file; line numbers are 1-based.
class FormatError : public std::runtime_error {
public:
    FormatError(std::size_t line, const std::string& what)
        : std::runtime_error("format error at line " + std::to_string(line) + ": " + what),
          line_(line) {}

    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

// A key built at one abstraction level was handed to a dictionary of the other.
class LevelMismatchError : public std::logic_error {
public:
    LevelMismatchError() : std::logic_error("pattern key level does not match dictionary level") {}
};

// Name absent from a frozen symbol table.
class UnknownSymbolError : public std::runtime_error {
public:
    explicit UnknownSymbolError(const std::string& name)
        : std::runtime_error("unknown symbol '" + name + "' in frozen table"), name_(name) {}

    const std::string& name() const { return name_; }

private:
    std::string name_;
};

// Symmetric-delete index grew past its configured entry cap.
class IndexBudgetError : public std::runtime_error {
public:
    IndexBudgetError(std::uint64_t entries, std::uint64_t budget)
        : std::runtime_error("delete-variant index exceeded budget (" + std::to_string(entries) +
                             " > " + std::to_string(budget) + " entries)"),
          entries_(entries), budget_(budget) {}

    std::uint64_t entries() const { return entries_; }
    std::uint64_t budget() const { return budget_; }

private:
    std::uint64_t entries_;
    std::uint64_t budget_;
};

class IoError : public std::runtime_error {
public:
    IoError(const std::string& path, const std::string& what)
        : std::runtime_error(path + ": " + what), path_(path) {}

    const std::string& path() const { return path_; }

private:
    std::string path_;
};

}  // namespace idioscan
