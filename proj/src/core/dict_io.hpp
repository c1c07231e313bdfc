#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "core/pattern_dict.hpp"

namespace idioscan {

// One mined dictionary file: both abstraction levels over a shared alphabet.
struct DictionaryBundle {
    PatternDict l1;
    PatternDict l2;

    explicit DictionaryBundle(SymbolTable table)
        : l1(AbstractionLevel::L1, table), l2(AbstractionLevel::L2, std::move(table)) {}
};

// Canonical text form:
//   IDIOSCAN-DICT v1
//   [symbols]          id<TAB>class<TAB>name, ascending by id
//   [patterns L1]      count<TAB>text, sorted lexicographically by text
//   [patterns L2]      likewise
std::string dictionary_to_string(const DictionaryBundle& bundle);

// Inverse of dictionary_to_string. Duplicate pattern lines are summed and
// reported through `warnings` (when non-null). Throws FormatError with a
// 1-based line number on malformed input.
DictionaryBundle dictionary_from_string(std::string_view text,
                                        std::vector<std::string>* warnings = nullptr);

// File variants; throw IoError on filesystem failures.
void save_dictionary(const DictionaryBundle& bundle, const std::filesystem::path& path);
DictionaryBundle load_dictionary(const std::filesystem::path& path,
                                 std::vector<std::string>* warnings = nullptr);

}  // namespace idioscan
