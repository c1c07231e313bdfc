#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "core/abstraction.hpp"
#include "core/ast.hpp"

namespace idioscan {

using SymbolId = std::uint16_t;

// Sentinel produced by lenient target encoding for names missing from a
// loaded table; never matches a real edge.
inline constexpr SymbolId kUnknownSymbol = 0xFFFF;

enum class SymbolClass : std::uint8_t {
    StructuralOpen,
    StructuralClose,
    NodeType,
    OpChar,
};

const char* symbol_class_name(SymbolClass c);
bool symbol_class_from_name(std::string_view name, SymbolClass& out);

// Bidirectional symbol alphabet for pattern encoding. The builtin table
// ("v1") assigns: 0 open, 1 close, node types 2..19 in alphabetical name
// order, operator characters 20..35 in ASCII order — chosen so that
// lexicographic order of symbol sequences equals lexicographic order of
// their serialized text.
class SymbolTable {
  public:
    struct Entry {
        SymbolClass cls;
        std::string name;  // "(" / ")" for structural, node name, or one op char
    };

    static SymbolTable builtin();

    // Construct from explicit id assignments (dictionary-file order).
    // Throws std::invalid_argument on internal inconsistency: duplicate ids
    // or names, missing/duplicated structural symbols, node names outside
    // the grammar, or op names that are not single operator characters.
    explicit SymbolTable(std::vector<std::pair<SymbolId, Entry>> entries);

    const std::string& version() const { return version_; }
    std::size_t size() const { return valid_count_; }  // number of assigned ids
    std::size_t capacity() const { return slots_.size(); }
    bool has(SymbolId id) const;
    SymbolClass cls(SymbolId id) const;
    const std::string& name(SymbolId id) const;
    NodeType node_type(SymbolId id) const;  // pre: cls == NodeType
    char op_char(SymbolId id) const;        // pre: cls == OpChar
    SymbolId open_id() const { return open_id_; }
    SymbolId close_id() const { return close_id_; }

    bool find_node(std::string_view node_name, SymbolId& out) const;
    bool find_op(char c, SymbolId& out) const;
    bool same_alphabet(const SymbolTable& other) const;

    // Every assigned id, ascending — the vocabulary for candidate generation.
    const std::vector<SymbolId>& alphabet() const { return alphabet_; }

    void for_each(const std::function<void(SymbolId, const Entry&)>& fn) const;

    // Encoding. Strict encoding throws UnknownSymbolError for names absent
    // from this table; lenient encoding substitutes kUnknownSymbol.
    std::vector<SymbolId> encode_tree(const ExprTree& pattern, bool lenient = false) const;
    std::vector<SymbolId> encode(std::string_view pattern_text) const;
    std::vector<SymbolId> encode_target(std::string_view pattern_text) const;

    // Decoding. Throws UnknownSymbolError for unassigned ids and
    // PatternError for sequences that do not form a valid pattern.
    ExprTree decode_tree(std::span<const SymbolId> symbols) const;
    std::string decode(std::span<const SymbolId> symbols) const;

    // Allocation-free check that `symbols` decodes to a valid pattern;
    // exactly equivalent to decode_tree + validate_pattern succeeding.
    bool is_valid_pattern(std::span<const SymbolId> symbols) const;

  private:
    SymbolTable() = default;

    struct Slot {
        bool used = false;
        SymbolClass cls = SymbolClass::NodeType;
        std::string name;
        NodeType ntype = NodeType::Identifier;  // cached when cls == NodeType
        char opch = '\0';                       // cached when cls == OpChar
    };

    void index_slots();  // builds lookup maps + validates; throws invalid_argument

    std::string version_ = "v1";
    std::vector<Slot> slots_;
    std::size_t valid_count_ = 0;
    SymbolId open_id_ = 0;
    SymbolId close_id_ = 0;
    std::vector<SymbolId> alphabet_;
    std::vector<SymbolId> node_ids_;  // indexed by NodeType value; kUnknownSymbol if absent
    std::vector<SymbolId> op_ids_;    // indexed by char; kUnknownSymbol if absent
};

}  // namespace idioscan
