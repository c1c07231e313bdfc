#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "core/abstraction.hpp"
#include "core/symbol_table.hpp"

namespace idioscan {

struct PatternKey {
    AbstractionLevel level = AbstractionLevel::L1;
    std::string text;               // canonical serialization
    std::vector<SymbolId> symbols;  // encoding of text under some table
};

// Builds a key from an already-abstracted tree. Lenient encoding maps names
// missing from `table` to kUnknownSymbol (targets only; never insert these).
PatternKey make_key(AbstractionLevel level, const ExprTree& abstracted, const SymbolTable& table,
                    bool lenient = false);

struct HistogramRow {
    std::uint64_t occurrences;
    std::uint64_t unique_patterns;
    double cumulative_pct;  // over unique patterns, ascending by occurrences
};

// Occurrence-counted prefix tree over encoded patterns of one abstraction
// level. Nodes live in a pool; edges are kept sorted by SymbolId so
// traversal order is deterministic.
class PatternDict {
  public:
    using NodeIndex = std::uint32_t;
    static constexpr NodeIndex kRoot = 0;

    PatternDict(AbstractionLevel level, SymbolTable table);

    AbstractionLevel level() const { return level_; }
    const SymbolTable& table() const { return table_; }
    std::uint64_t total_patterns() const { return total_; }
    std::uint64_t unique_patterns() const { return unique_; }
    std::size_t node_count() const { return nodes_.size(); }

    void insert(const PatternKey& key, std::uint64_t count);
    std::optional<std::uint64_t> lookup(const PatternKey& key) const;

    // Level-implicit variants for internal plumbing (merge, load, search).
    void insert_symbols(std::span<const SymbolId> symbols, std::uint64_t count);
    std::optional<std::uint64_t> lookup_symbols(std::span<const SymbolId> symbols) const;

    // Read access for trie walkers.
    const std::vector<std::pair<SymbolId, NodeIndex>>& edges(NodeIndex n) const {
        return nodes_[n].edges;
    }
    std::uint64_t terminal(NodeIndex n) const { return nodes_[n].terminal; }

    // Visits every stored pattern with its count, in symbol-lexicographic
    // order (equals text order under the builtin table).
    void for_each(const std::function<void(std::span<const SymbolId>, std::uint64_t)>& fn) const;

    // Rows ascending by occurrence count; cumulative percentage of unique
    // patterns. Empty dictionary yields no rows.
    std::vector<HistogramRow> frequency_histogram() const;

  private:
    struct Node {
        std::vector<std::pair<SymbolId, NodeIndex>> edges;
        std::uint64_t terminal = 0;
    };

    NodeIndex walk_or_add(std::span<const SymbolId> symbols);

    AbstractionLevel level_;
    SymbolTable table_;
    std::vector<Node> nodes_;
    std::uint64_t total_ = 0;
    std::uint64_t unique_ = 0;
};

// Counts are summed. Symbol tables must describe compatible alphabets: the
// result's table is `a`'s extended with any of `b`'s names it lacks, and
// `b`'s patterns are re-encoded onto it.
PatternDict merge(const PatternDict& a, const PatternDict& b);

}  // namespace idioscan
