#include "core/pattern_dict.hpp"

#include <algorithm>
#include <map>

#include "core/errors.hpp"

namespace idioscan {

PatternKey make_key(AbstractionLevel level, const ExprTree& abstracted, const SymbolTable& table,
                    bool lenient) {
    PatternKey key;
    key.level = level;
    key.text = serialize(abstracted);
    key.symbols = table.encode_tree(abstracted, lenient);
    return key;
}

PatternDict::PatternDict(AbstractionLevel level, SymbolTable table)
    : level_(level), table_(std::move(table)) {
    nodes_.emplace_back();  // root
}

PatternDict::NodeIndex PatternDict::walk_or_add(std::span<const SymbolId> symbols) {
    NodeIndex cur = kRoot;
    for (SymbolId sym : symbols) {
        auto& edges = nodes_[cur].edges;
        auto it = std::lower_bound(edges.begin(), edges.end(), sym,
                                   [](const auto& e, SymbolId s) { return e.first < s; });
        if (it != edges.end() && it->first == sym) {
            cur = it->second;
            continue;
        }
        NodeIndex fresh = static_cast<NodeIndex>(nodes_.size());
        nodes_.emplace_back();
        // nodes_ may have reallocated; re-resolve the edge vector.
        auto& cur_edges = nodes_[cur].edges;
        auto pos = std::lower_bound(cur_edges.begin(), cur_edges.end(), sym,
                                    [](const auto& e, SymbolId s) { return e.first < s; });
        cur_edges.insert(pos, {sym, fresh});
        cur = fresh;
    }
    return cur;
}

void PatternDict::insert_symbols(std::span<const SymbolId> symbols, std::uint64_t count) {
    if (count == 0) return;
    for (SymbolId sym : symbols) {
        if (sym == kUnknownSymbol) throw UnknownSymbolError("id 65535");
    }
    NodeIndex end = walk_or_add(symbols);
    if (nodes_[end].terminal == 0) ++unique_;
    nodes_[end].terminal += count;
    total_ += count;
}

void PatternDict::insert(const PatternKey& key, std::uint64_t count) {
    if (key.level != level_) throw LevelMismatchError();
    insert_symbols(key.symbols, count);
}

std::optional<std::uint64_t> PatternDict::lookup_symbols(std::span<const SymbolId> symbols) const {
    NodeIndex cur = kRoot;
    for (SymbolId sym : symbols) {
        const auto& edges = nodes_[cur].edges;
        auto it = std::lower_bound(edges.begin(), edges.end(), sym,
                                   [](const auto& e, SymbolId s) { return e.first < s; });
        if (it == edges.end() || it->first != sym) return std::nullopt;
        cur = it->second;
    }
    if (nodes_[cur].terminal == 0) return std::nullopt;
    return nodes_[cur].terminal;
}

std::optional<std::uint64_t> PatternDict::lookup(const PatternKey& key) const {
    if (key.level != level_) throw LevelMismatchError();
    return lookup_symbols(key.symbols);
}

void PatternDict::for_each(
    const std::function<void(std::span<const SymbolId>, std::uint64_t)>& fn) const {
    std::vector<SymbolId> path;
    // Explicit stack of (node, next-edge) to keep arbitrarily long patterns safe.
    std::vector<std::pair<NodeIndex, std::size_t>> stack;
    stack.push_back({kRoot, 0});
    if (nodes_[kRoot].terminal > 0) fn(path, nodes_[kRoot].terminal);
    while (!stack.empty()) {
        auto& [node, next] = stack.back();
        if (next >= nodes_[node].edges.size()) {
            stack.pop_back();
            if (!path.empty()) path.pop_back();
            continue;
        }
        auto [sym, child] = nodes_[node].edges[next];
        ++next;
        path.push_back(sym);
        if (nodes_[child].terminal > 0) fn(path, nodes_[child].terminal);
        stack.push_back({child, 0});
    }
}

std::vector<HistogramRow> PatternDict::frequency_histogram() const {
    std::map<std::uint64_t, std::uint64_t> by_count;
    for (const Node& n : nodes_) {
        if (n.terminal > 0) ++by_count[n.terminal];
    }
    std::vector<HistogramRow> rows;
    std::uint64_t seen = 0;
    for (const auto& [occ, num] : by_count) {
        seen += num;
        rows.push_back({occ, num, 100.0 * static_cast<double>(seen) / static_cast<double>(unique_)});
    }
    return rows;
}

PatternDict merge(const PatternDict& a, const PatternDict& b) {
    if (a.level() != b.level()) throw LevelMismatchError();
    if (a.table().same_alphabet(b.table())) {
        PatternDict out = a;
        b.for_each([&](std::span<const SymbolId> symbols, std::uint64_t count) {
            out.insert_symbols(symbols, count);
        });
        return out;
    }
    // Union alphabet: a's ids are kept; b's names missing from a get fresh ids.
    std::vector<std::pair<SymbolId, SymbolTable::Entry>> entries;
    SymbolId next_free = 0;
    a.table().for_each([&](SymbolId id, const SymbolTable::Entry& e) {
        entries.push_back({id, e});
        next_free = std::max<SymbolId>(next_free, static_cast<SymbolId>(id + 1));
    });
    b.table().for_each([&](SymbolId, const SymbolTable::Entry& e) {
        if (e.cls == SymbolClass::NodeType) {
            SymbolId found;
            if (!a.table().find_node(e.name, found)) entries.push_back({next_free++, e});
        } else if (e.cls == SymbolClass::OpChar) {
            SymbolId found;
            if (!a.table().find_op(e.name[0], found)) entries.push_back({next_free++, e});
        }
    });
    SymbolTable unified(std::move(entries));
    PatternDict out(a.level(), std::move(unified));
    a.for_each([&](std::span<const SymbolId> symbols, std::uint64_t count) {
        out.insert_symbols(symbols, count);  // a's ids are valid in the union
    });
    b.for_each([&](std::span<const SymbolId> symbols, std::uint64_t count) {
        ExprTree tree = b.table().decode_tree(symbols);
        out.insert_symbols(out.table().encode_tree(tree), count);
    });
    return out;
}

}  // namespace idioscan
