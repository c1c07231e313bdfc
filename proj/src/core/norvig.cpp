#include <unordered_map>
#include <unordered_set>

#include "core/autocorrect.hpp"
#include "core/errors.hpp"

namespace idioscan {
namespace {

struct SeqHash {
    std::size_t operator()(const std::vector<SymbolId>& v) const {
        std::size_t h = 1469598103934665603ull;
        for (SymbolId s : v) {
            h ^= static_cast<std::size_t>(s) + 1;
            h *= 1099511628211ull;
        }
        return h;
    }
};

// Enumerates every single-edit variant (deletions, substitutions,
// insertions), duplicates included.
template <typename Fn>
void for_each_single_edit(std::span<const SymbolId> t, const std::vector<SymbolId>& vocab,
                          Fn&& fn) {
    std::vector<SymbolId> buf;
    buf.reserve(t.size() + 1);
    for (std::size_t i = 0; i < t.size(); ++i) {  // deletions
        buf.assign(t.begin(), t.end());
        buf.erase(buf.begin() + static_cast<std::ptrdiff_t>(i));
        fn(buf);
    }
    for (std::size_t i = 0; i < t.size(); ++i) {  // substitutions
        for (SymbolId s : vocab) {
            if (s == t[i]) continue;
            buf.assign(t.begin(), t.end());
            buf[i] = s;
            fn(buf);
        }
    }
    for (std::size_t i = 0; i <= t.size(); ++i) {  // insertions
        for (SymbolId s : vocab) {
            buf.assign(t.begin(), t.end());
            buf.insert(buf.begin() + static_cast<std::ptrdiff_t>(i), s);
            fn(buf);
        }
    }
}

}  // namespace

std::uint64_t norvig_d1_pre_dedup_count(std::size_t n, std::size_t v) {
    return static_cast<std::uint64_t>(n) + static_cast<std::uint64_t>(n) * (v - 1) +
           static_cast<std::uint64_t>(n + 1) * v;
}

std::vector<std::vector<SymbolId>> generate_candidates_norvig(std::span<const SymbolId> target,
                                                              const std::vector<SymbolId>& vocab,
                                                              int distance) {
    if (distance != 1 && distance != 2)
        throw std::invalid_argument("norvig generation supports distance 1 or 2");
    std::unordered_set<std::vector<SymbolId>, SeqHash> step1;
    for_each_single_edit(target, vocab, [&](const std::vector<SymbolId>& c) { step1.insert(c); });
    if (distance == 1) return {step1.begin(), step1.end()};
    std::unordered_set<std::vector<SymbolId>, SeqHash> step2;
    for (const auto& c1 : step1) {
        for_each_single_edit(c1, vocab, [&](const std::vector<SymbolId>& c) { step2.insert(c); });
    }
    return {step2.begin(), step2.end()};
}

CorrectionSet norvig_query(const PatternDict& dict, const PatternKey& target, int max_cost,
                           std::uint64_t* candidates) {
    if (max_cost > 2) throw std::invalid_argument("norvig query supports max_cost <= 2");
    CorrectionSet out;
    out.target = target;
    out.max_cost = max_cost;
    out.target_occurrences = dict.lookup_symbols(target.symbols).value_or(0);

    std::uint64_t generated = 0;
    const std::vector<SymbolId>& vocab = dict.table().alphabet();
    std::unordered_map<std::vector<SymbolId>, std::pair<std::size_t, std::uint64_t>, SeqHash>
        found;
    if (out.target_occurrences > 0) found[target.symbols] = {0, out.target_occurrences};

    std::vector<std::vector<SymbolId>> step1;
    if (max_cost >= 1) {
        std::unordered_set<std::vector<SymbolId>, SeqHash> dedup;
        for_each_single_edit(target.symbols, vocab, [&](const std::vector<SymbolId>& c) {
            ++generated;
            if (!dedup.insert(c).second) return;
            // Structural validity gates the dictionary probe, not membership
            // in the next expansion step.
            if (!found.contains(c) && dict.table().is_valid_pattern(c)) {
                if (auto hit = dict.lookup_symbols(c)) found[c] = {1, *hit};
            }
        });
        step1.assign(dedup.begin(), dedup.end());
    }
    if (max_cost >= 2) {
        for (const auto& c1 : step1) {
            for_each_single_edit(c1, vocab, [&](const std::vector<SymbolId>& c) {
                ++generated;
                if (found.contains(c)) return;  // already recorded at a lower distance
                if (!dict.table().is_valid_pattern(c)) return;
                if (auto hit = dict.lookup_symbols(c)) found[c] = {2, *hit};
            });
        }
    }

    for (const auto& [symbols, entry] : found) {
        Correction c;
        c.pattern.level = dict.level();
        c.pattern.symbols = symbols;
        c.pattern.text = dict.table().decode(symbols);
        c.distance = entry.first;
        c.occurrences = entry.second;
        out.corrections.push_back(std::move(c));
    }
    rank_corrections(out.corrections);
    if (candidates != nullptr) *candidates = generated;
    return out;
}

}  // namespace idioscan
