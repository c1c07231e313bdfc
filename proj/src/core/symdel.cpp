#include <unordered_set>

#include "core/autocorrect.hpp"
#include "core/errors.hpp"

namespace idioscan {
namespace {

// All variants reachable by deleting up to max_d symbols (the sequence
// itself included), deduplicated.
std::vector<std::vector<SymbolId>> delete_variants(std::span<const SymbolId> seq, int max_d) {
    struct Hash {
        std::size_t operator()(const std::vector<SymbolId>& v) const {
            std::size_t h = 1469598103934665603ull;
            for (SymbolId s : v) {
                h ^= static_cast<std::size_t>(s) + 1;
                h *= 1099511628211ull;
            }
            return h;
        }
    };
    std::unordered_set<std::vector<SymbolId>, Hash> seen;
    seen.insert({seq.begin(), seq.end()});
    std::vector<SymbolId> buf;
    if (max_d >= 1) {
        for (std::size_t i = 0; i < seq.size(); ++i) {
            buf.assign(seq.begin(), seq.end());
            buf.erase(buf.begin() + static_cast<std::ptrdiff_t>(i));
            seen.insert(buf);
        }
    }
    if (max_d >= 2 && seq.size() >= 2) {
        for (std::size_t i = 0; i < seq.size(); ++i) {
            for (std::size_t j = i + 1; j < seq.size(); ++j) {
                buf.clear();
                for (std::size_t k = 0; k < seq.size(); ++k) {
                    if (k != i && k != j) buf.push_back(seq[k]);
                }
                seen.insert(buf);
            }
        }
    }
    return {seen.begin(), seen.end()};
}

}  // namespace

std::size_t SymmetricDeleteIndex::VariantHash::operator()(const std::vector<SymbolId>& v) const {
    std::size_t h = 1469598103934665603ull;
    for (SymbolId s : v) {
        h ^= static_cast<std::size_t>(s) + 1;
        h *= 1099511628211ull;
    }
    return h;
}

SymmetricDeleteIndex::SymmetricDeleteIndex(const PatternDict& dict, int max_d,
                                           std::uint64_t budget_entries)
    : dict_(&dict), max_d_(max_d) {
    if (max_d < 0 || max_d > 2)
        throw std::invalid_argument("symmetric-delete index supports max_d in [0, 2]");
    dict.for_each([&](std::span<const SymbolId> symbols, std::uint64_t count) {
        std::uint32_t id = static_cast<std::uint32_t>(patterns_.size());
        patterns_.emplace_back(symbols.begin(), symbols.end());
        counts_.push_back(count);
        for (auto& variant : delete_variants(symbols, max_d_)) {
            index_[std::move(variant)].push_back(id);
            if (++entries_ > budget_entries) throw IndexBudgetError(entries_, budget_entries);
        }
    });
}

CorrectionSet SymmetricDeleteIndex::query(const PatternKey& target, int max_cost,
                                          std::uint64_t* verified) const {
    if (max_cost > max_d_)
        throw std::invalid_argument("query max_cost exceeds the index's max_d");
    CorrectionSet out;
    out.target = target;
    out.max_cost = max_cost;
    out.target_occurrences = dict_->lookup_symbols(target.symbols).value_or(0);

    std::unordered_set<std::uint32_t> candidates;
    for (const auto& variant : delete_variants(target.symbols, max_cost)) {
        auto it = index_.find(variant);
        if (it == index_.end()) continue;
        candidates.insert(it->second.begin(), it->second.end());
    }
    if (verified) *verified += candidates.size();
    const std::size_t cap = static_cast<std::size_t>(std::max(max_cost, 0));
    for (std::uint32_t id : candidates) {
        std::size_t d = levenshtein(target.symbols, patterns_[id]);
        if (d > cap) continue;  // variant overlap beyond the true distance
        Correction c;
        c.pattern.level = dict_->level();
        c.pattern.symbols = patterns_[id];
        c.pattern.text = dict_->table().decode(patterns_[id]);
        c.distance = d;
        c.occurrences = counts_[id];
        out.corrections.push_back(std::move(c));
    }
    rank_corrections(out.corrections);
    return out;
}

}  // namespace idioscan
