#pragma once

#include <cstdint>
#include <span>
#include <unordered_map>
#include <vector>

#include "core/pattern_dict.hpp"

namespace idioscan {

// Unit-cost symbol-level Levenshtein distance.
std::size_t levenshtein(std::span<const SymbolId> a, std::span<const SymbolId> b);

struct Correction {
    PatternKey pattern;
    std::size_t distance = 0;
    std::uint64_t occurrences = 0;
};

struct CorrectionSet {
    PatternKey target;
    std::uint64_t target_occurrences = 0;  // n₀; 0 when absent
    std::vector<Correction> corrections;   // ranked; includes self at distance 0
    int max_cost = 0;
};

struct ThresholdConfig {
    double alpha = 5.0;  // percent
    int max_cost = 2;
};

enum class Verdict : std::uint8_t { Normal, AnomalousMissing, AnomalousRare };

const char* verdict_name(Verdict v);

struct Decision {
    Verdict verdict = Verdict::Normal;
    double score = 0.0;  // percent; 0 when the target is missing
};

// Rank: distance ascending, occurrences descending, serialized text ascending.
void rank_corrections(std::vector<Correction>& corrections);

// Complete trie traversal with a DP row carried down edges; branches are cut
// once the row minimum exceeds max_cost. `visited_nodes`, when non-null,
// receives the number of trie nodes expanded.
CorrectionSet search_trie(const PatternDict& dict, const PatternKey& target, int max_cost,
                          std::uint64_t* visited_nodes = nullptr);

// Threshold formula: score = n₀×100 / Σ_{i=0}^{max_cost} max(nᵢ), where
// max(nᵢ) is the best occurrence count among corrections at exactly
// distance i (0 for an empty class).
Decision is_anomalous(const CorrectionSet& cs, const ThresholdConfig& cfg);

// --- Candidate-generation alternatives (benchmark subjects) ---

// Closed form for the number of single-edit candidates before
// deduplication: N deletions + N(V−1) substitutions + (N+1)V insertions.
std::uint64_t norvig_d1_pre_dedup_count(std::size_t n, std::size_t v);

// Materialized candidate set at exactly the requested expansion step
// (1 or 2), deduplicated; step 2 expands the deduplicated step-1 set.
// Intended for tests and small inputs — the count explodes quadratically.
std::vector<std::vector<SymbolId>> generate_candidates_norvig(std::span<const SymbolId> target,
                                                              const std::vector<SymbolId>& vocab,
                                                              int distance);

// Full query via candidate generation: candidates are streamed, filtered for
// structural validity, and looked up; first-seen expansion step equals true
// distance. Result contract identical to search_trie. `candidates`, when
// non-null, receives the pre-dedup generated-candidate total.
CorrectionSet norvig_query(const PatternDict& dict, const PatternKey& target, int max_cost,
                           std::uint64_t* candidates = nullptr);

// Precomputed deletion-variant index over the dictionary (the memory-hungry
// alternative). Entries are (variant → pattern) postings; construction
// throws IndexBudgetError when they exceed `budget_entries`.
class SymmetricDeleteIndex {
  public:
    SymmetricDeleteIndex(const PatternDict& dict, int max_d, std::uint64_t budget_entries);

    std::uint64_t entry_count() const { return entries_; }
    int max_d() const { return max_d_; }

    // max_cost must be ≤ the max_d the index was built with. Candidates from
    // the variant intersection are verified with a DP pass. `verified`, when
    // non-null, receives the number of DP verifications performed.
    CorrectionSet query(const PatternKey& target, int max_cost,
                        std::uint64_t* verified = nullptr) const;

  private:
    struct VariantHash {
        std::size_t operator()(const std::vector<SymbolId>& v) const;
    };

    const PatternDict* dict_;
    int max_d_;
    std::uint64_t entries_ = 0;
    std::vector<std::vector<SymbolId>> patterns_;
    std::vector<std::uint64_t> counts_;
    std::unordered_map<std::vector<SymbolId>, std::vector<std::uint32_t>, VariantHash> index_;
};

}  // namespace idioscan
