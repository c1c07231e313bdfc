#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "core/pattern_dict.hpp"

namespace idioscan {

struct BenchConfig {
    std::size_t dict_size = 1000;  // synthetic patterns when no dictionary is given
    std::size_t targets = 16;
    int max_cost = 2;
    std::uint64_t seed = 12345;
    std::uint64_t symdel_budget = 50'000'000;  // deletion-index postings cap
    int max_depth = 3;                         // synthetic tree depth
};

struct BenchRow {
    std::string algorithm;  // search_trie | norvig | symdel
    std::size_t dict_size = 0;
    std::size_t target_len = 0;  // mean symbols per query target
    int max_cost = 0;
    double wall_ms = 0.0;
    // Work probe, per algorithm: trie nodes expanded / candidates generated
    // pre-dedup / postings candidates DP-verified.
    std::uint64_t candidates = 0;
    // Resident structure size: trie nodes / 0 / deletion-index postings.
    std::uint64_t index_entries = 0;
};

struct BenchReport {
    std::vector<BenchRow> rows;
    std::vector<std::string> notes;  // skips, budget overruns, divergence alarms
};

// Deterministic random condition tree for synthetic corpora and property
// tests; always satisfies the pattern-validity grammar.
ExprTree random_condition_tree(std::mt19937_64& rng, int max_depth);

// L1 dictionary of up to `size` distinct synthetic patterns with pseudo-random
// occurrence counts. Deterministic in (size, seed, max_depth).
PatternDict synthetic_dictionary(std::size_t size, std::uint64_t seed, int max_depth = 3);

// Runs the three correction algorithms over identical targets against `dict`
// (or a synthetic dictionary when null), one aggregate row per algorithm.
// Result sets are cross-checked; divergences and an exceeded symdel budget
// are reported as notes rather than thrown.
BenchReport run_bench(const PatternDict* dict, const BenchConfig& config);

// CSV with header: algorithm,dict_size,target_len,max_cost,wall_ms,candidates,index_entries
std::string bench_csv(const BenchReport& report);

}  // namespace idioscan
