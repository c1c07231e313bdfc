#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "core/autocorrect.hpp"
#include "core/dict_io.hpp"
#include "core/extract.hpp"

namespace idioscan {

inline const std::vector<std::string> kDefaultExtensions = {
    ".c", ".h", ".cc", ".cpp", ".cxx", ".hpp", ".hh", ".hxx",
};

struct PipelineConfig {
    double alpha = 5.0;
    int max_cost = 2;
    int l2_depth = 1;
    bool l2_prune_leaves = false;
    unsigned workers = 0;  // 0 → hardware concurrency
    std::vector<std::string> extensions = kDefaultExtensions;
    bool report_all = false;
    bool dedup = false;  // collapse entries sharing an L1 pattern
    std::size_t cache_capacity = 4096;
};

struct MiningStats {
    std::uint64_t files_seen = 0;
    std::uint64_t files_parsed = 0;  // read and scanned successfully
    std::uint64_t conditions_extracted = 0;
    std::uint64_t conditions_parsed = 0;
    std::uint64_t parse_failures = 0;
    std::uint64_t span_discards = 0;  // extractor-level discards, not conditions
    std::uint64_t total_patterns = 0;
    std::uint64_t unique_l1 = 0;
    std::uint64_t unique_l2 = 0;
    std::uint64_t elapsed_ms = 0;
};

struct MiningResult {
    DictionaryBundle dicts;
    MiningStats stats;
};

// Walks roots (depth-first, canonically sorted), filters directory entries
// by extension; explicitly named files are taken as-is. Throws IoError for
// a missing root.
std::vector<std::filesystem::path> enumerate_files(const std::vector<std::filesystem::path>& roots,
                                                   const std::vector<std::string>& extensions);

MiningResult mine(const std::vector<std::filesystem::path>& roots, const PipelineConfig& config);

struct CorrectionLine {
    std::string pattern;
    std::size_t distance = 0;
    std::uint64_t occurrences = 0;
};

struct LevelReport {
    std::string pattern;                 // serialized key text
    std::optional<std::uint64_t> found;  // dictionary count when present
    Verdict verdict = Verdict::Normal;
    double score = 0.0;  // percent
    std::vector<CorrectionLine> corrections;

    bool anomalous() const { return verdict != Verdict::Normal; }
};

struct AnomalyReport {
    std::string file;
    std::size_t line = 0;
    std::size_t column = 0;
    std::string condition;
    LevelReport l1;
    std::optional<LevelReport> l2;  // evaluated only when the L1 lookup missed

    bool anomalous() const { return l1.anomalous() || (l2.has_value() && l2->anomalous()); }
};

struct ScanStats {
    std::uint64_t files_seen = 0;
    std::uint64_t files_parsed = 0;
    std::uint64_t conditions_extracted = 0;
    std::uint64_t conditions_parsed = 0;
    std::uint64_t parse_failures = 0;
    std::uint64_t span_discards = 0;
    std::uint64_t l1_hits = 0;
    std::uint64_t l2_evaluated = 0;
    std::uint64_t l2_hits = 0;
    std::uint64_t anomalies_raw = 0;     // anomalous conditions, duplicates included
    std::uint64_t anomalies_unique = 0;  // distinct anomalous L1 patterns
    std::uint64_t entries_emitted = 0;   // after --report-all / --dedup shaping
    std::uint64_t cache_hits = 0;
    std::uint64_t cache_misses = 0;
    std::uint64_t elapsed_ms = 0;
};

struct ScanResult {
    std::vector<AnomalyReport> entries;  // sorted by (file, line, column)
    ScanStats stats;
};

ScanResult scan(const std::vector<std::filesystem::path>& roots, const DictionaryBundle& dicts,
                const PipelineConfig& config);

}  // namespace idioscan
