#pragma once

#include <string>
#include <vector>

#include "core/dict_io.hpp"
#include "core/pipeline.hpp"

namespace idioscan {

// Human-readable report: one block per entry, blank-line separated.
//
//   Potential anomaly: (<condition>)
//   Location: <file>:<line>:<column>
//   L1 pattern: <pattern>
//   L1 verdict: <verdict>[, score <pct>%]
//   Possible corrections:
//   <pattern>, edit distance <d>, occurrences <n>
//   ...
//
// followed by the analogous L2 section when L2 was evaluated.
std::string render_text_report(const std::vector<AnomalyReport>& entries);

// Machine-readable report: one JSON object per line, stable key order:
//   {"file","line","column","condition",
//    "l1":{"pattern","found","verdict","score","corrections":[...]},
//    "l2":null | {...}}
// "found" is the dictionary count or null; corrections carry
// {"pattern","distance","occurrences"}.
std::string render_jsonl_report(const std::vector<AnomalyReport>& entries);

// Pretty-printed JSON objects (two-space indent, trailing newline).
std::string mining_stats_json(const MiningStats& stats);
std::string scan_stats_json(const ScanStats& stats);

// Frequency histograms for both levels as CSV sections:
//   # L1
//   occurrences,unique_patterns,cumulative_pct
//   ...
// then the same for L2, separated by a blank line.
std::string histogram_csv(const DictionaryBundle& dicts);

// Shared numeric formatting so reports and tests agree byte-for-byte.
std::string format_pct(double value);  // fixed, four decimals, no sign noise

}  // namespace idioscan
