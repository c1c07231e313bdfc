#include "core/report.hpp"

#include <cstdio>

#include <json.hpp>

namespace idioscan {
namespace {

using ordered_json = nlohmann::ordered_json;

void append_corrections(std::string& out, const std::vector<CorrectionLine>& corrections) {
    if (corrections.empty()) {
        out += "(none)\n";
        return;
    }
    for (const auto& c : corrections) {
        out += c.pattern;
        out += ", edit distance ";
        out += std::to_string(c.distance);
        out += ", occurrences ";
        out += std::to_string(c.occurrences);
        out += '\n';
    }
}

void append_level(std::string& out, const char* label, const LevelReport& level) {
    out += label;
    out += " pattern: ";
    out += level.pattern;
    out += '\n';
    out += label;
    out += " verdict: ";
    out += verdict_name(level.verdict);
    if (level.found.has_value()) {
        out += ", score ";
        out += format_pct(level.score);
        out += '%';
    }
    out += '\n';
    out += "Possible corrections";
    if (label[1] == '2') out += " (L2)";
    out += ":\n";
    append_corrections(out, level.corrections);
}

ordered_json level_json(const LevelReport& level) {
    ordered_json corrections = ordered_json::array();
    for (const auto& c : level.corrections) {
        corrections.push_back({{"pattern", c.pattern},
                               {"distance", c.distance},
                               {"occurrences", c.occurrences}});
    }
    ordered_json j;
    j["pattern"] = level.pattern;
    if (level.found.has_value())
        j["found"] = *level.found;
    else
        j["found"] = nullptr;
    j["verdict"] = verdict_name(level.verdict);
    j["score"] = level.score;
    j["corrections"] = std::move(corrections);
    return j;
}

void append_histogram(std::string& out, const char* label, const PatternDict& dict) {
    out += "# ";
    out += label;
    out += '\n';
    out += "occurrences,unique_patterns,cumulative_pct\n";
    for (const auto& row : dict.frequency_histogram()) {
        out += std::to_string(row.occurrences);
        out += ',';
        out += std::to_string(row.unique_patterns);
        out += ',';
        out += format_pct(row.cumulative_pct);
        out += '\n';
    }
}

}  // namespace

std::string format_pct(double value) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.4f", value);
    return buf;
}

std::string render_text_report(const std::vector<AnomalyReport>& entries) {
    std::string out;
    bool first = true;
    for (const auto& entry : entries) {
        if (!first) out += '\n';
        first = false;
        out += "Potential anomaly: (";
        out += entry.condition;
        out += ")\n";
        out += "Location: ";
        out += entry.file;
        out += ':';
        out += std::to_string(entry.line);
        out += ':';
        out += std::to_string(entry.column);
        out += '\n';
        append_level(out, "L1", entry.l1);
        if (entry.l2.has_value()) append_level(out, "L2", *entry.l2);
    }
    return out;
}

std::string render_jsonl_report(const std::vector<AnomalyReport>& entries) {
    std::string out;
    for (const auto& entry : entries) {
        ordered_json j;
        j["file"] = entry.file;
        j["line"] = entry.line;
        j["column"] = entry.column;
        j["condition"] = entry.condition;
        j["l1"] = level_json(entry.l1);
        if (entry.l2.has_value())
            j["l2"] = level_json(*entry.l2);
        else
            j["l2"] = nullptr;
        out += j.dump();
        out += '\n';
    }
    return out;
}

std::string mining_stats_json(const MiningStats& stats) {
    ordered_json j;
    j["files_seen"] = stats.files_seen;
    j["files_parsed"] = stats.files_parsed;
    j["conditions_extracted"] = stats.conditions_extracted;
    j["conditions_parsed"] = stats.conditions_parsed;
    j["parse_failures"] = stats.parse_failures;
    j["span_discards"] = stats.span_discards;
    j["total_patterns"] = stats.total_patterns;
    j["unique_l1"] = stats.unique_l1;
    j["unique_l2"] = stats.unique_l2;
    j["elapsed_ms"] = stats.elapsed_ms;
    return j.dump(2) + "\n";
}

std::string scan_stats_json(const ScanStats& stats) {
    ordered_json j;
    j["files_seen"] = stats.files_seen;
    j["files_parsed"] = stats.files_parsed;
    j["conditions_extracted"] = stats.conditions_extracted;
    j["conditions_parsed"] = stats.conditions_parsed;
    j["parse_failures"] = stats.parse_failures;
    j["span_discards"] = stats.span_discards;
    j["l1_hits"] = stats.l1_hits;
    j["l2_evaluated"] = stats.l2_evaluated;
    j["l2_hits"] = stats.l2_hits;
    j["anomalies_raw"] = stats.anomalies_raw;
    j["anomalies_unique"] = stats.anomalies_unique;
    j["entries_emitted"] = stats.entries_emitted;
    j["cache_hits"] = stats.cache_hits;
    j["cache_misses"] = stats.cache_misses;
    j["elapsed_ms"] = stats.elapsed_ms;
    return j.dump(2) + "\n";
}

std::string histogram_csv(const DictionaryBundle& dicts) {
    std::string out;
    append_histogram(out, "L1", dicts.l1);
    out += '\n';
    append_histogram(out, "L2", dicts.l2);
    return out;
}

}  // namespace idioscan
