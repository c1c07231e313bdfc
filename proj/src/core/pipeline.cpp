#include "core/pipeline.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <memory>
#include <set>
#include <thread>
#include <unordered_set>

#include "core/cache.hpp"
#include "core/errors.hpp"
#include "core/parser.hpp"

namespace idioscan {
namespace {

namespace fs = std::filesystem;

unsigned effective_workers(unsigned requested) {
    if (requested > 0) return requested;
    unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? hw : 1;
}

bool extension_matches(const fs::path& p, const std::vector<std::string>& extensions) {
    std::string ext = p.extension().string();
    return std::find(extensions.begin(), extensions.end(), ext) != extensions.end();
}

// Runs fn(file_index) on `workers` threads over a dynamic work queue.
void parallel_for_files(std::size_t count, unsigned workers,
                        const std::function<void(std::size_t, unsigned)>& fn) {
    if (count == 0) return;
    unsigned n = std::min<std::size_t>(workers, count);
    if (n <= 1) {
        for (std::size_t i = 0; i < count; ++i) fn(i, 0);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    pool.reserve(n);
    for (unsigned w = 0; w < n; ++w) {
        pool.emplace_back([&, w] {
            for (;;) {
                std::size_t i = next.fetch_add(1);
                if (i >= count) return;
                fn(i, w);
            }
        });
    }
    for (auto& t : pool) t.join();
}

struct FileCounts {
    std::uint64_t files_parsed = 0;
    std::uint64_t conditions_extracted = 0;
    std::uint64_t conditions_parsed = 0;
    std::uint64_t parse_failures = 0;
    std::uint64_t span_discards = 0;
};

// Shared per-file walk for both phases: extract spans, parse them, hand the
// L1 tree to `sink`.
template <typename Sink>
void process_file(const fs::path& path, FileCounts& counts, Sink&& sink) {
    SourceFile src;
    try {
        src = SourceFile::read(path);
    } catch (const IoError&) {
        return;  // unreadable: seen but not parsed
    }
    ++counts.files_parsed;
    ExtractionDiagnostics diag;
    std::vector<ConditionSpan> spans = extract_conditions(src, &diag);
    counts.span_discards += diag.discarded;
    counts.conditions_extracted += spans.size();
    for (ConditionSpan& span : spans) {
        ExprTree tree;
        try {
            tree = parse_condition(span.text);
        } catch (const UnknownCharacterError&) {
            ++counts.parse_failures;
            continue;
        } catch (const ParseError&) {
            ++counts.parse_failures;
            continue;
        }
        ++counts.conditions_parsed;
        sink(span, abstract_l1(tree));
    }
}

}  // namespace

std::vector<fs::path> enumerate_files(const std::vector<fs::path>& roots,
                                      const std::vector<std::string>& extensions) {
    std::vector<fs::path> files;
    for (const fs::path& root : roots) {
        std::error_code ec;
        fs::file_status st = fs::status(root, ec);
        if (ec || st.type() == fs::file_type::not_found)
            throw IoError(root.string(), "no such file or directory");
        if (fs::is_regular_file(st)) {
            files.push_back(root);
            continue;
        }
        if (!fs::is_directory(st)) continue;
        fs::recursive_directory_iterator it(root, fs::directory_options::skip_permission_denied,
                                            ec);
        if (ec) throw IoError(root.string(), ec.message());
        for (const auto& entry : it) {
            if (entry.is_regular_file(ec) && extension_matches(entry.path(), extensions))
                files.push_back(entry.path());
        }
    }
    std::sort(files.begin(), files.end(),
              [](const fs::path& a, const fs::path& b) { return a.native() < b.native(); });
    files.erase(std::unique(files.begin(), files.end()), files.end());
    return files;
}

MiningResult mine(const std::vector<fs::path>& roots, const PipelineConfig& config) {
    auto t0 = std::chrono::steady_clock::now();
    std::vector<fs::path> files = enumerate_files(roots, config.extensions);
    unsigned workers = effective_workers(config.workers);

    struct Shard {
        DictionaryBundle dicts{SymbolTable::builtin()};
        FileCounts counts;
    };
    std::vector<Shard> shards(std::min<std::size_t>(workers, files.empty() ? 1 : files.size()));

    parallel_for_files(files.size(), workers, [&](std::size_t i, unsigned w) {
        Shard& shard = shards[w];
        process_file(files[i], shard.counts, [&](const ConditionSpan&, ExprTree l1_tree) {
            ExprTree l2_tree = abstract_l2(l1_tree, config.l2_depth, config.l2_prune_leaves);
            shard.dicts.l1.insert_symbols(shard.dicts.l1.table().encode_tree(l1_tree), 1);
            shard.dicts.l2.insert_symbols(shard.dicts.l2.table().encode_tree(l2_tree), 1);
        });
    });

    MiningResult result{DictionaryBundle(SymbolTable::builtin()), {}};
    for (Shard& shard : shards) {
        result.dicts.l1 = merge(result.dicts.l1, shard.dicts.l1);
        result.dicts.l2 = merge(result.dicts.l2, shard.dicts.l2);
        result.stats.files_parsed += shard.counts.files_parsed;
        result.stats.conditions_extracted += shard.counts.conditions_extracted;
        result.stats.conditions_parsed += shard.counts.conditions_parsed;
        result.stats.parse_failures += shard.counts.parse_failures;
        result.stats.span_discards += shard.counts.span_discards;
    }
    result.stats.files_seen = files.size();
    result.stats.total_patterns = result.dicts.l1.total_patterns();
    result.stats.unique_l1 = result.dicts.l1.unique_patterns();
    result.stats.unique_l2 = result.dicts.l2.unique_patterns();
    result.stats.elapsed_ms = static_cast<std::uint64_t>(
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() -
                                                              t0)
            .count());
    return result;
}

ScanResult scan(const std::vector<fs::path>& roots, const DictionaryBundle& dicts,
                const PipelineConfig& config) {
    auto t0 = std::chrono::steady_clock::now();
    std::vector<fs::path> files = enumerate_files(roots, config.extensions);
    unsigned workers = effective_workers(config.workers);
    const ThresholdConfig threshold{config.alpha, config.max_cost};

    struct Shard {
        std::vector<AnomalyReport> entries;
        FileCounts counts;
        std::uint64_t l1_hits = 0;
        std::uint64_t l2_evaluated = 0;
        std::uint64_t l2_hits = 0;
        std::uint64_t anomalies_raw = 0;
        std::set<std::string> anomalous_l1;
        std::unique_ptr<CorrectionCache> cache;
    };
    std::vector<Shard> shards(std::min<std::size_t>(workers, files.empty() ? 1 : files.size()));
    for (Shard& shard : shards)
        shard.cache = std::make_unique<CorrectionCache>(config.cache_capacity);

    auto level_report = [&](const PatternDict& dict, CorrectionCache& cache,
                            const ExprTree& tree) {
        PatternKey key = make_key(dict.level(), tree, dict.table(), /*lenient=*/true);
        CorrectionSet cs = cache.get(dict, key, config.max_cost);
        Decision decision = is_anomalous(cs, threshold);
        LevelReport report;
        report.pattern = std::move(key.text);
        if (cs.target_occurrences > 0) report.found = cs.target_occurrences;
        report.verdict = decision.verdict;
        report.score = decision.score;
        report.corrections.reserve(cs.corrections.size());
        for (const Correction& c : cs.corrections)
            report.corrections.push_back({c.pattern.text, c.distance, c.occurrences});
        return report;
    };

    parallel_for_files(files.size(), workers, [&](std::size_t i, unsigned w) {
        Shard& shard = shards[w];
        CorrectionCache* cache = shard.cache.get();
        process_file(files[i], shard.counts, [&](const ConditionSpan& span, ExprTree l1_tree) {
            AnomalyReport entry;
            entry.file = span.file;
            entry.line = span.line;
            entry.column = span.column;
            entry.condition = span.text;
            entry.l1 = level_report(dicts.l1, *cache, l1_tree);
            if (entry.l1.found.has_value()) {
                ++shard.l1_hits;
            } else {
                ++shard.l2_evaluated;
                ExprTree l2_tree = abstract_l2(l1_tree, config.l2_depth, config.l2_prune_leaves);
                entry.l2 = level_report(dicts.l2, *cache, l2_tree);
                if (entry.l2->found.has_value()) ++shard.l2_hits;
            }
            if (entry.anomalous()) {
                ++shard.anomalies_raw;
                shard.anomalous_l1.insert(entry.l1.pattern);
            }
            if (entry.anomalous() || config.report_all) shard.entries.push_back(std::move(entry));
        });
    });

    ScanResult result;
    std::set<std::string> anomalous_l1;
    for (Shard& shard : shards) {
        result.stats.files_parsed += shard.counts.files_parsed;
        result.stats.conditions_extracted += shard.counts.conditions_extracted;
        result.stats.conditions_parsed += shard.counts.conditions_parsed;
        result.stats.parse_failures += shard.counts.parse_failures;
        result.stats.span_discards += shard.counts.span_discards;
        result.stats.l1_hits += shard.l1_hits;
        result.stats.l2_evaluated += shard.l2_evaluated;
        result.stats.l2_hits += shard.l2_hits;
        result.stats.anomalies_raw += shard.anomalies_raw;
        result.stats.cache_hits += shard.cache->hits();
        result.stats.cache_misses += shard.cache->misses();
        anomalous_l1.merge(shard.anomalous_l1);
        result.entries.insert(result.entries.end(),
                              std::make_move_iterator(shard.entries.begin()),
                              std::make_move_iterator(shard.entries.end()));
    }
    result.stats.files_seen = files.size();
    result.stats.anomalies_unique = anomalous_l1.size();

    std::sort(result.entries.begin(), result.entries.end(),
              [](const AnomalyReport& a, const AnomalyReport& b) {
                  if (a.file != b.file) return a.file < b.file;
                  if (a.line != b.line) return a.line < b.line;
                  return a.column < b.column;
              });
    if (config.dedup) {
        std::unordered_set<std::string> seen;
        std::vector<AnomalyReport> kept;
        kept.reserve(result.entries.size());
        for (AnomalyReport& e : result.entries) {
            if (seen.insert(e.l1.pattern).second) kept.push_back(std::move(e));
        }
        result.entries = std::move(kept);
    }
    result.stats.entries_emitted = result.entries.size();
    result.stats.elapsed_ms = static_cast<std::uint64_t>(
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() -
                                                              t0)
            .count());
    return result;
}

}  // namespace idioscan
