#include "idioscan.h"

#include <cstring>
#include <filesystem>
#include <new>
#include <stdexcept>
#include <string>
#include <vector>

#include "core/abstraction.hpp"
#include "core/autocorrect.hpp"
#include "core/bench.hpp"
#include "core/dict_io.hpp"
#include "core/errors.hpp"
#include "core/parser.hpp"
#include "core/pipeline.hpp"
#include "core/report.hpp"

struct idioscan_dict {
    idioscan::DictionaryBundle bundle;
};

struct idioscan_scan_result {
    idioscan::ScanResult result;
};

namespace {

thread_local std::string g_last_error;

char* copy_out(const std::string& s) {
    char* out = new char[s.size() + 1];
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

int fail(int status, const std::string& message) {
    g_last_error = message;
    return status;
}

// Maps the core exception taxonomy onto the C status codes.
template <typename Fn>
int guarded(Fn&& fn) {
    try {
        fn();
        return IDIOSCAN_OK;
    } catch (const idioscan::IoError& e) {
        return fail(IDIOSCAN_ERR_IO, e.what());
    } catch (const idioscan::FormatError& e) {
        return fail(IDIOSCAN_ERR_FORMAT, e.what());
    } catch (const idioscan::IndexBudgetError& e) {
        return fail(IDIOSCAN_ERR_BUDGET, e.what());
    } catch (const idioscan::UnknownCharacterError& e) {
        return fail(IDIOSCAN_ERR_PATTERN, e.what());
    } catch (const idioscan::ParseError& e) {
        return fail(IDIOSCAN_ERR_PATTERN, e.what());
    } catch (const idioscan::PatternError& e) {
        return fail(IDIOSCAN_ERR_PATTERN, e.what());
    } catch (const idioscan::UnknownSymbolError& e) {
        return fail(IDIOSCAN_ERR_PATTERN, e.what());
    } catch (const std::invalid_argument& e) {
        return fail(IDIOSCAN_ERR_INVALID_ARGUMENT, e.what());
    } catch (const std::bad_alloc&) {
        return fail(IDIOSCAN_ERR_INTERNAL, "out of memory");
    } catch (const std::exception& e) {
        return fail(IDIOSCAN_ERR_INTERNAL, e.what());
    }
}

idioscan::PipelineConfig to_config(const idioscan_options* opts) {
    idioscan::PipelineConfig cfg;
    if (!opts) return cfg;
    cfg.alpha = opts->alpha;
    cfg.max_cost = opts->max_cost;
    cfg.l2_depth = opts->l2_depth;
    cfg.l2_prune_leaves = opts->l2_prune_leaves != 0;
    cfg.workers = opts->workers;
    cfg.report_all = opts->report_all != 0;
    cfg.dedup = opts->dedup != 0;
    cfg.cache_capacity = opts->cache_capacity;
    if (opts->extensions && opts->num_extensions > 0) {
        cfg.extensions.clear();
        for (size_t i = 0; i < opts->num_extensions; ++i) {
            if (!opts->extensions[i]) throw std::invalid_argument("extensions contains a null entry");
            cfg.extensions.emplace_back(opts->extensions[i]);
        }
    }
    return cfg;
}

void validate_config(const idioscan::PipelineConfig& cfg) {
    if (!(cfg.alpha >= 0.0) || cfg.alpha > 100.0)
        throw std::invalid_argument("alpha must be in [0, 100]");
    if (cfg.max_cost < 0) throw std::invalid_argument("max_cost must be >= 0");
    if (cfg.l2_depth < 0) throw std::invalid_argument("l2_depth must be >= 0");
}

std::vector<std::filesystem::path> to_roots(const char* const* roots, size_t num_roots) {
    if (!roots && num_roots > 0) throw std::invalid_argument("roots is null");
    std::vector<std::filesystem::path> out;
    out.reserve(num_roots);
    for (size_t i = 0; i < num_roots; ++i) {
        if (!roots[i]) throw std::invalid_argument("roots contains a null entry");
        out.emplace_back(roots[i]);
    }
    if (out.empty()) throw std::invalid_argument("at least one root is required");
    return out;
}

}  // namespace

extern "C" {

const char* idioscan_status_name(int status) {
    switch (status) {
        case IDIOSCAN_OK:
            return "ok";
        case IDIOSCAN_ERR_IO:
            return "io_error";
        case IDIOSCAN_ERR_FORMAT:
            return "format_error";
        case IDIOSCAN_ERR_INVALID_ARGUMENT:
            return "invalid_argument";
        case IDIOSCAN_ERR_PATTERN:
            return "pattern_error";
        case IDIOSCAN_ERR_BUDGET:
            return "budget_error";
        case IDIOSCAN_ERR_INTERNAL:
            return "internal_error";
        default:
            return "unknown_status";
    }
}

const char* idioscan_last_error(void) { return g_last_error.c_str(); }

void idioscan_string_free(char* s) { delete[] s; }

void idioscan_options_init(idioscan_options* opts) {
    if (!opts) return;
    idioscan::PipelineConfig defaults;
    opts->alpha = defaults.alpha;
    opts->max_cost = defaults.max_cost;
    opts->l2_depth = defaults.l2_depth;
    opts->l2_prune_leaves = defaults.l2_prune_leaves ? 1 : 0;
    opts->workers = defaults.workers;
    opts->report_all = defaults.report_all ? 1 : 0;
    opts->dedup = defaults.dedup ? 1 : 0;
    opts->cache_capacity = defaults.cache_capacity;
    opts->extensions = nullptr;
    opts->num_extensions = 0;
}

int idioscan_mine(const char* const* roots, size_t num_roots, const idioscan_options* opts,
                  idioscan_dict** out_dict, char** out_stats_json) {
    if (out_dict) *out_dict = nullptr;
    if (out_stats_json) *out_stats_json = nullptr;
    return guarded([&] {
        if (!out_dict) throw std::invalid_argument("out_dict is null");
        idioscan::PipelineConfig cfg = to_config(opts);
        validate_config(cfg);
        idioscan::MiningResult mined = idioscan::mine(to_roots(roots, num_roots), cfg);
        if (out_stats_json) *out_stats_json = copy_out(idioscan::mining_stats_json(mined.stats));
        *out_dict = new idioscan_dict{std::move(mined.dicts)};
    });
}

int idioscan_dict_load(const char* path, idioscan_dict** out_dict) {
    if (out_dict) *out_dict = nullptr;
    return guarded([&] {
        if (!out_dict) throw std::invalid_argument("out_dict is null");
        if (!path) throw std::invalid_argument("path is null");
        *out_dict = new idioscan_dict{idioscan::load_dictionary(path)};
    });
}

int idioscan_dict_save(const idioscan_dict* dict, const char* path) {
    return guarded([&] {
        if (!dict) throw std::invalid_argument("dict is null");
        if (!path) throw std::invalid_argument("path is null");
        idioscan::save_dictionary(dict->bundle, path);
    });
}

int idioscan_dict_histogram_csv(const idioscan_dict* dict, char** out_csv) {
    if (out_csv) *out_csv = nullptr;
    return guarded([&] {
        if (!dict) throw std::invalid_argument("dict is null");
        if (!out_csv) throw std::invalid_argument("out_csv is null");
        *out_csv = copy_out(idioscan::histogram_csv(dict->bundle));
    });
}

void idioscan_dict_free(idioscan_dict* dict) { delete dict; }

int idioscan_scan(const char* const* roots, size_t num_roots, const idioscan_dict* dict,
                  const idioscan_options* opts, idioscan_scan_result** out_result) {
    if (out_result) *out_result = nullptr;
    return guarded([&] {
        if (!dict) throw std::invalid_argument("dict is null");
        if (!out_result) throw std::invalid_argument("out_result is null");
        idioscan::PipelineConfig cfg = to_config(opts);
        validate_config(cfg);
        idioscan::ScanResult result = idioscan::scan(to_roots(roots, num_roots), dict->bundle, cfg);
        *out_result = new idioscan_scan_result{std::move(result)};
    });
}

size_t idioscan_scan_entry_count(const idioscan_scan_result* result) {
    return result ? result->result.entries.size() : 0;
}

size_t idioscan_scan_anomaly_count(const idioscan_scan_result* result) {
    return result ? static_cast<size_t>(result->result.stats.anomalies_raw) : 0;
}

int idioscan_scan_render(const idioscan_scan_result* result, const char* format,
                         char** out_report) {
    if (out_report) *out_report = nullptr;
    return guarded([&] {
        if (!result) throw std::invalid_argument("result is null");
        if (!out_report) throw std::invalid_argument("out_report is null");
        std::string fmt = format ? format : "text";
        if (fmt == "text")
            *out_report = copy_out(idioscan::render_text_report(result->result.entries));
        else if (fmt == "jsonl")
            *out_report = copy_out(idioscan::render_jsonl_report(result->result.entries));
        else
            throw std::invalid_argument("format must be \"text\" or \"jsonl\"");
    });
}

int idioscan_scan_summary_json(const idioscan_scan_result* result, char** out_json) {
    if (out_json) *out_json = nullptr;
    return guarded([&] {
        if (!result) throw std::invalid_argument("result is null");
        if (!out_json) throw std::invalid_argument("out_json is null");
        *out_json = copy_out(idioscan::scan_stats_json(result->result.stats));
    });
}

void idioscan_scan_result_free(idioscan_scan_result* result) { delete result; }

int idioscan_abstract(const char* condition, const idioscan_options* opts, char** out_dump) {
    if (out_dump) *out_dump = nullptr;
    return guarded([&] {
        if (!condition) throw std::invalid_argument("condition is null");
        if (!out_dump) throw std::invalid_argument("out_dump is null");
        idioscan::PipelineConfig cfg = to_config(opts);
        validate_config(cfg);
        idioscan::ExprTree tree = idioscan::parse_condition(condition);
        idioscan::ExprTree l1 = idioscan::abstract_l1(tree);
        idioscan::ExprTree l2 = idioscan::abstract_l2(l1, cfg.l2_depth, cfg.l2_prune_leaves);
        std::string dump = "L1 " + idioscan::serialize(l1) + "\nL2 " + idioscan::serialize(l2) + "\n";
        *out_dump = copy_out(dump);
    });
}

int idioscan_dump(const idioscan_dict* dict, const char* pattern_text, const char* level,
                  const idioscan_options* opts, char** out_dump) {
    if (out_dump) *out_dump = nullptr;
    return guarded([&] {
        if (!dict) throw std::invalid_argument("dict is null");
        if (!pattern_text) throw std::invalid_argument("pattern_text is null");
        if (!out_dump) throw std::invalid_argument("out_dump is null");
        idioscan::PipelineConfig cfg = to_config(opts);
        validate_config(cfg);
        std::string level_text = level ? level : "L1";
        const idioscan::PatternDict* target_dict = nullptr;
        if (level_text == "L1")
            target_dict = &dict->bundle.l1;
        else if (level_text == "L2")
            target_dict = &dict->bundle.l2;
        else
            throw std::invalid_argument("level must be \"L1\" or \"L2\"");

        const idioscan::SymbolTable& table = target_dict->table();
        idioscan::PatternKey key;
        key.level = target_dict->level();
        key.symbols = table.encode(pattern_text);
        key.text = table.decode(key.symbols);  // canonical spelling

        idioscan::CorrectionSet cs = idioscan::search_trie(*target_dict, key, cfg.max_cost);
        idioscan::Decision decision =
            idioscan::is_anomalous(cs, {cfg.alpha, cfg.max_cost});

        std::string dump = "Pattern: " + key.text + "\n";
        dump += "Level: " + level_text + "\n";
        auto found = target_dict->lookup(key);
        dump += "Occurrences: " + (found ? std::to_string(*found) : std::string("(absent)")) + "\n";
        dump += "Verdict: ";
        dump += idioscan::verdict_name(decision.verdict);
        if (found) dump += ", score " + idioscan::format_pct(decision.score) + "%";
        dump += "\nPossible corrections:\n";
        if (cs.corrections.empty()) dump += "(none)\n";
        for (const idioscan::Correction& c : cs.corrections) {
            dump += c.pattern.text + ", edit distance " + std::to_string(c.distance) +
                    ", occurrences " + std::to_string(c.occurrences) + "\n";
        }
        *out_dump = copy_out(dump);
    });
}

int idioscan_bench(const idioscan_dict* dict, size_t dict_size, size_t targets, int max_cost,
                   uint64_t seed, uint64_t symdel_budget, char** out_csv, char** out_notes) {
    if (out_csv) *out_csv = nullptr;
    if (out_notes) *out_notes = nullptr;
    return guarded([&] {
        if (!out_csv) throw std::invalid_argument("out_csv is null");
        if (max_cost < 0) throw std::invalid_argument("max_cost must be >= 0");
        idioscan::BenchConfig cfg;
        if (dict_size > 0) cfg.dict_size = dict_size;
        if (targets > 0) cfg.targets = targets;
        cfg.max_cost = max_cost;
        cfg.seed = seed;
        if (symdel_budget > 0) cfg.symdel_budget = symdel_budget;
        idioscan::BenchReport report =
            idioscan::run_bench(dict ? &dict->bundle.l1 : nullptr, cfg);
        *out_csv = copy_out(idioscan::bench_csv(report));
        if (out_notes) {
            std::string notes;
            for (const std::string& note : report.notes) {
                notes += note;
                notes += '\n';
            }
            *out_notes = copy_out(notes);
        }
    });
}

}  // extern "C"
