// idioscan command-line front end. Talks to the core exclusively through the
// public C API so the CLI doubles as a smoke test of the shared library.
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "idioscan.h"

namespace {

constexpr int kExitClean = 0;
constexpr int kExitAnomalies = 1;
constexpr int kExitError = 2;

struct StringDeleter {
    void operator()(char* s) const { idioscan_string_free(s); }
};
using ApiString = std::unique_ptr<char, StringDeleter>;

struct DictDeleter {
    void operator()(idioscan_dict* d) const { idioscan_dict_free(d); }
};
using DictHandle = std::unique_ptr<idioscan_dict, DictDeleter>;

struct ResultDeleter {
    void operator()(idioscan_scan_result* r) const { idioscan_scan_result_free(r); }
};
using ResultHandle = std::unique_ptr<idioscan_scan_result, ResultDeleter>;

// Mutable option state shared by the subcommands; converted to
// idioscan_options just before each API call.
struct Settings {
    idioscan_options opts{};
    std::vector<std::string> extensions;
    std::vector<const char*> extension_ptrs;

    Settings() { idioscan_options_init(&opts); }

    const idioscan_options* finalize() {
        extension_ptrs.clear();
        for (const std::string& e : extensions) extension_ptrs.push_back(e.c_str());
        opts.extensions = extension_ptrs.empty() ? nullptr : extension_ptrs.data();
        opts.num_extensions = extension_ptrs.size();
        return &opts;
    }
};

int report_api_error(int status) {
    std::cerr << "error: " << idioscan_last_error() << " [" << idioscan_status_name(status)
              << "]\n";
    return kExitError;
}

bool write_output(const std::string& path, const char* data) {
    if (path.empty() || path == "-") {
        std::cout << data;
        return true;
    }
    std::ofstream out(path, std::ios::binary);
    out << data;
    out.flush();
    if (!out) {
        std::cerr << "error: cannot write " << path << "\n";
        return false;
    }
    return true;
}

std::vector<const char*> to_ptrs(const std::vector<std::string>& paths) {
    std::vector<const char*> out;
    for (const std::string& p : paths) out.push_back(p.c_str());
    return out;
}

void add_threshold_flags(CLI::App* cmd, Settings& s) {
    cmd->add_option("--alpha", s.opts.alpha, "Anomaly threshold in percent")
        ->envname("IDIOSCAN_ALPHA")
        ->check(CLI::Validator(
            [](std::string& value) -> std::string {
                double a = 0.0;
                try {
                    a = std::stod(value);
                } catch (...) {
                    return "not a number: " + value;
                }
                if (!(a > 0.0) || a > 100.0) return "alpha must be in (0, 100]: " + value;
                return {};
            },
            "(0..100]"))
        ->capture_default_str();
    cmd->add_option("--max-cost", s.opts.max_cost, "Maximum edit distance for corrections")
        ->envname("IDIOSCAN_MAX_COST")
        ->check(CLI::Range(0, 4))
        ->capture_default_str();
}

void add_l2_flags(CLI::App* cmd, Settings& s) {
    cmd->add_option("--l2-depth", s.opts.l2_depth, "Subtree depth kept below the root at L2")
        ->envname("IDIOSCAN_L2_DEPTH")
        ->check(CLI::Range(0, 64))
        ->capture_default_str();
    cmd->add_flag("--l2-prune-leaves", s.opts.l2_prune_leaves,
                  "Collapse the root's leaf children at L2 as well")
        ->envname("IDIOSCAN_L2_PRUNE_LEAVES");
}

void add_worker_flags(CLI::App* cmd, Settings& s) {
    cmd->add_option("--workers", s.opts.workers, "Worker threads (default: all cores)")
        ->envname("IDIOSCAN_WORKERS")
        ->check(CLI::Range(1u, 4096u));
    cmd->add_option("--extensions", s.extensions,
                    "File extensions to walk, with leading dot (default: C/C++ set)")
        ->envname("IDIOSCAN_EXTENSIONS")
        ->delimiter(',');
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"idioscan — mines common if-condition shapes from a trusted corpus and flags "
                 "statistically unusual conditions in target code"};
    app.require_subcommand(1);
    argv = app.ensure_utf8(argv);

    Settings settings;
    std::vector<std::string> paths;
    std::string dict_path;
    std::string out_path;
    std::string stats_path;
    std::string format = "text";
    std::string pattern_text;
    std::string condition_text;
    std::string level = "L1";
    std::uint64_t bench_seed = 12345;
    std::uint64_t bench_budget = 50'000'000;
    std::size_t bench_dict_size = 1000;
    std::size_t bench_targets = 16;

    CLI::App* mine = app.add_subcommand("mine", "Mine pattern dictionaries from corpus roots");
    mine->add_option("paths", paths, "Corpus files or directories")->required()->expected(-1);
    mine->add_option("--out", dict_path, "Dictionary file to write")
        ->envname("IDIOSCAN_OUT")
        ->required();
    mine->add_option("--stats", stats_path,
                     "Write mining stats JSON here instead of standard output");
    add_l2_flags(mine, settings);
    add_worker_flags(mine, settings);

    CLI::App* scan = app.add_subcommand("scan", "Scan target roots against a dictionary");
    scan->add_option("paths", paths, "Target files or directories")->required()->expected(-1);
    scan->add_option("--dict", dict_path, "Dictionary file to scan against")
        ->envname("IDIOSCAN_DICT")
        ->required();
    scan->add_option("--format", format, "Report format")
        ->envname("IDIOSCAN_FORMAT")
        ->check(CLI::IsMember({"text", "jsonl"}))
        ->capture_default_str();
    scan->add_option("--out", out_path, "Report destination (default: standard output)");
    scan->add_flag("--report-all", settings.opts.report_all,
                   "Report every condition, not just anomalies")
        ->envname("IDIOSCAN_REPORT_ALL");
    scan->add_flag("--dedup", settings.opts.dedup, "Collapse entries sharing an L1 pattern")
        ->envname("IDIOSCAN_DEDUP");
    scan->add_option("--cache-capacity", settings.opts.cache_capacity,
                     "Per-worker correction cache entries")
        ->envname("IDIOSCAN_CACHE_CAPACITY")
        ->capture_default_str();
    add_threshold_flags(scan, settings);
    add_l2_flags(scan, settings);
    add_worker_flags(scan, settings);

    CLI::App* stats = app.add_subcommand("stats", "Print a dictionary's frequency histograms");
    stats->add_option("--dict", dict_path, "Dictionary file")
        ->envname("IDIOSCAN_DICT")
        ->required();
    stats->add_option("--out", out_path, "CSV destination (default: standard output)");

    CLI::App* bench = app.add_subcommand("bench", "Compare the three correction algorithms");
    bench->add_option("--dict", dict_path, "Dictionary file (default: synthetic patterns)")
        ->envname("IDIOSCAN_DICT");
    bench->add_option("--dict-size", bench_dict_size, "Synthetic dictionary size")
        ->capture_default_str();
    bench->add_option("--targets", bench_targets, "Number of query targets")
        ->capture_default_str();
    bench->add_option("--max-cost", settings.opts.max_cost, "Maximum edit distance")
        ->check(CLI::Range(0, 4))
        ->capture_default_str();
    bench->add_option("--seed", bench_seed, "Random seed")->capture_default_str();
    bench->add_option("--budget", bench_budget, "Deletion-index postings budget")
        ->capture_default_str();
    bench->add_option("--out", out_path, "CSV destination (default: standard output)");

    CLI::App* dump = app.add_subcommand("dump", "Look one pattern up and print its corrections");
    dump->add_option("--dict", dict_path, "Dictionary file")
        ->envname("IDIOSCAN_DICT")
        ->required();
    CLI::Option* dump_pattern =
        dump->add_option("--pattern", pattern_text, "Serialized pattern text to look up");
    dump->add_option("--condition", condition_text,
                     "Condition expression to abstract, then look up")
        ->excludes(dump_pattern);
    dump->add_option("--level", level, "Abstraction level")
        ->check(CLI::IsMember({"L1", "L2"}))
        ->capture_default_str();
    add_threshold_flags(dump, settings);
    add_l2_flags(dump, settings);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitError;
    }

    if (mine->parsed()) {
        DictHandle dict;
        ApiString stats_json;
        auto ptrs = to_ptrs(paths);
        idioscan_dict* raw_dict = nullptr;
        char* raw_stats = nullptr;
        int st = idioscan_mine(ptrs.data(), ptrs.size(), settings.finalize(), &raw_dict,
                               &raw_stats);
        dict.reset(raw_dict);
        stats_json.reset(raw_stats);
        if (st != IDIOSCAN_OK) return report_api_error(st);
        st = idioscan_dict_save(dict.get(), dict_path.c_str());
        if (st != IDIOSCAN_OK) return report_api_error(st);
        if (!write_output(stats_path, stats_json.get())) return kExitError;
        std::cerr << "wrote " << dict_path << "\n";
        return kExitClean;
    }

    if (scan->parsed()) {
        idioscan_dict* raw_dict = nullptr;
        int st = idioscan_dict_load(dict_path.c_str(), &raw_dict);
        DictHandle dict(raw_dict);
        if (st != IDIOSCAN_OK) return report_api_error(st);

        auto ptrs = to_ptrs(paths);
        idioscan_scan_result* raw_result = nullptr;
        st = idioscan_scan(ptrs.data(), ptrs.size(), dict.get(), settings.finalize(),
                           &raw_result);
        ResultHandle result(raw_result);
        if (st != IDIOSCAN_OK) return report_api_error(st);

        char* raw_report = nullptr;
        st = idioscan_scan_render(result.get(), format.c_str(), &raw_report);
        ApiString report(raw_report);
        if (st != IDIOSCAN_OK) return report_api_error(st);
        if (!write_output(out_path, report.get())) return kExitError;

        char* raw_summary = nullptr;
        st = idioscan_scan_summary_json(result.get(), &raw_summary);
        ApiString summary(raw_summary);
        if (st != IDIOSCAN_OK) return report_api_error(st);
        std::cerr << summary.get();

        return idioscan_scan_anomaly_count(result.get()) > 0 ? kExitAnomalies : kExitClean;
    }

    if (stats->parsed()) {
        idioscan_dict* raw_dict = nullptr;
        int st = idioscan_dict_load(dict_path.c_str(), &raw_dict);
        DictHandle dict(raw_dict);
        if (st != IDIOSCAN_OK) return report_api_error(st);
        char* raw_csv = nullptr;
        st = idioscan_dict_histogram_csv(dict.get(), &raw_csv);
        ApiString csv(raw_csv);
        if (st != IDIOSCAN_OK) return report_api_error(st);
        return write_output(out_path, csv.get()) ? kExitClean : kExitError;
    }

    if (bench->parsed()) {
        DictHandle dict;
        if (!dict_path.empty()) {
            idioscan_dict* raw_dict = nullptr;
            int st = idioscan_dict_load(dict_path.c_str(), &raw_dict);
            dict.reset(raw_dict);
            if (st != IDIOSCAN_OK) return report_api_error(st);
        }
        char* raw_csv = nullptr;
        char* raw_notes = nullptr;
        int st = idioscan_bench(dict.get(), bench_dict_size, bench_targets,
                                settings.opts.max_cost, bench_seed, bench_budget, &raw_csv,
                                &raw_notes);
        ApiString csv(raw_csv);
        ApiString notes(raw_notes);
        if (st != IDIOSCAN_OK) return report_api_error(st);
        if (notes && notes.get()[0] != '\0') std::cerr << notes.get();
        return write_output(out_path, csv.get()) ? kExitClean : kExitError;
    }

    if (dump->parsed()) {
        if (pattern_text.empty() && condition_text.empty()) {
            std::cerr << "error: dump requires --pattern or --condition\n";
            return kExitError;
        }
        idioscan_dict* raw_dict = nullptr;
        int st = idioscan_dict_load(dict_path.c_str(), &raw_dict);
        DictHandle dict(raw_dict);
        if (st != IDIOSCAN_OK) return report_api_error(st);

        std::string lookup = pattern_text;
        if (lookup.empty()) {
            char* raw_abstracted = nullptr;
            st = idioscan_abstract(condition_text.c_str(), settings.finalize(), &raw_abstracted);
            ApiString abstracted(raw_abstracted);
            if (st != IDIOSCAN_OK) return report_api_error(st);
            // Output shape is "L1 <pattern>\nL2 <pattern>\n"; pull out the
            // requested level's line.
            std::string text = abstracted.get();
            std::string prefix = level + " ";
            std::size_t start = text.rfind(prefix, 0) == 0 ? 0 : text.find("\n" + prefix);
            if (start == std::string::npos) {
                std::cerr << "error: no " << level << " abstraction produced\n";
                return kExitError;
            }
            if (start != 0) start += 1;
            start += prefix.size();
            std::size_t end = text.find('\n', start);
            lookup = text.substr(start, end == std::string::npos ? end : end - start);
        }

        char* raw_dump = nullptr;
        st = idioscan_dump(dict.get(), lookup.c_str(), level.c_str(), settings.finalize(),
                           &raw_dump);
        ApiString dumped(raw_dump);
        if (st != IDIOSCAN_OK) return report_api_error(st);
        std::cout << dumped.get();
        return kExitClean;
    }

    std::cerr << "error: no subcommand\n";
    return kExitError;
}
