#include "core/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <iterator>

#include "core/autocorrect.hpp"
#include "core/errors.hpp"

namespace idioscan {
namespace {

std::size_t pick(std::mt19937_64& rng, std::size_t n) {
    return static_cast<std::size_t>(rng() % n);
}

ExprTree leaf_node(std::mt19937_64& rng) {
    switch (pick(rng, 13)) {
        case 0:
        case 1:
        case 2:
            return {NodeType::Number, "", "0", {}};
        case 3:
            return {NodeType::Null, "", "NULL", {}};
        case 4:
            return {NodeType::TrueLit, "", "true", {}};
        case 5:
            return {NodeType::FalseLit, "", "false", {}};
        case 6:
            return {NodeType::StringLiteral, "", "\"s\"", {}};
        case 7:
            return {NodeType::CharLiteral, "", "'c'", {}};
        default:
            return {NodeType::Identifier, "", "x", {}};
    }
}

ExprTree random_tree(std::mt19937_64& rng, int depth) {
    static const char* kBinaryOps[] = {"==", "!=", "<", "<=", ">", ">=", "&&", "||", "&", "|",
                                       "^",  "+",  "-", "*",  "/", "%",  "<<", ">>", "="};
    static const char* kUnaryOps[] = {"!", "~", "*", "&"};
    if (depth <= 0) return leaf_node(rng);
    switch (pick(rng, 20)) {
        case 0:
        case 1:
        case 2:
        case 3:
        case 4:
        case 5:
        case 6:
        case 7: {  // binary
            ExprTree t{NodeType::BinaryExpr, kBinaryOps[pick(rng, std::size(kBinaryOps))], "", {}};
            t.children.push_back(random_tree(rng, depth - 1));
            t.children.push_back(random_tree(rng, depth - 1));
            return t;
        }
        case 8:
        case 9:
        case 10: {  // unary (no "+", which the parser folds away; no "-",
                    // which it folds into number leaves)
            ExprTree t{NodeType::UnaryExpr, kUnaryOps[pick(rng, std::size(kUnaryOps))], "", {}};
            t.children.push_back(random_tree(rng, depth - 1));
            return t;
        }
        case 11:
        case 12: {  // field access
            ExprTree t{NodeType::FieldExpr, "", "", {}};
            t.children.push_back(random_tree(rng, depth - 1));
            t.children.push_back({NodeType::FieldIdentifier, "", "f", {}});
            return t;
        }
        case 13:
        case 14: {  // call
            ExprTree t{NodeType::CallExpr, "", "", {}};
            t.children.push_back({NodeType::Identifier, "", "x", {}});
            ExprTree args{NodeType::ArgList, "", "", {}};
            std::size_t n = pick(rng, 4);
            for (std::size_t i = 0; i < n; ++i) args.children.push_back(random_tree(rng, depth - 1));
            t.children.push_back(std::move(args));
            return t;
        }
        case 15: {  // subscript
            ExprTree t{NodeType::SubscriptExpr, "", "", {}};
            t.children.push_back(random_tree(rng, depth - 1));
            t.children.push_back(random_tree(rng, depth - 1));
            return t;
        }
        case 16: {  // parenthesized
            ExprTree t{NodeType::ParenthesizedExpr, "", "", {}};
            t.children.push_back(random_tree(rng, depth - 1));
            return t;
        }
        case 17: {  // conditional
            ExprTree t{NodeType::ConditionalExpr, "", "", {}};
            t.children.push_back(random_tree(rng, depth - 1));
            t.children.push_back(random_tree(rng, depth - 1));
            t.children.push_back(random_tree(rng, depth - 1));
            return t;
        }
        case 18: {  // comma
            ExprTree t{NodeType::CommaExpr, "", "", {}};
            std::size_t n = 2 + pick(rng, 2);
            for (std::size_t i = 0; i < n; ++i) t.children.push_back(random_tree(rng, depth - 1));
            return t;
        }
        default:
            return leaf_node(rng);
    }
}

double ms_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
        .count();
}

bool same_corrections(const CorrectionSet& a, const CorrectionSet& b) {
    if (a.corrections.size() != b.corrections.size()) return false;
    for (std::size_t i = 0; i < a.corrections.size(); ++i) {
        const Correction& x = a.corrections[i];
        const Correction& y = b.corrections[i];
        if (x.pattern.symbols != y.pattern.symbols || x.distance != y.distance ||
            x.occurrences != y.occurrences)
            return false;
    }
    return true;
}

}  // namespace

ExprTree random_condition_tree(std::mt19937_64& rng, int max_depth) {
    return random_tree(rng, max_depth);
}

PatternDict synthetic_dictionary(std::size_t size, std::uint64_t seed, int max_depth) {
    PatternDict dict(AbstractionLevel::L1, SymbolTable::builtin());
    std::mt19937_64 rng(seed);
    std::size_t attempts = size * 50 + 1000;
    while (dict.unique_patterns() < size && attempts-- > 0) {
        int depth = 1 + static_cast<int>(pick(rng, static_cast<std::size_t>(std::max(max_depth, 1))));
        ExprTree t = abstract_l1(random_tree(rng, depth));
        PatternKey key = make_key(AbstractionLevel::L1, t, dict.table());
        std::uint64_t count = 1 + rng() % 1000;
        if (dict.lookup(key).has_value()) continue;  // keep counts independent of order
        dict.insert(key, count);
    }
    return dict;
}

BenchReport run_bench(const PatternDict* dict, const BenchConfig& config) {
    BenchReport report;
    PatternDict synth(AbstractionLevel::L1, SymbolTable::builtin());
    if (!dict) {
        synth = synthetic_dictionary(config.dict_size, config.seed, config.max_depth);
        dict = &synth;
    }
    if (dict->unique_patterns() == 0) {
        report.notes.push_back("empty dictionary: nothing to benchmark");
        return report;
    }

    // Deterministic target set: an even stride through the dictionary, with
    // every other target perturbed by one same-class symbol substitution so
    // both hit and near-miss queries are exercised.
    std::vector<std::vector<SymbolId>> all;
    dict->for_each([&](std::span<const SymbolId> symbols, std::uint64_t) {
        all.emplace_back(symbols.begin(), symbols.end());
    });
    const SymbolTable& table = dict->table();
    std::vector<SymbolId> same_class[2];  // node types, op chars
    table.for_each([&](SymbolId id, const SymbolTable::Entry& entry) {
        if (entry.cls == SymbolClass::NodeType) same_class[0].push_back(id);
        if (entry.cls == SymbolClass::OpChar) same_class[1].push_back(id);
    });

    std::mt19937_64 rng(config.seed ^ 0x9e3779b97f4a7c15ull);
    std::size_t want = std::max<std::size_t>(1, std::min(config.targets, all.size()));
    std::size_t stride = std::max<std::size_t>(1, all.size() / want);
    std::vector<PatternKey> targets;
    std::size_t len_sum = 0;
    for (std::size_t i = 0; i < all.size() && targets.size() < want; i += stride) {
        PatternKey key;
        key.level = dict->level();
        key.symbols = all[i];
        if (targets.size() % 2 == 1) {
            for (int tries = 0; tries < 16; ++tries) {
                std::size_t pos = pick(rng, key.symbols.size());
                int bucket = table.cls(key.symbols[pos]) == SymbolClass::OpChar ? 1 : 0;
                if (table.cls(key.symbols[pos]) != SymbolClass::NodeType && bucket == 0) continue;
                const auto& pool = same_class[bucket];
                if (pool.size() < 2) continue;
                SymbolId repl = pool[pick(rng, pool.size())];
                if (repl == key.symbols[pos]) continue;
                key.symbols[pos] = repl;
                break;
            }
        }
        try {
            key.text = table.decode(key.symbols);
        } catch (const PatternError&) {
            key.text = "(synthetic)";
        }
        len_sum += key.symbols.size();
        targets.push_back(std::move(key));
    }
    std::size_t mean_len = (len_sum + targets.size() / 2) / targets.size();

    auto fill_row = [&](const char* name) {
        BenchRow row;
        row.algorithm = name;
        row.dict_size = static_cast<std::size_t>(dict->unique_patterns());
        row.target_len = mean_len;
        row.max_cost = config.max_cost;
        return row;
    };

    std::vector<CorrectionSet> trie_results;
    {
        BenchRow row = fill_row("search_trie");
        auto start = std::chrono::steady_clock::now();
        for (const PatternKey& t : targets) {
            std::uint64_t visited = 0;
            trie_results.push_back(search_trie(*dict, t, config.max_cost, &visited));
            row.candidates += visited;
        }
        row.wall_ms = ms_since(start);
        row.index_entries = dict->node_count();
        report.rows.push_back(std::move(row));
    }

    if (config.max_cost <= 2) {
        BenchRow row = fill_row("norvig");
        auto start = std::chrono::steady_clock::now();
        for (std::size_t i = 0; i < targets.size(); ++i) {
            std::uint64_t generated = 0;
            CorrectionSet cs = norvig_query(*dict, targets[i], config.max_cost, &generated);
            row.candidates += generated;
            if (!same_corrections(cs, trie_results[i]))
                report.notes.push_back("norvig result diverges from search_trie on target " +
                                       std::to_string(i));
        }
        row.wall_ms = ms_since(start);
        report.rows.push_back(std::move(row));
    } else {
        report.notes.push_back("norvig skipped: candidate generation supports max_cost <= 2");
    }

    if (config.max_cost <= 2) {
        try {
            BenchRow row = fill_row("symdel");
            auto start = std::chrono::steady_clock::now();
            SymmetricDeleteIndex index(*dict, config.max_cost, config.symdel_budget);
            for (std::size_t i = 0; i < targets.size(); ++i) {
                std::uint64_t verified = 0;
                CorrectionSet cs = index.query(targets[i], config.max_cost, &verified);
                row.candidates += verified;
                if (!same_corrections(cs, trie_results[i]))
                    report.notes.push_back("symdel result diverges from search_trie on target " +
                                           std::to_string(i));
            }
            row.wall_ms = ms_since(start);
            row.index_entries = index.entry_count();
            report.rows.push_back(std::move(row));
        } catch (const IndexBudgetError& e) {
            report.notes.push_back(std::string("symdel skipped: ") + e.what());
        }
    } else {
        report.notes.push_back("symdel skipped: deletion index supports max_cost <= 2");
    }

    return report;
}

std::string bench_csv(const BenchReport& report) {
    std::string out = "algorithm,dict_size,target_len,max_cost,wall_ms,candidates,index_entries\n";
    for (const BenchRow& row : report.rows) {
        char wall[32];
        std::snprintf(wall, sizeof(wall), "%.3f", row.wall_ms);
        out += row.algorithm;
        out += ',';
        out += std::to_string(row.dict_size);
        out += ',';
        out += std::to_string(row.target_len);
        out += ',';
        out += std::to_string(row.max_cost);
        out += ',';
        out += wall;
        out += ',';
        out += std::to_string(row.candidates);
        out += ',';
        out += std::to_string(row.index_entries);
        out += '\n';
    }
    return out;
}

}  // namespace idioscan
