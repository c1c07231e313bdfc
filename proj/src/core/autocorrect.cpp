#include "core/autocorrect.hpp"

#include <algorithm>

namespace idioscan {

const char* verdict_name(Verdict v) {
    switch (v) {
        case Verdict::Normal: return "normal";
        case Verdict::AnomalousMissing: return "anomalous_missing";
        case Verdict::AnomalousRare: return "anomalous_rare";
    }
    return "?";
}

void rank_corrections(std::vector<Correction>& corrections) {
    std::sort(corrections.begin(), corrections.end(), [](const Correction& a, const Correction& b) {
        if (a.distance != b.distance) return a.distance < b.distance;
        if (a.occurrences != b.occurrences) return a.occurrences > b.occurrences;
        return a.pattern.text < b.pattern.text;
    });
}

CorrectionSet search_trie(const PatternDict& dict, const PatternKey& target, int max_cost,
                          std::uint64_t* visited_nodes) {
    CorrectionSet out;
    out.target = target;
    out.max_cost = max_cost;
    const std::vector<SymbolId>& t = target.symbols;
    const std::size_t n = t.size();
    const std::size_t cost_cap = max_cost < 0 ? 0 : static_cast<std::size_t>(max_cost);
    std::uint64_t visited = 0;

    std::vector<SymbolId> path;

    // Row r over the target: r[i] = distance(path, t[0..i)).
    auto visit = [&](auto&& self, PatternDict::NodeIndex node,
                     const std::vector<std::size_t>& row) -> void {
        ++visited;
        if (dict.terminal(node) > 0 && row[n] <= cost_cap) {
            Correction c;
            c.pattern.level = dict.level();
            c.pattern.symbols = path;
            c.pattern.text = dict.table().decode(path);
            c.distance = row[n];
            c.occurrences = dict.terminal(node);
            out.corrections.push_back(std::move(c));
        }
        if (*std::min_element(row.begin(), row.end()) > cost_cap) return;  // prune
        std::vector<std::size_t> next(n + 1);
        for (const auto& [sym, child] : dict.edges(node)) {
            next[0] = row[0] + 1;
            for (std::size_t i = 1; i <= n; ++i) {
                next[i] = std::min({
                    row[i - 1] + (t[i - 1] == sym ? 0 : 1),
                    row[i] + 1,
                    next[i - 1] + 1,
                });
            }
            path.push_back(sym);
            self(self, child, next);
            path.pop_back();
        }
    };

    std::vector<std::size_t> first(n + 1);
    for (std::size_t i = 0; i <= n; ++i) first[i] = i;
    visit(visit, PatternDict::kRoot, first);

    if (visited_nodes != nullptr) *visited_nodes = visited;
    out.target_occurrences = dict.lookup_symbols(t).value_or(0);
    rank_corrections(out.corrections);
    return out;
}

Decision is_anomalous(const CorrectionSet& cs, const ThresholdConfig& cfg) {
    if (cs.target_occurrences == 0) return {Verdict::AnomalousMissing, 0.0};
    const std::size_t classes = static_cast<std::size_t>(cfg.max_cost) + 1;
    std::vector<std::uint64_t> best(classes, 0);
    for (const Correction& c : cs.corrections) {
        if (c.distance < classes) best[c.distance] = std::max(best[c.distance], c.occurrences);
    }
    std::uint64_t denom = 0;
    for (std::uint64_t b : best) denom += b;
    double score =
        static_cast<double>(cs.target_occurrences) * 100.0 / static_cast<double>(denom);
    return {score < cfg.alpha ? Verdict::AnomalousRare : Verdict::Normal, score};
}

}  // namespace idioscan
