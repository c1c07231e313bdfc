#include <algorithm>
#include <numeric>

#include "core/autocorrect.hpp"

namespace idioscan {

std::size_t levenshtein(std::span<const SymbolId> a, std::span<const SymbolId> b) {
    if (a.size() > b.size()) std::swap(a, b);  // keep the row on the short side
    std::vector<std::size_t> row(a.size() + 1);
    std::iota(row.begin(), row.end(), std::size_t{0});
    for (std::size_t j = 1; j <= b.size(); ++j) {
        std::size_t diag = row[0];
        row[0] = j;
        for (std::size_t i = 1; i <= a.size(); ++i) {
            std::size_t next = std::min({
                diag + (a[i - 1] == b[j - 1] ? 0 : 1),
                row[i] + 1,
                row[i - 1] + 1,
            });
            diag = row[i];
            row[i] = next;
        }
    }
    return row[a.size()];
}

}  // namespace idioscan
