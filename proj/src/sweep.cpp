#include "schub/sweep.hpp"

#include <algorithm>

namespace schub {

std::vector<Column> enumerate_columns(int rows) {
    std::vector<Column> out;
    for (int mask = 1; mask < (1 << rows); ++mask) {
        Column c;
        for (int r = 1; r <= rows; ++r)
            if (mask & (1 << (r - 1))) c.push_back(r);
        out.push_back(std::move(c));
    }
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

void sweep_dfs(const std::vector<Column>& columns, size_t start, int remaining_distinct,
               int max_mult, std::vector<Column>& current, std::vector<Diagram>& out) {
    out.push_back(Diagram(current));
    if (remaining_distinct == 0) return;
    for (size_t i = start; i < columns.size(); ++i) {
        const size_t base = current.size();
        for (int m = 1; m <= max_mult; ++m) {
            current.push_back(columns[i]);
            sweep_dfs(columns, i + 1, remaining_distinct - 1, max_mult, current, out);
        }
        current.resize(base);
    }
}

} // namespace

std::vector<Diagram> enumerate_box_diagrams(int rows, int max_distinct, int max_mult) {
    const std::vector<Column> columns = enumerate_columns(rows);
    std::vector<Diagram> out;
    std::vector<Column> current;
    sweep_dfs(columns, 0, max_distinct, max_mult, current, out);
    return out;
}

} // namespace schub
