#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "schub/bigint.hpp"
#include "schub/errors.hpp"
#include "schub/permutation.hpp"

namespace schub {

// A column is a strictly increasing set of row indices >= 1.
using Column = std::vector<int>;

// A diagram is a multiset of columns, kept in canonical form:
// empty columns dropped, columns sorted lexicographically.
// All semantics are invariant under column reordering.
class Diagram {
public:
    Diagram() = default;
    explicit Diagram(std::vector<Column> columns);
    Diagram(std::initializer_list<Column> columns)
        : Diagram(std::vector<Column>(columns)) {}

    const std::vector<Column>& columns() const { return cols_; }
    int column_count() const { return static_cast<int>(cols_.size()); }
    bool empty() const { return cols_.empty(); }
    int box_count() const;
    int max_row() const; // 0 for the empty diagram

    bool operator==(const Diagram& other) const { return cols_ == other.cols_; }
    bool operator<(const Diagram& other) const { return cols_ < other.cols_; }

private:
    std::vector<Column> cols_;
};

struct DescentWitness {
    int k = 0;            // the descent row
    int column_index = 0; // 0-based index of the witness column in canonical order

    // The box removed by s_k, as (row, column) with a 1-based column.
    std::pair<int, int> border_cell() const { return {k, column_index + 1}; }
};

struct Classification {
    bool clear = false;
    bool transparent = false;
    bool translucent = false;
};

// Rothe diagram of w: boxes (i,j) with j < w(i) and i < w^{-1}(j).
Diagram rothe_diagram(const Permutation& w);

// True iff every column containing row k also contains row k+1.
bool is_k_full(const Diagram& d, int k);

// All descents of the diagram, with the leftmost witness column for each.
std::vector<DescentWitness> diagram_descents(const Diagram& d);

// Descent rows only.
std::vector<int> descent_set(const Diagram& d);

// Delete the border cell of the descent at k, then swap rows k and k+1.
// Throws not_a_descent_error if k is not a descent of d.
Diagram apply_s_k(const Diagram& d, int k);

// clear / transparent / translucent flags; memoized on canonical form.
Classification classify(const Diagram& d);

// Each column repeated m times.
Diagram repeat_columns(const Diagram& d, int m);

// All reduced words (i_1,...,i_l) with s_{i_1}...s_{i_l} d = {}: the letter
// i_l is applied to d first and i_1 last. Throws cap_exceeded_error when the
// enumeration passes `cap`.
std::vector<std::vector<int>> reduced_words(const Diagram& d,
                                            std::optional<Int> cap = std::nullopt);

// Number of reduced words, without materializing them; memoized.
Int count_reduced_words(const Diagram& d);

} // namespace schub
