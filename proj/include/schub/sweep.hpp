#pragma once

#include <vector>

#include "schub/diagram.hpp"

namespace schub {

// All diagrams with rows in {1..rows}, at most `max_distinct` distinct
// columns, each with multiplicity 1..max_mult. Includes the empty diagram.
std::vector<Diagram> enumerate_box_diagrams(int rows, int max_distinct, int max_mult);

// All nonempty subsets of {1..rows} in canonical (lexicographic) order.
std::vector<Column> enumerate_columns(int rows);

} // namespace schub
