#pragma once

#include <string>

#include "json.hpp"

#include "schub/diagram.hpp"
#include "schub/operators.hpp"
#include "schub/polynomial.hpp"

namespace schub {

using json = nlohmann::ordered_json;

// Permutation input: a digit string for n <= 9 ("146253"), comma-separated
// beyond ("1,4,6,2,5,3").
Permutation parse_permutation(const std::string& text);

// Rank sequence input: "1,2,5,6,7".
RankSequence parse_rank_sequence(const std::string& text);

// Diagram specs:
//   ""                      empty diagram
//   "2,3;2,3,5;3"           column list
//   "##.\n#.." or "##./#.." grid, row 1 first, '#' box, '.' empty
//   "rothe:146253"          Rothe diagram of a permutation
//   "repeat:2x(rothe:21453)" column repetition of an inner spec
Diagram parse_diagram_spec(const std::string& text);

std::string column_list_string(const Diagram& d);
std::string grid_string(const Diagram& d);

json diagram_to_json(const Diagram& d);

// [{"exp":[2,1,0],"coeff":1},...] in canonical term order, exponent vectors
// padded to nvars (or to `min_vars` if larger).
json polynomial_to_json(const Polynomial& f, int min_vars = 0);
Polynomial polynomial_from_json(const json& j);

// Canonical text form, e.g. "x1^2*x2 + x1^2*x3".
Polynomial parse_polynomial(const std::string& text);

} // namespace schub
