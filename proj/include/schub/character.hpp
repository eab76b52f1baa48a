#pragma once

#include <functional>
#include <string>

#include "schub/diagram.hpp"
#include "schub/operators.hpp"
#include "schub/polynomial.hpp"

namespace schub {

enum class Method { recursion, reduced_words, divided_difference, oracle };

std::string method_name(Method m);

// A computed character together with its provenance. Coefficients are
// nonnegative and every term has degree equal to the box count.
struct CharacterResult {
    Polynomial character;
    Method method = Method::recursion;
    Diagram diagram;

    Int dimension() const { return character.evaluate_all_ones(); }
};

// Checks the CharacterResult invariants; throws internal_error on violation.
CharacterResult make_character_result(Polynomial character, Method method, Diagram diagram);

// Character of a single-column module: sum over strictly increasing b <= a
// of x_{b_1}...x_{b_r}. If nvars > 0 it must be at least max(a).
Polynomial single_column_character(const Column& a, int nvars = 0);

// Character by the descent recursion; requires a translucent diagram
// (throws not_translucent_error otherwise). Memoized on canonical form.
CharacterResult character_recursive(const Diagram& d);

// Character as a sum over reduced words; requires a transparent diagram.
CharacterResult character_via_reduced_words(const Diagram& d);

// Schubert polynomial by divided differences from the staircase monomial.
Polynomial schubert_divided_difference(const Permutation& w);

// Schubert polynomial by the ascending descent recursion.
Polynomial schubert_nst(const Permutation& w);

// Checks the identity char(D) = R_1 char(D) + sum_k x_k R_{k+1} char(s_k D)
// with characters supplied by `char_of`; requires a clear diagram.
bool verify_recursion_identity(const Diagram& d,
                               const std::function<Polynomial(const Diagram&)>& char_of);

} // namespace schub
