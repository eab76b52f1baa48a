#pragma once

#include <map>
#include <utility>
#include <vector>

#include "schub/bigint.hpp"
#include "schub/diagram.hpp"
#include "schub/flag_bound.hpp"
#include "schub/polynomial.hpp"

namespace schub {

// A monomial in the matrix entries z_{ij}: a sorted multiset of (i,j) pairs.
using ZMonomial = std::vector<std::pair<int, int>>;

// Torus weight of a z-monomial: the x-monomial collecting the column indices.
Monomial z_weight(const ZMonomial& m);

// Sparse exact polynomial in the z_{ij}. Variables with j > bound(i) are
// identically zero and never appear.
class ZPolynomial {
public:
    ZPolynomial() = default;

    bool is_zero() const { return terms_.empty(); }
    int term_count() const { return static_cast<int>(terms_.size()); }
    const std::map<ZMonomial, Int>& terms() const { return terms_; }

    void add_term(ZMonomial m, const Int& coeff);

    ZPolynomial& operator+=(const ZPolynomial& other);
    ZPolynomial& operator-=(const ZPolynomial& other);
    ZPolynomial operator*(const ZPolynomial& other) const;
    ZPolynomial operator*(const Int& scalar) const;

    bool operator==(const ZPolynomial& other) const { return terms_ == other.terms_; }

private:
    std::map<ZMonomial, Int> terms_;
};

// The minor of the zero-patterned matrix on rows `rows` and columns `cols`
// (both strictly increasing, equal size). Entries z_{ij} with j > bound(i)
// are zero, so the expansion may be the zero polynomial.
ZPolynomial expand_minor(const Column& rows, const Column& cols, const FlagBound& fb);

} // namespace schub
