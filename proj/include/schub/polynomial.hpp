#pragma once

#include <map>
#include <string>
#include <vector>

#include "schub/bigint.hpp"
#include "schub/errors.hpp"

namespace schub {

// Exponent vector over x_1..x_n, dense up to the last nonzero entry
// (trailing zeros trimmed).
using Monomial = std::vector<int>;

int monomial_degree(const Monomial& m);
void trim_monomial(Monomial& m);
Monomial monomial_mul(const Monomial& a, const Monomial& b);

// Canonical term order: total degree ascending, then exponent vector
// lexicographically descending. Stable target for serialization.
bool term_order_less(const Monomial& a, const Monomial& b);

// Sparse multivariate polynomial over Z. All arithmetic is exact; no stored
// zero coefficients.
class Polynomial {
public:
    Polynomial() = default;
    Polynomial(const Int& constant); // implicit: constants convert freely
    Polynomial(long long constant);

    static Polynomial variable(int i); // x_i, 1-based
    static Polynomial monomial(Monomial m, Int coeff = 1);

    bool is_zero() const { return terms_.empty(); }
    int term_count() const { return static_cast<int>(terms_.size()); }
    int nvars() const; // smallest n covering the support
    const std::map<Monomial, Int>& terms() const { return terms_; }

    Int coefficient(const Monomial& m) const;
    Int constant_term() const { return coefficient({}); }

    bool is_homogeneous(int degree) const;
    bool has_nonnegative_coefficients() const;

    Polynomial& operator+=(const Polynomial& other);
    Polynomial& operator-=(const Polynomial& other);
    Polynomial operator+(const Polynomial& other) const;
    Polynomial operator-(const Polynomial& other) const;
    Polynomial operator-() const;
    Polynomial operator*(const Polynomial& other) const;
    Polynomial operator*(const Int& scalar) const;

    bool operator==(const Polynomial& other) const { return terms_ == other.terms_; }
    bool operator!=(const Polynomial& other) const { return terms_ != other.terms_; }

    void add_term(Monomial m, const Int& coeff);

    // Terms sorted by the canonical order.
    std::vector<std::pair<Monomial, Int>> sorted_terms() const;

    // Sum of coefficients; the dimension when the polynomial is a character.
    Int evaluate_all_ones() const;

private:
    std::map<Monomial, Int> terms_;
};

std::string to_string(const Polynomial& f);

} // namespace schub
