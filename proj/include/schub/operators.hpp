#pragma once

#include <vector>

#include "schub/polynomial.hpp"

namespace schub {

// Strictly increasing ranks d_1 < d_2 < ... < d_n of a partial flag,
// with d_0 = 0 implicit; block sizes c_i = d_i - d_{i-1}.
class RankSequence {
public:
    explicit RankSequence(std::vector<int> d);

    int size() const { return static_cast<int>(d_.size()); }
    int d(int i) const; // d_0 = 0
    int c(int i) const { return d(i) - d(i - 1); }
    const std::vector<int>& values() const { return d_; }

private:
    std::vector<int> d_;
};

// Swap x_k and x_{k+1}.
Polynomial swap_variables(const Polynomial& f, int k);

// Bergeron-Sottile operator: x_i -> x_i (i<k), 0 (i=k), x_{i-1} (i>k).
Polynomial bergeron_sottile(const Polynomial& f, int k);

// zeta = 1/(1 - R_1) = sum of R_1^j; requires zero constant term.
Polynomial zeta(const Polynomial& f);

// Divided difference (f - s_k f)/(x_k - x_{k+1}); the division is exact.
Polynomial divided_difference(const Polynomial& f, int k);

// Trimming operator (R_{k+1} f - R_k f)/x_k; the division is exact.
Polynomial trimming(const Polynomial& f, int k);

// Partial-flag Bergeron-Sottile operator:
// x_i -> x_i (i < d_k), 0 (d_k <= i < d_{k+1}), x_{i-c_{k+1}} (i >= d_{k+1}),
// with d_{k+1} read as infinity when k+1 exceeds the sequence; identity for
// k beyond the sequence length.
Polynomial bergeron_sottile_partial(const Polynomial& f, int k, const RankSequence& d);

} // namespace schub
