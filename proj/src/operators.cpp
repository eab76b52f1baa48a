#include "schub/operators.hpp"

#include <algorithm>
#include <limits>

namespace schub {

RankSequence::RankSequence(std::vector<int> d) : d_(std::move(d)) {
    int prev = 0;
    for (int v : d_) {
        if (v <= prev) throw error("rank sequence must be strictly increasing and positive");
        prev = v;
    }
    if (d_.empty()) throw error("rank sequence must be nonempty");
}

int RankSequence::d(int i) const {
    if (i < 0 || i > size()) throw error("rank sequence index out of range");
    return i == 0 ? 0 : d_[i - 1];
}

Polynomial swap_variables(const Polynomial& f, int k) {
    if (k < 1) throw error("swap_variables: k must be >= 1");
    Polynomial out;
    for (const auto& [m, c] : f.terms()) {
        Monomial e = m;
        if (e.size() < static_cast<size_t>(k + 1)) e.resize(k + 1, 0);
        std::swap(e[k - 1], e[k]);
        out.add_term(std::move(e), c);
    }
    return out;
}

Polynomial bergeron_sottile(const Polynomial& f, int k) {
    if (k < 1) throw error("bergeron_sottile: k must be >= 1");
    Polynomial out;
    for (const auto& [m, c] : f.terms()) {
        if (m.size() < static_cast<size_t>(k)) {
            out.add_term(m, c);
            continue;
        }
        if (m[k - 1] != 0) continue; // x_k -> 0 kills the term
        Monomial e = m;
        e.erase(e.begin() + (k - 1)); // shifts x_i to x_{i-1} for i > k
        out.add_term(std::move(e), c);
    }
    return out;
}

Polynomial zeta(const Polynomial& f) {
    if (f.constant_term() != 0)
        throw nonzero_constant_term_error("zeta requires zero constant term");
    Polynomial acc;
    Polynomial g = f;
    while (!g.is_zero()) {
        acc += g;
        g = bergeron_sottile(g, 1);
    }
    return acc;
}

namespace {

// Exact division by (x_k - x_{k+1}), long division along the x_k-degree.
Polynomial divide_by_xk_minus_xk1(Polynomial g, int k) {
    Polynomial quotient;
    while (!g.is_zero()) {
        const Monomial* lead = nullptr;
        int best = -1;
        for (const auto& [m, c] : g.terms()) {
            const int ek = m.size() >= static_cast<size_t>(k) ? m[k - 1] : 0;
            if (ek > best) {
                best = ek;
                lead = &m;
            }
        }
        if (best == 0)
            throw internal_error("division by x_k - x_{k+1} leaves a remainder");
        Monomial q = *lead;
        const Int coeff = g.terms().at(*lead);
        q[k - 1] -= 1;
        Monomial swapped = q;
        if (swapped.size() < static_cast<size_t>(k + 1)) swapped.resize(k + 1, 0);
        swapped[k] += 1;
        quotient.add_term(q, coeff);
        g.add_term(*lead, -coeff);
        g.add_term(std::move(swapped), coeff);
    }
    return quotient;
}

} // namespace

Polynomial divided_difference(const Polynomial& f, int k) {
    if (k < 1) throw error("divided_difference: k must be >= 1");
    return divide_by_xk_minus_xk1(f - swap_variables(f, k), k);
}

Polynomial trimming(const Polynomial& f, int k) {
    if (k < 1) throw error("trimming: k must be >= 1");
    const Polynomial g = bergeron_sottile(f, k + 1) - bergeron_sottile(f, k);
    Polynomial out;
    for (const auto& [m, c] : g.terms()) {
        if (m.size() < static_cast<size_t>(k) || m[k - 1] == 0)
            throw internal_error("division by x_k leaves a remainder");
        Monomial e = m;
        e[k - 1] -= 1;
        out.add_term(std::move(e), c);
    }
    return out;
}

Polynomial bergeron_sottile_partial(const Polynomial& f, int k, const RankSequence& d) {
    if (k < 1) throw error("bergeron_sottile_partial: k must be >= 1");
    if (k > d.size()) return f; // the flag is unchanged beyond the sequence
    const int dk = d.d(k);
    const bool has_next = k + 1 <= d.size();
    const int dk1 = has_next ? d.d(k + 1) : std::numeric_limits<int>::max();
    const int shift = has_next ? d.c(k + 1) : 0;

    Polynomial out;
    for (const auto& [m, c] : f.terms()) {
        Monomial e;
        bool dead = false;
        for (size_t idx = 0; idx < m.size() && !dead; ++idx) {
            if (m[idx] == 0) continue;
            const int i = static_cast<int>(idx) + 1;
            int target;
            if (i < dk) {
                target = i;
            } else if (i < dk1) {
                dead = true;
                break;
            } else {
                target = i - shift;
            }
            if (e.size() < static_cast<size_t>(target)) e.resize(target, 0);
            e[target - 1] += m[idx];
        }
        if (!dead) out.add_term(std::move(e), c);
    }
    return out;
}

} // namespace schub
