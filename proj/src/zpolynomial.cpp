#include "schub/zpolynomial.hpp"

#include <algorithm>

namespace schub {

Monomial z_weight(const ZMonomial& m) {
    Monomial w;
    for (const auto& [i, j] : m) {
        if (w.size() < static_cast<size_t>(j)) w.resize(j, 0);
        w[j - 1] += 1;
    }
    return w;
}

void ZPolynomial::add_term(ZMonomial m, const Int& coeff) {
    if (coeff == 0) return;
    std::sort(m.begin(), m.end());
    auto [it, inserted] = terms_.emplace(std::move(m), coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second == 0) terms_.erase(it);
    }
}

ZPolynomial& ZPolynomial::operator+=(const ZPolynomial& other) {
    for (const auto& [m, c] : other.terms_) add_term(m, c);
    return *this;
}

ZPolynomial& ZPolynomial::operator-=(const ZPolynomial& other) {
    for (const auto& [m, c] : other.terms_) add_term(m, -c);
    return *this;
}

ZPolynomial ZPolynomial::operator*(const ZPolynomial& other) const {
    ZPolynomial out;
    for (const auto& [ma, ca] : terms_) {
        for (const auto& [mb, cb] : other.terms_) {
            ZMonomial m;
            m.reserve(ma.size() + mb.size());
            std::merge(ma.begin(), ma.end(), mb.begin(), mb.end(), std::back_inserter(m));
            out.add_term(std::move(m), ca * cb);
        }
    }
    return out;
}

ZPolynomial ZPolynomial::operator*(const Int& scalar) const {
    ZPolynomial out;
    if (scalar == 0) return out;
    for (const auto& [m, c] : terms_) out.add_term(m, c * scalar);
    return out;
}

namespace {

void minor_dfs(const Column& rows, const Column& cols, const FlagBound& fb, size_t row_idx,
               std::vector<bool>& used, int sign, ZMonomial& partial, ZPolynomial& acc) {
    const size_t r = rows.size();
    if (row_idx == r) {
        acc.add_term(partial, sign);
        return;
    }
    for (size_t p = 0; p < r; ++p) {
        if (used[p]) continue;
        if (cols[p] > fb.bound(rows[row_idx])) continue; // zero entry
        int transpositions = 0;
        for (size_t q = 0; q < p; ++q)
            if (!used[q]) ++transpositions;
        used[p] = true;
        partial.emplace_back(rows[row_idx], cols[p]);
        minor_dfs(rows, cols, fb, row_idx + 1, used,
                  transpositions % 2 == 0 ? sign : -sign, partial, acc);
        partial.pop_back();
        used[p] = false;
    }
}

} // namespace

ZPolynomial expand_minor(const Column& rows, const Column& cols, const FlagBound& fb) {
    if (rows.size() != cols.size())
        throw error("expand_minor: row and column sets must have equal size");
    ZPolynomial acc;
    std::vector<bool> used(rows.size(), false);
    ZMonomial partial;
    minor_dfs(rows, cols, fb, 0, used, 1, partial, acc);
    return acc;
}

} // namespace schub
