#include "schub/polynomial.hpp"

#include <algorithm>
#include <sstream>

namespace schub {

int monomial_degree(const Monomial& m) {
    int d = 0;
    for (int e : m) d += e;
    return d;
}

void trim_monomial(Monomial& m) {
    while (!m.empty() && m.back() == 0) m.pop_back();
}

Monomial monomial_mul(const Monomial& a, const Monomial& b) {
    Monomial out(std::max(a.size(), b.size()), 0);
    for (size_t i = 0; i < a.size(); ++i) out[i] += a[i];
    for (size_t i = 0; i < b.size(); ++i) out[i] += b[i];
    return out;
}

bool term_order_less(const Monomial& a, const Monomial& b) {
    const int da = monomial_degree(a), db = monomial_degree(b);
    if (da != db) return da < db;
    return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
}

Polynomial::Polynomial(const Int& constant) {
    if (constant != 0) terms_.emplace(Monomial{}, constant);
}

Polynomial::Polynomial(long long constant) : Polynomial(Int(constant)) {}

Polynomial Polynomial::variable(int i) {
    if (i < 1) throw error("variable index must be >= 1");
    Monomial m(i, 0);
    m[i - 1] = 1;
    return monomial(std::move(m));
}

Polynomial Polynomial::monomial(Monomial m, Int coeff) {
    Polynomial f;
    f.add_term(std::move(m), coeff);
    return f;
}

int Polynomial::nvars() const {
    size_t n = 0;
    for (const auto& [m, c] : terms_) n = std::max(n, m.size());
    return static_cast<int>(n);
}

Int Polynomial::coefficient(const Monomial& m) const {
    Monomial key = m;
    trim_monomial(key);
    auto it = terms_.find(key);
    return it == terms_.end() ? Int(0) : it->second;
}

bool Polynomial::is_homogeneous(int degree) const {
    for (const auto& [m, c] : terms_)
        if (monomial_degree(m) != degree) return false;
    return true;
}

bool Polynomial::has_nonnegative_coefficients() const {
    for (const auto& [m, c] : terms_)
        if (c < 0) return false;
    return true;
}

void Polynomial::add_term(Monomial m, const Int& coeff) {
    if (coeff == 0) return;
    trim_monomial(m);
    if (m.size() > 0 && *std::min_element(m.begin(), m.end()) < 0)
        throw error("negative exponent");
    auto [it, inserted] = terms_.emplace(std::move(m), coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second == 0) terms_.erase(it);
    }
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
    for (const auto& [m, c] : other.terms_) add_term(m, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
    for (const auto& [m, c] : other.terms_) add_term(m, -c);
    return *this;
}

Polynomial Polynomial::operator+(const Polynomial& other) const {
    Polynomial out = *this;
    out += other;
    return out;
}

Polynomial Polynomial::operator-(const Polynomial& other) const {
    Polynomial out = *this;
    out -= other;
    return out;
}

Polynomial Polynomial::operator-() const {
    Polynomial out;
    for (const auto& [m, c] : terms_) out.terms_.emplace(m, -c);
    return out;
}

Polynomial Polynomial::operator*(const Polynomial& other) const {
    Polynomial out;
    for (const auto& [ma, ca] : terms_)
        for (const auto& [mb, cb] : other.terms_)
            out.add_term(monomial_mul(ma, mb), ca * cb);
    return out;
}

Polynomial Polynomial::operator*(const Int& scalar) const {
    Polynomial out;
    if (scalar == 0) return out;
    for (const auto& [m, c] : terms_) out.terms_.emplace(m, c * scalar);
    return out;
}

std::vector<std::pair<Monomial, Int>> Polynomial::sorted_terms() const {
    std::vector<std::pair<Monomial, Int>> out(terms_.begin(), terms_.end());
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        return term_order_less(a.first, b.first);
    });
    return out;
}

Int Polynomial::evaluate_all_ones() const {
    Int total = 0;
    for (const auto& [m, c] : terms_) total += c;
    return total;
}

std::string to_string(const Polynomial& f) {
    if (f.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : f.sorted_terms()) {
        Int abs_c = c < 0 ? Int(-c) : c;
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        std::ostringstream body;
        bool star = false;
        for (size_t i = 0; i < m.size(); ++i) {
            if (m[i] == 0) continue;
            if (star) body << "*";
            body << "x" << (i + 1);
            if (m[i] > 1) body << "^" << m[i];
            star = true;
        }
        if (!star) {
            os << abs_c;
        } else {
            if (abs_c != 1) os << abs_c << "*";
            os << body.str();
        }
    }
    return os.str();
}

} // namespace schub
