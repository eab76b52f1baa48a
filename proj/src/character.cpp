#include "schub/character.hpp"

#include <map>
#include <mutex>

namespace schub {

std::string method_name(Method m) {
    switch (m) {
        case Method::recursion: return "recursion";
        case Method::reduced_words: return "reduced_words";
        case Method::divided_difference: return "divided_difference";
        case Method::oracle: return "oracle";
    }
    return "?";
}

CharacterResult make_character_result(Polynomial character, Method method, Diagram diagram) {
    if (!character.is_homogeneous(diagram.box_count()))
        throw internal_error("character is not homogeneous of degree |D|");
    if (!character.has_nonnegative_coefficients())
        throw internal_error("character has a negative coefficient");
    return CharacterResult{std::move(character), method, std::move(diagram)};
}

namespace {

void column_character_dfs(const Column& a, size_t idx, int min_next, Monomial& mon,
                          Polynomial& acc) {
    if (idx == a.size()) {
        acc.add_term(mon, 1);
        return;
    }
    for (int b = min_next; b <= a[idx]; ++b) {
        mon[b - 1] += 1;
        column_character_dfs(a, idx + 1, b + 1, mon, acc);
        mon[b - 1] -= 1;
    }
}

} // namespace

Polynomial single_column_character(const Column& a, int nvars) {
    if (!a.empty() && nvars > 0 && a.back() > nvars)
        throw error("single_column_character: nvars too small for column");
    Polynomial acc;
    Monomial mon(a.empty() ? 0 : a.back(), 0);
    column_character_dfs(a, 0, 1, mon, acc);
    return acc;
}

namespace {

std::mutex recursion_mutex;
std::map<std::vector<Column>, Polynomial> recursion_cache;

Polynomial character_recursive_impl(const Diagram& d) {
    if (d.empty()) return Polynomial(1);
    if (d.column_count() == 1) return single_column_character(d.columns()[0]);
    {
        std::lock_guard<std::mutex> lock(recursion_mutex);
        auto it = recursion_cache.find(d.columns());
        if (it != recursion_cache.end()) return it->second;
    }
    Polynomial acc;
    for (const auto& wtn : diagram_descents(d)) {
        const Polynomial sub = character_recursive_impl(apply_s_k(d, wtn.k));
        acc += Polynomial::variable(wtn.k) * bergeron_sottile(sub, wtn.k + 1);
    }
    Polynomial result = zeta(acc);
    std::lock_guard<std::mutex> lock(recursion_mutex);
    recursion_cache.emplace(d.columns(), result);
    return result;
}

} // namespace

CharacterResult character_recursive(const Diagram& d) {
    if (!classify(d).translucent)
        throw not_translucent_error("character_recursive requires a translucent diagram");
    return make_character_result(character_recursive_impl(d), Method::recursion, d);
}

CharacterResult character_via_reduced_words(const Diagram& d) {
    if (!classify(d).transparent)
        throw not_transparent_error("character_via_reduced_words requires a transparent diagram");
    Polynomial acc;
    for (const auto& word : reduced_words(d)) {
        // Z x_{i_l} R_{i_l+1} ... Z x_{i_1} R_{i_1+1} (1): the i_1 block acts
        // first on the constant 1.
        Polynomial p(1);
        for (int letter : word)
            p = zeta(Polynomial::variable(letter) * bergeron_sottile(p, letter + 1));
        acc += p;
    }
    return make_character_result(std::move(acc), Method::reduced_words, d);
}

namespace {

std::mutex schubert_mutex;
std::map<std::vector<int>, Polynomial> dd_cache;
std::map<std::vector<int>, Polynomial> nst_cache;

Polynomial staircase(int n) {
    Polynomial p(1);
    for (int i = 1; i < n; ++i) {
        Monomial m(i, 0);
        m[i - 1] = n - i;
        p = p * Polynomial::monomial(std::move(m));
    }
    return p;
}

Polynomial schubert_dd_impl(const Permutation& w) {
    {
        std::lock_guard<std::mutex> lock(schubert_mutex);
        auto it = dd_cache.find(w.word());
        if (it != dd_cache.end()) return it->second;
    }
    Polynomial result;
    if (w == Permutation::longest(w.size())) {
        result = staircase(w.size());
    } else {
        // Climb along the smallest ascent; the result is path-independent.
        int k = 1;
        while (w(k) > w(k + 1)) ++k;
        result = divided_difference(schubert_dd_impl(w.times_s(k)), k);
    }
    std::lock_guard<std::mutex> lock(schubert_mutex);
    dd_cache.emplace(w.word(), result);
    return result;
}

Polynomial schubert_nst_impl(const Permutation& w) {
    if (w.is_identity()) return Polynomial(1);
    {
        std::lock_guard<std::mutex> lock(schubert_mutex);
        auto it = nst_cache.find(w.word());
        if (it != nst_cache.end()) return it->second;
    }
    Polynomial acc;
    for (int k : w.descents()) {
        const Polynomial sub = schubert_nst_impl(w.times_s(k).normalized());
        acc += Polynomial::variable(k) * bergeron_sottile(sub, k + 1);
    }
    Polynomial result = zeta(acc);
    std::lock_guard<std::mutex> lock(schubert_mutex);
    nst_cache.emplace(w.word(), result);
    return result;
}

} // namespace

Polynomial schubert_divided_difference(const Permutation& w) {
    return schubert_dd_impl(w.normalized());
}

Polynomial schubert_nst(const Permutation& w) {
    return schubert_nst_impl(w.normalized());
}

bool verify_recursion_identity(const Diagram& d,
                               const std::function<Polynomial(const Diagram&)>& char_of) {
    if (!classify(d).clear)
        throw not_clear_error("verify_recursion_identity requires a clear diagram");
    const Polynomial lhs = char_of(d);
    Polynomial rhs = bergeron_sottile(lhs, 1);
    for (const auto& wtn : diagram_descents(d)) {
        const Polynomial sub = char_of(apply_s_k(d, wtn.k));
        rhs += Polynomial::variable(wtn.k) * bergeron_sottile(sub, wtn.k + 1);
    }
    return lhs == rhs;
}

} // namespace schub
