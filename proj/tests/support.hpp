// Test-only helpers: independent oracles and generators. Nothing here may
// call into the implementation paths it is used to check.
#pragma once

#include <fstream>
#include <random>
#include <set>
#include <vector>

#include "schub/diagram.hpp"
#include "schub/io.hpp"
#include "schub/permutation.hpp"
#include "schub/polynomial.hpp"

namespace schub::testing {

struct Golden {
    Diagram diagram;
    Polynomial character;
    Int dimension = 0;
};

inline Golden load_golden(const std::string& name) {
    const std::string path = std::string(SCHUB_GOLDEN_DIR) + "/" + name;
    std::ifstream in(path);
    if (!in) throw error("cannot open golden file " + path);
    json j;
    in >> j;
    Golden g;
    std::vector<Column> cols;
    for (const auto& col : j.at("diagram")) cols.push_back(col.get<Column>());
    g.diagram = Diagram(std::move(cols));
    g.character = polynomial_from_json(j.at("character"));
    g.dimension = j.at("dimension").get<long long>();
    return g;
}

// Brute-force reduced words of a permutation via descents of w itself:
// (i_1,...,i_l) with s_{i_1}...s_{i_l} w = id reading i_l first, matching the
// diagram convention.
inline void permutation_words_dfs(const Permutation& w, std::vector<int>& path,
                                  std::set<std::vector<int>>& out) {
    const auto des = w.descents();
    if (des.empty()) {
        out.emplace(path.rbegin(), path.rend());
        return;
    }
    for (int k : des) {
        path.push_back(k);
        permutation_words_dfs(w.times_s(k), path, out);
        path.pop_back();
    }
}

inline std::set<std::vector<int>> permutation_reduced_words(const Permutation& w) {
    std::set<std::vector<int>> out;
    std::vector<int> path;
    permutation_words_dfs(w, path, out);
    return out;
}

// Diagram of a partition: column j of the diagram is {1,...,lambda'_j}.
inline Diagram partition_diagram(const std::vector<int>& lambda) {
    std::vector<Column> cols;
    const int width = lambda.empty() ? 0 : lambda.front();
    for (int j = 1; j <= width; ++j) {
        Column c;
        for (size_t i = 0; i < lambda.size(); ++i)
            if (lambda[i] >= j) c.push_back(static_cast<int>(i) + 1);
        cols.push_back(std::move(c));
    }
    return Diagram(std::move(cols));
}

// Schur polynomial by direct enumeration of semistandard tableaux: rows
// weakly increasing, columns strictly increasing, entries in 1..n.
inline void ssyt_dfs(const std::vector<int>& lambda, int n, size_t row, size_t col,
                     std::vector<std::vector<int>>& t, Polynomial& acc, Monomial& weight) {
    if (row == lambda.size()) {
        acc.add_term(weight, 1);
        return;
    }
    if (col == static_cast<size_t>(lambda[row])) {
        ssyt_dfs(lambda, n, row + 1, 0, t, acc, weight);
        return;
    }
    int lo = 1;
    if (col > 0) lo = std::max(lo, t[row][col - 1]);
    if (row > 0) lo = std::max(lo, t[row - 1][col] + 1);
    for (int v = lo; v <= n; ++v) {
        t[row][col] = v;
        weight[v - 1] += 1;
        ssyt_dfs(lambda, n, row, col + 1, t, acc, weight);
        weight[v - 1] -= 1;
    }
}

inline Polynomial schur_polynomial_ssyt(const std::vector<int>& lambda, int n) {
    Polynomial acc;
    std::vector<std::vector<int>> t;
    for (int part : lambda) t.emplace_back(part, 0);
    Monomial weight(n, 0);
    ssyt_dfs(lambda, n, 0, 0, t, acc, weight);
    return acc;
}

// Deterministic random polynomials for property tests.
inline Polynomial random_polynomial(std::mt19937& rng, int max_vars = 6, int max_terms = 6,
                                    int max_exp = 3, bool zero_constant = false) {
    std::uniform_int_distribution<int> nterms(1, max_terms);
    std::bernoulli_distribution use_var(0.45);
    std::uniform_int_distribution<int> exp(1, max_exp);
    std::uniform_int_distribution<int> coeff(-9, 9);
    Polynomial f;
    const int terms = nterms(rng);
    for (int t = 0; t < terms; ++t) {
        Monomial m(max_vars, 0);
        for (int i = 0; i < max_vars; ++i) m[i] = use_var(rng) ? exp(rng) : 0;
        if (zero_constant && monomial_degree(m) == 0) m[exp(rng) % max_vars] = 1;
        int c = coeff(rng);
        if (c == 0) c = 1;
        f.add_term(std::move(m), c);
    }
    return f;
}

} // namespace schub::testing
