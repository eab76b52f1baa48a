#include "schub/oracle.hpp"

#include <algorithm>
#include <cstdint>
#include <deque>
#include <limits>
#include <map>
#include <mutex>

#include "schub/rank.hpp"

namespace schub {

namespace {

void column_fillings_dfs(const Column& a, const FlagBound& fb, size_t idx, int min_next,
                         Column& current, std::vector<Column>& out) {
    if (idx == a.size()) {
        out.push_back(current);
        return;
    }
    for (int b = min_next; b <= fb.bound(a[idx]); ++b) {
        current.push_back(b);
        column_fillings_dfs(a, fb, idx + 1, b + 1, current, out);
        current.pop_back();
    }
}

void check_rows_fit(const Diagram& d, const FlagBound& fb) {
    if (d.max_row() > fb.nrows())
        throw error("diagram does not fit the flag bound");
}

std::int64_t to_int64(const Int& v) {
    if (v > std::numeric_limits<std::int64_t>::max() ||
        v < std::numeric_limits<std::int64_t>::min())
        throw internal_error("matrix entry exceeds int64 range");
    return static_cast<std::int64_t>(v);
}

struct ColumnGroup {
    Column column;
    int multiplicity = 0;
    std::vector<Column> fillings;
    std::vector<ZPolynomial> minors;
};

Int multiset_count(long long n, int m) {
    // C(n + m - 1, m)
    Int num = 1, den = 1;
    for (int i = 0; i < m; ++i) {
        num *= n + i;
        den *= i + 1;
    }
    return num / den;
}

std::mutex oracle_mutex;
std::map<std::pair<std::vector<Column>, std::vector<int>>, Polynomial> oracle_cache;

// Enumerates multisets of fillings (non-decreasing index tuples within each
// group of equal columns); permuting fillings among equal columns does not
// change the product of minors.
void oracle_dfs(const std::vector<ColumnGroup>& groups, size_t g, int copy, int min_idx,
                const ZPolynomial& product, Monomial weight, const Caps& caps,
                std::map<Monomial, std::vector<const ZPolynomial*>>& buckets,
                std::deque<ZPolynomial>& store) {
    if (g == groups.size()) {
        store.push_back(product);
        buckets[weight].push_back(&store.back());
        return;
    }
    const ColumnGroup& grp = groups[g];
    if (copy == grp.multiplicity) {
        oracle_dfs(groups, g + 1, 0, 0, product, std::move(weight), caps, buckets, store);
        return;
    }
    for (int i = min_idx; i < static_cast<int>(grp.fillings.size()); ++i) {
        ZPolynomial next = product * grp.minors[i];
        if (next.term_count() > caps.max_terms)
            throw too_large_error("expanded product exceeds term cap");
        Monomial w = weight;
        for (int b : grp.fillings[i]) {
            if (w.size() < static_cast<size_t>(b)) w.resize(b, 0);
            w[b - 1] += 1;
        }
        oracle_dfs(groups, g, copy + 1, i, next, std::move(w), caps, buckets, store);
    }
}

} // namespace

std::vector<Column> column_fillings(const Column& a, const FlagBound& fb) {
    std::vector<Column> out;
    Column current;
    column_fillings_dfs(a, fb, 0, 1, current, out);
    return out;
}

std::vector<Filling> enumerate_fillings(const Diagram& d, const FlagBound& fb,
                                        const Caps& caps) {
    check_rows_fit(d, fb);
    std::vector<std::vector<Column>> per_column;
    Int total = 1;
    for (const auto& col : d.columns()) {
        per_column.push_back(column_fillings(col, fb));
        total *= static_cast<long long>(per_column.back().size());
        if (total > caps.max_fillings)
            throw too_large_error("filling count exceeds cap");
    }
    if (total == 0) return {};
    std::vector<Filling> out;
    Filling current;
    current.entries.resize(d.column_count());
    // Lexicographic: later columns vary fastest.
    std::vector<size_t> idx(d.column_count(), 0);
    while (true) {
        for (int j = 0; j < d.column_count(); ++j)
            current.entries[j] = per_column[j][idx[j]];
        out.push_back(current);
        int j = d.column_count() - 1;
        while (j >= 0 && ++idx[j] == per_column[j].size()) {
            idx[j] = 0;
            --j;
        }
        if (j < 0) break;
    }
    return out;
}

ZPolynomial expand_delta(const Diagram& d, const Filling& tau, const FlagBound& fb,
                         const Caps& caps) {
    check_rows_fit(d, fb);
    if (static_cast<int>(tau.entries.size()) != d.column_count())
        throw error("filling does not match the diagram");
    ZPolynomial product;
    product.add_term({}, 1);
    for (int j = 0; j < d.column_count(); ++j) {
        if (tau.entries[j].size() != d.columns()[j].size())
            throw error("filling column has wrong size");
        product = product * expand_minor(d.columns()[j], tau.entries[j], fb);
        if (product.is_zero()) return product;
        if (product.term_count() > caps.max_terms)
            throw too_large_error("expanded product exceeds term cap");
    }
    return product;
}

CharacterResult character_oracle(const Diagram& d, const FlagBound& fb, const Caps& caps) {
    check_rows_fit(d, fb);
    const std::pair<std::vector<Column>, std::vector<int>> key{d.columns(), fb.bounds()};
    {
        std::lock_guard<std::mutex> lock(oracle_mutex);
        auto it = oracle_cache.find(key);
        if (it != oracle_cache.end())
            return make_character_result(it->second, Method::oracle, d);
    }

    std::vector<ColumnGroup> groups;
    for (const auto& col : d.columns()) {
        if (!groups.empty() && groups.back().column == col) {
            groups.back().multiplicity += 1;
            continue;
        }
        ColumnGroup grp;
        grp.column = col;
        grp.multiplicity = 1;
        grp.fillings = column_fillings(col, fb);
        for (const auto& b : grp.fillings)
            grp.minors.push_back(expand_minor(col, b, fb));
        groups.push_back(std::move(grp));
    }

    Int total = 1;
    for (const auto& grp : groups)
        total *= multiset_count(static_cast<long long>(grp.fillings.size()), grp.multiplicity);
    if (total > caps.max_fillings)
        throw too_large_error("filling count exceeds cap");

    std::map<Monomial, std::vector<const ZPolynomial*>> buckets;
    std::deque<ZPolynomial> store;
    ZPolynomial one;
    one.add_term({}, 1);
    oracle_dfs(groups, 0, 0, 0, one, Monomial{}, caps, buckets, store);

    Polynomial character;
    for (const auto& [weight, rows] : buckets) {
        // Weight-grading soundness: every monomial of every product carries
        // the weight of its filling.
        std::map<ZMonomial, int> col_index;
        for (const ZPolynomial* zp : rows)
            for (const auto& [zm, c] : zp->terms()) {
                if (z_weight(zm) != weight)
                    throw internal_error("product of minors is not a weight vector");
                col_index.emplace(zm, 0);
            }
        int next = 0;
        for (auto& [zm, idx] : col_index) idx = next++;
        std::vector<std::vector<std::int64_t>> matrix(
            rows.size(), std::vector<std::int64_t>(col_index.size(), 0));
        for (size_t r = 0; r < rows.size(); ++r)
            for (const auto& [zm, c] : rows[r]->terms())
                matrix[r][col_index[zm]] = to_int64(c);
        const int rank = exact_rank_hybrid(matrix);
        if (rank > 0) character.add_term(weight, rank);
    }

    std::lock_guard<std::mutex> lock(oracle_mutex);
    oracle_cache.emplace(key, character);
    return make_character_result(std::move(character), Method::oracle, d);
}

Polynomial kernel_character(const Diagram& d, int k, const FlagBound& base, const Caps& caps) {
    if (k < 1) throw error("kernel_character: k must be >= 1");
    if (d.max_row() < k) return Polynomial(); // both twists leave the bound unchanged
    const Polynomial upper = character_oracle(d, base.twist(k + 1), caps).character;
    const Polynomial lower = character_oracle(d, base.twist(k), caps).character;
    Polynomial diff = upper - lower;
    if (!diff.has_nonnegative_coefficients())
        throw internal_error("kernel character has a negative coefficient");
    return diff;
}

bool check_exchange_identity(const std::vector<ExchangeTerm>& terms, const FlagBound& fb) {
    if (terms.empty()) return true;
    std::vector<Column> shape = terms.front().rows;
    std::sort(shape.begin(), shape.end());
    for (const auto& t : terms) {
        std::vector<Column> s = t.rows;
        std::sort(s.begin(), s.end());
        if (s != shape) throw error("exchange terms must share a diagram shape");
        if (t.rows.size() != t.entries.size())
            throw error("exchange term has mismatched factors");
    }
    ZPolynomial acc;
    for (const auto& t : terms) {
        ZPolynomial product;
        product.add_term({}, 1);
        for (size_t j = 0; j < t.rows.size(); ++j)
            product = product * expand_minor(t.rows[j], t.entries[j], fb);
        acc += product * Int(t.sign);
    }
    return acc.is_zero();
}

namespace {

// Counts strictly increasing fillings b of `a` with b_i <= bound(a_i) and
// the entry at row k inside the block (d_{k-1}, d_k].
long long count_kernel_generators(const Column& a, const FlagBound& fb, int k, int lo) {
    long long total = 0;
    for (const Column& b : column_fillings(a, fb)) {
        for (size_t i = 0; i < a.size(); ++i)
            if (a[i] == k && b[i] > lo) {
                ++total;
                break;
            }
    }
    return total;
}

} // namespace

PartialKernelPrediction partial_flag_kernel_case(const Column& a, int k,
                                                 const RankSequence& d) {
    if (k < 1) throw error("partial_flag_kernel_case: k must be >= 1");
    if (!a.empty() && a.back() > d.size())
        throw error("column does not fit the rank sequence");
    const bool has_k = std::binary_search(a.begin(), a.end(), k);
    if (!has_k) return {PartialKernelCase::iso, 0};
    const bool has_k1 = std::binary_search(a.begin(), a.end(), k + 1);
    const FlagBound twisted = FlagBound::partial_twisted(d, k + 1);
    const Int dim = count_kernel_generators(a, twisted, k, d.d(k - 1));
    return {has_k1 ? PartialKernelCase::wedge2 : PartialKernelCase::linear, dim};
}

} // namespace schub
