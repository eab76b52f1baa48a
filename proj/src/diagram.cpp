#include "schub/diagram.hpp"

#include <algorithm>
#include <map>
#include <mutex>

namespace schub {

namespace {

bool strictly_increasing(const Column& c) {
    for (size_t i = 1; i < c.size(); ++i)
        if (c[i] <= c[i - 1]) return false;
    return true;
}

bool contains(const Column& c, int r) {
    return std::binary_search(c.begin(), c.end(), r);
}

bool column_k_full(const Column& c, int k) {
    return !contains(c, k) || contains(c, k + 1);
}

// c' \cap {1,...,k+1} \subseteq c
bool contained_up_to(const Column& cp, const Column& c, int k) {
    for (int r : cp) {
        if (r > k + 1) break;
        if (!contains(c, r)) return false;
    }
    return true;
}

} // namespace

Diagram::Diagram(std::vector<Column> columns) {
    for (auto& c : columns) {
        if (!strictly_increasing(c) || (!c.empty() && c.front() < 1))
            throw error("diagram column must be a strictly increasing set of rows >= 1");
        if (!c.empty()) cols_.push_back(std::move(c));
    }
    std::sort(cols_.begin(), cols_.end());
}

int Diagram::box_count() const {
    int n = 0;
    for (const auto& c : cols_) n += static_cast<int>(c.size());
    return n;
}

int Diagram::max_row() const {
    int m = 0;
    for (const auto& c : cols_) m = std::max(m, c.back());
    return m;
}

Diagram rothe_diagram(const Permutation& w) {
    const Permutation winv = w.inverse();
    std::vector<Column> cols(w.size());
    for (int i = 1; i <= w.size(); ++i)
        for (int j = 1; j < w(i); ++j)
            if (i < winv(j)) cols[j - 1].push_back(i);
    return Diagram(std::move(cols));
}

bool is_k_full(const Diagram& d, int k) {
    if (k < 1) throw error("is_k_full: k must be >= 1");
    for (const auto& c : d.columns())
        if (!column_k_full(c, k)) return false;
    return true;
}

std::vector<DescentWitness> diagram_descents(const Diagram& d) {
    std::vector<DescentWitness> out;
    const auto& cols = d.columns();
    for (int k = 1; k <= d.max_row(); ++k) {
        int witness = -1;
        const Column* witness_col = nullptr;
        for (int j = 0; j < d.column_count(); ++j) {
            if (cols[j].back() != k) continue;
            bool ok = true;
            for (int jp = 0; jp < d.column_count() && ok; ++jp) {
                if (jp == j) continue;
                ok = column_k_full(cols[jp], k) || contained_up_to(cols[jp], cols[j], k);
            }
            if (!ok) continue;
            if (witness < 0) {
                witness = j;
                witness_col = &cols[j];
            } else if (cols[j] != *witness_col) {
                // The witness is unique up to repetition of its content.
                throw internal_error("descent witness not unique up to repetition");
            }
        }
        if (witness >= 0) out.push_back(DescentWitness{k, witness});
    }
    return out;
}

std::vector<int> descent_set(const Diagram& d) {
    std::vector<int> out;
    for (const auto& wtn : diagram_descents(d)) out.push_back(wtn.k);
    return out;
}

Diagram apply_s_k(const Diagram& d, int k) {
    const auto witnesses = diagram_descents(d);
    const DescentWitness* wtn = nullptr;
    for (const auto& x : witnesses)
        if (x.k == k) wtn = &x;
    if (!wtn) throw not_a_descent_error("k is not a descent of the diagram");

    std::vector<Column> cols = d.columns();
    auto& wc = cols[wtn->column_index];
    wc.pop_back(); // border cell is the last box of the witness column

    for (auto& c : cols) {
        const bool has_k = contains(c, k);
        const bool has_k1 = contains(c, k + 1);
        if (has_k == has_k1) continue;
        for (auto& r : c) {
            if (r == k) {
                r = k + 1;
                break;
            }
            if (r == k + 1) {
                r = k;
                break;
            }
        }
        std::sort(c.begin(), c.end());
    }
    Diagram result(std::move(cols));
    if (result.box_count() != d.box_count() - 1)
        throw internal_error("apply_s_k must remove exactly one box");
    return result;
}

namespace {

std::mutex classify_mutex;
std::map<std::vector<Column>, Classification> classify_cache;

} // namespace

Classification classify(const Diagram& d) {
    {
        std::lock_guard<std::mutex> lock(classify_mutex);
        auto it = classify_cache.find(d.columns());
        if (it != classify_cache.end()) return it->second;
    }

    Classification c;
    const auto des = diagram_descents(d);
    c.clear = true;
    for (int k = 1; k <= d.max_row() && c.clear; ++k) {
        bool has_descent = false;
        for (const auto& wtn : des) has_descent |= (wtn.k == k);
        c.clear = is_k_full(d, k) || has_descent;
    }

    if (d.empty()) {
        c.transparent = true;
        c.translucent = true;
    } else {
        c.transparent = c.clear;
        c.translucent = d.column_count() <= 1 || c.clear;
        if (c.clear) {
            for (const auto& wtn : des) {
                const Classification sub = classify(apply_s_k(d, wtn.k));
                c.transparent = c.transparent && sub.transparent;
                if (d.column_count() > 1)
                    c.translucent = c.translucent && sub.translucent;
            }
        } else {
            c.transparent = false;
        }
    }

    std::lock_guard<std::mutex> lock(classify_mutex);
    classify_cache.emplace(d.columns(), c);
    return c;
}

Diagram repeat_columns(const Diagram& d, int m) {
    if (m < 1) throw error("repeat_columns: m must be >= 1");
    std::vector<Column> cols;
    for (const auto& c : d.columns())
        for (int i = 0; i < m; ++i) cols.push_back(c);
    return Diagram(std::move(cols));
}

namespace {

void reduced_words_dfs(const Diagram& d, std::vector<int>& path,
                       std::vector<std::vector<int>>& out,
                       const std::optional<Int>& cap) {
    if (d.empty()) {
        // The path lists letters in application order; the word reads i_1..i_l
        // with i_l applied first.
        out.emplace_back(path.rbegin(), path.rend());
        if (cap && Int(out.size()) > *cap)
            throw cap_exceeded_error("reduced word enumeration exceeded cap");
        return;
    }
    for (const auto& wtn : diagram_descents(d)) {
        path.push_back(wtn.k);
        reduced_words_dfs(apply_s_k(d, wtn.k), path, out, cap);
        path.pop_back();
    }
}

std::mutex count_mutex;
std::map<std::vector<Column>, Int> count_cache;

} // namespace

std::vector<std::vector<int>> reduced_words(const Diagram& d, std::optional<Int> cap) {
    std::vector<std::vector<int>> out;
    std::vector<int> path;
    reduced_words_dfs(d, path, out, cap);
    return out;
}

Int count_reduced_words(const Diagram& d) {
    if (d.empty()) return 1;
    {
        std::lock_guard<std::mutex> lock(count_mutex);
        auto it = count_cache.find(d.columns());
        if (it != count_cache.end()) return it->second;
    }
    Int total = 0;
    for (const auto& wtn : diagram_descents(d))
        total += count_reduced_words(apply_s_k(d, wtn.k));
    std::lock_guard<std::mutex> lock(count_mutex);
    count_cache.emplace(d.columns(), total);
    return total;
}

} // namespace schub
