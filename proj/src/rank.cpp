#include "schub/rank.hpp"

#include <algorithm>

namespace schub {

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
    std::uint64_t r = 1;
    while (e) {
        if (e & 1) r = mulmod(r, a, p);
        a = mulmod(a, a, p);
        e >>= 1;
    }
    return r;
}

} // namespace

int exact_rank(std::vector<std::vector<Int>> m) {
    const int nrows = static_cast<int>(m.size());
    if (nrows == 0) return 0;
    const int ncols = static_cast<int>(m[0].size());
    std::vector<bool> col_used(ncols, false);
    Int prev = 1;
    int rank = 0;
    for (int step = 0; step < std::min(nrows, ncols); ++step) {
        int pr = -1, pc = -1;
        for (int c = 0; c < ncols && pr < 0; ++c) {
            if (col_used[c]) continue;
            for (int r = rank; r < nrows; ++r) {
                if (m[r][c] != 0) {
                    pr = r;
                    pc = c;
                    break;
                }
            }
        }
        if (pr < 0) break;
        std::swap(m[rank], m[pr]);
        col_used[pc] = true;
        const Int pivot = m[rank][pc];
        for (int r = rank + 1; r < nrows; ++r) {
            const Int factor = m[r][pc];
            for (int c = 0; c < ncols; ++c) {
                if (col_used[c]) {
                    m[r][c] = 0;
                    continue;
                }
                m[r][c] = (m[r][c] * pivot - factor * m[rank][c]) / prev;
            }
        }
        prev = pivot;
        ++rank;
    }
    return rank;
}

int rank_mod_p(std::vector<std::vector<std::int64_t>> m0, std::uint64_t p) {
    const int nrows = static_cast<int>(m0.size());
    if (nrows == 0) return 0;
    const int ncols = static_cast<int>(m0[0].size());
    std::vector<std::vector<std::uint64_t>> m(nrows, std::vector<std::uint64_t>(ncols));
    for (int r = 0; r < nrows; ++r)
        for (int c = 0; c < ncols; ++c) {
            const std::int64_t v = m0[r][c] % static_cast<std::int64_t>(p);
            m[r][c] = v < 0 ? v + p : v;
        }
    int rank = 0;
    for (int c = 0; c < ncols && rank < nrows; ++c) {
        int pr = -1;
        for (int r = rank; r < nrows; ++r)
            if (m[r][c] != 0) {
                pr = r;
                break;
            }
        if (pr < 0) continue;
        std::swap(m[rank], m[pr]);
        const std::uint64_t inv = powmod(m[rank][c], p - 2, p);
        for (int r = rank + 1; r < nrows; ++r) {
            if (m[r][c] == 0) continue;
            const std::uint64_t factor = mulmod(m[r][c], inv, p);
            for (int cc = c; cc < ncols; ++cc) {
                const std::uint64_t sub = mulmod(factor, m[rank][cc], p);
                m[r][cc] = m[r][cc] >= sub ? m[r][cc] - sub : m[r][cc] + p - sub;
            }
        }
        ++rank;
    }
    return rank;
}

int exact_rank_hybrid(const std::vector<std::vector<std::int64_t>>& m) {
    const int nrows = static_cast<int>(m.size());
    if (nrows == 0) return 0;
    const int ncols = static_cast<int>(m[0].size());
    const int rp = rank_mod_p(m);
    if (rp == std::min(nrows, ncols)) return rp; // rp <= rank <= min(rows, cols)
    std::vector<std::vector<Int>> big(nrows, std::vector<Int>(ncols));
    for (int r = 0; r < nrows; ++r)
        for (int c = 0; c < ncols; ++c) big[r][c] = m[r][c];
    return exact_rank(std::move(big));
}

} // namespace schub
