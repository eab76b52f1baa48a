#pragma once

#include <vector>

#include "schub/errors.hpp"
#include "schub/operators.hpp"

namespace schub {

// Per-row cap on filling entries: an entry in row i may be at most bound(i).
// Encodes which quotient-flag tower the oracle works in; the matrix of
// variables has z_{ij} = 0 for j > bound(i).
class FlagBound {
public:
    explicit FlagBound(std::vector<int> bound);

    static FlagBound standard(int n);                          // bound(i) = i
    static FlagBound twisted(int n, int k);                    // standard twisted at k
    static FlagBound partial(const RankSequence& d);           // bound(i) = d_i
    static FlagBound partial_twisted(const RankSequence& d, int k);
    static FlagBound unflagged(int nrows, int ncols);          // bound(i) = ncols
    static FlagBound unflagged(int n) { return unflagged(n, n); }

    int nrows() const { return static_cast<int>(bound_.size()); }
    int bound(int i) const; // 1-based row
    int max_bound() const { return bound_.empty() ? 0 : bound_.back(); }
    const std::vector<int>& bounds() const { return bound_; }

    // The bound of the flag R_k E: bound'(i) = bound(i) for i < k,
    // bound(i-1) for i >= k (with bound(0) = 0).
    FlagBound twist(int k) const;

    bool operator==(const FlagBound& other) const { return bound_ == other.bound_; }

private:
    std::vector<int> bound_;
};

} // namespace schub
