#pragma once

#include <vector>

#include "schub/errors.hpp"

namespace schub {

// A permutation of {1,...,n} in one-line notation.
class Permutation {
public:
    Permutation() = default;
    explicit Permutation(std::vector<int> word);

    static Permutation identity(int n);
    static Permutation longest(int n); // [n, n-1, ..., 1]

    int size() const { return static_cast<int>(word_.size()); }
    int operator()(int i) const { return word_[i - 1]; } // 1-based
    const std::vector<int>& word() const { return word_; }

    Permutation inverse() const;

    // Right multiplication by the simple transposition s_k (swaps positions k, k+1).
    Permutation times_s(int k) const;

    // {k : w(k) > w(k+1)}
    std::vector<int> descents() const;

    bool is_identity() const;
    int length() const; // number of inversions

    // Copy with trailing fixed points removed (keeps at least one entry).
    Permutation normalized() const;

    bool operator==(const Permutation& other) const { return word_ == other.word_; }
    bool operator<(const Permutation& other) const { return word_ < other.word_; }

private:
    std::vector<int> word_;
};

// All permutations of S_n in lexicographic order.
std::vector<Permutation> all_permutations(int n);

} // namespace schub
