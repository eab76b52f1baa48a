#include "schub/permutation.hpp"

#include <algorithm>
#include <numeric>

namespace schub {

Permutation::Permutation(std::vector<int> word) : word_(std::move(word)) {
    std::vector<bool> seen(word_.size(), false);
    for (int v : word_) {
        if (v < 1 || v > size() || seen[v - 1])
            throw parse_error("not a permutation of 1..n");
        seen[v - 1] = true;
    }
}

Permutation Permutation::identity(int n) {
    std::vector<int> w(n);
    std::iota(w.begin(), w.end(), 1);
    return Permutation(std::move(w));
}

Permutation Permutation::longest(int n) {
    std::vector<int> w(n);
    for (int i = 0; i < n; ++i) w[i] = n - i;
    return Permutation(std::move(w));
}

Permutation Permutation::inverse() const {
    std::vector<int> inv(word_.size());
    for (int i = 1; i <= size(); ++i) inv[word_[i - 1] - 1] = i;
    return Permutation(std::move(inv));
}

Permutation Permutation::times_s(int k) const {
    if (k < 1 || k >= size())
        throw error("times_s: index out of range");
    std::vector<int> w = word_;
    std::swap(w[k - 1], w[k]);
    return Permutation(std::move(w));
}

std::vector<int> Permutation::descents() const {
    std::vector<int> des;
    for (int k = 1; k < size(); ++k)
        if (word_[k - 1] > word_[k]) des.push_back(k);
    return des;
}

bool Permutation::is_identity() const {
    for (int i = 1; i <= size(); ++i)
        if (word_[i - 1] != i) return false;
    return true;
}

int Permutation::length() const {
    int inv = 0;
    for (int i = 0; i < size(); ++i)
        for (int j = i + 1; j < size(); ++j)
            if (word_[i] > word_[j]) ++inv;
    return inv;
}

Permutation Permutation::normalized() const {
    std::vector<int> w = word_;
    while (w.size() > 1 && w.back() == static_cast<int>(w.size())) w.pop_back();
    return Permutation(std::move(w));
}

std::vector<Permutation> all_permutations(int n) {
    std::vector<int> w(n);
    std::iota(w.begin(), w.end(), 1);
    std::vector<Permutation> out;
    do {
        out.emplace_back(w);
    } while (std::next_permutation(w.begin(), w.end()));
    return out;
}

} // namespace schub
