#include "schub/flag_bound.hpp"

namespace schub {

FlagBound::FlagBound(std::vector<int> bound) : bound_(std::move(bound)) {
    int prev = 0;
    for (int b : bound_) {
        if (b < prev) throw error("flag bound must be weakly increasing and >= 0");
        prev = b;
    }
}

FlagBound FlagBound::standard(int n) {
    std::vector<int> b(n);
    for (int i = 0; i < n; ++i) b[i] = i + 1;
    return FlagBound(std::move(b));
}

FlagBound FlagBound::twisted(int n, int k) {
    return standard(n).twist(k);
}

FlagBound FlagBound::partial(const RankSequence& d) {
    return FlagBound(d.values());
}

FlagBound FlagBound::partial_twisted(const RankSequence& d, int k) {
    return partial(d).twist(k);
}

FlagBound FlagBound::unflagged(int nrows, int ncols) {
    return FlagBound(std::vector<int>(nrows, ncols));
}

int FlagBound::bound(int i) const {
    if (i < 1 || i > nrows()) throw error("flag bound row out of range");
    return bound_[i - 1];
}

FlagBound FlagBound::twist(int k) const {
    std::vector<int> b = bound_;
    for (int i = nrows(); i >= 1 && i >= k; --i)
        b[i - 1] = (i == 1) ? 0 : bound_[i - 2];
    return FlagBound(std::move(b));
}

} // namespace schub
