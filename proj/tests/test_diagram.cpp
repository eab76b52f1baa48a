#include <algorithm>
#include <set>

#include "doctest.h"
#include "support.hpp"

#include "schub/diagram.hpp"
#include "schub/sweep.hpp"

using namespace schub;

namespace {

const Diagram kRunning({{2, 3}, {2, 3, 5}, {3}}); // D(146253)

} // namespace

TEST_CASE("canonical form") {
    CHECK(Diagram({{3}, {}, {2, 3}}) == Diagram({{2, 3}, {3}}));
    CHECK(Diagram({{1}, {2}}).columns() == std::vector<Column>{{1}, {2}});
    CHECK_THROWS_AS(Diagram({{3, 2}}), error);
    CHECK_THROWS_AS(Diagram({{0, 1}}), error);
}

TEST_CASE("k-fullness") {
    for (int k : {1, 2, 4}) CHECK(is_k_full(kRunning, k));
    for (int k : {3, 5}) CHECK_FALSE(is_k_full(kRunning, k));
    for (int k = 1; k <= 4; ++k) CHECK(is_k_full(Diagram(), k));
    CHECK_FALSE(is_k_full(Diagram({{1, 3}}), 1));
}

TEST_CASE("diagram descents with border cells") {
    const auto des = diagram_descents(kRunning);
    REQUIRE(des.size() == 2);
    CHECK(des[0].k == 3);
    CHECK(kRunning.columns()[des[0].column_index] == Column{2, 3});
    CHECK(des[1].k == 5);
    CHECK(kRunning.columns()[des[1].column_index] == Column{2, 3, 5});

    // [{1,3}] is neither 1-full nor has a descent at 1; its only descent is
    // at the bottom row 3.
    CHECK(descent_set(Diagram({{1, 3}})) == std::vector<int>{3});
    CHECK_FALSE(is_k_full(Diagram({{1, 3}}), 1));
    CHECK(descent_set(Diagram({{1}, {1}})) == std::vector<int>{1});
}

TEST_CASE("descent detection is invariant under column input order") {
    // Canonicalization sorts columns, so feed permuted inputs and compare.
    const std::vector<Column> cols{{2, 3}, {2, 3, 5}, {3}};
    std::vector<Column> perm = cols;
    std::sort(perm.begin(), perm.end());
    do {
        CHECK(descent_set(Diagram(perm)) == descent_set(kRunning));
    } while (std::next_permutation(perm.begin(), perm.end()));
}

TEST_CASE("apply_s_k") {
    CHECK(apply_s_k(kRunning, 3) == Diagram({{2}, {2, 4, 5}, {4}}));
    CHECK(apply_s_k(kRunning, 5) == Diagram({{2, 3}, {2, 3}, {3}}));
    CHECK_THROWS_AS(apply_s_k(kRunning, 2), not_a_descent_error);

    const Diagram d({{1}, {2}});
    const Diagram s1 = apply_s_k(d, 1);
    CHECK(s1 == Diagram({{1}}));
    CHECK(apply_s_k(s1, 1).empty());

    for (const auto& wtn : diagram_descents(kRunning))
        CHECK(apply_s_k(kRunning, wtn.k).box_count() == kRunning.box_count() - 1);
}

TEST_CASE("classification") {
    SUBCASE("Rothe diagrams are transparent") {
        for (int n = 2; n <= 5; ++n)
            for (const auto& w : all_permutations(n))
                CHECK(classify(rothe_diagram(w)).transparent);
    }
    SUBCASE("translucent but not transparent") {
        const Classification c = classify(Diagram({{1, 3}, {1}, {2}}));
        CHECK(c.translucent);
        CHECK_FALSE(c.transparent);
    }
    SUBCASE("clear but not translucent") {
        const Diagram d = repeat_columns(rothe_diagram(Permutation({2, 1, 4, 5, 3})), 2);
        const Classification c = classify(d);
        CHECK(c.clear);
        CHECK_FALSE(c.translucent);
    }
    SUBCASE("single columns") {
        CHECK(classify(Diagram({{1, 3}})).translucent);
        CHECK_FALSE(classify(Diagram({{1, 3}})).clear);
        CHECK(classify(Diagram()).transparent);
    }
    SUBCASE("column order invariance") {
        std::vector<Column> perm{{1, 3}, {1}, {2}};
        std::sort(perm.begin(), perm.end());
        do {
            const Classification c = classify(Diagram(perm));
            CHECK(c.translucent);
            CHECK_FALSE(c.transparent);
        } while (std::next_permutation(perm.begin(), perm.end()));
    }
}

TEST_CASE("repeat_columns") {
    CHECK(repeat_columns(Diagram({{1}}), 3) == Diagram({{1}, {1}, {1}}));

    SUBCASE("repetition preserves clarity on S_4 Rothe diagrams") {
        for (const auto& w : all_permutations(4)) {
            const Diagram d = rothe_diagram(w);
            REQUIRE(classify(d).clear);
            for (int m = 2; m <= 3; ++m) CHECK(classify(repeat_columns(d, m)).clear);
        }
    }
    SUBCASE("2 D(2143) is not a Rothe diagram") {
        const Diagram doubled = repeat_columns(rothe_diagram(Permutation({2, 1, 4, 3})), 2);
        for (const auto& w : all_permutations(6))
            CHECK_FALSE(rothe_diagram(w) == doubled);
    }
}

TEST_CASE("reduced words") {
    SUBCASE("two-column example") {
        const auto words = reduced_words(Diagram({{1}, {2}}));
        const std::set<std::vector<int>> expect{{1, 1}, {1, 2}};
        CHECK(std::set<std::vector<int>>(words.begin(), words.end()) == expect);
    }
    SUBCASE("empty diagram has the empty word") {
        const auto words = reduced_words(Diagram());
        REQUIRE(words.size() == 1);
        CHECK(words[0].empty());
    }
    SUBCASE("Rothe diagram words are permutation words") {
        for (int n = 2; n <= 4; ++n) {
            for (const auto& w : all_permutations(n)) {
                const auto words = reduced_words(rothe_diagram(w));
                const auto expect = testing::permutation_reduced_words(w);
                CHECK(std::set<std::vector<int>>(words.begin(), words.end()) == expect);
            }
        }
    }
    SUBCASE("321 explicitly") {
        const auto words = reduced_words(rothe_diagram(Permutation({3, 2, 1})));
        const std::set<std::vector<int>> expect{{1, 2, 1}, {2, 1, 2}};
        CHECK(std::set<std::vector<int>>(words.begin(), words.end()) == expect);
    }
    SUBCASE("cap") {
        CHECK_THROWS_AS(reduced_words(rothe_diagram(Permutation::longest(4)), Int(3)),
                        cap_exceeded_error);
    }
    SUBCASE("counter agrees with enumeration") {
        for (int n = 2; n <= 4; ++n)
            for (const auto& w : all_permutations(n)) {
                const Diagram d = rothe_diagram(w);
                CHECK(count_reduced_words(d) == Int(reduced_words(d).size()));
            }
    }
    SUBCASE("word length and emptying") {
        const Diagram d = rothe_diagram(Permutation({1, 4, 6, 2, 5, 3}));
        for (const auto& word : reduced_words(d)) {
            CHECK(static_cast<int>(word.size()) == d.box_count());
            Diagram cur = d;
            for (auto it = word.rbegin(); it != word.rend(); ++it) cur = apply_s_k(cur, *it);
            CHECK(cur.empty());
        }
    }
}

TEST_CASE("braid and commutation moves on transparent diagrams") {
    for (const Diagram& d : enumerate_box_diagrams(3, 3, 2)) {
        if (!classify(d).transparent) continue;
        const auto des = descent_set(d);
        for (int k : des) {
            // s_k s_{k+1} s_k = s_{k+1} s_k s_{k+1} when defined letterwise
            auto try_chain = [&](std::vector<int> ks) -> std::optional<Diagram> {
                Diagram cur = d;
                for (int i : ks) {
                    const auto ds = descent_set(cur);
                    if (std::find(ds.begin(), ds.end(), i) == ds.end()) return std::nullopt;
                    cur = apply_s_k(cur, i);
                }
                return cur;
            };
            const auto lhs = try_chain({k, k + 1, k});
            const auto rhs = try_chain({k + 1, k, k + 1});
            if (lhs && rhs) CHECK(*lhs == *rhs);
            for (int j : des) {
                if (std::abs(j - k) <= 1) continue;
                const auto a = try_chain({k, j});
                const auto b = try_chain({j, k});
                if (a && b) CHECK(*a == *b);
            }
        }
    }
}
