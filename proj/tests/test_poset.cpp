#include <doctest.h>

#include <algorithm>
#include <bit>
#include <set>

#include "hibi/census.hpp"
#include "hibi/poset.hpp"
#include "test_util.hpp"

using namespace hibi;
using namespace hibi::testutil;

TEST_CASE("construction closes and reduces relations") {
    SUBCASE("antichain has no covers") {
        auto p = Poset::from_relations({"a", "b"}, {});
        CHECK(p.size() == 2);
        CHECK(p.covers().empty());
        CHECK(!p.comparable(0, 1));
    }
    SUBCASE("redundant relation drops out of the Hasse diagram") {
        auto p = Poset::from_relations({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}, {"a", "c"}});
        CHECK(p.covers() == std::vector<std::pair<int, int>>{{0, 1}, {1, 2}});
        CHECK(p.leq(0, 2));
    }
    SUBCASE("two-cycles are rejected") {
        CHECK_THROWS_AS(Poset::from_relations({"a", "b"}, {{"a", "b"}, {"b", "a"}}), CycleError);
    }
    SUBCASE("longer cycles are rejected") {
        CHECK_THROWS_AS(
            Poset::from_relations({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}, {"c", "a"}}),
            CycleError);
    }
    SUBCASE("unknown names are rejected") {
        CHECK_THROWS_AS(Poset::from_relations({"a"}, {{"a", "z"}}), UnknownElement);
    }
    SUBCASE("duplicate names are rejected") {
        CHECK_THROWS_AS(Poset::from_relations({"a", "a"}, {}), PreconditionViolated);
    }
}

TEST_CASE("rank") {
    CHECK(rank(Poset::chain(4)) == 3);
    CHECK(rank(Poset::antichain(3)) == 0);
    CHECK(rank(v_poset()) == 1);
    CHECK_THROWS_AS(rank(Poset{}), EmptyPoset);
}

TEST_CASE("purity") {
    CHECK(is_pure(Poset::antichain(3)));
    CHECK(!is_pure(chain_plus_point(2)));
    CHECK(is_pure(two_two_chains()));
    CHECK(is_pure(v_poset()));

    // Two parallel 3-chains with one extra cover from the bottom of the first
    // to the top of the second: every element has level + colevel = rank, yet
    // that extra cover is itself a short maximal chain.
    auto tricky = make(6, {{0, 1}, {1, 2}, {3, 4}, {4, 5}, {0, 5}});
    CHECK(rank(tricky) == 2);
    CHECK(!is_pure(tricky));
}

TEST_CASE("simplicity") {
    CHECK(is_simple(Poset::antichain(2)));
    CHECK(!is_simple(v_poset()));
    CHECK(is_simple(chain_plus_point(3)));
    CHECK(!is_simple(Poset::antichain(1)));  // the lone element is comparable to all
    CHECK_THROWS_AS(is_simple(Poset{}), EmptyPoset);
}

TEST_CASE("simplify") {
    SUBCASE("top of a V goes away") {
        auto s = simplify(v_poset());
        CHECK(s.size() == 2);
        CHECK(s.covers().empty());
        CHECK(s.labels() == std::vector<std::string>{"x0", "x1"});
    }
    SUBCASE("chains drain to empty") {
        CHECK(simplify(Poset::chain(4)).empty());
        CHECK(simplify(Poset::antichain(1)).empty());
    }
    SUBCASE("simple posets are fixpoints") {
        auto p = n_poset();
        CHECK(simplify(p).same_structure(p));
    }
    SUBCASE("removal can cascade") {
        // x3 hangs above the chain x0 < x1 < x2; removing x3 exposes nothing
        // new, the whole thing drains.
        auto p = make(4, {{0, 1}, {1, 2}, {0, 3}, {1, 3}, {2, 3}});
        CHECK(simplify(p).empty());
    }
}

TEST_CASE("down-set enumeration") {
    SUBCASE("antichain: all subsets") {
        CHECK(order_ideals(Poset::antichain(2)).size() == 4);
        CHECK(order_ideals(Poset::antichain(5)).size() == 32);
    }
    SUBCASE("chain: prefixes") {
        for (int n = 1; n <= 6; ++n)
            CHECK(order_ideals(Poset::chain(n)).size() == static_cast<size_t>(n) + 1);
    }
    SUBCASE("V poset, exact canonical order") {
        auto ids = order_ideals(v_poset());
        CHECK(ids == std::vector<std::uint64_t>{0b000, 0b001, 0b010, 0b011, 0b111});
    }
    SUBCASE("matches the subset-filter oracle on every class up to 6") {
        for (int n = 1; n <= 6; ++n)
            for (const auto& p : enumerate_posets(n)) {
                auto fast = order_ideals(p);
                auto slow = brute_down_sets(p);
                std::sort(fast.begin(), fast.end());
                std::sort(slow.begin(), slow.end());
                REQUIRE(fast == slow);
            }
    }
    SUBCASE("size cap") {
        Caps caps;
        caps.ideal_elements = 3;
        CHECK_THROWS_AS(order_ideals(Poset::antichain(4), caps), SizeCapExceeded);
    }
}

TEST_CASE("depth function") {
    SUBCASE("antichain of two") {
        auto d = depth_function(Poset::antichain(2));
        CHECK(d.top() == 0);
        CHECK(d.value(0) == 1);
        CHECK(d.value(1) == 1);
        CHECK(d.bottom() == 2);
    }
    SUBCASE("two-element chain") {
        auto d = depth_function(Poset::chain(2));
        CHECK(d.value(1) == 1);
        CHECK(d.value(0) == 2);
        CHECK(d.bottom() == 3);
    }
    SUBCASE("strictly order-reversing with bottom = rank + 2, all classes up to 6") {
        for (int n = 1; n <= 6; ++n)
            for (const auto& p : enumerate_posets(n)) {
                auto d = depth_function(p);
                REQUIRE(d.bottom() == rank(p) + 2);
                for (int i = 0; i < p.size(); ++i) {
                    REQUIRE(d.value(i) > d.top());
                    REQUIRE(d.value(i) < d.bottom());
                    for (int j = 0; j < p.size(); ++j)
                        if (p.less(i, j)) REQUIRE(d.value(j) < d.value(i));
                }
            }
    }
}

TEST_CASE("max chain") {
    CHECK(max_chain(Poset::chain(3)) == std::vector<int>{0, 1, 2});
    CHECK(max_chain(Poset::antichain(3)) == std::vector<int>{0});
    SUBCASE("picks the long component") {
        auto p = chain_plus_point(3);  // indices 0,1,2 chain; 3 isolated
        CHECK(max_chain(p) == std::vector<int>{0, 1, 2});
    }
    SUBCASE("lexicographic tie-break") {
        auto p = two_two_chains();
        CHECK(max_chain(p) == std::vector<int>{0, 1});
    }
}

TEST_CASE("isomorphism and canonical forms") {
    SUBCASE("relabeled chains agree") {
        auto a = Poset::from_relations({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}});
        auto b = Poset::from_relations({"z", "y", "x"}, {{"x", "y"}, {"y", "z"}});
        CHECK(is_isomorphic(a, b));
        CHECK(canonical_form(a) == canonical_form(b));
    }
    CHECK(!is_isomorphic(Poset::chain(3), v_poset()));
    CHECK(!is_isomorphic(Poset::antichain(2), Poset::chain(2)));

    SUBCASE("equivalence relation on all classes of size 4") {
        auto classes = enumerate_posets(4);
        for (size_t i = 0; i < classes.size(); ++i)
            for (size_t j = 0; j < classes.size(); ++j) {
                bool iso = is_isomorphic(classes[i], classes[j]);
                REQUIRE(iso == (i == j));
                REQUIRE(iso == (canonical_form(classes[i]) == canonical_form(classes[j])));
            }
    }
    SUBCASE("invariant under relabeling, size 5 sample") {
        for (const auto& p : enumerate_posets(5)) {
            // reverse the element order
            std::vector<std::string> labels;
            std::vector<std::pair<int, int>> rel;
            int n = p.size();
            for (int i = 0; i < n; ++i) labels.push_back(p.label(n - 1 - i));
            for (auto [a, b] : p.covers()) rel.emplace_back(n - 1 - a, n - 1 - b);
            auto q = Poset::from_index_relations(labels, rel);
            REQUIRE(canonical_form(p) == canonical_form(q));
        }
    }
    SUBCASE("size cap") {
        Caps caps;
        caps.iso_elements = 4;
        CHECK_THROWS_AS(canonical_form(Poset::chain(5), caps), SizeCapExceeded);
    }
}

TEST_CASE("reduction of the closure reproduces the covers") {
    for (int n = 1; n <= 6; ++n)
        for (const auto& p : enumerate_posets(n)) {
            std::vector<std::pair<int, int>> all;
            for (int i = 0; i < p.size(); ++i)
                for (int j = 0; j < p.size(); ++j)
                    if (p.less(i, j)) all.emplace_back(i, j);
            auto q = Poset::from_index_relations(p.labels(), all);
            REQUIRE(q.covers() == p.covers());
            REQUIRE(q.same_structure(p));
        }
}
