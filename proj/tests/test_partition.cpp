#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <random>

#include "qschur/partition.hpp"
#include "test_util.hpp"

using namespace qschur;

TEST_CASE("partition construction and textual form") {
    CHECK(Partition{}.to_string() == "0");
    CHECK(Partition{5, 4, 4, 2, 2}.to_string() == "5,4,4,2,2");
    CHECK(Partition({3, 2, 0, 0}) == Partition{3, 2});
    CHECK(Partition::parse("0") == Partition{});
    CHECK(Partition::parse("5,4,4,2,2") == Partition{5, 4, 4, 2, 2});
    CHECK(Partition::parse("3,0") == Partition{3});
    CHECK_THROWS_AS(Partition::parse("2,3"), invalid_argument);
    CHECK_THROWS_AS(Partition::parse("1,-1"), invalid_argument);
    CHECK_THROWS_AS(Partition::parse("1,"), invalid_argument);
    CHECK_THROWS_AS(Partition::parse("x"), invalid_argument);
    CHECK_THROWS_AS(Partition({1, 2}), invalid_argument);
    CHECK(Partition{2, 1}.weight() == 3);
    CHECK(Partition{2, 1}.part(1) == 2);
    CHECK(Partition{2, 1}.part(5) == 0);
}

TEST_CASE("conjugate") {
    CHECK(Partition{2, 1}.conjugate() == Partition{2, 1});
    CHECK(Partition{3}.conjugate() == Partition{1, 1, 1});
    CHECK(Partition{5, 4, 4, 2, 2}.conjugate() == Partition{5, 5, 3, 3, 1});
    CHECK(Partition{5, 4, 4, 2, 2}.conjugate() ==
          testutil::conjugate_by_boxes(Partition{5, 4, 4, 2, 2}));

    std::mt19937 rng(20240601);
    for (int i = 0; i < 10000; ++i) {
        const Partition p = testutil::random_partition(rng, 8, 9);
        const Partition c = p.conjugate();
        CHECK(c == testutil::conjugate_by_boxes(p));
        CHECK(c.conjugate() == p);
        CHECK(c.weight() == p.weight());
    }
}

TEST_CASE("fits_in_rect") {
    const GrassmannContext any(3, 3);
    CHECK(fits_in_rect(Partition{}, any));
    CHECK(fits_in_rect(Partition{2, 2, 1, 1}, GrassmannContext(4, 4)));
    CHECK_FALSE(fits_in_rect(Partition{6, 5, 3, 3, 2}, GrassmannContext(4, 6)));
    CHECK_FALSE(fits_in_rect(Partition{4}, GrassmannContext(4, 3)));
}

TEST_CASE("complement_dual") {
    CHECK(complement_dual(Partition{}, GrassmannContext(2, 2)) == Partition{2, 2});
    CHECK(complement_dual(Partition{2, 2}, GrassmannContext(2, 2)) == Partition{});
    CHECK(complement_dual(Partition{2, 1}, GrassmannContext(2, 3)) == Partition{2, 1});
    CHECK_THROWS_AS(complement_dual(Partition{4}, GrassmannContext(2, 3)), invalid_argument);

    std::mt19937 rng(7);
    for (int i = 0; i < 2000; ++i) {
        std::uniform_int_distribution<int> dim(1, 5);
        const GrassmannContext ctx(dim(rng), dim(rng));
        Partition p = testutil::random_partition(rng, ctx.rows(), ctx.cols());
        const Partition c = complement_dual(p, ctx);
        CHECK(c == testutil::complement_by_boxes(p, ctx));
        CHECK(complement_dual(c, ctx) == p);
        CHECK(c.weight() + p.weight() ==
              static_cast<long long>(ctx.rows()) * ctx.cols());
    }
}

TEST_CASE("n_rim_from_column on the pinned shapes") {
    const auto absent = n_rim_from_column(Partition{1}, 1, 3);
    CHECK(absent.kind == RimKind::absent);

    const auto illegal = n_rim_from_column(Partition{2, 1, 1}, 1, 3);
    CHECK(illegal.kind == RimKind::illegal);

    const auto hook = n_rim_from_column(Partition{2, 1}, 1, 3);
    REQUIRE(hook.kind == RimKind::hook);
    CHECK(hook.start_col == 1);
    CHECK(hook.end_col == 2);
    CHECK(hook.width() == 2);
    CHECK(hook.remainder == Partition{});

    CHECK_THROWS_AS(n_rim_from_column(Partition{2, 1}, 3, 3), invalid_argument);
    CHECK_THROWS_AS(n_rim_from_column(Partition{2, 1}, 0, 3), invalid_argument);
    CHECK_THROWS_AS(n_rim_from_column(Partition{}, 1, 3), invalid_argument);
}

TEST_CASE("n_rim_from_column agrees with the box walk") {
    std::mt19937 rng(99);
    for (int i = 0; i < 4000; ++i) {
        const Partition p = testutil::random_partition(rng, 7, 8);
        if (p.empty()) {
            continue;
        }
        std::uniform_int_distribution<int> hook_dist(1, 9);
        const int n = hook_dist(rng);
        for (int r = 1; r <= p.part(1); ++r) {
            const auto fast = n_rim_from_column(p, r, n);
            const auto slow = testutil::rim_walk_by_boxes(p, r, n);
            CHECK(fast.kind == slow.kind);
            if (fast.kind == RimKind::hook) {
                CHECK(fast.end_col == slow.end_col);
                CHECK(fast.remainder == slow.remainder);
                CHECK(fast.remainder.weight() == p.weight() - n);
                CHECK(fast.width() == fast.end_col - r + 1);
            }
        }
    }
}

TEST_CASE("hook end column is the unique interlacing solution") {
    std::mt19937 rng(1234);
    for (int i = 0; i < 2000; ++i) {
        const Partition p = testutil::random_partition(rng, 6, 7);
        if (p.empty()) {
            continue;
        }
        const int n = 1 + static_cast<int>(rng() % 8);
        const Partition conj = p.conjugate();
        for (int r = 1; r <= p.part(1); ++r) {
            const auto status = n_rim_from_column(p, r, n);
            if (status.kind != RimKind::hook) {
                continue;
            }
            int solutions = 0;
            for (int s = r; s <= p.part(1); ++s) {
                const bool left = conj.part(s) - s > conj.part(r) - r - n;
                const bool right = conj.part(r) - r - n > conj.part(s + 1) - (s + 1);
                if (left && right) {
                    ++solutions;
                    CHECK(s == status.end_col);
                }
            }
            CHECK(solutions == 1);
        }
    }
}

TEST_CASE("core decomposition on the pinned shapes") {
    const auto small = n_core(Partition{2, 1}, 4, GrassmannContext(2, 2));
    CHECK(small.core == Partition{2, 1});
    CHECK(small.hooks_removed == 0);
    CHECK(small.sign == 1);

    const auto plane = n_core(Partition{2, 1}, 3, GrassmannContext(1, 2));
    CHECK(plane.core == Partition{});
    CHECK(plane.hooks_removed == 1);
    CHECK(plane.sign == 1);
    CHECK(plane.widths == std::vector<int>{2});

    const auto square = n_core(Partition{2, 2, 1, 1}, 4, GrassmannContext(2, 2));
    CHECK(square.core == Partition{2});
    CHECK(square.hooks_removed == 1);
    CHECK(square.sign == 1);
}

TEST_CASE("core is independent of the removal order") {
    std::mt19937 rng(5150);
    testutil::OutcomeMemo memo;
    for (int i = 0; i < 300; ++i) {
        const Partition p = testutil::random_partition(rng, 6, 5);
        const int n = 2 + static_cast<int>(rng() % 6);
        const auto outcomes = testutil::removal_outcomes(p, n, memo);
        REQUIRE(outcomes.size() == 1);
        const auto& [core, m, parity] = *outcomes.begin();
        const auto dec = core_decompose(p, n);
        CHECK(dec.core.parts() == core);
        CHECK(dec.hooks_removed == m);
        long long widths_total = 0;
        for (int w : dec.widths) {
            widths_total += w;
        }
        CHECK(widths_total % 2 == parity);
        CHECK(p.weight() == dec.core.weight() + static_cast<long long>(m) * n);
    }
}

TEST_CASE("epsilon_sign") {
    CHECK(epsilon_sign(std::vector<int>{}, 3) == 1);
    CHECK(epsilon_sign(std::vector<int>{3}, 3) == 1);
    CHECK(epsilon_sign(std::vector<int>{1}, 2) == -1);
    CHECK(epsilon_sign(std::vector<int>{1, 2}, 2) == -1);
    CHECK_THROWS_AS(epsilon_sign(std::vector<int>{3}, 2), invalid_argument);
    CHECK_THROWS_AS(epsilon_sign(std::vector<int>{0}, 2), invalid_argument);
}

TEST_CASE("add_full_rim_hooks") {
    const GrassmannContext square(2, 2);
    CHECK(add_full_rim_hooks(Partition{2, 1}, 0, square) == Partition{2, 1});
    CHECK(add_full_rim_hooks(Partition{2, 1}, 1, square) == Partition{2, 2, 2, 1});
    CHECK(add_full_rim_hooks(Partition{2, 1}, 2, GrassmannContext(4, 5)) ==
          Partition{5, 5, 4, 3, 2, 2});
    CHECK_THROWS_AS(add_full_rim_hooks(Partition{3}, 1, square), invalid_argument);
    CHECK_THROWS_AS(add_full_rim_hooks(Partition{1}, -1, square), invalid_argument);
}

TEST_CASE("full hooks round-trip through the core") {
    for (int l = 1; l <= 3; ++l) {
        for (int k = 1; k <= 3; ++k) {
            const GrassmannContext ctx(l, k);
            for (const Partition& nu : partitions_in_rect(ctx)) {
                for (int m = 0; m <= 3; ++m) {
                    const Partition grown = add_full_rim_hooks(nu, m, ctx);
                    CHECK(grown.weight() ==
                          nu.weight() + static_cast<long long>(m) * ctx.hook_size());
                    const auto core = n_core(grown, ctx.hook_size(), ctx);
                    CHECK(core.core == nu);
                    CHECK(core.hooks_removed == m);
                    CHECK(core.sign == 1);
                    for (int w : core.widths) {
                        CHECK(w == k);
                    }
                }
            }
        }
    }
}

TEST_CASE("enumerate_preimages") {
    CHECK(enumerate_preimages(Partition{2, 1}, 0, 4, 2) ==
          std::vector<Partition>{Partition{2, 1}});

    // The three preimages supporting the product in the 10-hook example come
    // first; the remaining ones are taller shapes that no product term hits.
    const Partition nu{4, 2, 2, 1};
    const auto wide = enumerate_preimages(nu, 1, 10, 6);
    REQUIRE(wide.size() == 6);
    CHECK(wide[0] == Partition{6, 5, 3, 3, 2});
    CHECK(wide[1] == Partition{5, 5, 3, 3, 2, 1});
    CHECK(wide[2] == Partition{4, 4, 3, 3, 2, 1, 1, 1});
    CHECK(std::is_sorted(wide.rbegin(), wide.rend()));

    const auto narrow = enumerate_preimages(nu, 1, 10, 4);
    REQUIRE(!narrow.empty());
    CHECK(narrow[0] == Partition{4, 4, 3, 3, 2, 1, 1, 1});
    for (const Partition& rho : narrow) {
        CHECK(rho.part(1) <= 4);
    }

    for (const Partition& rho : wide) {
        const auto dec = core_decompose(rho, 10);
        CHECK(dec.core == nu);
        CHECK(dec.hooks_removed == 1);
        CHECK(rho.weight() == nu.weight() + 10);
    }
}

TEST_CASE("partition generators") {
    std::vector<Partition> all;
    for_each_partition(5, 5, [&](const Partition& p) { all.push_back(p); });
    CHECK(all.size() == 7);
    CHECK(std::is_sorted(all.rbegin(), all.rend()));
    CHECK(all.front() == Partition{5});
    CHECK(all.back() == Partition{1, 1, 1, 1, 1});

    std::vector<Partition> bounded;
    for_each_partition(6, 2, [&](const Partition& p) { bounded.push_back(p); });
    CHECK(bounded.size() == 4);   // 2+2+2, 2+2+1+1, 2+1^4, 1^6

    const auto rect = partitions_in_rect(GrassmannContext(2, 3));
    CHECK(rect.size() == 10);   // C(5, 2)
    CHECK(std::is_sorted(rect.begin(), rect.end()));
    CHECK(rect.front() == Partition{});
    for (const Partition& p : rect) {
        CHECK(fits_in_rect(p, GrassmannContext(2, 3)));
    }
}
