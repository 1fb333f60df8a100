#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>

#include "partbij/bijection.hpp"
#include "partbij/classes.hpp"
#include "partbij/partition.hpp"

using namespace partbij;

namespace {

Partition P(std::vector<long long> v) { return Partition::of(std::move(v)); }

const Partition kExample1 =
    P({40, 37, 36, 22, 22, 20, 19, 17, 17, 15, 13, 12, 10, 8, 8, 4, 4, 2});
const Partition kExample1Image = parse_partition("{40,37,36,22,21,19,17,16,14,10}u<2^3 4^5 6^4 8^3>");

// Independent route to the i-th stage repeated part, evaluated on the whole
// image part list: the largest label j (counted from the smallest part)
// with j - sum_{h<i} m_{2h} >= lambda_[j] - 2(i-1), shifted by that same
// offset. Used only as a cross-check of the peeling inverse.
long long direct_repeated_part(const Partition& lam, long long i) {
    long long offset = 0;
    for (long long h = 1; h < i; ++h)
        offset += lam.multiplicity(2 * h);
    long long best = -1;
    for (long long j = 1; j <= static_cast<long long>(lam.length()); ++j) {
        if (j - offset >= lam.smallest(static_cast<std::size_t>(j)) - 2 * (i - 1))
            best = std::max(best, j - offset);
    }
    return best;
}

}  // namespace

TEST_CASE("forward map worked example") {
    CHECK(f_forward(kExample1) == kExample1Image);
    CHECK(f_forward(P({})) == P({}));
    CHECK(f_forward(P({5, 3, 2})) == P({5, 3, 2}));
    CHECK(f_forward(P({4, 4, 2})) == P({4, 2, 2, 2}));
    CHECK(f_forward(P({1, 1})) == P({2}));
    CHECK_THROWS_AS(f_forward(P({3, 3, 3})), std::domain_error);
    CHECK_THROWS_AS(f_forward(P({2, 2, 1, 1})), std::domain_error);
}

TEST_CASE("closed form and recursion agree") {
    for (long long n = 0; n <= 22; ++n) {
        for (const auto& p : enumerate_class(n, ClassSpec::gordon(3, 2)))
            CHECK(f_forward(p) == f_forward_recursive(p));
    }
}

TEST_CASE("inverse worked example") {
    CHECK(f_inverse(kExample1Image) == kExample1);
    CHECK(f_inverse(P({5, 3, 2})) == P({5, 3, 2}));
    CHECK_THROWS_AS(f_inverse(P({3, 3})), std::domain_error);
}

TEST_CASE("round trip and image classes, exhaustive") {
    for (long long n = 0; n <= 24; ++n) {
        std::set<Partition> images;
        auto sources = enumerate_class(n, ClassSpec::gordon(3, 2));
        for (const auto& p : sources) {
            Partition lam = f_forward(p);
            CHECK(lam.weight() == p.weight());
            CHECK(is_member(lam, ClassSpec::a2()));
            CHECK(f_inverse(lam) == p);
            images.insert(lam);
        }
        // injective with image exactly the A2 partitions of n
        CHECK(images.size() == sources.size());
        auto targets = enumerate_class(n, ClassSpec::a2());
        CHECK(images == std::set<Partition>(targets.begin(), targets.end()));
    }
}

TEST_CASE("g1 maps onto a1 and b1 onto t") {
    for (long long n = 0; n <= 22; ++n) {
        for (auto [src, dst] : {std::pair{ClassSpec::gordon(3, 1), ClassSpec::a1()},
                                std::pair{ClassSpec::bressoud(3, 1), ClassSpec::t()}}) {
            std::set<Partition> images;
            for (const auto& p : enumerate_class(n, src)) {
                Partition lam = f_forward(p);
                CHECK(is_member(lam, dst));
                images.insert(lam);
            }
            auto targets = enumerate_class(n, dst);
            CHECK(images == std::set<Partition>(targets.begin(), targets.end()));
        }
    }
}

TEST_CASE("image multiplicity structure") {
    // In the image, each even value 2i appears R_i - R_{i+1} - len(tail_i)
    // times; at least twice when the source has no 1's.
    for (long long n = 0; n <= 20; ++n) {
        for (const auto& p : enumerate_class(n, ClassSpec::gordon(3, 1))) {
            auto dec = decompose(p);
            auto lam = f_forward(p);
            long long d = static_cast<long long>(dec.blocks.size());
            for (long long i = 1; i <= d; ++i) {
                long long r = dec.blocks[i - 1].repeated;
                long long rn = i < d ? dec.blocks[i].repeated : 0;
                long long expected = r - rn - static_cast<long long>(dec.blocks[i - 1].tail.length());
                CHECK(lam.multiplicity(2 * i) == expected);
                CHECK(expected >= 2);
            }
        }
    }
}

TEST_CASE("direct recovery formula agrees with peeling") {
    for (long long n = 0; n <= 20; ++n) {
        for (const auto& p : enumerate_class(n, ClassSpec::gordon(3, 2))) {
            auto lam = f_forward(p);
            auto reps = repeated_parts(p);
            for (long long i = 1; i <= reps.count; ++i)
                CHECK(direct_repeated_part(lam, i) == reps.values[static_cast<std::size_t>(i - 1)]);
        }
    }
}

TEST_CASE("s-diagram worked example") {
    auto diag = s_diagram(kExample1);
    REQUIRE(diag.rows.size() == 5);
    REQUIRE(diag.cols == 25);
    std::vector<std::vector<long long>> expected = {
        {40, 37, 36, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2},
        {0, 0, 0, 20, 19, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 0, 0, 0},
        {0, 0, 0, 0, 0, 15, 13, 12, 10, 2, 2, 2, 2, 2, 2, 2, 2, 0, 0, 0, 0, 0, 0, 0, 0},
        {0, 0, 0, 0, 0, 0, 0, 0, 0, 2, 2, 2, 2, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
        {0, 0, 0, 0, 0, 0, 0, 0, 0, 2, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0}};
    CHECK(diag.rows == expected);
    CHECK(diag.column_sums() == kExample1Image);
    CHECK(diag.total() == kExample1.weight());
}

TEST_CASE("s-diagram edge cases") {
    auto d22 = s_diagram(P({2, 2}));
    CHECK(d22.rows == std::vector<std::vector<long long>>{{2, 2}, {0, 0}});
    auto dempty = s_diagram(P({}));
    CHECK(dempty.rows.size() == 1);
    CHECK(dempty.cols == 0);
}

TEST_CASE("s-diagram consistency, exhaustive") {
    for (long long n = 0; n <= 20; ++n) {
        for (const auto& p : enumerate_class(n, ClassSpec::gordon(3, 2))) {
            auto diag = s_diagram(p);
            CHECK(diag.column_sums() == f_forward(p));
            CHECK(diag.total() == p.weight());
        }
    }
}

TEST_CASE("g and h maps") {
    CHECK(g_shift(P({16, 14, 12, 12, 7, 5, 5, 3, 2, 1})) ==
          P({17, 15, 13, 13, 8, 6, 6, 4, 3, 2}));
    CHECK(g_shift(P({})) == P({}));
    CHECK(g_shift(P({3, 1, 1})) == P({4, 2, 2}));

    CHECK(h_map(parse_partition("{17,15,10,8,7,6}u<2^6 4^3>")) ==
          P({16, 14, 9, 7, 6, 5, 4, 3, 3, 2, 2, 2, 2, 1, 1}));
    CHECK(h_map(P({3, 2})) == P({2, 1}));
    CHECK(h_map(P({2, 2})) == P({1, 1}));
    CHECK(is_member(h_map(P({2, 2})), ClassSpec::a3()));
    CHECK(h_inverse(P({1, 1})) == P({2, 2}));
}

TEST_CASE("fbar worked example and non-injectivity witness") {
    CHECK(fbar(P({16, 14, 12, 12, 7, 5, 5, 3, 2, 1})) ==
          P({16, 14, 9, 7, 6, 5, 4, 3, 3, 2, 2, 2, 2, 1, 1}));
    CHECK(fbar(P({})) == P({}));
    // f itself fails to separate these two members of the i=3 Gordon class
    CHECK(f_forward(P({3, 1, 1})) == P({3, 2}));
    CHECK(f_forward(P({3, 2})) == P({3, 2}));
}

TEST_CASE("fbar bijects g3 onto a3, exhaustive") {
    for (long long n = 0; n <= 20; ++n) {
        std::set<Partition> images;
        auto sources = enumerate_class(n, ClassSpec::gordon(3, 3));
        for (const auto& p : sources) {
            Partition mu = fbar(p);
            CHECK(mu.weight() == p.weight());
            CHECK(is_member(mu, ClassSpec::a3()));
            CHECK(fbar_inverse(mu) == p);
            images.insert(mu);
        }
        auto targets = enumerate_class(n, ClassSpec::a3());
        CHECK(images.size() == sources.size());
        CHECK(images == std::set<Partition>(targets.begin(), targets.end()));
    }
}

TEST_CASE("sbar-diagram worked example") {
    auto diag = sbar_diagram(P({16, 14, 12, 12, 7, 5, 5, 3, 2, 1}));
    REQUIRE(diag.rows.size() == 3);
    REQUIRE(diag.cols == 15);
    std::vector<std::vector<long long>> expected = {
        {16, 14, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 1, 1},
        {0, 0, 7, 2, 2, 2, 2, 1, 1, 0, 0, 0, 0, 0, 0},
        {0, 0, 0, 3, 2, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0}};
    CHECK(diag.rows == expected);
    CHECK(diag.column_sums() == fbar(P({16, 14, 12, 12, 7, 5, 5, 3, 2, 1})));
}

TEST_CASE("sbar-diagram consistency, exhaustive") {
    auto dempty = sbar_diagram(P({}));
    CHECK(dempty.rows.size() == 1);
    CHECK(dempty.cols == 0);
    for (long long n = 0; n <= 18; ++n) {
        for (const auto& p : enumerate_class(n, ClassSpec::gordon(3, 3))) {
            auto diag = sbar_diagram(p);
            CHECK(diag.column_sums() == fbar(p));
        }
    }
}

TEST_CASE("domain errors") {
    CHECK_THROWS_AS(g_shift(P({2, 2, 1})), std::domain_error);
    CHECK_THROWS_AS(h_map(P({1})), std::domain_error);
    CHECK_THROWS_AS(fbar(P({1, 1, 1})), std::domain_error);
    CHECK_THROWS_AS(fbar_inverse(P({3, 3})), std::domain_error);
    CHECK_THROWS_AS(s_diagram(P({1, 1})), std::domain_error);
}
