#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdint>
#include <numeric>

#include "gdm/carriers.hpp"

using namespace gdm;

namespace {

GaloisField gf16() { return GaloisField(FieldParams{2, 4, {1, 1, 0, 0, 1}}); }

struct Lcg {
    std::uint64_t s = 0x243f6a8885a308d3ull;
    std::uint64_t next() {
        s = s * 6364136223846793005ull + 1442695040888963407ull;
        return s >> 33;
    }
};

} // namespace

TEST_CASE("carrier rows are kernel power progressions") {
    GaloisField f = gf16();
    TransformPlan plan(f, 15);
    CarrierSet set(plan);
    REQUIRE(set.size() == 15);

    for (std::int64_t k = 0; k < 15; ++k) {
        CHECK(set.entry(0, k) == f.one());
        CHECK(set.entry(k, 0) == f.one());
        CHECK(set.entry(1, k) == f.from_power(k));
    }
    // Row 3 cycles through the order-5 subgroup with period 5.
    std::vector<FieldElement> row3 = set.carrier(3);
    for (std::int64_t k = 0; k < 15; ++k) {
        CHECK(row3[static_cast<size_t>(k)] == f.from_power((3 * k) % 15));
        CHECK(row3[static_cast<size_t>(k)] == row3[static_cast<size_t>((k + 5) % 15)]);
    }
    // Every entry is a nonzero element.
    for (std::int64_t i = 0; i < 15; ++i)
        for (std::int64_t k = 0; k < 15; ++k) CHECK(!set.entry(i, k).is_zero());
}

TEST_CASE("shortened carrier rows use the order five kernel") {
    GaloisField f = gf16();
    TransformPlan plan(f, f.from_power(3), 5);
    CarrierSet set(plan);
    std::vector<FieldElement> row2 = set.carrier(2);
    std::vector<std::int64_t> expected = {0, 6, 12, 3, 9};
    for (size_t k = 0; k < 5; ++k)
        CHECK(row2[k] == (expected[k] == 0 && k == 0 ? f.one() : f.from_power(expected[k])));
}

TEST_CASE("row periods divide the length by the index gcd") {
    GaloisField f = gf16();
    CarrierSet set{TransformPlan(f, 15)};
    for (std::int64_t i = 0; i < 15; ++i) {
        const std::int64_t period = 15 / std::gcd(i, static_cast<std::int64_t>(15));
        std::vector<FieldElement> row = set.carrier(i);
        for (std::int64_t k = 0; k < 15; ++k)
            CHECK(row[static_cast<size_t>(k)] == row[static_cast<size_t>((k + period) % 15)]);
    }
    CHECK(set.carrier(5)[3] == set.carrier(5)[0]); // period 3
}

TEST_CASE("correlations are diagonal in the field") {
    GaloisField f = gf16();
    for (std::int64_t n : {3, 5, 15}) {
        CarrierSet set{TransformPlan(f, n)};
        const FieldElement diag = f.embed(n);
        CHECK(!diag.is_zero());
        for (std::int64_t i = 0; i < n; ++i) {
            for (std::int64_t t = 0; t < n; ++t) {
                // Direct summation oracle.
                FieldElement expect = f.zero();
                for (std::int64_t k = 0; k < n; ++k)
                    expect = expect + set.entry(i, k) * set.entry(t, k).inv();
                FieldElement got = set.correlation(i, t);
                CHECK(got == expect);
                CHECK(got == (i == t ? diag : f.zero()));
            }
        }
    }
}

TEST_CASE("correlation depends only on the index difference") {
    GaloisField f = gf16();
    CarrierSet set{TransformPlan(f, 15)};
    for (std::int64_t i = 0; i < 15; ++i)
        for (std::int64_t t = 0; t < 15; ++t)
            CHECK(set.correlation(i, t) == set.correlation((i + 1) % 15, (t + 1) % 15));
}

TEST_CASE("correlation matrix in odd characteristic has a nonunit diagonal") {
    GaloisField f9 = GaloisField::with_default_poly(3, 2);
    CarrierSet set{TransformPlan(f9, 8)};
    const FieldElement two = f9.embed(8); // 8 mod 3 = 2
    CHECK(two == f9.embed(2));
    auto matrix = set.correlation_matrix();
    for (std::int64_t i = 0; i < 8; ++i)
        for (std::int64_t t = 0; t < 8; ++t)
            CHECK(matrix[static_cast<size_t>(i)][static_cast<size_t>(t)] ==
                  (i == t ? two : f9.zero()));
}

TEST_CASE("correlation matrix matches pointwise correlation") {
    GaloisField f = gf16();
    CarrierSet set{TransformPlan(f, 5)};
    auto matrix = set.correlation_matrix();
    REQUIRE(matrix.size() == 5);
    for (std::int64_t i = 0; i < 5; ++i)
        for (std::int64_t t = 0; t < 5; ++t)
            CHECK(matrix[static_cast<size_t>(i)][static_cast<size_t>(t)] == set.correlation(i, t));
}

TEST_CASE("spreading a symbol scales its carrier") {
    GaloisField f = gf16();
    TransformPlan plan(f, 15);
    CarrierSet set(plan);

    CHECK(set.spread_user(4, f.zero()) == std::vector<FieldElement>(15, f.zero()));
    CHECK(set.spread_user(1, f.one()) == set.carrier(1));

    Lcg rng;
    for (int iter = 0; iter < 30; ++iter) {
        std::int64_t i = static_cast<std::int64_t>(rng.next() % 15);
        FieldElement a = f.from_power(static_cast<std::int64_t>(rng.next() % 15));
        FieldElement b = f.from_power(static_cast<std::int64_t>(rng.next() % 15));
        std::vector<FieldElement> sa = set.spread_user(i, a);
        std::vector<FieldElement> sb = set.spread_user(i, b);
        std::vector<FieldElement> sab = set.spread_user(i, a + b);
        for (size_t k = 0; k < 15; ++k) CHECK(sa[k] + sb[k] == sab[k]);
    }
}

TEST_CASE("summing all users' spread vectors performs the transform") {
    GaloisField f = gf16();
    TransformPlan plan(f, 15);
    CarrierSet set(plan);
    Lcg rng;
    for (int iter = 0; iter < 20; ++iter) {
        TimeVector v;
        for (int i = 0; i < 15; ++i) v.push_back(f.embed(static_cast<std::int64_t>(rng.next() & 1)));
        std::vector<FieldElement> sum(15, f.zero());
        for (std::int64_t i = 0; i < 15; ++i) {
            std::vector<FieldElement> s = set.spread_user(i, v[static_cast<size_t>(i)]);
            for (size_t k = 0; k < 15; ++k) sum[k] = sum[k] + s[k];
        }
        CHECK(sum == ffft(plan, v));
    }
}

TEST_CASE("index bounds are enforced") {
    GaloisField f = gf16();
    CarrierSet set{TransformPlan(f, 15)};
    CHECK_THROWS_AS((void)set.carrier(15), Error);
    CHECK_THROWS_AS((void)set.carrier(-1), Error);
    CHECK_THROWS_AS((void)set.entry(0, 15), Error);
    CHECK_THROWS_AS((void)set.correlation(15, 0), Error);
    CHECK_THROWS_AS((void)set.spread_user(15, f.one()), Error);
}

TEST_CASE("lengths beyond the cache limit are generated on demand") {
    GaloisField f = GaloisField::with_default_poly(2, 16);
    const std::int64_t n = 21845; // 65535 / 3
    CarrierSet set{TransformPlan(f, n)};
    CHECK(set.entry(0, 12345) == f.one());
    CHECK(set.entry(1, 3) == TransformPlan(f, n).alpha_power(3));
    CHECK(set.carrier(2).size() == static_cast<size_t>(n));
    CHECK(set.correlation(7, 7) == f.one()); // odd length embeds to one
    CHECK(set.correlation(0, 1) == f.zero());
}

TEST_CASE("single carrier set is trivially orthogonal") {
    GaloisField f = gf16();
    CarrierSet set{TransformPlan(f, 1)};
    CHECK(set.size() == 1);
    CHECK(set.correlation(0, 0) == f.one());
    auto matrix = set.correlation_matrix();
    CHECK(matrix[0][0] == f.one());
}
