#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <array>
#include <numeric>
#include <set>
#include <utility>
#include <vector>

#include "gdm/finite_field.hpp"

using namespace gdm;

namespace {

const GfpPoly kQuarticPrimitive = {1, 1, 0, 0, 1}; // x^4 + x + 1

GaloisField gf16() { return GaloisField(FieldParams{2, 4, kQuarticPrimitive}); }

std::vector<FieldElement> all_elements(const GaloisField& f) {
    std::vector<FieldElement> e;
    e.push_back(f.zero());
    for (std::int64_t i = 0; i < f.order(); ++i) e.push_back(f.from_power(i));
    return e;
}

// Reference rows for GF(16) built on x^4 + x + 1: coefficient vector
// (highest degree first), multiplicative order, minimal polynomial.
struct Gf16Row {
    int i;
    std::array<int, 4> vec_high_first;
    std::int64_t order;
    GfpPoly min_poly;
};

const GfpPoly kMp01 = {1, 1};          // x + 1
const GfpPoly kMp1 = {1, 1, 0, 0, 1};  // x^4 + x + 1
const GfpPoly kMp3 = {1, 1, 1, 1, 1};  // x^4 + x^3 + x^2 + x + 1
const GfpPoly kMp5 = {1, 1, 1};        // x^2 + x + 1
const GfpPoly kMp7 = {1, 0, 0, 1, 1};  // x^4 + x^3 + 1

const Gf16Row kGf16Table[] = {
    {0, {0, 0, 0, 1}, 1, kMp01}, {1, {0, 0, 1, 0}, 15, kMp1},  {2, {0, 1, 0, 0}, 15, kMp1},
    {3, {1, 0, 0, 0}, 5, kMp3},  {4, {0, 0, 1, 1}, 15, kMp1},  {5, {0, 1, 1, 0}, 3, kMp5},
    {6, {1, 1, 0, 0}, 5, kMp3},  {7, {1, 0, 1, 1}, 15, kMp7},  {8, {0, 1, 0, 1}, 15, kMp1},
    {9, {1, 0, 1, 0}, 5, kMp3},  {10, {0, 1, 1, 1}, 3, kMp5},  {11, {1, 1, 1, 0}, 15, kMp7},
    {12, {1, 1, 1, 1}, 5, kMp3}, {13, {1, 1, 0, 1}, 15, kMp7}, {14, {1, 0, 0, 1}, 15, kMp7},
};

} // namespace

TEST_CASE("GF(16) reference table is reproduced element by element") {
    GaloisField f = gf16();
    REQUIRE(f.size() == 16);
    REQUIRE(f.order() == 15);
    for (const Gf16Row& row : kGf16Table) {
        FieldElement a = f.from_power(row.i);
        std::vector<int> cf = a.coeffs(); // ascending
        REQUIRE(cf.size() == 4);
        for (int j = 0; j < 4; ++j) CHECK(cf[static_cast<size_t>(3 - j)] == row.vec_high_first[static_cast<size_t>(j)]);
        CHECK(a.multiplicative_order() == row.order);
        // Independent order oracle: smallest t >= 1 with a^t = 1.
        std::int64_t t = 1;
        FieldElement acc = a;
        while (acc != f.one()) {
            acc = acc * a;
            ++t;
        }
        CHECK(t == row.order);
        CHECK(row.order == 15 / std::gcd<std::int64_t>(row.i, 15));
        CHECK(f.minimal_polynomial(a) == row.min_poly);
    }
    CHECK(f.minimal_polynomial(f.zero()) == GfpPoly{0, 1}); // x
}

TEST_CASE("field axioms hold exhaustively on small fields") {
    auto check_axioms = [](const GaloisField& f) {
        std::vector<FieldElement> e = all_elements(f);
        FieldElement zero = f.zero(), one = f.one();
        for (const FieldElement& a : e) {
            CHECK(a + zero == a);
            CHECK(a * one == a);
            CHECK(a * zero == zero);
            CHECK(a - a == zero);
            if (!a.is_zero()) {
                CHECK(a * a.inv() == one);
                CHECK(a / a == one);
            }
            for (const FieldElement& b : e) {
                CHECK(a + b == b + a);
                CHECK(a * b == b * a);
                for (const FieldElement& c : e) {
                    CHECK((a + b) + c == a + (b + c));
                    CHECK((a * b) * c == a * (b * c));
                    CHECK(a * (b + c) == a * b + a * c);
                }
            }
        }
    };
    check_axioms(GaloisField::with_default_poly(2, 2));
    check_axioms(GaloisField::with_default_poly(2, 3));
    check_axioms(gf16());
    check_axioms(GaloisField::with_default_poly(3, 2));
}

TEST_CASE("multiplication adds power indices modulo the group order") {
    for (auto [p, m] : std::vector<std::pair<int, int>>{{2, 8}, {3, 3}, {5, 2}, {7, 2}}) {
        GaloisField f = GaloisField::with_default_poly(p, m);
        const std::int64_t ord = f.order();
        for (std::int64_t i = 0; i < ord; ++i)
            for (std::int64_t j = i; j < ord; ++j)
                CHECK((f.from_power(i) * f.from_power(j)).power() == (i + j) % ord);
    }
}

TEST_CASE("representation round trips cover every element") {
    for (auto [p, m] : std::vector<std::pair<int, int>>{{2, 4}, {3, 2}}) {
        GaloisField f = GaloisField::with_default_poly(p, m);
        std::set<std::int64_t> seen;
        for (const FieldElement& a : all_elements(f)) {
            CHECK(f.from_packed(a.packed()) == a);
            CHECK(f.from_coeffs(a.coeffs()) == a);
            seen.insert(a.packed());
        }
        CHECK(static_cast<std::int64_t>(seen.size()) == f.size());
    }
}

TEST_CASE("hand arithmetic in GF(16)") {
    GaloisField f = gf16();
    auto a = [&](std::int64_t i) { return f.from_power(i); };
    CHECK(a(1) + a(2) == a(5));
    CHECK(a(7) * a(8) == f.one());
    CHECK(a(1).inv() == a(14));
    CHECK(a(5).inv() == a(10));
    CHECK(f.one().inv() == f.one());
    CHECK(a(3) + a(3) == f.zero());
    CHECK(a(1).pow(16) == a(1));
    CHECK(a(3).pow(5) == f.one());
    CHECK(f.zero().pow(3) == f.zero());
    CHECK(f.zero().pow(0) == f.one());
    CHECK(a(4).pow(-1) == a(4).inv());
    CHECK(a(14) == a(-1));
    CHECK(f.embed(15) == f.one());
    CHECK(f.embed(2) == f.zero());
    CHECK(f.embed(-1) == f.one());
}

TEST_CASE("subfield membership and base values") {
    GaloisField f = gf16();
    CHECK(f.zero().in_base_field());
    CHECK(f.one().in_base_field());
    CHECK(!f.from_power(5).in_base_field());
    CHECK(f.zero().base_value() == 0);
    CHECK(f.one().base_value() == 1);
    CHECK_THROWS_AS((void)f.from_power(5).base_value(), Error);

    GaloisField f9 = GaloisField::with_default_poly(3, 2);
    CHECK(f9.embed(2).in_base_field());
    CHECK(f9.embed(2).base_value() == 2);
    CHECK(f9.embed(2) * f9.embed(2) == f9.one());
}

TEST_CASE("elements of requested order") {
    GaloisField f = gf16();
    CHECK(f.element_of_order(15) == f.from_power(1));
    CHECK(f.element_of_order(5) == f.from_power(3));
    CHECK(f.element_of_order(3) == f.from_power(5));
    CHECK(f.element_of_order(1) == f.one());
    CHECK(f.element_of_order(5).multiplicative_order() == 5);
    CHECK_THROWS_AS((void)f.element_of_order(7), Error);
    CHECK_THROWS_AS((void)f.element_of_order(2), Error);
}

TEST_CASE("construction rejects bad parameters with specific errors") {
    auto code_of = [](auto&& fn) {
        try {
            fn();
        } catch (const Error& e) {
            return e.code();
        }
        return Errc::domain_error;
    };
    CHECK(code_of([] { GaloisField f(FieldParams{4, 2, {1, 1, 1}}); }) == Errc::not_prime);
    CHECK(code_of([] { GaloisField f(FieldParams{2, 4, {1, 0, 1, 0, 1}}); }) ==
          Errc::not_irreducible); // x^4+x^2+1 = (x^2+x+1)^2
    CHECK(code_of([] { GaloisField f(FieldParams{2, 4, {1, 1, 1, 1, 1}}); }) ==
          Errc::not_primitive); // root of x^4+x^3+x^2+x+1 has order 5
    CHECK(code_of([] { GaloisField f(FieldParams{2, 17, GfpPoly(18, 1)}); }) == Errc::unsupported);
    CHECK(code_of([] { GaloisField f(FieldParams{2, 4, {1, 1, 1}}); }) ==
          Errc::domain_error); // degree disagrees with m
}

TEST_CASE("zero handling raises division errors") {
    GaloisField f = gf16();
    CHECK_THROWS_AS((void)f.zero().inv(), Error);
    CHECK_THROWS_AS((void)(f.one() / f.zero()), Error);
    CHECK_THROWS_AS((void)f.zero().pow(-2), Error);
    CHECK_THROWS_AS((void)f.zero().power(), Error);
    CHECK_THROWS_AS((void)f.zero().multiplicative_order(), Error);
}

TEST_CASE("cross-field operations are rejected, detached zeros are adopted") {
    GaloisField f16 = gf16();
    GaloisField f8 = GaloisField::with_default_poly(2, 3);
    CHECK_THROWS_AS((void)(f16.generator() + f8.generator()), Error);
    CHECK_THROWS_AS((void)(f16.generator() * f8.generator()), Error);
    CHECK(f16.generator() != f8.generator());
    CHECK(f16.zero() == f8.zero()); // zero compares equal across fields

    FieldElement detached; // zero of no particular field
    CHECK(detached.is_zero());
    CHECK(detached + f16.generator() == f16.generator());
    CHECK(detached * f16.generator() == f16.zero());
    CHECK(detached == f16.zero());
}

TEST_CASE("minimal polynomials multiply to x^q - x over the field") {
    GaloisField f = gf16();
    // One factor per conjugacy class; their product over all classes,
    // including the zero element's x, is x^16 - x = x^16 + x.
    std::set<GfpPoly> factors;
    factors.insert(f.minimal_polynomial(f.zero()));
    for (std::int64_t i = 0; i < 15; ++i) factors.insert(f.minimal_polynomial(f.from_power(i)));
    GfpPoly prod = {1};
    for (const GfpPoly& mp : factors) {
        CHECK(gfp::is_irreducible(mp, 2));
        prod = gfp::mul(prod, mp, 2);
    }
    GfpPoly x16_plus_x(17, 0);
    x16_plus_x[1] = 1;
    x16_plus_x[16] = 1;
    CHECK(prod == x16_plus_x);
    CHECK(factors.size() == 6); // x, x+1, x^2+x+1, two quartic pairs' polys
}

TEST_CASE("minimal polynomial annihilates the element and its conjugates") {
    GaloisField f = gf16();
    for (std::int64_t i = 0; i < 15; ++i) {
        FieldElement a = f.from_power(i);
        GfpPoly mp = f.minimal_polynomial(a);
        CHECK(mp == f.minimal_polynomial(a.pow(2))); // conjugates share it
        // Evaluate mp at a by Horner in the extension field.
        FieldElement acc = f.zero();
        for (size_t j = mp.size(); j-- > 0;) acc = acc * a + f.embed(mp[j]);
        CHECK(acc == f.zero());
    }
}

TEST_CASE("default polynomial catalog builds fields across characteristics") {
    for (int m = 1; m <= 16; ++m) {
        GaloisField f = GaloisField::with_default_poly(2, m);
        CHECK(f.order() == (1ll << m) - 1);
        CHECK(f.generator().multiplicative_order() == f.order());
    }
    for (auto [p, m] : std::vector<std::pair<int, int>>{{3, 1}, {3, 2}, {3, 4}, {5, 2}, {7, 2}, {11, 1}}) {
        GaloisField f = GaloisField::with_default_poly(p, m);
        CHECK(f.p() == p);
        CHECK(f.m() == m);
        CHECK(f.generator().multiplicative_order() == f.order());
    }
    CHECK(default_polynomial(2, 4) == kQuarticPrimitive);
    CHECK_THROWS_AS((void)default_polynomial(2, 17), Error);
}

TEST_CASE("generator edge case in the two element field") {
    GaloisField f = GaloisField::with_default_poly(2, 1);
    CHECK(f.order() == 1);
    CHECK(f.generator() == f.one());
    CHECK(f.one() + f.one() == f.zero());
    CHECK(f.minimal_polynomial(f.one()) == GfpPoly{1, 1});
}
