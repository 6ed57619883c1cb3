// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <cmath>
#include <random>

#include "alphaineq/alpha_real.hpp"

using namespace alphaineq;

namespace {

// Dyadic rationals m * 2^e with |m| < 2^17 and |e| <= 8: sums and triple
// products stay exactly representable, so the axiom checks are
// tolerance-free.
double dyadic(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> mdist(-(1 << 17), 1 << 17);
    std::uniform_int_distribution<int> edist(-8, 8);
    return std::ldexp(static_cast<double>(mdist(rng)), edist(rng));
}

Dimension random_dim(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    return Dimension(0.001 + u(rng) * 0.999);
}

bool same(const AlphaReal& x, const AlphaReal& y) {
    return x.sign() == y.sign() && x.base() == y.base() && x.dim() == y.dim();
}

} // namespace

TEST_CASE("make splits sign and magnitude") {
    const Dimension half(0.5);
    const AlphaReal a = AlphaReal::make(3.0, half);
    CHECK(a.sign() == 1);
    CHECK(a.base() == 3.0);

    const AlphaReal z = AlphaReal::make(0.0, Dimension(0.3));
    CHECK(z.sign() == 0);
    CHECK(z.base() == 0.0);

    const AlphaReal n = AlphaReal::make(-2.0, half);
    CHECK(n.sign() == -1);
    CHECK(n.base() == 2.0);

    CHECK(AlphaReal::make(-0.0, half).sign() == 0);
    CHECK_THROWS_AS(AlphaReal::make(std::nan(""), half), DomainError);
    CHECK_THROWS_AS((void)Dimension(0.0), DomainError);
    CHECK_THROWS_AS((void)Dimension(1.5), DomainError);
}

TEST_CASE("add/sub/mul work on signed bases") {
    const Dimension d(0.7);
    const AlphaReal one = AlphaReal::make(1, d);
    const AlphaReal two = AlphaReal::make(2, d);
    const AlphaReal three = AlphaReal::make(3, d);

    CHECK(same(add(one, two), three));                       // 1^a + 2^a = 3^a
    CHECK(same(add(two, AlphaReal::make(0, d)), two));       // a^a + 0^a = a^a
    CHECK(add(two, AlphaReal::make(-2, d)).sign() == 0);

    CHECK(same(sub(three, one), two));
    CHECK(sub(two, two).sign() == 0);
    CHECK(same(sub(one, three), AlphaReal::make(-2, d)));

    CHECK(same(mul(two, three), AlphaReal::make(6, d)));
    CHECK(same(mul(two, one), two));
    CHECK(same(mul(AlphaReal::make(-2, d), three), AlphaReal::make(-6, d)));

    const AlphaReal other = AlphaReal::make(1, Dimension(0.8));
    CHECK_THROWS_AS(add(one, other), DimensionError);
    CHECK_THROWS_AS(cmp(one, other), DimensionError);
}

TEST_CASE("scalar_mul scales the value") {
    const AlphaReal x = AlphaReal::make(4, Dimension(0.5));
    const AlphaReal half_x = scalar_mul(0.5, x);
    CHECK(half_x.base() == 1.0);  // 0.5^(1/0.5) * 4 = 1 exactly
    CHECK(value(half_x) == doctest::Approx(1.0).epsilon(1e-14));

    CHECK(same(scalar_mul(1.0, x), x));

    const AlphaReal neg = scalar_mul(-1.0, AlphaReal::make(2, Dimension(0.5)));
    CHECK(neg.sign() == -1);
    CHECK(value(neg) == doctest::Approx(-value(AlphaReal::make(2, Dimension(0.5)))));

    // tiny alpha: |m|^(1/alpha) leaves the representable range
    CHECK_THROWS_AS(scalar_mul(2.0, AlphaReal::make(1, Dimension(0.001))),
                    OverflowError);

    // value-level property on random inputs
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> mag(0.1, 10.0);
    for (int i = 0; i < 2000; ++i) {
        const Dimension d(0.2 + 0.8 * mag(rng) / 10.0);
        const double m = mag(rng) - 5.0;
        const AlphaReal v = AlphaReal::make(mag(rng), d);
        const AlphaReal scaled = scalar_mul(m, v);
        CHECK(value(scaled) == doctest::Approx(m * value(v)).epsilon(1e-11));
    }
}

TEST_CASE("pow on bases") {
    const Dimension half(0.5);
    const AlphaReal four = AlphaReal::make(4, half);
    CHECK(pow(four, 2).base() == 16.0);
    CHECK(value(pow(four, 2)) == doctest::Approx(4.0).epsilon(1e-14));
    CHECK(same(pow(four, 1), four));
    CHECK(pow(four, 0.5).base() == 2.0);
    CHECK(value(pow(four, 0.5)) == doctest::Approx(1.4142135623730951).epsilon(1e-14));

    CHECK(pow(AlphaReal::make(-2, half), 3).signed_base() == -8.0);
    CHECK(pow(AlphaReal::make(-2, half), 2).signed_base() == 4.0);
    CHECK_THROWS_AS(pow(AlphaReal::make(-2, half), 0.5), DomainError);
    CHECK_THROWS_AS(pow(AlphaReal::make(0, half), -1.0), PoleError);
    CHECK(pow(AlphaReal::make(0, half), 0.0).base() == 1.0);
    CHECK_THROWS_AS(pow(AlphaReal::make(1e200, half), 2.0), OverflowError);
}

TEST_CASE("value evaluates sign * base^alpha") {
    CHECK(value(AlphaReal::make(4, Dimension(0.5))) == 2.0);
    CHECK(value(AlphaReal::make(0, Dimension(0.9))) == 0.0);
    CHECK(value(AlphaReal::make(-8, Dimension(0.3333333333))) ==
          doctest::Approx(-1.9999999998613707).epsilon(1e-12));

    // log-domain branch for huge bases
    const AlphaReal huge = AlphaReal::make(1e301, Dimension(0.5));
    CHECK(value(huge) == doctest::Approx(std::pow(10.0, 150.5)).epsilon(1e-12));
}

TEST_CASE("cmp orders by signed base and matches the value order") {
    const Dimension d(0.6);
    CHECK(cmp(AlphaReal::make(3, d), AlphaReal::make(2, d)) ==
          std::strong_ordering::greater);
    CHECK(cmp(AlphaReal::make(5, d), AlphaReal::make(5, d)) ==
          std::strong_ordering::equal);
    CHECK(cmp(AlphaReal::make(-1, d), AlphaReal::make(0, d)) ==
          std::strong_ordering::less);
}

TEST_CASE("operation axioms hold exactly on dyadic bases") {
    std::mt19937_64 rng(42);
    for (int iter = 0; iter < 5000; ++iter) {
        const Dimension d = random_dim(rng);
        const double a = dyadic(rng), b = dyadic(rng), c = dyadic(rng);
        const AlphaReal xa = AlphaReal::make(a, d);
        const AlphaReal xb = AlphaReal::make(b, d);
        const AlphaReal xc = AlphaReal::make(c, d);

        REQUIRE(same(add(xa, xb), add(xb, xa)));
        REQUIRE(same(add(xa, xb), AlphaReal::make(a + b, d)));
        REQUIRE(same(add(xa, add(xb, xc)), add(add(xa, xb), xc)));
        REQUIRE(same(mul(xa, xb), mul(xb, xa)));
        REQUIRE(same(mul(xa, xb), AlphaReal::make(a * b, d)));
        REQUIRE(same(mul(xa, mul(xb, xc)), mul(mul(xa, xb), xc)));
        REQUIRE(same(mul(xa, add(xb, xc)), add(mul(xa, xb), mul(xa, xc))));
        REQUIRE(same(add(xa, AlphaReal::make(0, d)), xa));
        REQUIRE(same(mul(xa, AlphaReal::make(1, d)), xa));
    }
}

TEST_CASE("order laws hold exactly on dyadic bases") {
    std::mt19937_64 rng(43);
    for (int iter = 0; iter < 5000; ++iter) {
        const Dimension d = random_dim(rng);
        const double a = dyadic(rng), b = dyadic(rng), c = dyadic(rng);
        const AlphaReal xa = AlphaReal::make(a, d);
        const AlphaReal xb = AlphaReal::make(b, d);
        const AlphaReal xc = AlphaReal::make(c, d);

        // trichotomy, and agreement with the base order
        const auto ord = cmp(xa, xb);
        REQUIRE(((ord == std::strong_ordering::less && a < b) ||
                 (ord == std::strong_ordering::equal && a == b) ||
                 (ord == std::strong_ordering::greater && a > b)));

        // transitivity
        if (cmp(xa, xb) == std::strong_ordering::greater &&
            cmp(xb, xc) == std::strong_ordering::greater)
            REQUIRE(cmp(xa, xc) == std::strong_ordering::greater);

        if (cmp(xa, xb) == std::strong_ordering::greater) {
            REQUIRE(cmp(add(xa, xc), add(xb, xc)) == std::strong_ordering::greater);
            if (xc.sign() > 0)
                REQUIRE(cmp(mul(xa, xc), mul(xb, xc)) == std::strong_ordering::greater);
            if (xc.sign() < 0)
                REQUIRE(cmp(mul(xa, xc), mul(xb, xc)) == std::strong_ordering::less);
        }
    }
}

TEST_CASE("value homomorphism within 1e-12 and subadditivity") {
    std::mt19937_64 rng(44);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int iter = 0; iter < 10000; ++iter) {
        const Dimension d = random_dim(rng);
        const double a = std::exp(-6.9 + 13.8 * u(rng));
        const double b = std::exp(-6.9 + 13.8 * u(rng));
        const AlphaReal xa = AlphaReal::make(a, d);
        const AlphaReal xb = AlphaReal::make(b, d);

        const double vm = value(mul(xa, xb));
        REQUIRE(std::abs(vm - value(xa) * value(xb)) <=
                1e-12 * std::max(1.0, std::abs(vm)));

        const double m = -4.0 + 8.0 * u(rng);
        const double vp = value(pow(xa, m));
        REQUIRE(std::abs(vp - std::pow(value(xa), m)) <=
                1e-12 * std::max(1.0, std::abs(vp)));

        // base order and value order agree away from ties
        const double va = value(xa), vb = value(xb);
        if (std::abs(va - vb) > 1e-12 * std::max({1.0, va, vb})) {
            const auto ord = cmp(xa, xb);
            REQUIRE((va < vb ? ord == std::strong_ordering::less
                             : ord == std::strong_ordering::greater));
        }

        // add is not a value homomorphism; it is subadditive for a, b >= 0
        const double vsum = value(add(xa, xb));
        REQUIRE(vsum <= va + vb + 1e-12 * std::max(1.0, va + vb));
    }
}

TEST_CASE("alpha = 1 reduces to plain real arithmetic") {
    std::mt19937_64 rng(45);
    const Dimension one(1.0);
    for (int iter = 0; iter < 10000; ++iter) {
        const double a = dyadic(rng), b = dyadic(rng);
        const AlphaReal xa = AlphaReal::make(a, one);
        const AlphaReal xb = AlphaReal::make(b, one);
        REQUIRE(value(xa) == a);
        REQUIRE(add(xa, xb).signed_base() == a + b);
        REQUIRE(mul(xa, xb).signed_base() == a * b);
        REQUIRE(value(add(xa, xb)) == a + b);
    }
}
