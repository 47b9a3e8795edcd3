#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "quivmod/error.hpp"
#include "quivmod/laurent.hpp"
#include "quivmod/ratfunc.hpp"
#include "quivmod/series.hpp"

using namespace quivmod;
using oracle::q;

TEST_SUITE("algebra") {

TEST_CASE("polynomial gcd and division") {
    const Poly a({-1, 0, 1});  // v^2 - 1
    const Poly b({1, 1});      // v + 1
    CHECK(Poly::gcd(a, b) == b);
    CHECK(a.exact_div(b) == Poly({-1, 1}));
    auto [quot, rem] = Poly::divmod(Poly({1, 0, 1}), b);
    CHECK(quot == Poly({-1, 1}));
    CHECK(rem == Poly::constant(2));
    CHECK_THROWS_AS(Poly::divmod(a, Poly()), PreconditionError);
    CHECK_THROWS_AS(Poly({1, 0, 1}).exact_div(b), ConsistencyError);
}

TEST_CASE("laurent basics and printing") {
    const HalfLaurent p = HalfLaurent::q_power(2) + HalfLaurent::q_power(3);
    CHECK(p.pretty() == "q^2 + q^3");
    CHECK(HalfLaurent::monomial(-1, 1).pretty() == "-q^(1/2)");
    CHECK((HalfLaurent::monomial(-1, 1) - HalfLaurent::monomial(1, 3)).pretty() == "-q^(1/2) - q^(3/2)");
    CHECK(HalfLaurent(2L).pretty() == "2");
    CHECK(HalfLaurent::q_power(1, 2).pretty() == "2*q");
    CHECK(HalfLaurent::q_power(-1, Rational(1, 2)).pretty() == "1/2*q^-1");
    CHECK(HalfLaurent().pretty() == "0");
    CHECK(p.is_q_polynomial_with_integer_coeffs());
    CHECK(p.q_degree() == 3);
    CHECK_FALSE(HalfLaurent::monomial(1, 1).is_integral_in_q());
    CHECK(rational_string(Rational(-6, 4)) == "-3/2");
    CHECK(parse_rational("-3/2") == Rational(-3, 2));
    CHECK(parse_rational("4/2") == 2);
    CHECK_THROWS_AS(parse_rational("1/0"), InvalidInput);
    CHECK_THROWS_AS(parse_rational("x"), InvalidInput);
}

TEST_CASE("rational function examples") {
    const RatFunc one(1L);
    const RatFunc qm1 = q() - one;
    CHECK(one / qm1 * qm1 == one);
    const RatFunc x = RatFunc::q_power(-1);
    const RatFunc inv2 = (one - x).pow(-2);
    CHECK(x * inv2 - RatFunc::q_power(-2) * inv2 == one / qm1);
    CHECK((one - RatFunc::q_power(-2)) * inv2 == (q() + one) / qm1);
    CHECK_THROWS_AS(one / RatFunc(), PreconditionError);
    CHECK((one / qm1).pretty() == "1/(-1 + q)");
    CHECK(RatFunc(HalfLaurent::q_power(2)).pretty() == "q^2");
}

TEST_CASE("canonical form under common factors") {
    std::mt19937 rng(5);
    for (int trial = 0; trial < 100; ++trial) {
        RatFunc a = oracle::random_monomial(rng) + oracle::random_monomial(rng);
        RatFunc b = oracle::random_monomial(rng) + oracle::random_monomial(rng) + oracle::random_monomial(rng);
        RatFunc c = oracle::random_monomial(rng) + oracle::random_monomial(rng);
        if (b.is_zero() || c.is_zero()) continue;
        const RatFunc lhs = RatFunc::fraction(a.numerator() * c.numerator(), b.numerator() * c.numerator());
        const RatFunc rhs = RatFunc::fraction(a.numerator(), b.numerator());
        CHECK(lhs == rhs);
        CHECK(rhs.den().lead() == 1);
        CHECK(Poly::gcd(rhs.num(), rhs.den()).degree() <= 0);
    }
}

TEST_CASE("field axioms on random values") {
    std::mt19937 rng(17);
    auto rnd = [&] {
        RatFunc den = oracle::random_monomial(rng) + RatFunc(1L);
        while (den.is_zero()) den = oracle::random_monomial(rng) + RatFunc(1L);
        return (oracle::random_monomial(rng) + oracle::random_monomial(rng)) / den;
    };
    for (int trial = 0; trial < 60; ++trial) {
        const RatFunc a = rnd(), b = rnd(), c = rnd();
        CHECK((a + b) * c == a * c + b * c);
        CHECK(a - a == RatFunc());
        if (!b.is_zero()) CHECK(a / b * b == a);
        CHECK(a.pow(3) == a * a * a);
        CHECK(a.inflate(2).inflate(3) == a.inflate(6));
        CHECK((a * b).inflate(2) == a.inflate(2) * b.inflate(2));
    }
}

TEST_CASE("mobius") {
    const int expected[] = {1, -1, -1, 0, -1, 1, -1, 0, 0, 1, -1, 0};
    for (int n = 1; n <= 12; ++n) CHECK(mobius(n) == expected[n - 1]);
    CHECK_THROWS_AS(mobius(0), PreconditionError);
}

TEST_CASE("adams operations") {
    const DimVector box{2, 2};
    const auto s = SlopeSeries::monomial(box, {1, 0}, RatFunc::v());
    CHECK(adams(2, s) == SlopeSeries::monomial(box, {2, 0}, q()));
    CHECK(adams(1, s) == s);
    CHECK(adams(3, SlopeSeries::monomial(box, {1, 1}, RatFunc(1L))).terms().empty());
    std::mt19937 rng(23);
    for (int trial = 0; trial < 20; ++trial) {
        const auto f = oracle::random_series(rng, {4, 4});
        CHECK(adams(2, adams(2, f)) == adams(4, f));
    }
}

TEST_CASE("plethystic exponential") {
    const DimVector d{1, 0};
    const DimVector box{3, 0};
    const auto e = pleth_exp(SlopeSeries::monomial(box, d, q()));
    SlopeSeries expected = SlopeSeries::one(box);
    for (std::int64_t k = 1; k <= 3; ++k) expected.add_term(d.scaled(k), RatFunc::q_power(k));
    CHECK(e == expected);
    CHECK(pleth_exp(SlopeSeries(box)) == SlopeSeries::one(box));
    CHECK_THROWS_AS(pleth_exp(SlopeSeries::one(box)), PreconditionError);

    const DimVector b2{2, 2};
    const auto ta = SlopeSeries::monomial(b2, {1, 0}, RatFunc(1L));
    const auto tb = SlopeSeries::monomial(b2, {0, 1}, RatFunc(1L));
    CHECK(pleth_exp(ta + tb) == pleth_exp(ta) * pleth_exp(tb));
}

TEST_CASE("plethystic exponential of integer monomials is a product of geometric series") {
    // Exp(sum c_i v^k_i t^e_i) = prod (1 - v^k_i t^e_i)^(-c_i) for nonnegative integers c_i.
    const DimVector box{2, 2};
    std::mt19937 rng(31);
    std::uniform_int_distribution<int> cdist(1, 2), kdist(-2, 2);
    for (int trial = 0; trial < 10; ++trial) {
        SlopeSeries f(box);
        SlopeSeries product = SlopeSeries::one(box);
        for (const DimVector e : {DimVector{1, 0}, DimVector{0, 1}, DimVector{1, 1}}) {
            const int c = cdist(rng), k = kdist(rng);
            f.add_term(e, RatFunc::monomial(c, k));
            SlopeSeries geometric = SlopeSeries::one(box);
            for (std::int64_t n = 1; e.scaled(n).leq(box); ++n) geometric.add_term(e.scaled(n), RatFunc::monomial(1, k * n));
            for (int i = 0; i < c; ++i) product = product * geometric;
        }
        CHECK(pleth_exp(f) == product);
    }
}

TEST_CASE("plethystic logarithm") {
    const DimVector box{3, 0};
    SlopeSeries geo = SlopeSeries::one(box);
    for (std::int64_t k = 1; k <= 3; ++k) geo.add_term(DimVector{k, 0}, RatFunc::q_power(k));
    CHECK(pleth_log(geo) == SlopeSeries::monomial(box, {1, 0}, q()));
    CHECK(pleth_log(SlopeSeries::one(box)).terms().empty());
    CHECK_THROWS_AS(pleth_log(SlopeSeries(box)), PreconditionError);
}

TEST_CASE("exp and log round trips") {
    std::mt19937 rng(99);
    const DimVector box{2, 2};
    for (int trial = 0; trial < 30; ++trial) {
        const auto f = oracle::random_series(rng, box);
        CHECK(series_log(series_exp(f)) == f);
        CHECK(pleth_log(pleth_exp(f)) == f);
        CHECK(pleth_exp(pleth_log(SlopeSeries::one(box) + f)) == SlopeSeries::one(box) + f);
    }
}

}
