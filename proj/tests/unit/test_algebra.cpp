#include <doctest.h>

#include "torsionforge/algebra.hpp"

using namespace torsionforge;
using Poly = Polynomial<Rational>;

namespace {

Poly from_rats(std::initializer_list<Rational> coeffs) {
    return Poly::from_coefficients(std::vector<Rational>(coeffs));
}

}  // namespace

TEST_CASE("square_decompose splits n = s^2 * r with r squarefree") {
    auto check_pair = [](long n, long s, long r) {
        const auto [ss, rr] = square_decompose(Integer(n));
        CHECK(ss == s);
        CHECK(rr == r);
        CHECK(ss * ss * rr == n);
    };
    check_pair(1, 1, 1);
    check_pair(2, 1, 2);
    check_pair(4, 2, 1);
    check_pair(72, 6, 2);
    check_pair(360, 6, 10);
    check_pair(1000000, 1000, 1);
    CHECK_THROWS_AS(square_decompose(Integer(0)), ZeroPolynomial);

    SUBCASE("large perfect square beyond the trial bound") {
        const Integer big = integer_pow(Integer(1000003), 2);  // prime^2 > 10^12
        const auto [s, r] = square_decompose(big);
        CHECK(s == 1000003);
        CHECK(r == 1);
    }
}

TEST_CASE("factor_integer returns sorted prime powers") {
    CHECK(factor_integer(Integer(1)).empty());
    {
        const auto f = factor_integer(Integer(18));
        REQUIRE(f.size() == 2);
        CHECK(f[0] == std::pair<Integer, unsigned>(2, 1));
        CHECK(f[1] == std::pair<Integer, unsigned>(3, 2));
    }
    {
        const auto f = factor_integer(Integer(97));
        REQUIRE(f.size() == 1);
        CHECK(f[0] == std::pair<Integer, unsigned>(97, 1));
    }
    {
        const auto f = factor_integer(Integer(4704));  // 2^5 * 3 * 7^2
        REQUIRE(f.size() == 3);
        CHECK(f[0] == std::pair<Integer, unsigned>(2, 5));
        CHECK(f[1] == std::pair<Integer, unsigned>(3, 1));
        CHECK(f[2] == std::pair<Integer, unsigned>(7, 2));
    }
    CHECK_THROWS_AS(factor_integer(Integer(0)), InvalidParams);
    CHECK_THROWS_AS(factor_integer(Integer(-6)), InvalidParams);
}

TEST_CASE("integralize finds the minimal scaling") {
    SUBCASE("already integral") {
        const Poly f = from_rats({Rational(3), Rational(0), Rational(1)});
        const auto [g, c] = integralize(f);
        CHECK(c == 1);
        CHECK(g == f);
    }
    SUBCASE("denominator with an odd power") {
        const Poly f = from_rats({Rational(0), make_rational(1, 3)});  // (1/3) x
        const auto [g, c] = integralize(f);
        CHECK(c == 3);
        CHECK(g == from_rats({Rational(0), Rational(3)}));
    }
    SUBCASE("denominator with an even power") {
        const Poly f = from_rats({Rational(0), Rational(0), Rational(0), make_rational(1, 4)});
        const auto [g, c] = integralize(f);
        CHECK(c == 2);
        CHECK(g == from_rats({Rational(0), Rational(0), Rational(0), Rational(1)}));
    }
    SUBCASE("square content is divided out") {
        const Poly f = from_rats({Rational(8), Rational(4)});  // content 4
        const auto [g, c] = integralize(f);
        CHECK(c == make_rational(1, 2));
        CHECK(g == from_rats({Rational(2), Rational(1)}));
    }
    SUBCASE("mixed denominator and content") {
        const Poly f = from_rats({Rational(0), Rational(0), make_rational(9, 2)});
        const auto [g, c] = integralize(f);
        CHECK(c == make_rational(2, 3));
        CHECK(g == from_rats({Rational(0), Rational(0), Rational(2)}));
    }
    SUBCASE("zero polynomial passes through") {
        const auto [g, c] = integralize(Poly{});
        CHECK(c == 1);
        CHECK(g.is_zero());
    }
    SUBCASE("minimality: no smaller c clears the denominators") {
        const Poly f = from_rats({make_rational(1, 2), make_rational(1, 3)});
        const auto [g, c] = integralize(f);  // lcm 6 = 2*3, both odd powers
        CHECK(c == 6);
        CHECK(g == from_rats({Rational(18), Rational(12)}));
    }
}

TEST_CASE("reduce_mod_p maps coefficients into F_p") {
    const Poly f = from_rats({make_rational(1, 2), Rational(-1), Rational(5)});
    const auto fp = reduce_mod_p(f, 7);
    CHECK(fp.coeff(0) == Fp(4, 7));
    CHECK(fp.coeff(1) == Fp(6, 7));
    CHECK(fp.coeff(2) == Fp(5, 7));
    CHECK_THROWS_AS(reduce_mod_p(f, 2), BadReduction);

    SUBCASE("degree can drop when the leading coefficient vanishes") {
        const Poly g = from_rats({Rational(1), Rational(7)});
        CHECK(reduce_mod_p(g, 7).degree() == 0);
    }
}
