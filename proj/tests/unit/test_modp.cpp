#include <doctest.h>

#include "torsionforge/modp.hpp"

using namespace torsionforge;
using Poly = Polynomial<Rational>;

namespace {

Poly from_ints(std::initializer_list<long> coeffs) {
    std::vector<Rational> v;
    for (long c : coeffs) v.emplace_back(c);
    return Poly::from_coefficients(std::move(v));
}

const Poly kCubic = from_ints({0, -1, 0, 1});  // x^3 - x, disc = 4

}  // namespace

TEST_CASE("integral_discriminant") {
    CHECK(integral_discriminant(kCubic) == 4);
    CHECK(integral_discriminant(from_ints({2, 0, 1})) == -8);
    // x^3 + x/2 has discriminant -1/2; x^2 + x + 1/2 would slip through with
    // discriminant -1 even though the model itself is non-integral.
    CHECK_THROWS_AS(
        integral_discriminant(Poly{Rational(0), make_rational(1, 2), Rational(0), Rational(1)}),
        InvalidParams);
}

TEST_CASE("select_good_primes skips divisors of 2 N lc disc") {
    SUBCASE("x^3 - x with N = 1: the excluded product is 8") {
        CHECK(select_good_primes(kCubic, Integer(1), 1) == std::vector<std::uint64_t>{3});
        CHECK(select_good_primes(kCubic, Integer(1), 3) == std::vector<std::uint64_t>{3, 5, 7});
        CHECK(select_good_primes(kCubic, Integer(1), 0).empty());
    }
    SUBCASE("N contributes to the excluded set") {
        CHECK(select_good_primes(kCubic, Integer(15), 2) == std::vector<std::uint64_t>{7, 11});
    }
    SUBCASE("disc and lc contribute") {
        // 25x^3 - 25x: lc 25, disc(25 f) = 25^4 * 4.
        CHECK(select_good_primes(kCubic.scaled(Rational(25)), Integer(1), 2) ==
              std::vector<std::uint64_t>{3, 7});
    }
    CHECK_THROWS_AS(select_good_primes(kCubic, Integer(0), 1), InvalidParams);
    CHECK_THROWS_AS(select_good_primes(kCubic, Integer(1), -1), InvalidParams);
}

TEST_CASE("make_reduction_context validates the prime") {
    CHECK_THROWS_AS(make_reduction_context(kCubic, 1, 2, Integer(1)), BadReduction);
    CHECK_THROWS_AS(make_reduction_context(kCubic, 1, 9, Integer(1)), BadReduction);
    CHECK_THROWS_AS(make_reduction_context(kCubic, 1, 1, Integer(1)), BadReduction);
    // p | N
    CHECK_THROWS_AS(make_reduction_context(kCubic, 1, 3, Integer(6)), BadReduction);
    // p | disc: x^3 - 5x has disc 500
    CHECK_THROWS_AS(make_reduction_context(from_ints({0, -5, 0, 1}), 1, 5, Integer(1)),
                    BadReduction);
    // p | lc
    CHECK_THROWS_AS(make_reduction_context(kCubic.scaled(Rational(5)), 1, 5, Integer(1)),
                    BadReduction);

    const ReductionContext ctx = make_reduction_context(kCubic, 1, 5, Integer(1));
    CHECK(ctx.p == 5);
    CHECK(ctx.curve.genus == 1);
    CHECK(ctx.curve.f.degree() == 3);
}

TEST_CASE("reduce_point and reduce_divisor") {
    const CurveModel model = build_family(make_params(Family::ThmA, 2));
    const Integer N(18);
    const auto primes = select_good_primes(model.f_int, N, 1);
    REQUIRE(primes.size() == 1);
    const ReductionContext ctx = make_reduction_context(model.f_int, 2, primes[0], N);

    const AffinePoint P0_int{Rational(0), model.scale_c * model.P0.y};
    const auto D = reduce_point(ctx, P0_int);
    check_divisor(ctx.curve, D);
    CHECK(D.u.degree() == 1);

    SUBCASE("a point off the reduced curve is rejected") {
        const Rational y_bad = P0_int.y + 1;
        const bool on_curve =
            Fp::reduce(y_bad, ctx.p) * Fp::reduce(y_bad, ctx.p) ==
            ctx.curve.f(Fp::reduce(P0_int.x, ctx.p));
        if (!on_curve) {
            CHECK_THROWS_AS(reduce_point(ctx, AffinePoint{P0_int.x, y_bad}), PointNotOnCurve);
        }
    }

    SUBCASE("reduction commutes with the group law") {
        const auto jac = make_jacobian_curve(model.f_int, 2);
        const AffinePoint P1_int{Rational(1), model.scale_c * model.P1.y};
        const auto D0 = divisor_from_point(jac, P0_int.x, P0_int.y);
        const auto D1 = divisor_from_point(jac, P1_int.x, P1_int.y);
        const auto sum = add(jac, D0, D1);
        const auto reduced_sum = reduce_divisor(ctx, sum);
        const auto sum_reduced = add(ctx.curve, reduce_point(ctx, P0_int), reduce_point(ctx, P1_int));
        CHECK(equals(reduced_sum, sum_reduced));
    }

    SUBCASE("denominators divisible by p are rejected") {
        MumfordDivisor<Rational> bad;
        bad.u = Poly{make_rational(1, static_cast<long>(ctx.p)), Rational(1)};
        bad.v = Poly{};
        bad.curve_tag = 0;
        CHECK_THROWS_AS(reduce_divisor(ctx, bad), BadReduction);
    }
}

TEST_CASE("order_mod_p recovers the exact reduced order") {
    const CurveModel model = build_family(make_params(Family::ThmA, 2));
    const Integer N(18);
    const AffinePoint P0_int{Rational(0), model.scale_c * model.P0.y};
    for (const std::uint64_t p : select_good_primes(model.f_int, N, 3)) {
        const ReductionContext ctx = make_reduction_context(model.f_int, 2, p, N);
        CHECK(order_mod_p(ctx, P0_int, N) == 18);
        CHECK(brute_force_order_mod_p(ctx, P0_int) == 18);
    }
}

TEST_CASE("cross_check agrees at the true order and dissents otherwise") {
    const CurveModel model = build_family(make_params(Family::ThmA, 2));
    const AffinePoint P0_int{Rational(0), model.scale_c * model.P0.y};

    SUBCASE("true order: every confirmation agrees") {
        const Integer N(18);
        const auto primes = select_good_primes(model.f_int, N, 3);
        const auto confs = cross_check(model.f_int, 2, P0_int, N, primes);
        REQUIRE(confs.size() == 3);
        for (std::size_t i = 0; i < confs.size(); ++i) {
            CHECK(confs[i].p == primes[i]);
            CHECK(confs[i].order == 18);
            CHECK(confs[i].agree);
        }
    }
    SUBCASE("wrong order: brute force reports the actual value") {
        const Integer N(17);
        const auto primes = select_good_primes(model.f_int, N, 2);
        const auto confs = cross_check(model.f_int, 2, P0_int, N, primes);
        REQUIRE(confs.size() == 2);
        for (const auto& conf : confs) {
            CHECK(conf.order == 18);
            CHECK_FALSE(conf.agree);
        }
    }
}

TEST_CASE("the curve-model overload selects the same primes") {
    const CurveModel model = build_family(make_params(Family::ThmB, 2));
    CHECK(select_good_primes(model, Integer(16), 3) ==
          select_good_primes(model.f_int, Integer(16), 3));
}
