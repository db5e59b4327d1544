#include <doctest.h>

#include <numeric>

#include "torsionforge/serialization.hpp"
#include "torsionforge/torsion.hpp"

using namespace torsionforge;

namespace {

struct Instance {
    CurveModel model;
    JacobianCurve<Rational> jac;
    MumfordDivisor<Rational> D0, D1;
};

Instance instance(Family family, int g) {
    Instance inst;
    inst.model = build_family(make_params(family, g));
    inst.jac = make_jacobian_curve(inst.model.f, g);
    inst.D0 = divisor_from_point(inst.jac, inst.model.P0.x, inst.model.P0.y);
    inst.D1 = divisor_from_point(inst.jac, inst.model.P1.x, inst.model.P1.y);
    return inst;
}

}  // namespace

TEST_CASE("order_of_class strips primes from an annihilating multiple") {
    const Instance inst = instance(Family::ThmA, 2);
    CHECK(order_of_class(inst.jac, inst.D0, Integer(18)) == 18);
    CHECK(order_of_class(inst.jac, inst.D0, Integer(36)) == 18);
    CHECK(order_of_class(inst.jac, inst.D0, Integer(54)) == 18);
    CHECK(order_of_class(inst.jac, inst.D0, Integer(180)) == 18);
    CHECK(order_of_class(inst.jac, inst.D1, Integer(18)) == 9);
    CHECK(order_of_class(inst.jac, zero_element(inst.jac), Integer(1)) == 1);
    CHECK(order_of_class(inst.jac, zero_element(inst.jac), Integer(7)) == 1);
    CHECK_THROWS_AS(order_of_class(inst.jac, inst.D0, Integer(17)), NotAMultiple);
    CHECK_THROWS_AS(order_of_class(inst.jac, inst.D0, Integer(0)), InvalidParams);
    CHECK_THROWS_AS(order_of_class(inst.jac, inst.D0, Integer(-18)), InvalidParams);
}

TEST_CASE("certify_exact_order issues a valid certificate for the true order") {
    const Instance inst = instance(Family::ThmA, 2);
    const std::string fp = curve_fingerprint(inst.model.f_int);
    const TorsionCertificate cert = certify_exact_order(inst.jac, inst.model.P0, Integer(18), fp);

    CHECK(cert.valid);
    CHECK(cert.curve_fingerprint == fp);
    CHECK(cert.claimed_order == 18);
    CHECK(cert.point.x == inst.model.P0.x);
    CHECK(cert.point.y == inst.model.P0.y);
    REQUIRE(cert.factorization.size() == 2);
    CHECK(cert.factorization[0] == std::pair<Integer, unsigned>(2, 1));
    CHECK(cert.factorization[1] == std::pair<Integer, unsigned>(3, 2));
    REQUIRE(cert.checks.size() == 3);
    CHECK(cert.checks[0].name == "18*D = 0");
    CHECK(cert.checks[1].name == "(18/2)*D != 0");
    CHECK(cert.checks[2].name == "(18/3)*D != 0");
    for (const auto& check : cert.checks) CHECK(check.pass);
    CHECK(cert.modp.empty());
    CHECK_FALSE(cert.relation_checks.has_value());
    CHECK_FALSE(cert.l_certificate.has_value());
}

TEST_CASE("certify_exact_order records failures instead of throwing") {
    const Instance inst = instance(Family::ThmA, 2);
    SUBCASE("a proper multiple fails the cofactor check") {
        const TorsionCertificate cert =
            certify_exact_order(inst.jac, inst.model.P0, Integer(36), "fp");
        CHECK_FALSE(cert.valid);
        REQUIRE(cert.checks.size() == 3);
        CHECK(cert.checks[0].pass);        // 36*D = 0
        CHECK_FALSE(cert.checks[1].pass);  // (36/2)*D = 18*D = 0
        CHECK(cert.checks[2].pass);        // (36/3)*D = 12*D != 0
    }
    SUBCASE("a non-multiple fails the annihilation check") {
        const TorsionCertificate cert =
            certify_exact_order(inst.jac, inst.model.P0, Integer(9), "fp");
        CHECK_FALSE(cert.valid);
        CHECK_FALSE(cert.checks[0].pass);
    }
    SUBCASE("the involution image certifies equally") {
        const TorsionCertificate cert =
            certify_exact_order(inst.jac, inst.model.P0p, Integer(18), "fp");
        CHECK(cert.valid);
    }
    SUBCASE("malformed input still throws") {
        CHECK_THROWS_AS(certify_exact_order(inst.jac, inst.model.P0, Integer(0), "fp"),
                        InvalidParams);
        CHECK_THROWS_AS(
            certify_exact_order(inst.jac, AffinePoint{Rational(0), Rational(1)}, Integer(18), "fp"),
            PointNotOnCurve);
    }
}

TEST_CASE("certification works on the non-monic integral model") {
    const CurveModel model = build_family(make_params(Family::ThmA, 2));
    const auto jac = make_jacobian_curve(model.f_int, 2);
    const AffinePoint P0_int{Rational(0), model.scale_c * model.P0.y};
    const TorsionCertificate cert =
        certify_exact_order(jac, P0_int, Integer(18), curve_fingerprint(model.f_int));
    CHECK(cert.valid);
}

TEST_CASE("both relation-matrix rows annihilate") {
    for (const FamilyParams& params :
         {make_params(Family::ThmA, 2), make_params(Family::ThmB, 2),
          make_params(Family::Thm41, 3, std::nullopt, Rational(2)),
          make_params(Family::Cor43, 2, Rational(2))}) {
        const CurveModel model = build_family(params);
        const auto [row1, row2] = verify_relation_matrix(model);
        CHECK(row1);
        CHECK(row2);
    }
}

TEST_CASE("L evaluation, d = g-1 family") {
    SUBCASE("genus 2") {
        const LCertificate lc = evaluate_L_certificate(build_family(make_params(Family::ThmA, 2)));
        CHECK(lc.L_P1p == -16);
        CHECK(lc.L_P0p == make_rational(-1, 2));
        CHECK(lc.closed_P1p == -16);
        CHECK(lc.closed_P0p == make_rational(1, 2));
        CHECK(lc.closed_P1p_pass);
        CHECK_FALSE(lc.closed_P0p_pass);  // computed value has the opposite sign
        CHECK_FALSE(lc.identity_pass);
        CHECK(lc.coprimality_pass);
    }
    SUBCASE("genus 3") {
        const LCertificate lc = evaluate_L_certificate(build_family(make_params(Family::ThmA, 3)));
        CHECK(lc.L_P1p == -32);
        CHECK(lc.L_P0p == make_rational(-64, 2187));
        CHECK(lc.closed_P1p_pass);
        CHECK_FALSE(lc.closed_P0p_pass);
        CHECK_FALSE(lc.identity_pass);
        CHECK(lc.coprimality_pass);
    }
    SUBCASE("the sign pattern is stable in the genus") {
        for (int g = 2; g <= 6; ++g) {
            const LCertificate lc =
                evaluate_L_certificate(build_family(make_params(Family::ThmA, g)));
            CHECK(lc.closed_P1p_pass);
            CHECK(lc.L_P0p == -lc.closed_P0p);
            CHECK_FALSE(lc.identity_pass);
            CHECK(lc.coprimality_pass);
        }
    }
}

TEST_CASE("L evaluation, d = g-2 family") {
    SUBCASE("genus 2") {
        const LCertificate lc = evaluate_L_certificate(build_family(make_params(Family::ThmB, 2)));
        CHECK(lc.L_P1p == -4);
        CHECK(lc.L_P0p == -8);
        CHECK(lc.closed_P1p_pass);
        CHECK(lc.closed_P0p_pass);
        CHECK(lc.identity_pass);
        CHECK(lc.coprimality_pass);
    }
    SUBCASE("all checks pass through genus 6") {
        for (int g = 2; g <= 6; ++g) {
            const LCertificate lc =
                evaluate_L_certificate(build_family(make_params(Family::ThmB, g)));
            CHECK(lc.closed_P1p_pass);
            CHECK(lc.closed_P0p_pass);
            CHECK(lc.identity_pass);
            CHECK(lc.coprimality_pass);
        }
    }
}

TEST_CASE("L evaluation rejects the other families") {
    CHECK_THROWS_AS(
        evaluate_L_certificate(build_family(make_params(Family::Thm41, 3, std::nullopt, Rational(2)))),
        UnsupportedFamily);
    CHECK_THROWS_AS(
        evaluate_L_certificate(build_family(make_params(Family::GenericT, 2, make_rational(1, 4)))),
        UnsupportedFamily);
}

TEST_CASE("the coprimality facts hold for every genus up to 100") {
    for (long g = 2; g <= 100; ++g) {
        CHECK(std::gcd(2 * g + 1, 4 * g * g + 2 * g - 2) == 1);
        CHECK(std::gcd(2 * g - 1, 4 * g * g + 2 * g - 4) == 1);
    }
}

TEST_CASE("derived companion orders") {
    SUBCASE("d = g-1, genus 2: the order-18 class forces order 9") {
        const CurveModel model = build_family(make_params(Family::ThmA, 2));
        const auto [companion, order] =
            derived_companion_order(model, model.P0, Integer(18), "fp");
        CHECK(companion.x == 1);
        CHECK(companion.y == model.P1.y);
        CHECK(order == 9);
    }
    SUBCASE("d = g-1, genus 3: the order-40 class forces order 20") {
        const CurveModel model = build_family(make_params(Family::ThmA, 3));
        const auto [companion, order] =
            derived_companion_order(model, model.P0, Integer(40), "fp");
        CHECK(companion.x == 1);
        CHECK(order == 20);
    }
    SUBCASE("m = 1, genus 3: the order-40 class forces order 20") {
        const CurveModel model =
            build_family(make_params(Family::Thm41, 3, std::nullopt, Rational(2)));
        const auto [companion, order] =
            derived_companion_order(model, model.P0, Integer(40), "fp");
        CHECK(companion.x == 1);
        CHECK(order == 20);
    }
    SUBCASE("d = g-2, genus 2: the order-16 class forces order 8") {
        const CurveModel model = build_family(make_params(Family::ThmB, 2));
        const auto [companion, order] =
            derived_companion_order(model, model.P1, Integer(16), "fp");
        CHECK(companion.x == 0);
        CHECK(companion.y == model.P0.y);
        CHECK(order == 8);
    }
    SUBCASE("directions the relation rows do not force") {
        const CurveModel a = build_family(make_params(Family::ThmA, 2));
        CHECK_THROWS_AS(derived_companion_order(a, a.P1, Integer(9), "fp"), InvalidParams);
        const CurveModel b = build_family(make_params(Family::ThmB, 2));
        CHECK_THROWS_AS(derived_companion_order(b, b.P0, Integer(8), "fp"), InvalidParams);
    }
}
