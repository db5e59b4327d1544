#include "torsionforge/families.hpp"

#include <algorithm>
#include <cctype>

#include "torsionforge/algebra.hpp"

namespace torsionforge {

namespace {

using Poly = Polynomial<Rational>;

Poly poly_x() { return Poly{Rational(0), Rational(1)}; }
Poly poly_x_minus(const Rational& c) { return Poly{-c, Rational(1)}; }
Poly poly_x_minus_1() { return poly_x_minus(Rational(1)); }

// b_g(x) = (x - g) x^{g-1} - (x - 1)^g, of degree g - 2.
Poly bg_polynomial(int g) {
    return poly_x_minus(Rational(g)) * poly_x().pow(static_cast<unsigned long>(g - 1)) -
           poly_x_minus_1().pow(static_cast<unsigned long>(g));
}

}  // namespace

std::string family_name(Family family) {
    switch (family) {
        case Family::ThmA: return "ThmA";
        case Family::ThmB: return "ThmB";
        case Family::GenericT: return "GenericT";
        case Family::Thm41: return "Thm41";
        case Family::Cor43: return "Cor43";
    }
    throw Error("unreachable family");
}

Family family_from_string(const std::string& name) {
    std::string lower = name;
    std::transform(lower.begin(), lower.end(), lower.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    if (lower == "thma") return Family::ThmA;
    if (lower == "thmb") return Family::ThmB;
    if (lower == "generict") return Family::GenericT;
    if (lower == "thm41") return Family::Thm41;
    if (lower == "cor43") return Family::Cor43;
    throw ParseError("unknown family '" + name +
                     "' (expected thmA, thmB, genericT, thm41, or cor43)");
}

FamilyParams make_params(Family family, int g, std::optional<Rational> t,
                         std::optional<Rational> beta) {
    if (g < 2) throw InvalidParams("genus must be at least 2");
    FamilyParams p;
    p.family = family;
    p.g = g;
    switch (family) {
        case Family::ThmA:
        case Family::ThmB: {
            if (t || beta) throw InvalidParams(family_name(family) + " takes no free parameter");
            p.d = (family == Family::ThmA) ? g - 1 : g - 2;
            p.m = g - 2;
            const Integer gz(g);
            // t_g = 1/(g^2 (g-1)) for ThmA, s_g = 1/(g (g-1)^2) for ThmB.
            Integer den;
            if (family == Family::ThmA) {
                den = gz * gz * (gz - 1);
            } else {
                den = gz * (gz - 1) * (gz - 1);
            }
            p.t = make_rational(1, den);
            break;
        }
        case Family::GenericT: {
            if (!t || beta) throw InvalidParams("genericT takes exactly the parameter t");
            p.d = g - 1;
            p.m = g - 2;
            p.t = *t;
            break;
        }
        case Family::Thm41: {
            if (!beta || t) throw InvalidParams("thm41 takes exactly the parameter beta");
            if (g % 2 == 0) {
                throw InvalidParams("thm41 needs odd genus; use cor43 for even genus");
            }
            if (*beta == 0 || *beta == 1) throw InvalidParams("thm41 needs beta outside {0, 1}");
            p.d = g - 1;
            p.m = 1;
            p.beta = *beta;
            break;
        }
        case Family::Cor43: {
            if (!t || beta) throw InvalidParams("cor43 takes exactly the parameter t");
            if (*t == 0 || *t == 1 || *t == -1) {
                throw InvalidParams("cor43 needs t outside {0, 1, -1}");
            }
            p.d = g - 1;
            p.m = 1;
            p.t = *t;
            const Rational t2 = (*t) * (*t);
            p.sqrt_beta = (t2 + 1) / (2 * (*t));
            p.sqrt_beta_minus_1 = (t2 - 1) / (2 * (*t));
            p.beta = (*p.sqrt_beta) * (*p.sqrt_beta);
            if (!((*p.sqrt_beta_minus_1) * (*p.sqrt_beta_minus_1) == *p.beta - 1)) {
                throw InvalidParams("square-root witnesses are inconsistent");
            }
            break;
        }
    }
    return p;
}

CurveModel build_family(const FamilyParams& params) {
    const int g = params.g;
    const Poly X = poly_x();
    const Poly Xm1 = poly_x_minus_1();

    CurveModel curve;
    curve.params = params;

    switch (params.family) {
        case Family::ThmA:
        case Family::ThmB:
        case Family::GenericT: {
            const Rational t = *params.t;
            curve.alpha = Rational(g);
            curve.lambda = 4 * t;
            if (curve.lambda == 0) {
                throw DegenerateCurve("lambda vanishes at t = 0; f would be the square A^2");
            }
            const bool variant_b = (params.family == Family::ThmB);
            const Poly mult = variant_b ? X * Xm1.pow(2) : X.pow(2) * Xm1;
            const Poly base = poly_x_minus(Rational(g)) * X.pow(static_cast<unsigned long>(g - 1)) +
                              Xm1.pow(static_cast<unsigned long>(g));
            const Poly num = base + (mult * bg_polynomial(g)).scaled(t);
            curve.A = num.divexact(poly_x_minus(Rational(g)), "closed form for A");
            break;
        }
        case Family::Thm41:
        case Family::Cor43: {
            const Rational beta = *params.beta;
            // alpha = beta - (beta-1) * r^{g+1} with r^2 = (beta-1)/beta; for odd
            // g the power is directly rational, for Cor43 it comes from the
            // declared square roots (positive branch, never switched).
            if (params.family == Family::Thm41) {
                const Rational ratio = (beta - 1) / beta;
                curve.alpha = beta - (beta - 1) * rational_pow(ratio, static_cast<unsigned long>((g + 1) / 2));
            } else {
                const Rational r = *params.sqrt_beta_minus_1 / *params.sqrt_beta;
                curve.alpha = beta - (beta - 1) * rational_pow(r, static_cast<unsigned long>(g + 1));
            }
            if (curve.alpha == 0 || curve.alpha == 1 || curve.alpha == beta) {
                throw InvalidParams("degenerate alpha in {0, 1, beta}");
            }
            const Rational am1 = curve.alpha - 1;
            const Rational amb = curve.alpha - beta;
            curve.lambda = rational_pow(am1, static_cast<unsigned long>(g + 2)) /
                           (amb * amb * rational_pow(curve.alpha, static_cast<unsigned long>(g - 1)));
            if (curve.lambda == 0) throw DegenerateCurve("lambda vanishes");
            const Poly num =
                X.pow(static_cast<unsigned long>(g + 1)) * poly_x_minus(curve.alpha).pow(2) -
                Xm1 * (Xm1.pow(static_cast<unsigned long>(g + 2)) -
                       (poly_x_minus(beta).pow(2) * X.pow(static_cast<unsigned long>(g - 1)))
                           .scaled(curve.lambda));
            const Poly den = (poly_x_minus(curve.alpha) * poly_x_minus(beta)).scaled(Rational(2));
            curve.A = num.divexact(den, "closed form for A");
            break;
        }
    }

    curve.f = curve.A * curve.A -
              (X.pow(static_cast<unsigned long>(g + 1 + params.d)) *
               Xm1.pow(static_cast<unsigned long>(g - params.d)))
                  .scaled(curve.lambda);

    if (curve.A.degree() > g) throw DegenerateCurve("deg A exceeds g");
    if (curve.f.degree() != 2 * g + 1) {
        throw DegenerateCurve("f has degree " + std::to_string(curve.f.degree()) +
                              ", expected " + std::to_string(2 * g + 1));
    }
    if (!is_squarefree(curve.f)) throw DegenerateCurve("f has a repeated root");

    const Rational A0 = curve.A(Rational(0));
    const Rational A1 = curve.A(Rational(1));
    if (A0 == 0 || A1 == 0) {
        throw MarkedPointOnBranch("marked point lies on the branch locus (A(0) or A(1) is 0)");
    }
    curve.P0 = {Rational(0), A0};
    curve.P0p = {Rational(0), -A0};
    curve.P1 = {Rational(1), A1};
    curve.P1p = {Rational(1), -A1};

    const Integralization model = integralize(curve.f);
    curve.f_int = model.g;
    curve.scale_c = model.c;
    return curve;
}

PhiDecomposition phi_decomposition(const CurveModel& curve) {
    const int g = curve.params.g;
    const int m = curve.params.m;
    const int d = curve.params.d;
    const Poly X = poly_x();
    const Poly Xm1 = poly_x_minus_1();

    PhiDecomposition phi;
    phi.h = Poly{Rational(1)};
    phi.p = poly_x_minus(curve.alpha);
    switch (curve.params.family) {
        case Family::ThmA:
        case Family::ThmB:
        case Family::GenericT:
            phi.b = bg_polynomial(g).scaled(make_rational(1, 2));
            break;
        case Family::Thm41:
        case Family::Cor43:
            phi.b = poly_x_minus(*curve.params.beta);
            break;
    }

    phi.a = phi.p * X.pow(static_cast<unsigned long>(g + m)) - phi.b * curve.A;
    phi.q = (phi.a - phi.b * curve.A)
                .divexact(Xm1.pow(static_cast<unsigned long>(g - d)), "phi decomposition");

    const Poly norm_expected = X.pow(static_cast<unsigned long>(g + m)) *
                               Xm1.pow(static_cast<unsigned long>(g + m + 2));
    if (phi.a * phi.a - phi.b * phi.b * curve.f != norm_expected) {
        throw NonExactDivision("norm identity a^2 - b^2 f = x^{g+m}(x-1)^{g+m+2} failed");
    }
    return phi;
}

ExpectedOrders expected_orders(const FamilyParams& params) {
    const long g = params.g, d = params.d, m = params.m;
    ExpectedOrders eo;
    eo.bound = 2 * g * g + (2 * m + 3) * g + 2 * d + m + 2;
    eo.relation_matrix = {{{g + 1 + d, g - d}, {-(g + m), g + m + 2}}};
    const long det = eo.relation_matrix[0][0] * eo.relation_matrix[1][1] -
                     eo.relation_matrix[0][1] * eo.relation_matrix[1][0];
    if (det != eo.bound) throw Error("relation-matrix determinant disagrees with the bound");
    switch (params.family) {
        case Family::ThmA: eo.exact_N = 4 * g * g + 2 * g - 2; break;
        case Family::ThmB: eo.exact_N = 4 * g * g + 2 * g - 4; break;
        case Family::Thm41:
        case Family::Cor43: eo.exact_N = 2 * g * g + 7 * g + 1; break;
        case Family::GenericT: break;  // only the divisibility bound is claimed
    }
    return eo;
}

}  // namespace torsionforge
