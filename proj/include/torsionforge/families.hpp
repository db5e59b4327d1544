#pragma once

#include <array>
#include <optional>
#include <string>

#include "torsionforge/polynomial.hpp"
#include "torsionforge/rational.hpp"

namespace torsionforge {

// The five curve families. ThmA and ThmB are the two one-parameter-free
// constructions at d = g-1 and d = g-2 with the distinguished parameter
// values t_g = 1/(g^2(g-1)) and s_g = 1/(g(g-1)^2); GenericT is the d = g-1
// construction at a caller-supplied t; Thm41 (odd g, parameter beta) and
// Cor43 (any g, parameter t with beta = (t^2+1)^2/(4t^2)) are the m = 1
// families with torsion order 2g^2+7g+1.
enum class Family { ThmA, ThmB, GenericT, Thm41, Cor43 };

std::string family_name(Family family);
Family family_from_string(const std::string& name);  // case-insensitive; ParseError

struct FamilyParams {
    Family family = Family::ThmA;
    int g = 0;
    int d = 0;  // g-1 (ThmA/GenericT/Thm41/Cor43) or g-2 (ThmB)
    int m = 0;  // g-2 (ThmA/ThmB/GenericT) or 1 (Thm41/Cor43)
    std::optional<Rational> t;      // ThmA/ThmB (fixed), GenericT, Cor43
    std::optional<Rational> beta;   // Thm41 (given), Cor43 (derived from t)
    std::optional<Rational> sqrt_beta, sqrt_beta_minus_1;  // Cor43 only
};

// Validates and completes the parameter set. t is accepted only for GenericT
// and Cor43, beta only for Thm41. Throws InvalidParams.
FamilyParams make_params(Family family, int g, std::optional<Rational> t = std::nullopt,
                         std::optional<Rational> beta = std::nullopt);

struct AffinePoint {
    Rational x, y;
};

// A constructed curve y^2 = f(x) with its family data, the integral model
// Y^2 = f_int(x) (Y = scale_c * y), and the four marked points
// P0 = (0, A(0)), P0' = (0, -A(0)), P1 = (1, A(1)), P1' = (1, -A(1)).
struct CurveModel {
    FamilyParams params;
    Rational alpha;  // g for ThmA/ThmB/GenericT; derived for Thm41/Cor43
    Polynomial<Rational> A;
    Rational lambda;
    Polynomial<Rational> f;
    Polynomial<Rational> f_int;
    Rational scale_c;
    AffinePoint P0, P0p, P1, P1p;

    int genus() const { return params.g; }
};

// Construct the curve for the given parameters. All closed-form divisions are
// verified exact; the result is validated to have degree 2g+1, squarefree f,
// and marked points off the branch locus.
// Throws NonExactDivision, DegenerateCurve, MarkedPointOnBranch.
CurveModel build_family(const FamilyParams& params);

// The decomposition behind the second relation row: h = 1, p = x - alpha,
// and polynomials a, b, q with
//   a + b*A = p * x^{g+m},
//   a - b*A = q * (x-1)^{g-d},
//   a^2 - b^2*f = x^{g+m} * (x-1)^{g+m+2}.
struct PhiDecomposition {
    Polynomial<Rational> a, b, p, q, h;
};

PhiDecomposition phi_decomposition(const CurveModel& curve);

// Divisibility bound, the exact advertised order (absent for GenericT), and
// the 2x2 relation matrix acting on ([D0], [D1]):
//   [[g+1+d, g-d], [-(g+m), g+m+2]],
// whose determinant equals the bound.
struct ExpectedOrders {
    long bound = 0;
    std::optional<long> exact_N;
    std::array<std::array<long, 2>, 2> relation_matrix{};
};

ExpectedOrders expected_orders(const FamilyParams& params);

}  // namespace torsionforge
