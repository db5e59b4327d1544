#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "torsionforge/polynomial.hpp"
#include "torsionforge/rational.hpp"

namespace torsionforge {

// Integral model of a rational polynomial: g = c^2 * f has integer
// coefficients, and c is the minimal positive rational with that property
// (prime by prime: ceil(e/2) over the denominator, floor(e/2) over the
// content). Under y^2 = f, the substitution (x, y) |-> (x, c*y) gives Y^2 = g.
struct Integralization {
    Polynomial<Rational> g;
    Rational c;
};

Integralization integralize(const Polynomial<Rational>& f);

// n = s^2 * r with r free of detected square factors; n >= 1. Trial division
// up to 10^6, then repeated perfect-square peeling of the cofactor.
std::pair<Integer, Integer> square_decompose(const Integer& n);

// Prime-power factorization by deterministic trial division; n >= 1.
std::vector<std::pair<Integer, unsigned>> factor_integer(const Integer& n);

// Coefficient-wise image of f in F_p[x]; BadReduction if p divides any
// coefficient denominator.
Polynomial<Fp> reduce_mod_p(const Polynomial<Rational>& f, std::uint64_t p);

}  // namespace torsionforge
