#pragma once

#include <cstdint>
#include <vector>

#include "torsionforge/algebra.hpp"
#include "torsionforge/fp.hpp"
#include "torsionforge/jacobian.hpp"
#include "torsionforge/torsion.hpp"

namespace torsionforge {

// Good reduction of an integral model at an odd prime: the reduced curve is
// nonsingular of the same genus and the order under test is prime to p, so
// the torsion class reduces with its exact order preserved.
struct ReductionContext {
    std::uint64_t p = 0;
    JacobianCurve<Fp> curve;
};

// Discriminant of an integer-coefficient polynomial, as an integer.
Integer integral_discriminant(const Polynomial<Rational>& f_int);

// The `count` smallest odd primes p with p not dividing 2 * N * lc * disc.
std::vector<std::uint64_t> select_good_primes(const Polynomial<Rational>& f_int,
                                              const Integer& N, int count);
std::vector<std::uint64_t> select_good_primes(const CurveModel& curve, const Integer& N,
                                              int count);

// Throws BadReduction unless p is an odd prime of good reduction for f_int
// that is also prime to N.
ReductionContext make_reduction_context(const Polynomial<Rational>& f_int, int genus,
                                        std::uint64_t p, const Integer& N);

// Reduce an affine point (or a whole Mumford divisor) modulo ctx.p. Throws
// BadReduction when a denominator is divisible by p.
MumfordDivisor<Fp> reduce_point(const ReductionContext& ctx, const AffinePoint& point);
MumfordDivisor<Fp> reduce_divisor(const ReductionContext& ctx,
                                  const MumfordDivisor<Rational>& D);

// Exact order of the reduced class, computed from a known annihilating
// multiple with the same Cantor kernel instantiated over F_p.
Integer order_mod_p(const ReductionContext& ctx, const AffinePoint& point,
                    const Integer& multiple);

// Order by incremental addition, capped by the Weil bound (p + 2*sqrt(p) + 3)^g.
Integer brute_force_order_mod_p(const ReductionContext& ctx, const AffinePoint& point);

// One confirmation per prime: agree = (order of the reduced class == N).
// When N fails to annihilate mod p the order is recovered by brute force so
// the disagreement is reported with the actual value.
std::vector<ModpConfirmation> cross_check(const Polynomial<Rational>& f_int, int genus,
                                          const AffinePoint& point, const Integer& N,
                                          const std::vector<std::uint64_t>& primes);

}  // namespace torsionforge
