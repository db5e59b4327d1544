#include "torsionforge/modp.hpp"

namespace torsionforge {

namespace {

bool divides(std::uint64_t p, const Integer& n) {
    return mpz_divisible_ui_p(n.get_mpz_t(), p) != 0;
}

}  // namespace

Integer integral_discriminant(const Polynomial<Rational>& f_int) {
    const Rational disc = discriminant(f_int);
    if (!is_integer(disc)) throw InvalidParams("discriminant of a non-integral model");
    return numerator(disc);
}

std::vector<std::uint64_t> select_good_primes(const Polynomial<Rational>& f_int,
                                              const Integer& N, int count) {
    if (count < 0) throw InvalidParams("prime count must be >= 0");
    if (N < 1) throw InvalidParams("order must be >= 1");
    const Integer bad = 2 * N * numerator(f_int.lc()) * integral_discriminant(f_int);
    std::vector<std::uint64_t> primes;
    for (std::uint64_t p = 3; static_cast<int>(primes.size()) < count; p += 2) {
        if (!is_small_prime(p)) continue;
        if (divides(p, bad)) continue;
        primes.push_back(p);
    }
    return primes;
}

std::vector<std::uint64_t> select_good_primes(const CurveModel& curve, const Integer& N,
                                              int count) {
    return select_good_primes(curve.f_int, N, count);
}

ReductionContext make_reduction_context(const Polynomial<Rational>& f_int, int genus,
                                        std::uint64_t p, const Integer& N) {
    if (p < 3 || p % 2 == 0 || !is_small_prime(p)) {
        throw BadReduction("reduction prime must be an odd prime");
    }
    if (divides(p, numerator(f_int.lc())) || divides(p, integral_discriminant(f_int))) {
        throw BadReduction("p divides lc(f)*disc(f): bad reduction at " + std::to_string(p));
    }
    if (divides(p, N)) {
        throw BadReduction("p divides the order under test; reduction would not preserve it");
    }
    ReductionContext ctx;
    ctx.p = p;
    ctx.curve = make_jacobian_curve(reduce_mod_p(f_int, p), genus, p);
    return ctx;
}

MumfordDivisor<Fp> reduce_point(const ReductionContext& ctx, const AffinePoint& point) {
    const Fp x = Fp::reduce(point.x, ctx.p);
    const Fp y = Fp::reduce(point.y, ctx.p);
    return divisor_from_point(ctx.curve, x, y);
}

MumfordDivisor<Fp> reduce_divisor(const ReductionContext& ctx,
                                  const MumfordDivisor<Rational>& D) {
    std::vector<Fp> u, v;
    for (const auto& c : D.u.coefficients()) u.push_back(Fp::reduce(c, ctx.p));
    for (const auto& c : D.v.coefficients()) v.push_back(Fp::reduce(c, ctx.p));
    MumfordDivisor<Fp> reduced;
    reduced.u = Polynomial<Fp>::from_coefficients(u);
    reduced.v = Polynomial<Fp>::from_coefficients(v);
    reduced.curve_tag = ctx.curve.tag;
    check_divisor(ctx.curve, reduced);
    return reduced;
}

Integer order_mod_p(const ReductionContext& ctx, const AffinePoint& point,
                    const Integer& multiple) {
    return order_of_class(ctx.curve, reduce_point(ctx, point), multiple);
}

Integer brute_force_order_mod_p(const ReductionContext& ctx, const AffinePoint& point) {
    const MumfordDivisor<Fp> D = reduce_point(ctx, point);
    if (is_zero(D)) return 1;
    Integer sqrt_p;
    mpz_sqrt(sqrt_p.get_mpz_t(), Integer(ctx.p).get_mpz_t());
    Integer cap;
    mpz_pow_ui(cap.get_mpz_t(), Integer(Integer(ctx.p) + 2 * sqrt_p + 3).get_mpz_t(),
               static_cast<unsigned long>(ctx.curve.genus));
    MumfordDivisor<Fp> acc = D;
    Integer n = 1;
    while (!is_zero(acc)) {
        acc = add(ctx.curve, acc, D);
        ++n;
        if (n > cap) throw Error("class order exceeds the Weil bound; arithmetic is broken");
    }
    return n;
}

std::vector<ModpConfirmation> cross_check(const Polynomial<Rational>& f_int, int genus,
                                          const AffinePoint& point, const Integer& N,
                                          const std::vector<std::uint64_t>& primes) {
    std::vector<ModpConfirmation> results;
    results.reserve(primes.size());
    for (const std::uint64_t p : primes) {
        const ReductionContext ctx = make_reduction_context(f_int, genus, p, N);
        ModpConfirmation conf;
        conf.p = p;
        try {
            conf.order = order_mod_p(ctx, point, N);
        } catch (const NotAMultiple&) {
            conf.order = brute_force_order_mod_p(ctx, point);
        }
        conf.agree = (conf.order == N);
        results.push_back(conf);
    }
    return results;
}

}  // namespace torsionforge
