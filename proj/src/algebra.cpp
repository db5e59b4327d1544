#include "torsionforge/algebra.hpp"

namespace torsionforge {

namespace {

constexpr unsigned long kTrialDivisionBound = 1000000;

}  // namespace

std::pair<Integer, Integer> square_decompose(const Integer& n) {
    if (n < 1) throw ZeroPolynomial("square decomposition needs n >= 1");
    Integer s = 1, r = 1, m = n;
    for (unsigned long p = 2; p <= kTrialDivisionBound; p = (p == 2 ? 3 : p + 2)) {
        if (Integer(p) * p > m) break;
        if (!mpz_divisible_ui_p(m.get_mpz_t(), p)) continue;
        unsigned e = 0;
        while (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
            mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), p);
            ++e;
        }
        s *= integer_pow(Integer(p), e / 2);
        if (e % 2 == 1) r *= p;
    }
    if (m > 1) {
        // Peel perfect squares off the remaining cofactor, then treat what is
        // left as squarefree.
        unsigned long e = 1;
        while (mpz_perfect_square_p(m.get_mpz_t())) {
            Integer root;
            mpz_sqrt(root.get_mpz_t(), m.get_mpz_t());
            m = root;
            e *= 2;
        }
        s *= integer_pow(m, e / 2);
        if (e % 2 == 1) r *= m;
    }
    return {s, r};
}

std::vector<std::pair<Integer, unsigned>> factor_integer(const Integer& n) {
    if (n < 1) throw InvalidParams("factorization needs n >= 1");
    std::vector<std::pair<Integer, unsigned>> factors;
    Integer m = n;
    for (Integer p = 2; p * p <= m; p += (p == 2 ? 1 : 2)) {
        if (!mpz_divisible_p(m.get_mpz_t(), p.get_mpz_t())) continue;
        unsigned e = 0;
        while (mpz_divisible_p(m.get_mpz_t(), p.get_mpz_t())) {
            mpz_divexact(m.get_mpz_t(), m.get_mpz_t(), p.get_mpz_t());
            ++e;
        }
        factors.emplace_back(p, e);
    }
    if (m > 1) factors.emplace_back(m, 1);
    return factors;
}

Integralization integralize(const Polynomial<Rational>& f) {
    if (f.is_zero()) return {f, Rational(1)};

    // f = (content / L) * P with P a primitive integer polynomial, where L is
    // the lcm of the coefficient denominators and content the gcd of the
    // scaled numerators.
    Integer lcm_den = 1;
    for (const Rational& c : f.coefficients()) {
        mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), c.get_den().get_mpz_t());
    }
    Integer content = 0;
    for (const Rational& c : f.coefficients()) {
        Integer scaled = c.get_num() * (lcm_den / c.get_den());
        mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), scaled.get_mpz_t());
    }

    // Minimal c = u/w: u is the least positive integer with lcm_den | u^2 and
    // w the largest with w^2 | content.
    const auto [s_den, r_den] = square_decompose(lcm_den);
    const Integer u = s_den * r_den;
    const auto [s_num, r_num] = square_decompose(content);
    const Integer& w = s_num;

    const Rational c = make_rational(u, w);
    const Rational c2 = c * c;
    std::vector<Rational> out;
    out.reserve(f.coefficients().size());
    for (const Rational& coeff : f.coefficients()) {
        Rational scaled = coeff * c2;
        if (!is_integer(scaled)) throw NonExactDivision("integralization produced a non-integer");
        out.push_back(scaled);
    }
    return {Polynomial<Rational>::from_coefficients(std::move(out)), c};
}

Polynomial<Fp> reduce_mod_p(const Polynomial<Rational>& f, std::uint64_t p) {
    std::vector<Fp> out;
    out.reserve(f.coefficients().size());
    for (const Rational& c : f.coefficients()) {
        out.push_back(Fp::reduce(c, p));
    }
    return Polynomial<Fp>::from_coefficients(std::move(out));
}

}  // namespace torsionforge
