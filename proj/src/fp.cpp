#include "torsionforge/fp.hpp"

namespace torsionforge {

std::uint64_t Fp::merged_modulus(const Fp& a, const Fp& b) {
    if (a.p_ == 0) return b.p_;
    if (b.p_ == 0 || a.p_ == b.p_) return a.p_;
    throw FieldMismatch("F_p elements with distinct moduli " + std::to_string(a.p_) + " and " +
                        std::to_string(b.p_));
}

Fp Fp::reduce(const Integer& z, std::uint64_t p) {
    if (p == 0) throw FieldMismatch("reduction needs a nonzero modulus");
    Integer m = z % static_cast<unsigned long>(p);
    if (m < 0) m += static_cast<unsigned long>(p);
    return Fp(m.get_ui(), p);
}

Fp Fp::reduce(const Rational& r, std::uint64_t p) {
    const Fp den = reduce(r.get_den(), p);
    if (den.is_zero_value()) {
        throw BadReduction("denominator divisible by p = " + std::to_string(p));
    }
    return reduce(r.get_num(), p) * den.inverse();
}

Fp Fp::inverse() const {
    if (v_ == 0) throw DivisionByZero("inverse of 0 in F_p");
    // Extended Euclid over the integers.
    std::int64_t t = 0, new_t = 1;
    std::int64_t r = static_cast<std::int64_t>(p_), new_r = static_cast<std::int64_t>(v_);
    while (new_r != 0) {
        const std::int64_t q = r / new_r;
        std::int64_t tmp = t - q * new_t;
        t = new_t;
        new_t = tmp;
        tmp = r - q * new_r;
        r = new_r;
        new_r = tmp;
    }
    if (t < 0) t += static_cast<std::int64_t>(p_);
    return Fp(static_cast<std::uint64_t>(t), p_);
}

Fp operator+(const Fp& a, const Fp& b) {
    const std::uint64_t p = Fp::merged_modulus(a, b);
    if (p == 0) return Fp{};
    std::uint64_t s = a.v_ + b.v_;  // moduli are small; no overflow
    if (s >= p) s -= p;
    return Fp(s, p);
}

Fp operator-(const Fp& a) {
    if (a.p_ == 0 || a.v_ == 0) return a;
    return Fp(a.p_ - a.v_, a.p_);
}

Fp operator-(const Fp& a, const Fp& b) { return a + (-b); }

Fp operator*(const Fp& a, const Fp& b) {
    const std::uint64_t p = Fp::merged_modulus(a, b);
    if (p == 0) return Fp{};
    const unsigned __int128 prod = static_cast<unsigned __int128>(a.v_) * b.v_;
    return Fp(static_cast<std::uint64_t>(prod % p), p);
}

Fp operator/(const Fp& a, const Fp& b) {
    const std::uint64_t p = Fp::merged_modulus(a, b);
    if (p == 0) throw DivisionByZero("division in F_p without a modulus");
    Fp bb(b.v_, p);
    return Fp(a.v_, p) * bb.inverse();
}

std::string to_string(const Fp& x) { return std::to_string(x.value()); }

bool is_small_prime(std::uint64_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (std::uint64_t d = 3; d * d <= n; d += 2) {
        if (n % d == 0) return false;
    }
    return true;
}

}  // namespace torsionforge
