#include "torsionforge/rational.hpp"

#include <cctype>

namespace torsionforge {

namespace {

// Optional '-', then digits; returns false on anything else.
bool is_signed_digits(const std::string& s, std::size_t begin, std::size_t end) {
    if (begin >= end) return false;
    std::size_t i = begin;
    if (s[i] == '-') ++i;
    if (i >= end) return false;
    for (; i < end; ++i) {
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    }
    return true;
}

}  // namespace

std::string to_string(const Integer& z) { return z.get_str(); }

std::string to_string(const Rational& r) { return r.get_str(); }

Integer integer_from_string(const std::string& s) {
    if (!is_signed_digits(s, 0, s.size())) throw ParseError("invalid integer literal: '" + s + "'");
    return Integer(s);
}

Rational rational_from_string(const std::string& s) {
    const std::size_t slash = s.find('/');
    if (slash == std::string::npos) {
        return Rational(integer_from_string(s));
    }
    if (!is_signed_digits(s, 0, slash) || !is_signed_digits(s, slash + 1, s.size())) {
        throw ParseError("invalid rational literal: '" + s + "'");
    }
    const Integer num(s.substr(0, slash));
    const Integer den(s.substr(slash + 1));
    return make_rational(num, den);
}

Rational make_rational(const Integer& num, const Integer& den) {
    if (den == 0) throw ParseError("rational with zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

Integer integer_pow(const Integer& z, unsigned long e) {
    Integer out;
    mpz_pow_ui(out.get_mpz_t(), z.get_mpz_t(), e);
    return out;
}

Rational rational_pow(const Rational& r, unsigned long e) {
    Rational out;
    mpz_pow_ui(out.get_num_mpz_t(), r.get_num().get_mpz_t(), e);
    mpz_pow_ui(out.get_den_mpz_t(), r.get_den().get_mpz_t(), e);
    // num/den is already canonical, so the power is canonical too.
    return out;
}

}  // namespace torsionforge
