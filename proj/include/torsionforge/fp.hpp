#pragma once

#include <cstdint>
#include <string>

#include "torsionforge/errors.hpp"
#include "torsionforge/rational.hpp"

namespace torsionforge {

// Element of the prime field F_p for a small odd prime p. The modulus travels
// with the value so that the polynomial kernel can be instantiated over F_p
// without threading field metadata separately. A default-constructed element
// is the zero of an as-yet-unspecified field (modulus 0) and adopts the
// modulus of whatever it is combined with; combining two elements of distinct
// nonzero moduli throws FieldMismatch.
class Fp {
public:
    Fp() = default;

    Fp(std::uint64_t value, std::uint64_t p) : p_(p) {
        if (p == 0) {
            if (value != 0) throw FieldMismatch("nonzero F_p element needs a modulus");
            v_ = 0;
        } else {
            v_ = value % p;
        }
    }

    // Reduction of an integer (handles negatives) or a rational (throws
    // BadReduction when p divides the denominator).
    static Fp reduce(const Integer& z, std::uint64_t p);
    static Fp reduce(const Rational& r, std::uint64_t p);

    std::uint64_t value() const { return v_; }
    std::uint64_t modulus() const { return p_; }
    bool is_zero_value() const { return v_ == 0; }

    Fp inverse() const;  // DivisionByZero on zero

    friend Fp operator+(const Fp& a, const Fp& b);
    friend Fp operator-(const Fp& a, const Fp& b);
    friend Fp operator*(const Fp& a, const Fp& b);
    friend Fp operator/(const Fp& a, const Fp& b);
    friend Fp operator-(const Fp& a);

    Fp& operator+=(const Fp& o) { return *this = *this + o; }
    Fp& operator-=(const Fp& o) { return *this = *this - o; }
    Fp& operator*=(const Fp& o) { return *this = *this * o; }
    Fp& operator/=(const Fp& o) { return *this = *this / o; }

    friend bool operator==(const Fp& a, const Fp& b) {
        merged_modulus(a, b);  // reject cross-field comparison
        return a.v_ == b.v_;
    }
    friend bool operator!=(const Fp& a, const Fp& b) { return !(a == b); }

private:
    static std::uint64_t merged_modulus(const Fp& a, const Fp& b);

    std::uint64_t v_ = 0;
    std::uint64_t p_ = 0;
};

std::string to_string(const Fp& x);

// Deterministic trial-division primality test for small moduli.
bool is_small_prime(std::uint64_t n);

}  // namespace torsionforge
