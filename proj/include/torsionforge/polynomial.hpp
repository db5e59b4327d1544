#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "torsionforge/errors.hpp"
#include "torsionforge/fp.hpp"
#include "torsionforge/rational.hpp"

namespace torsionforge {

// Field-element helpers used by the generic polynomial kernel. The Fp versions
// propagate the modulus of the sample element.
inline Rational zero_like(const Rational&) { return Rational(0); }
inline Rational one_like(const Rational&) { return Rational(1); }
inline bool is_zero(const Rational& x) { return x == 0; }

inline Fp zero_like(const Fp& x) { return Fp(0, x.modulus()); }
inline Fp one_like(const Fp& x) {
    if (x.modulus() == 0) throw FieldMismatch("cannot build 1 without a modulus");
    return Fp(1, x.modulus());
}
inline bool is_zero(const Fp& x) { return x.is_zero_value(); }

// The image of a small integer in the field of the sample element.
inline Rational scalar_from_long(long n, const Rational&) { return Rational(n); }
inline Fp scalar_from_long(long n, const Fp& sample) {
    return Fp::reduce(Integer(n), sample.modulus());
}

template <typename K>
K field_pow(K base, unsigned long e) {
    if (e == 0) return one_like(base);
    K acc = one_like(base);
    while (e > 0) {
        if (e & 1) acc *= base;
        base *= base;
        e >>= 1;
    }
    return acc;
}

// Dense univariate polynomial over an exact field K (the rationals or a prime
// field). Coefficients are stored in ascending degree with the trailing zeros
// trimmed, so the zero polynomial is the empty sequence and degree() reports
// -1 for it (standing in for the usual degree -infinity).
template <typename K>
class Polynomial {
public:
    Polynomial() = default;

    explicit Polynomial(const K& constant) {
        coeffs_.push_back(constant);
        trim();
    }

    Polynomial(std::initializer_list<K> coeffs) : coeffs_(coeffs) { trim(); }

    static Polynomial from_coefficients(std::vector<K> coeffs) {
        Polynomial p;
        p.coeffs_ = std::move(coeffs);
        p.trim();
        return p;
    }

    // coeff * x^degree
    static Polynomial monomial(const K& coeff, std::size_t degree) {
        Polynomial p;
        if (!torsionforge::is_zero(coeff)) {
            p.coeffs_.assign(degree + 1, zero_like(coeff));
            p.coeffs_.back() = coeff;
        }
        return p;
    }

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }

    const K& lc() const {
        if (is_zero()) throw ZeroPolynomial("leading coefficient of the zero polynomial");
        return coeffs_.back();
    }

    K coeff(std::size_t i) const {
        if (i < coeffs_.size()) return coeffs_[i];
        if (coeffs_.empty()) return K{};
        return zero_like(coeffs_[0]);
    }

    const std::vector<K>& coefficients() const { return coeffs_; }

    // Exact Horner evaluation.
    K operator()(const K& x0) const {
        if (is_zero()) return zero_like(x0);
        K acc = zero_like(x0);
        for (std::size_t i = coeffs_.size(); i-- > 0;) {
            acc = acc * x0 + coeffs_[i];
        }
        return acc;
    }

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
        Polynomial r = a;
        if (r.coeffs_.size() < b.coeffs_.size()) r.coeffs_.resize(b.coeffs_.size(), b.zero_coeff());
        for (std::size_t i = 0; i < b.coeffs_.size(); ++i) r.coeffs_[i] += b.coeffs_[i];
        r.trim();
        return r;
    }

    friend Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }

    friend Polynomial operator-(const Polynomial& a) {
        Polynomial r = a;
        for (K& c : r.coeffs_) c = -c;
        return r;
    }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        if (a.is_zero() || b.is_zero()) return Polynomial{};
        Polynomial r;
        r.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, zero_like(a.coeffs_[0]));
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
            if (torsionforge::is_zero(a.coeffs_[i])) continue;
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
                r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
            }
        }
        r.trim();
        return r;
    }

    Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }
    Polynomial& operator-=(const Polynomial& o) { return *this = *this - o; }
    Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

    // Scale by a field element.
    Polynomial scaled(const K& c) const {
        if (torsionforge::is_zero(c)) return Polynomial{};
        Polynomial r = *this;
        for (K& x : r.coeffs_) x *= c;
        r.trim();
        return r;
    }

    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        if (a.coeffs_.size() != b.coeffs_.size()) return false;
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
            if (!(a.coeffs_[i] == b.coeffs_[i])) return false;
        }
        return true;
    }
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

    // Euclidean division: returns (q, r) with *this = den*q + r and
    // deg r < deg den. Exact over the coefficient field.
    std::pair<Polynomial, Polynomial> divmod(const Polynomial& den) const {
        if (den.is_zero()) throw ZeroPolynomial("division by the zero polynomial");
        Polynomial q;
        Polynomial r = *this;
        const int dd = den.degree();
        if (r.degree() >= dd) {
            q.coeffs_.assign(static_cast<std::size_t>(r.degree() - dd) + 1, zero_like(den.lc()));
        }
        while (!r.is_zero() && r.degree() >= dd) {
            const K c = r.lc() / den.lc();
            const std::size_t shift = static_cast<std::size_t>(r.degree() - dd);
            q.coeffs_[shift] = c;
            // r -= c * x^shift * den, done in place.
            for (std::size_t i = 0; i < den.coeffs_.size(); ++i) {
                r.coeffs_[shift + i] -= c * den.coeffs_[i];
            }
            r.trim();
        }
        q.trim();
        return {q, r};
    }

    Polynomial operator/(const Polynomial& den) const { return divmod(den).first; }
    Polynomial operator%(const Polynomial& den) const { return divmod(den).second; }

    // Division known to be exact; throws NonExactDivision otherwise.
    Polynomial divexact(const Polynomial& den, const char* what = "polynomial division") const {
        auto [q, r] = divmod(den);
        if (!r.is_zero()) throw NonExactDivision(std::string(what) + " left a nonzero remainder");
        return q;
    }

    Polynomial pow(unsigned long e) const {
        if (e == 0) return Polynomial(one_like(lc()));  // requires a nonzero base
        Polynomial acc{one_like(lc())};
        Polynomial base = *this;
        while (e > 0) {
            if (e & 1) acc *= base;
            base *= base;
            e >>= 1;
        }
        return acc;
    }

    Polynomial derivative() const {
        Polynomial r;
        if (coeffs_.size() < 2) return r;
        r.coeffs_.reserve(coeffs_.size() - 1);
        for (std::size_t i = 1; i < coeffs_.size(); ++i) {
            r.coeffs_.push_back(coeffs_[i] * scalar_from_long(static_cast<long>(i), coeffs_[i]));
        }
        r.trim();
        return r;
    }

    Polynomial monic() const {
        if (is_zero()) throw ZeroPolynomial("cannot normalize the zero polynomial");
        return scaled(one_like(lc()) / lc());
    }

    // Human-readable form for diagnostics, highest degree first.
    std::string str(const std::string& var = "x") const {
        if (is_zero()) return "0";
        std::string out;
        for (std::size_t i = coeffs_.size(); i-- > 0;) {
            if (torsionforge::is_zero(coeffs_[i])) continue;
            if (!out.empty()) out += " + ";
            out += to_string(coeffs_[i]);
            if (i >= 1) out += "*" + var;
            if (i >= 2) out += "^" + std::to_string(i);
        }
        return out;
    }

private:
    K zero_coeff() const { return coeffs_.empty() ? K{} : zero_like(coeffs_[0]); }

    void trim() {
        while (!coeffs_.empty() && torsionforge::is_zero(coeffs_.back())) coeffs_.pop_back();
    }

    std::vector<K> coeffs_;
};

// Monic greatest common divisor via the Euclidean algorithm.
template <typename K>
Polynomial<K> gcd(const Polynomial<K>& a, const Polynomial<K>& b) {
    if (a.is_zero() && b.is_zero()) throw ZeroPolynomial("gcd of two zero polynomials");
    Polynomial<K> r0 = a, r1 = b;
    if (r0.degree() < r1.degree()) std::swap(r0, r1);
    while (!r1.is_zero()) {
        Polynomial<K> r = r0 % r1;
        r0 = std::move(r1);
        r1 = std::move(r);
    }
    return r0.monic();
}

// Extended Euclid: returns (g, s, t) with s*a + t*b = g and g monic.
template <typename K>
std::tuple<Polynomial<K>, Polynomial<K>, Polynomial<K>> xgcd(const Polynomial<K>& a,
                                                             const Polynomial<K>& b) {
    if (a.is_zero() && b.is_zero()) throw ZeroPolynomial("xgcd of two zero polynomials");
    const K one = one_like(a.is_zero() ? b.lc() : a.lc());
    Polynomial<K> r0 = a, r1 = b;
    Polynomial<K> s0{one}, s1{};
    Polynomial<K> t0{}, t1{one};
    while (!r1.is_zero()) {
        auto [q, r] = r0.divmod(r1);
        r0 = std::move(r1);
        r1 = std::move(r);
        Polynomial<K> s = s0 - q * s1;
        s0 = std::move(s1);
        s1 = std::move(s);
        Polynomial<K> t = t0 - q * t1;
        t0 = std::move(t1);
        t1 = std::move(t);
    }
    const K inv = one / r0.lc();
    return {r0.scaled(inv), s0.scaled(inv), t0.scaled(inv)};
}

// Resultant with the convention res(f, g) = lc(g)^{deg f} * prod f(beta) over
// the roots beta of g, computed by Euclidean reduction:
//   res(f, g) = lc(g)^{deg f - deg r} * (-1)^{deg r * deg g} * res(g, r),
// where r = f mod g, with res(f, c) = c^{deg f} for constants c.
template <typename K>
K resultant(const Polynomial<K>& f, const Polynomial<K>& g) {
    if (f.is_zero() || g.is_zero()) throw ZeroPolynomial("resultant of a zero polynomial");
    const K one = one_like(f.lc());
    auto sign = [&](long e) { return (e % 2 == 0) ? one : -one; };
    if (f.degree() < g.degree()) {
        return sign(static_cast<long>(f.degree()) * g.degree()) * resultant(g, f);
    }
    if (g.degree() == 0) return field_pow(g.lc(), static_cast<unsigned long>(f.degree()));
    const Polynomial<K> r = f % g;
    if (r.is_zero()) return zero_like(f.lc());
    K scale = field_pow(g.lc(), static_cast<unsigned long>(f.degree() - r.degree()));
    return scale * sign(static_cast<long>(r.degree()) * g.degree()) * resultant(g, r);
}

// disc(f) = (-1)^{d(d-1)/2} * res(f, f') / lc(f), d = deg f >= 1.
template <typename K>
K discriminant(const Polynomial<K>& f) {
    if (f.is_zero() || f.degree() < 1) throw ZeroPolynomial("discriminant needs degree >= 1");
    const Polynomial<K> fd = f.derivative();
    if (fd.is_zero()) throw ZeroPolynomial("derivative vanished; inseparable polynomial");
    K res = resultant(f, fd);
    const long d = f.degree();
    const K one = one_like(f.lc());
    const K sign = ((d * (d - 1) / 2) % 2 == 0) ? one : -one;
    return sign * res / f.lc();
}

// true iff deg gcd(f, f') = 0. Valid in characteristic 0 and for p > deg f.
template <typename K>
bool is_squarefree(const Polynomial<K>& f) {
    if (f.is_zero()) throw ZeroPolynomial("squarefreeness of the zero polynomial");
    if (f.degree() == 0) return true;
    const Polynomial<K> fd = f.derivative();
    if (fd.is_zero()) return false;
    return gcd(f, fd).degree() == 0;
}

}  // namespace torsionforge
