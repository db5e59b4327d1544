#pragma once

#include <cstdint>
#include <string>

#include "torsionforge/polynomial.hpp"

namespace torsionforge {

// 64-bit FNV-1a over the coefficient strings; for F_p curves the modulus is
// mixed in so reductions of the same curve at different primes get distinct
// tags.
std::uint64_t fnv1a64(const std::string& data);

template <typename K>
std::uint64_t curve_tag_of(const Polynomial<K>& f, std::uint64_t salt = 0) {
    std::string data = std::to_string(salt) + "#";
    for (const K& c : f.coefficients()) data += to_string(c) + ",";
    return fnv1a64(data);
}

// The ambient curve y^2 = f(x) for divisor arithmetic: f squarefree of odd
// degree 2g+1 (one point at infinity), not necessarily monic.
template <typename K>
struct JacobianCurve {
    Polynomial<K> f;
    int genus = 0;
    std::uint64_t tag = 0;
};

template <typename K>
JacobianCurve<K> make_jacobian_curve(Polynomial<K> f, int genus, std::uint64_t salt = 0) {
    if (genus < 1) throw DegenerateCurve("genus must be at least 1");
    if (f.degree() != 2 * genus + 1) {
        throw DegenerateCurve("f must have degree 2g+1 = " + std::to_string(2 * genus + 1) +
                              ", got " + std::to_string(f.degree()));
    }
    if (!is_squarefree(f)) throw DegenerateCurve("f has a repeated root");
    JacobianCurve<K> curve;
    curve.tag = curve_tag_of(f, salt);
    curve.f = std::move(f);
    curve.genus = genus;
    return curve;
}

// Reduced Mumford representative (u, v) of a divisor class: u monic,
// deg v < deg u <= g, u | v^2 - f. The representative of a class is unique,
// so equality of classes is equality of pairs. The identity is (1, 0).
template <typename K>
struct MumfordDivisor {
    Polynomial<K> u, v;
    std::uint64_t curve_tag = 0;
};

template <typename K>
MumfordDivisor<K> zero_element(const JacobianCurve<K>& curve) {
    return {Polynomial<K>{one_like(curve.f.lc())}, Polynomial<K>{}, curve.tag};
}

template <typename K>
bool is_zero(const MumfordDivisor<K>& D) {
    return D.u.degree() == 0;
}

template <typename K>
void require_same_curve(const JacobianCurve<K>& curve, const MumfordDivisor<K>& D) {
    if (curve.tag != D.curve_tag) throw CurveMismatch("divisor belongs to a different curve");
}

// Full invariant check; used after every reduction in debug paths and tests.
template <typename K>
void check_divisor(const JacobianCurve<K>& curve, const MumfordDivisor<K>& D) {
    require_same_curve(curve, D);
    if (D.u.is_zero() || !(D.u.lc() == one_like(D.u.lc()))) {
        throw Error("Mumford u is not monic");
    }
    if (D.u.degree() > curve.genus) throw Error("Mumford u exceeds the genus bound");
    if (!D.v.is_zero() && D.v.degree() >= D.u.degree()) {
        throw Error("Mumford v is not reduced mod u");
    }
    if (!((D.v * D.v - curve.f) % D.u).is_zero()) {
        throw Error("u does not divide v^2 - f");
    }
}

// The class of (x0, y0) - P_infinity; the point must satisfy y0^2 = f(x0).
template <typename K>
MumfordDivisor<K> divisor_from_point(const JacobianCurve<K>& curve, const K& x0, const K& y0) {
    if (!(y0 * y0 == curve.f(x0))) {
        throw PointNotOnCurve("y^2 != f(x) at x = " + to_string(x0));
    }
    const K one = one_like(curve.f.lc());
    MumfordDivisor<K> D;
    D.u = Polynomial<K>{-x0, one};
    D.v = Polynomial<K>{y0};
    D.curve_tag = curve.tag;
    return D;
}

// Hyperelliptic involution y |-> -y on classes.
template <typename K>
MumfordDivisor<K> negate(const JacobianCurve<K>& curve, const MumfordDivisor<K>& D) {
    require_same_curve(curve, D);
    MumfordDivisor<K> R;
    R.u = D.u;
    R.v = (-D.v) % D.u;
    R.curve_tag = D.curve_tag;
    return R;
}

template <typename K>
bool equals(const MumfordDivisor<K>& a, const MumfordDivisor<K>& b) {
    if (a.curve_tag != b.curve_tag) throw CurveMismatch("comparing divisors on different curves");
    return a.u == b.u && a.v == b.v;
}

// Composition and reduction. Composition merges the two semi-reduced
// divisors through gcd(u1, u2, v1+v2); reduction repeatedly replaces u by
// (f - v^2)/u (exact), re-normalizes monic, and reduces v, until
// deg u <= g. Works verbatim for non-monic f.
template <typename K>
MumfordDivisor<K> add(const JacobianCurve<K>& curve, const MumfordDivisor<K>& D1,
                      const MumfordDivisor<K>& D2) {
    require_same_curve(curve, D1);
    require_same_curve(curve, D2);

    const Polynomial<K>&u1 = D1.u, &v1 = D1.v, &u2 = D2.u, &v2 = D2.v;

    Polynomial<K> u, v;
    const auto [d1, e1, e2] = xgcd(u1, u2);
    if (d1.degree() == 0) {
        u = u1 * u2;
        v = (e1 * u1 * v2 + e2 * u2 * v1) % u;
    } else {
        const Polynomial<K> vsum = v1 + v2;
        const auto [d, c1, c2] = xgcd(d1, vsum);
        u = (u1 * u2).divexact(d * d, "Cantor composition");
        const Polynomial<K> num =
            c1 * e1 * u1 * v2 + c1 * e2 * u2 * v1 + c2 * (v1 * v2 + curve.f);
        v = num.divexact(d, "Cantor composition") % u;
    }

    while (u.degree() > curve.genus) {
        const Polynomial<K> unext = (curve.f - v * v).divexact(u, "Cantor reduction");
        v = (-v) % unext;
        u = unext.monic();
    }

    MumfordDivisor<K> R;
    R.u = std::move(u);
    R.v = std::move(v);
    R.curve_tag = curve.tag;
    return R;
}

// n * D by double-and-add; negative n acts through the involution.
template <typename K>
MumfordDivisor<K> scalar_mul(const JacobianCurve<K>& curve, const Integer& n,
                             const MumfordDivisor<K>& D) {
    require_same_curve(curve, D);
    if (n < 0) return scalar_mul(curve, -n, negate(curve, D));
    MumfordDivisor<K> acc = zero_element(curve);
    if (n == 0) return acc;
    for (long i = static_cast<long>(mpz_sizeinbase(n.get_mpz_t(), 2)) - 1; i >= 0; --i) {
        acc = add(curve, acc, acc);
        if (mpz_tstbit(n.get_mpz_t(), static_cast<mp_bitcnt_t>(i))) acc = add(curve, acc, D);
    }
    return acc;
}

}  // namespace torsionforge
