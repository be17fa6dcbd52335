#pragma once

#include <algorithm>
#include <cassert>

#include "common.hpp"

namespace charsum {

/// Integer polynomial, coefficients lowest degree first; the zero polynomial
/// is the empty sequence.
struct IntPoly {
    std::vector<ZInt> c;

    IntPoly() = default;
    IntPoly(std::initializer_list<long> v) {
        for (long x : v) c.emplace_back(x);
        trim();
    }
    explicit IntPoly(std::vector<ZInt> v) : c(std::move(v)) { trim(); }
    static IntPoly constant(const ZInt& x) {
        IntPoly r;
        if (x != 0) r.c.push_back(x);
        return r;
    }
    static IntPoly monomial(const ZInt& coeff, std::size_t d) {
        IntPoly r;
        if (coeff != 0) {
            r.c.assign(d + 1, ZInt(0));
            r.c[d] = coeff;
        }
        return r;
    }

    void trim() {
        while (!c.empty() && c.back() == 0) c.pop_back();
    }
    bool zero() const { return c.empty(); }
    long deg() const { return (long)c.size() - 1; } // -1 for the zero polynomial
    const ZInt& lead() const {
        static const ZInt z0(0);
        return c.empty() ? z0 : c.back();
    }
    ZInt coeff(std::size_t j) const { return j < c.size() ? c[j] : ZInt(0); }

    bool operator==(const IntPoly& o) const { return c == o.c; }
};

inline IntPoly operator+(const IntPoly& a, const IntPoly& b) {
    IntPoly r;
    r.c.resize(std::max(a.c.size(), b.c.size()), ZInt(0));
    for (std::size_t i = 0; i < r.c.size(); ++i) r.c[i] = a.coeff(i) + b.coeff(i);
    r.trim();
    return r;
}

inline IntPoly operator-(const IntPoly& a, const IntPoly& b) {
    IntPoly r;
    r.c.resize(std::max(a.c.size(), b.c.size()), ZInt(0));
    for (std::size_t i = 0; i < r.c.size(); ++i) r.c[i] = a.coeff(i) - b.coeff(i);
    r.trim();
    return r;
}

inline IntPoly operator-(const IntPoly& a) {
    IntPoly r = a;
    for (auto& x : r.c) x = -x;
    return r;
}

inline IntPoly operator*(const IntPoly& a, const IntPoly& b) {
    if (a.zero() || b.zero()) return {};
    IntPoly r;
    r.c.assign(a.c.size() + b.c.size() - 1, ZInt(0));
    for (std::size_t i = 0; i < a.c.size(); ++i)
        for (std::size_t j = 0; j < b.c.size(); ++j) r.c[i + j] += a.c[i] * b.c[j];
    r.trim();
    return r;
}

inline IntPoly operator*(const IntPoly& a, const ZInt& s) {
    if (s == 0) return {};
    IntPoly r = a;
    for (auto& x : r.c) x *= s;
    return r;
}

inline IntPoly poly_pow(IntPoly base, unsigned long e) {
    IntPoly r = IntPoly::constant(1);
    while (e) {
        if (e & 1) r = r * base;
        if (e >>= 1) base = base * base;
    }
    return r;
}

inline IntPoly derivative(const IntPoly& a) {
    IntPoly r;
    for (std::size_t i = 1; i < a.c.size(); ++i) r.c.push_back(a.c[i] * (long)i);
    r.trim();
    return r;
}

inline ZInt poly_eval(const IntPoly& a, const ZInt& x) {
    ZInt r = 0;
    for (auto it = a.c.rbegin(); it != a.c.rend(); ++it) r = r * x + *it;
    return r;
}

inline ZInt poly_eval_mod(const IntPoly& a, const ZInt& x, const ZInt& mod) {
    ZInt r = 0;
    for (auto it = a.c.rbegin(); it != a.c.rend(); ++it) r = zmod(r * x + *it, mod);
    return r;
}

/// gcd of all coefficients, nonnegative; content(0) = 0.
inline ZInt content(const IntPoly& a) {
    ZInt g = 0;
    for (const auto& x : a.c) g = zgcd(g, x);
    return g;
}

inline IntPoly divexact(const IntPoly& a, const ZInt& s) {
    IntPoly r = a;
    for (auto& x : r.c) {
        assert(mpz_divisible_p(x.get_mpz_t(), s.get_mpz_t()));
        x /= s;
    }
    return r;
}

inline IntPoly primitive_part(const IntPoly& a) {
    if (a.zero()) return a;
    ZInt ct = content(a);
    if (a.lead() < 0) ct = -ct;
    return divexact(a, ct);
}

// Exact division in Z[X]; throws if b does not divide a.
inline IntPoly poly_divexact(const IntPoly& a, const IntPoly& b) {
    if (b.zero()) throw std::domain_error("poly_divexact: division by zero");
    if (a.zero()) return {};
    if (a.deg() < b.deg()) throw std::domain_error("poly_divexact: not divisible");
    IntPoly rem = a, q;
    q.c.assign(a.deg() - b.deg() + 1, ZInt(0));
    for (long k = a.deg() - b.deg(); k >= 0; --k) {
        if (rem.deg() != b.deg() + k) continue;
        ZInt t = rem.lead() / b.lead();
        if (t * b.lead() != rem.lead()) throw std::domain_error("poly_divexact: not divisible");
        q.c[k] = t;
        rem = rem - IntPoly::monomial(t, k) * b;
    }
    if (!rem.zero()) throw std::domain_error("poly_divexact: not divisible");
    q.trim();
    return q;
}

// Pseudo-remainder: lead(b)^(deg a - deg b + 1) * a = q*b + r.
inline IntPoly pseudo_rem(IntPoly a, const IntPoly& b) {
    assert(!b.zero());
    long d = b.deg();
    while (!a.zero() && a.deg() >= d) {
        long k = a.deg() - d;
        ZInt la = a.lead();
        a = a * b.lead() - IntPoly::monomial(la, k) * b;
    }
    return a;
}

/// Exact gcd in Z[X] via the primitive PRS, result primitive with positive
/// leading coefficient times the content gcd.
inline IntPoly poly_gcd_impl(IntPoly a, IntPoly b) {
    if (a.zero()) return b;
    if (b.zero()) return a;
    ZInt ca = content(a), cb = content(b);
    ZInt cg = zgcd(ca, cb);
    a = divexact(a, a.lead() < 0 ? ZInt(-ca) : ca);
    b = divexact(b, b.lead() < 0 ? ZInt(-cb) : cb);
    if (a.deg() < b.deg()) std::swap(a, b);
    while (!b.zero()) {
        IntPoly r = pseudo_rem(a, b);
        a = b;
        b = r.zero() ? IntPoly{} : primitive_part(r);
    }
    if (a.lead() < 0) a = -a;
    return a * cg;
}

inline IntPoly gcd(const IntPoly& a, const IntPoly& b) { return poly_gcd_impl(a, b); }

/// Z(h): number of distinct complex zeros, deg h - deg gcd(h, h').
inline long distinct_zeros(const IntPoly& h) {
    if (h.zero()) throw std::domain_error("distinct_zeros: zero polynomial");
    if (h.deg() == 0) return 0;
    return h.deg() - gcd(h, derivative(h)).deg();
}

/// Coefficients of P(u + s*Y) as a polynomial in Y, reduced mod `mod`.
inline IntPoly compose_linear_mod(const IntPoly& P, const ZInt& u, const ZInt& s, const ZInt& mod) {
    IntPoly r; // Horner: r <- r*(u + sY) + c_i
    for (auto it = P.c.rbegin(); it != P.c.rend(); ++it) {
        IntPoly next;
        next.c.assign(r.c.size() + 1, ZInt(0));
        for (std::size_t j = 0; j < r.c.size(); ++j) {
            next.c[j] = zmod(next.c[j] + r.c[j] * u, mod);
            next.c[j + 1] = zmod(next.c[j + 1] + r.c[j] * s, mod);
        }
        if (next.c.empty()) next.c.push_back(ZInt(0));
        next.c[0] = zmod(next.c[0] + *it, mod);
        next.trim();
        r = next;
    }
    return r;
}

inline std::string poly_tuple_str(const IntPoly& a) {
    std::string s = "(";
    if (a.zero()) s += "0";
    for (std::size_t i = 0; i < a.c.size(); ++i) {
        if (i) s += ",";
        s += a.c[i].get_str();
    }
    return s + ")";
}

} // namespace charsum
