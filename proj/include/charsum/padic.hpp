#pragma once

#include <complex>
#include <map>
#include <optional>

#include "common.hpp"
#include "modular.hpp"

namespace charsum {

/// Prime power modulus p^m with p < 2^31 checked prime.
struct PrimePower {
    u64 p;
    unsigned m;
    ZInt q; // p^m

    PrimePower(u64 p_, unsigned m_) : p(p_), m(m_), q(zpow(p_, m_)) {
        if (p >= (1ull << 31)) throw std::domain_error("PrimePower: p exceeds desk-scale range");
        if (!is_prime_u64(p)) throw std::domain_error("PrimePower: p is not prime");
        if (m < 1) throw std::domain_error("PrimePower: m must be >= 1");
    }

    bool odd() const { return p != 2; }
    ZInt pk(unsigned k) const { return zpow(p, k); }
};

// ---------------------------------------------------------------------------
// p-adic logarithm
// ---------------------------------------------------------------------------

// log(1+y) = sum (-1)^{n-1} y^n / n truncated to the terms that survive
// mod p^N: term n is kept iff n*ord_p(y) - ord_p(n) < N.
inline ZInt padic_log(const ZInt& x, const PrimePower& pp, unsigned N) {
    const ZInt p = pp.p;
    const ZInt pN = zpow(pp.p, N);
    ZInt y = zmod(x, pN) - 1;
    if (y == 0) return 0;
    if (pp.odd()) {
        if (ord_p(y, p) < 1) throw std::domain_error("padic_log: x not congruent to 1 mod p");
    } else {
        if (ord_p(y, p) < 2) throw std::domain_error("padic_log: x not congruent to 1 mod 4");
    }
    const long v = ord_p(y, p);

    // Terms n with n*v - ord_p(n) < N survive mod p^N.  Since v >= 1 and
    // ord_p(n) <= log_p(n), every such n is below N plus a digit margin.
    long nlimit = N + 2;
    for (u64 t = N + 2; t > 0; t /= pp.p) ++nlimit;
    std::vector<long> terms;
    int guard = 0;
    for (long n = 1; n <= nlimit; ++n) {
        int e = ord_p_u64((u64)n, pp.p);
        if (n * v - e < (long)N) {
            terms.push_back(n);
            guard = std::max(guard, e);
        }
    }
    const ZInt work = zpow(pp.p, N + guard);

    ZInt acc = 0, ypow = 1;
    long last = 0;
    for (long n : terms) {
        for (; last < n; ++last) ypow = zmod(ypow * y, work);
        int e = ord_p_u64((u64)n, pp.p);
        ZInt unit = ZInt(n) / zpow(pp.p, e);
        ZInt term = ypow / zpow(pp.p, e); // y^n carries n*v >= e powers of p
        term = zmod(term * invmod(unit, work), work);
        acc = zmod((n % 2 == 1) ? ZInt(acc + term) : ZInt(acc - term), work);
    }
    return zmod(acc, pN);
}

// ---------------------------------------------------------------------------
// Primitive roots and unit-group logarithm data
// ---------------------------------------------------------------------------

inline std::vector<u64> prime_factors_u64(u64 n) {
    std::vector<u64> fs;
    for (u64 d = 2; d * d <= n; ++d)
        if (n % d == 0) {
            fs.push_back(d);
            while (n % d == 0) n /= d;
        }
    if (n > 1) fs.push_back(n);
    return fs;
}

/// Smallest w >= 2 that is a primitive root mod p^2 (hence mod p^k for all k).
inline u64 primitive_root_mod_p2(u64 p) {
    if (p == 2) throw std::domain_error("primitive_root_mod_p2: p must be odd");
    auto qs = prime_factors_u64(p - 1);
    u64 p2 = p * p;
    for (u64 w = 2;; ++w) {
        if (w % p == 0) continue;
        bool ok = true;
        for (u64 q : qs)
            if (powmod_u64(w, (p - 1) / q, p) == 1) { ok = false; break; }
        if (!ok) continue;
        if (powmod_u64(w, p - 1, p2) == 1) continue;
        return w;
    }
}

/// Data tying the unit group mod p^m to the p-adic logarithm: omega with
/// omega^{p-1} = 1 + rp, R = (1/p) log(omega^{p-1}) and its inverse, both
/// mod p^{m-1}; for p = 2, R2 = (1/4) log 5 mod 2^{m-2}.
struct UnitLogData {
    u64 p = 0;
    unsigned m = 0;
    u64 omega = 0; // odd p only
    ZInt r;        // omega^{p-1} = 1 + r p, reduced mod p^{m-1}
    ZInt R;        // mod p^{m-1}
    ZInt Rbar;     // R * Rbar = 1 mod p^{m-1}
    ZInt R2;       // p = 2: mod 2^{m-2}
    ZInt R2bar;
};

inline UnitLogData unit_log_data(const PrimePower& pp) {
    UnitLogData d;
    d.p = pp.p;
    d.m = pp.m;
    if (pp.odd()) {
        if (pp.m < 2) throw std::domain_error("unit_log_data: need m >= 2 for odd p");
        const ZInt pm1 = pp.pk(pp.m - 1);
        d.omega = primitive_root_mod_p2(pp.p);
        ZInt w = powmod(d.omega, pp.p - 1, pp.q); // 1 + rp mod p^m
        d.r = zmod((w - 1) / ZInt(pp.p), pm1);
        d.R = zmod(padic_log(w, pp, pp.m) / ZInt(pp.p), pm1);
        d.Rbar = invmod(d.R, pm1);
    } else {
        if (pp.m < 3) throw std::domain_error("unit_log_data: need m >= 3 for p = 2");
        const ZInt q2 = pp.pk(pp.m - 2);
        d.R2 = zmod(padic_log(5, pp, pp.m) / 4, q2);
        d.R2bar = invmod(d.R2, q2);
    }
    return d;
}

// ---------------------------------------------------------------------------
// Discrete logarithms
// ---------------------------------------------------------------------------

// Baby-step giant-step for g^x = h in a cyclic group of order n mod md.
inline std::optional<u64> bsgs_u64(u64 g, u64 h, u64 n, u64 md) {
    u64 s = 1;
    while (s * s < n) ++s;
    std::map<u64, u64> baby;
    u64 cur = 1 % md;
    for (u64 j = 0; j < s; ++j) {
        baby.emplace(cur, j);
        cur = mulmod(cur, g, md);
    }
    u64 ginv_s = powmod_u64(invmod_u64(g, md), s, md);
    u64 gamma = h % md;
    for (u64 i = 0; i <= s; ++i) {
        auto it = baby.find(gamma);
        if (it != baby.end()) {
            u64 x = (i * s + it->second) % n;
            if (powmod_u64(g, x, md) == h % md) return x;
        }
        gamma = mulmod(gamma, ginv_s, md);
    }
    return std::nullopt;
}

// Pohlig-Hellman discrete log of h base g mod prime p (group order p-1).
inline u64 dlog_mod_p(u64 g, u64 h, u64 p) {
    u64 n = p - 1;
    ZInt k = 0, kmod = 1;
    u64 rest = n;
    for (u64 q : prime_factors_u64(n)) {
        u64 qe = 1;
        while (rest % q == 0) { rest /= q; qe *= q; }
        u64 g_sub = powmod_u64(g, n / qe, p);
        u64 h_sub = powmod_u64(h, n / qe, p);
        // digits base q via BSGS in the order-q subgroup
        u64 gq = powmod_u64(g_sub, qe / q, p); // order q
        u64 x = 0, qj = 1;
        for (u64 e = qe; e > 1; e /= q) {
            u64 target = powmod_u64(mulmod(h_sub, invmod_u64(powmod_u64(g_sub, x, p), p), p), e / q, p);
            auto dj = bsgs_u64(gq, target, q, p);
            if (!dj) throw std::domain_error("dlog_mod_p: not in cyclic span");
            x += *dj * qj;
            qj *= q;
        }
        // combine into k via CRT (moduli are pairwise coprime prime powers)
        ZInt M = kmod * qe;
        ZInt t = zmod((ZInt(x) - k) * invmod(zmod(kmod, qe), qe), qe);
        k = zmod(k + kmod * t, M);
        kmod = M;
    }
    return to_u64(k);
}

/// Exponent record for a unit x mod p^m: odd p gives x = omega^k; p = 2,
/// m >= 3 gives x = (-1)^a 5^k with 0 <= k < 2^{m-2}.
struct UnitExponents {
    ZInt k;
    int a = 0; // p = 2 only
};

inline UnitExponents discrete_decompose(const ZInt& x_in, const UnitLogData& data, const PrimePower& pp) {
    ZInt x = zmod(x_in, pp.q);
    if (zgcd(x, ZInt(pp.p)) != 1) throw std::domain_error("discrete_decompose: not a unit");
    UnitExponents res;
    if (pp.odd()) {
        const ZInt order = pp.pk(pp.m - 1) * (pp.p - 1);
        // brute force under the desk-scale threshold
        if (pp.q <= 10000) {
            ZInt cur = 1;
            for (ZInt k = 0; k < order; ++k) {
                if (cur == x) { res.k = k; return res; }
                cur = zmod(cur * data.omega, pp.q);
            }
            throw std::domain_error("discrete_decompose: exhausted group");
        }
        u64 k1 = dlog_mod_p(data.omega % pp.p, to_u64(zmod(x, ZInt(pp.p))), pp.p); // k mod p-1
        if (pp.m == 1) { res.k = k1; return res; }
        ZInt lg = padic_log(powmod(x, pp.p - 1, pp.q), pp, pp.m);
        ZInt k2 = zmod((lg / ZInt(pp.p)) * data.Rbar, pp.pk(pp.m - 1)); // k mod p^{m-1}
        // CRT: k = k1 mod (p-1), k = k2 mod p^{m-1}
        const ZInt a = pp.p - 1, b = pp.pk(pp.m - 1);
        ZInt t = zmod((k2 - k1) * invmod(zmod(a, b), b), b);
        res.k = zmod(ZInt(k1) + a * t, a * b);
        return res;
    }
    // p = 2
    if (pp.m == 1) { res.k = 0; res.a = 0; return res; }
    res.a = (to_u64(zmod(x, 4)) == 3) ? 1 : 0;
    if (pp.m == 2) { res.k = 0; return res; }
    ZInt xp = res.a ? zmod(pp.q - x, pp.q) : x; // +-x = 5^k, the sign making it 1 mod 4
    ZInt lg = padic_log(xp, pp, pp.m);
    res.k = zmod((lg / 4) * data.R2bar, pp.pk(pp.m - 2));
    return res;
}

// ---------------------------------------------------------------------------
// Legendre symbol and quadratic Gauss sum
// ---------------------------------------------------------------------------

inline int legendre(const ZInt& a, u64 p) {
    if (p == 2) throw std::domain_error("legendre: p must be odd");
    ZInt r = powmod(zmod(a, p), ZInt((p - 1) / 2), ZInt(p));
    if (r == 0) return 0;
    return r == 1 ? 1 : -1;
}

/// G_p = sum e_p(x^2) = sqrt(p) for p = 1 mod 4, i sqrt(p) for p = 3 mod 4.
inline std::complex<double> gauss_sum(u64 p) {
    double s = std::sqrt((double)p);
    return (p % 4 == 1) ? std::complex<double>(s, 0.0) : std::complex<double>(0.0, s);
}

inline std::pair<int, std::complex<double>> gauss_legendre(const ZInt& a, u64 p) {
    return {legendre(a, p), gauss_sum(p)};
}

} // namespace charsum
