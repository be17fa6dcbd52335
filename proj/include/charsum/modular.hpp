#pragma once

#include <cstdint>
#include <stdexcept>

namespace charsum {

// Fixed-width modular helpers for moduli below 2^62; the hot evaluation
// loops run on these, everything else goes through ZInt.

using u64 = std::uint64_t;
using u128 = unsigned __int128;
using i64 = std::int64_t;

inline u64 mulmod(u64 a, u64 b, u64 m) { return (u64)((u128)a * b % m); }

inline u64 addmod(u64 a, u64 b, u64 m) {
    u64 s = a + b;
    if (s >= m || s < a) s -= m;
    return s;
}

inline u64 submod(u64 a, u64 b, u64 m) { return a >= b ? a - b : a + m - b; }

inline u64 powmod_u64(u64 b, u64 e, u64 m) {
    u64 r = 1 % m;
    b %= m;
    while (e) {
        if (e & 1) r = mulmod(r, b, m);
        b = mulmod(b, b, m);
        e >>= 1;
    }
    return r;
}

// Extended Euclid; returns gcd and writes x with a*x ≡ gcd (mod m).
inline u64 gcdext_u64(u64 a, u64 m, i64& x) {
    i64 x0 = 1, x1 = 0;
    u64 r0 = a, r1 = m;
    while (r1 != 0) {
        u64 q = r0 / r1;
        u64 r2 = r0 - q * r1;
        i64 x2 = x0 - (i64)q * x1;
        r0 = r1; r1 = r2;
        x0 = x1; x1 = x2;
    }
    x = x0;
    return r0;
}

inline u64 invmod_u64(u64 a, u64 m) {
    i64 x;
    u64 g = gcdext_u64(a % m, m, x);
    if (g != 1) throw std::domain_error("invmod_u64: not invertible");
    i64 r = x % (i64)m;
    if (r < 0) r += (i64)m;
    return (u64)r;
}

inline u64 gcd_u64(u64 a, u64 b) {
    while (b) { u64 t = a % b; a = b; b = t; }
    return a;
}

// Deterministic Miller-Rabin, valid for all n < 3'215'031'751 with the
// witness set {2,3,5,7}; extended set covers all 64-bit n.
inline bool is_prime_u64(u64 n) {
    if (n < 2) return false;
    for (u64 q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull})
        if (n % q == 0) return n == q;
    u64 d = n - 1;
    int s = 0;
    while ((d & 1) == 0) { d >>= 1; ++s; }
    for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        u64 x = powmod_u64(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod(x, x, n);
            if (x == n - 1) { composite = false; break; }
        }
        if (composite) return false;
    }
    return true;
}

inline int ord_p_u64(u64 x, u64 p) {
    if (x == 0) throw std::domain_error("ord_p(0) is infinite");
    int v = 0;
    while (x % p == 0) { x /= p; ++v; }
    return v;
}

} // namespace charsum
