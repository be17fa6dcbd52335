#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>
#include <gmpxx.h>

namespace charsum {

using ZInt = mpz_class;
using QInt = mpq_class;

inline ZInt zpow(const ZInt& base, unsigned long e) {
    ZInt r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

inline ZInt zpow(std::uint64_t base, unsigned long e) {
    ZInt r;
    mpz_ui_pow_ui(r.get_mpz_t(), base, e);
    return r;
}

inline ZInt powmod(const ZInt& b, const ZInt& e, const ZInt& mod) {
    ZInt r;
    mpz_powm(r.get_mpz_t(), b.get_mpz_t(), e.get_mpz_t(), mod.get_mpz_t());
    return r;
}

// Least nonnegative residue.
inline ZInt zmod(const ZInt& a, const ZInt& m) {
    ZInt r;
    mpz_mod(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
    return r;
}

inline ZInt invmod(const ZInt& a, const ZInt& m) {
    ZInt r;
    if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()) == 0)
        throw std::domain_error("invmod: not invertible mod " + m.get_str());
    return r;
}

// ord_p(x) for x != 0.
inline long ord_p(const ZInt& x, const ZInt& p) {
    if (x == 0) throw std::domain_error("ord_p(0) is infinite");
    ZInt q = x;
    long v = 0;
    while (mpz_divisible_p(q.get_mpz_t(), p.get_mpz_t())) {
        q /= p;
        ++v;
    }
    return v;
}

inline ZInt zgcd(const ZInt& a, const ZInt& b) {
    ZInt r;
    mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

inline ZInt zlcm(const ZInt& a, const ZInt& b) {
    ZInt r;
    mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

inline std::uint64_t to_u64(const ZInt& x) {
    if (x < 0 || !x.fits_ulong_p())
        throw std::overflow_error("value does not fit in 64 bits: " + x.get_str());
    return mpz_get_ui(x.get_mpz_t());
}

inline long to_long(const ZInt& x) {
    if (!x.fits_slong_p())
        throw std::overflow_error("value does not fit in long: " + x.get_str());
    return mpz_get_si(x.get_mpz_t());
}

} // namespace charsum
