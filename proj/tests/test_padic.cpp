#include <catch2/catch_amalgamated.hpp>

#include <charsum/padic.hpp>

using namespace charsum;

namespace {

// Independent oracle: exact rational partial sum of the log series, reduced
// mod p^N afterwards. Every partial sum is p-integral, so the reduction is
// well defined.
ZInt log_series_oracle(const ZInt& x, u64 p, unsigned N, long T) {
    ZInt pN = zpow(p, N);
    QInt acc(0), ypow(1);
    QInt y(zmod(x, pN) - 1);
    for (long n = 1; n <= T; ++n) {
        ypow *= y;
        QInt term = ypow / QInt(n);
        if (n % 2 == 1) acc += term; else acc -= term;
    }
    acc.canonicalize();
    ZInt num = acc.get_num(), den = acc.get_den();
    REQUIRE(zgcd(den, ZInt(p)) == 1);
    return zmod(num * invmod(zmod(den, pN), pN), pN);
}

} // namespace

TEST_CASE("padic_log examples") {
    PrimePower pp(5, 3);
    CHECK(padic_log(1, pp, 3) == 0);

    // 5 - 25*inv(2,125) mod 125
    ZInt expect = zmod(ZInt(5) - 25 * invmod(2, 125), 125);
    CHECK(expect == 55);
    CHECK(padic_log(6, pp, 3) == 55);

    // homomorphism: 36 = 6^2
    CHECK(padic_log(36, pp, 3) == zmod(2 * padic_log(6, pp, 3), 125));
    CHECK(padic_log(36, pp, 3) == 110);
}

TEST_CASE("padic_log agrees with the rational series oracle") {
    for (u64 p : {3ull, 5ull, 7ull}) {
        unsigned N = 4;
        PrimePower pp(p, N);
        ZInt pN = zpow(p, N);
        for (ZInt x = 1; x < pN; x += p) {
            ZInt got = padic_log(x, pp, N);
            ZInt want = log_series_oracle(x, p, N, 40);
            REQUIRE(got == want);
        }
    }
    PrimePower p2(2, 6);
    for (ZInt x = 1; x < 64; x += 4)
        REQUIRE(padic_log(x, p2, 6) == log_series_oracle(x, 2, 6, 60));
}

TEST_CASE("padic_log homomorphism and congruence stability") {
    // log(uv) = log u + log v mod p^N for all u,v = 1 mod p, p^N <= 3^5
    unsigned N = 5;
    PrimePower pp(3, N);
    ZInt pN = zpow(3, N);
    for (ZInt u = 1; u < pN; u += 3)
        for (ZInt v = u; v < pN; v += 3) {
            ZInt lhs = padic_log(zmod(u * v, pN), pp, N);
            ZInt rhs = zmod(padic_log(u, pp, N) + padic_log(v, pp, N), pN);
            REQUIRE(lhs == rhs);
        }

    // y = y' mod p^{N-1}  =>  log(1+py) = log(1+py') mod p^N
    for (ZInt y = 0; y < 27; ++y) {
        ZInt a = padic_log(1 + 3 * y, pp, N);
        ZInt b = padic_log(zmod(1 + 3 * (y + 81), pN), pp, N);
        REQUIRE(a == b);
    }
    CHECK_THROWS_AS(padic_log(2, pp, 3), std::domain_error);
}

TEST_CASE("unit_log_data examples") {
    UnitLogData d33 = unit_log_data(PrimePower(3, 3));
    CHECK(d33.omega == 2);
    CHECK(d33.r == 1);
    CHECK(d33.R == 7);
    CHECK(d33.Rbar == 4);
    // series oracle for R = log(4)/3 mod 9
    CHECK(zmod(log_series_oracle(4, 3, 3, 30) / 3, 9) == d33.R);

    UnitLogData d52 = unit_log_data(PrimePower(5, 2));
    CHECK(d52.omega == 2);
    CHECK(d52.r == 3); // 2^4 = 16 = 1 + 5*3

    UnitLogData d26 = unit_log_data(PrimePower(2, 6));
    CHECK(d26.R2 == zmod(ZInt(-1), 16)); // R2 = -1 mod 16
}

TEST_CASE("primitive root is primitive for all exponents up to m") {
    for (u64 p : {3ull, 5ull, 7ull, 11ull, 13ull}) {
        u64 w = primitive_root_mod_p2(p);
        for (unsigned k = 1; k <= 3; ++k) {
            ZInt q = zpow(p, k);
            ZInt order = zpow(p, k - 1) * (p - 1);
            // order of w mod p^k equals the full group order
            ZInt cur = 1;
            long steps = 0;
            do {
                cur = zmod(cur * w, q);
                ++steps;
            } while (cur != 1);
            REQUIRE(ZInt(steps) == order);
        }
    }
}

TEST_CASE("discrete_decompose examples and round trip") {
    // identity
    {
        PrimePower pp(3, 2);
        UnitLogData d = unit_log_data(pp);
        CHECK(discrete_decompose(1, d, pp).k == 0);
        CHECK(discrete_decompose(4, d, pp).k == 2); // 2^2 = 4
        CHECK_THROWS_AS(discrete_decompose(3, d, pp), std::domain_error);
    }
    // p=2: -5^3 = 3 mod 16
    {
        PrimePower pp(2, 4);
        UnitLogData d = unit_log_data(pp);
        auto r = discrete_decompose(3, d, pp);
        CHECK(r.a == 1);
        CHECK(r.k == 3);
        // exhaustive oracle over (a, k)
        bool found = false;
        for (int a = 0; a <= 1 && !found; ++a)
            for (ZInt k = 0; k < 4 && !found; ++k) {
                ZInt v = zmod((a ? ZInt(-1) : ZInt(1)) * powmod(5, k, pp.q), pp.q);
                if (v == 3) {
                    found = true;
                    CHECK(a == r.a);
                    CHECK(k == r.k);
                }
            }
        REQUIRE(found);
    }
}

TEST_CASE("decompose-then-exponentiate is the identity on units") {
    {
        PrimePower pp(3, 5); // 3^5 = 243
        UnitLogData d = unit_log_data(pp);
        for (ZInt x = 1; x < pp.q; ++x) {
            if (zgcd(x, ZInt(3)) != 1) continue;
            auto r = discrete_decompose(x, d, pp);
            REQUIRE(powmod(d.omega, r.k, pp.q) == x);
        }
    }
    {
        PrimePower pp(2, 8);
        UnitLogData d = unit_log_data(pp);
        for (ZInt x = 1; x < pp.q; x += 2) {
            auto r = discrete_decompose(x, d, pp);
            ZInt v = powmod(5, r.k, pp.q);
            if (r.a) v = zmod(-v, pp.q);
            REQUIRE(v == x);
        }
    }
}

TEST_CASE("discrete_decompose beyond the brute-force threshold") {
    PrimePower pp(101, 3); // q = 1030301 > 10^4 exercises the PH path
    UnitLogData d = unit_log_data(pp);
    for (ZInt x : {ZInt(2), ZInt(100), ZInt(12345), ZInt(1030300), ZInt(999983)}) {
        auto r = discrete_decompose(x, d, pp);
        REQUIRE(powmod(d.omega, r.k, pp.q) == x);
        REQUIRE(r.k >= 0);
        REQUIRE(r.k < zpow(101, 2) * 100);
    }
}

TEST_CASE("gauss_legendre") {
    CHECK(gauss_legendre(2, 5).first == -1); // 2^2 = 4 = -1 mod 5
    CHECK(gauss_legendre(4, 5).first == 1);
    CHECK(gauss_legendre(10, 5).first == 0);

    auto g5 = gauss_sum(5);
    CHECK(std::abs(g5 - std::complex<double>(std::sqrt(5.0), 0)) < 1e-12);
    auto g7 = gauss_sum(7);
    CHECK(std::abs(g7 - std::complex<double>(0, std::sqrt(7.0))) < 1e-12);

    // direct summation oracle, p <= 97
    for (u64 p = 3; p <= 97; p += 2) {
        if (!is_prime_u64(p)) continue;
        std::complex<double> s = 0;
        for (u64 x = 0; x < p; ++x)
            s += std::polar(1.0, 2.0 * M_PI * (double)((x * x) % p) / (double)p);
        REQUIRE(std::abs(s - gauss_sum(p)) < 1e-12);
    }
}

TEST_CASE("legendre matches Euler criterion exhaustively") {
    for (u64 p : {3ull, 5ull, 7ull, 11ull, 13ull})
        for (ZInt a = 0; a < (long)p; ++a) {
            int l = legendre(a, p);
            bool is_sq = false;
            for (u64 x = 0; x < p; ++x)
                if (zmod(ZInt(x) * ZInt(x), p) == a) { is_sq = true; break; }
            if (a == 0) REQUIRE(l == 0);
            else REQUIRE(l == (is_sq ? 1 : -1));
        }
}
