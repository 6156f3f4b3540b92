#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace stk {

// All exact arithmetic runs on GMP integers; no floating point anywhere.
using Int = mpz_class;
using Vec = std::vector<Int>;
using Mat = std::vector<Vec>;

/// Kernel selection: the parallel path uses OpenMP; the serial path is the
/// reference implementation the tests compare against.
enum class Exec { serial, parallel };

inline Int int_from(long v) { return Int(v); }

inline bool is_zero(const Int& x) { return mpz_sgn(x.get_mpz_t()) == 0; }
inline int sign(const Int& x) { return mpz_sgn(x.get_mpz_t()); }

inline Int abs_int(const Int& x) {
    Int r;
    mpz_abs(r.get_mpz_t(), x.get_mpz_t());
    return r;
}

inline Int gcd_int(const Int& a, const Int& b) {
    Int r;
    mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

/// g = gcd(a, b) together with s, t such that s*a + t*b = g.
inline void xgcd(const Int& a, const Int& b, Int& g, Int& s, Int& t) {
    mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
}

/// Floor quotient (round toward -inf); matches the reduction convention of
/// Hermite normal form where residues land in [0, pivot).
inline Int fdiv_q(const Int& a, const Int& b) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

/// Nearest quotient (symmetric remainder in (-|b|/2, |b|/2]); keeps entries
/// small during elimination sweeps.
inline Int ndiv_q(const Int& a, const Int& b) {
    Int q, r;
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    // r in [0, |b|) for b > 0; shift to symmetric range
    Int twice = r * 2;
    if (mpz_cmpabs(twice.get_mpz_t(), b.get_mpz_t()) > 0) q += sign(b) > 0 ? 1 : -1;
    return q;
}

inline Int divexact(const Int& a, const Int& b) {
    Int q;
    mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

inline bool divisible(const Int& a, const Int& b) {
    return mpz_divisible_p(a.get_mpz_t(), b.get_mpz_t()) != 0;
}

inline Int pow_int(const Int& base, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

inline long to_long(const Int& x) { return mpz_get_si(x.get_mpz_t()); }
inline bool fits_long(const Int& x) { return mpz_fits_slong_p(x.get_mpz_t()) != 0; }

inline std::string to_dec(const Int& x) { return x.get_str(10); }
Int parse_int(const std::string& s); // throws Error(bad_format)

/// dst -= q * src, starting at column `from`.
void row_submul(Vec& dst, const Int& q, const Vec& src, std::size_t from = 0);

bool is_zero_vec(const Vec& v);

} // namespace stk
