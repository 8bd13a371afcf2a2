#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace latgeo {

// mpq_class(p, q) does not canonicalize; every construction from a
// numerator/denominator pair must go through here.
inline mpq_class make_q(const mpz_class& num, const mpz_class& den) {
    if (den == 0) throw std::invalid_argument("zero denominator");
    mpq_class q(num, den);
    q.canonicalize();
    return q;
}

inline mpq_class make_q(long num, long den = 1) {
    return make_q(mpz_class(num), mpz_class(den));
}

// Parses "p", "-p" or "p/q" with nonzero q.
mpq_class parse_rational(const std::string& text);

// Canonical "p" or "p/q" rendering (q > 0, gcd(p,q)=1).
std::string format_rational(const mpq_class& value);

// floor(num/den) for exact integers, den != 0.
inline mpz_class floor_div(const mpz_class& num, const mpz_class& den) {
    mpz_class q;
    mpz_fdiv_q(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    return q;
}

inline mpz_class ceil_div(const mpz_class& num, const mpz_class& den) {
    mpz_class q;
    mpz_cdiv_q(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    return q;
}

inline mpz_class floor_q(const mpq_class& q) {
    return floor_div(q.get_num(), q.get_den());
}

inline mpz_class ceil_q(const mpq_class& q) {
    return ceil_div(q.get_num(), q.get_den());
}

// Largest integer s with s*s <= v; v must be nonnegative.
inline mpz_class isqrt(const mpz_class& v) {
    if (v < 0) throw std::invalid_argument("isqrt of negative value");
    mpz_class r;
    mpz_sqrt(r.get_mpz_t(), v.get_mpz_t());
    return r;
}

inline mpz_class pow2(unsigned long e) {
    mpz_class r;
    mpz_ui_pow_ui(r.get_mpz_t(), 2, e);
    return r;
}

inline mpz_class pow_z(const mpz_class& base, unsigned long e) {
    mpz_class r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

// Sign of a + sqrt(s) - sqrt(t) with a rational, s,t nonnegative rationals.
// Used to order quadratic irrationalities exactly.
int sign_plus_sqrt_minus_sqrt(const mpq_class& a, const mpq_class& s, const mpq_class& t);

// Deterministic 64-bit generator (splitmix64); seeds reproduce across platforms.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform in [0, bound)
    std::uint64_t below(std::uint64_t bound) {
        return bound == 0 ? 0 : next() % bound;
    }

    // Uniform signed integer in [-bound, bound]
    long signed_below(long bound) {
        return static_cast<long>(below(2 * static_cast<std::uint64_t>(bound) + 1)) - bound;
    }

    // Rational in (0,1) with denominator 2^bits, numerator odd.
    mpq_class unit_rational(unsigned bits);

private:
    std::uint64_t state_;
};

}  // namespace latgeo
