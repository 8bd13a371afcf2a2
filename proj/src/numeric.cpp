#include "latgeo/numeric.hpp"

#include <cctype>

namespace latgeo {

mpq_class parse_rational(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("empty rational");
    auto slash = text.find('/');
    try {
        if (slash == std::string::npos) {
            return mpq_class(mpz_class(text));
        }
        mpz_class num(text.substr(0, slash));
        mpz_class den(text.substr(slash + 1));
        if (den == 0) throw std::invalid_argument("rational with zero denominator: " + text);
        return make_q(num, den);
    } catch (const std::invalid_argument&) {
        throw;
    } catch (...) {
        throw std::invalid_argument("malformed rational: " + text);
    }
}

std::string format_rational(const mpq_class& value) {
    if (value.get_den() == 1) return value.get_num().get_str();
    return value.get_num().get_str() + "/" + value.get_den().get_str();
}

namespace {

// Sign of c + d*sqrt(t) with c,d rational, t >= 0.
int sign_linear_sqrt(const mpq_class& c, const mpq_class& d, const mpq_class& t) {
    int sc = sgn(c);
    int sd = sgn(d) * (t > 0 ? 1 : 0);
    if (sd == 0) return sc;
    if (sc == 0) return sd;
    if (sc == sd) return sc;
    // Opposite signs: compare c^2 against d^2*t.
    mpq_class lhs = c * c;
    mpq_class rhs = d * d * t;
    int cmpv = cmp(lhs, rhs);
    if (cmpv == 0) return 0;
    // |c| dominates iff c^2 > d^2*t.
    return cmpv > 0 ? sc : sd;
}

}  // namespace

int sign_plus_sqrt_minus_sqrt(const mpq_class& a, const mpq_class& s, const mpq_class& t) {
    if (s < 0 || t < 0) throw std::invalid_argument("negative radicand");
    // sign of (a + sqrt(s)) - sqrt(t)
    // If a + sqrt(s) < 0: result negative (sqrt(t) >= 0), unless both zero.
    int lhs_sign = sign_linear_sqrt(a, 1, s);
    if (lhs_sign < 0) return (t == 0 && lhs_sign == 0) ? 0 : -1;
    if (lhs_sign == 0) return t > 0 ? -1 : 0;
    // a + sqrt(s) > 0: square both sides.
    // (a + sqrt(s))^2 = a^2 + s + 2a sqrt(s); compare against t:
    // sign of (a^2 + s - t) + 2a*sqrt(s)
    return sign_linear_sqrt(a * a + s - t, 2 * a, s);
}

mpq_class Rng::unit_rational(unsigned bits) {
    mpz_class num = 0;
    for (unsigned filled = 0; filled < bits; filled += 64) {
        num <<= 64;
        num += mpz_class(static_cast<unsigned long>(next()));
    }
    mpz_class den = pow2(bits);
    num %= den;
    if (num < 0) num += den;
    num |= 1;  // odd numerator keeps the fraction away from coarse grids
    if (num >= den) num -= 2;
    return make_q(num, den);
}

}  // namespace latgeo
