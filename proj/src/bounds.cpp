#include "latgeo/bounds.hpp"

#include <stdexcept>

namespace latgeo {

mpz_class dbs_base(int n) {
    if (n < 1) throw std::invalid_argument("dbs_base: n must be >= 1");
    return pow2(n);
}

mpz_class bell_bound(int n, long k) {
    if (n < 1 || k < 0) throw std::invalid_argument("bell_bound: need n >= 1, k >= 0");
    return pow_z(mpz_class(k + 2), n);
}

mpz_class aliev_linear(int n, long k) {
    if (n < 1 || k < 0) throw std::invalid_argument("aliev_linear: need n >= 1, k >= 0");
    mpz_class c = ceil_div(mpz_class(2 * (k + 1)), 3);
    return c * pow2(n) - 2 * c + 2;
}

mpz_class averkov_linear(int n, long k) {
    if (n < 1 || k < 0) throw std::invalid_argument("averkov_linear: need n >= 1, k >= 0");
    mpz_class two_n = pow2(n);
    return mpz_class((k + 1) / 2) * (two_n - 2) + two_n;
}

mpz_class c2_upper(long k) {
    if (k < 0) throw std::invalid_argument("c2_upper: k must be >= 0");
    const mpz_class lhs_scale = mpz_class(100) * 100 * 100;
    const mpz_class rhs = mpz_class(443) * 443 * 443 * mpz_class(k + 4);
    mpz_class v = 0;
    while (lhs_scale * pow_z(v + 1, 3) <= rhs) ++v;
    return v;
}

mpq_class rabinowitz_min_area(long v) {
    if (v < 3) throw std::invalid_argument("rabinowitz_min_area: v must be >= 3");
    // pi <= 355/113, so v^3 / (8 pi^2) >= v^3 * 113^2 / (8 * 355^2).
    return make_q(pow_z(mpz_class(v), 3) * (113 * 113), mpz_class(8) * 355 * 355);
}

mpz_class subspace_bound(int n, int d, const mpz_class& c_d_k) {
    if (n < 1 || d < 1 || d > n) throw std::invalid_argument("subspace_bound: need 1 <= d <= n");
    return c_d_k + 2 * (pow2(n) - 2);
}

mpz_class critical_bound(int n, const mpz_class& q) {
    if (n < 1 || q < 1) throw std::invalid_argument("critical_bound: need n >= 1, q >= 1");
    return q * (pow2(n) - 1);
}

mpz_class ell_pigeonhole(int n, long s) {
    if (n < 1 || s < 1) throw std::invalid_argument("ell_pigeonhole: need n >= 1, s >= 1");
    return mpz_class(s - 1) * pow2(n) + 1;
}

LargeNBracket large_n_bracket(int n, long k,
                              std::optional<mpz_class> c_km1_k,
                              bool allow_unverified) {
    if (k > n) throw std::invalid_argument("large_n_bracket: requires k <= n");
    if (k < 2 && !allow_unverified)
        throw std::invalid_argument(
            "large_n_bracket: k < 2 disabled pending verification (the printed "
            "lower bound contradicts the exact k = 1 value)");
    if (k < 1) throw std::invalid_argument("large_n_bracket: k must be >= 1");
    LargeNBracket out;
    out.lower = pow2(n + 1) - k;
    mpz_class inner = c_km1_k ? *c_km1_k
                              : (k >= 2 ? averkov_linear(k - 1, k) : mpz_class(2));
    out.upper = inner + 2 * (pow2(n) - 2);
    out.verified = k >= 2;
    return out;
}

std::vector<long> validate_monotonic_deficit(const std::map<long, mpz_class>& table) {
    std::vector<long> violations;
    auto it = table.begin();
    if (it == table.end()) return violations;
    auto prev = it++;
    for (; it != table.end(); prev = it++) {
        if (it->first != prev->first + 1)
            throw std::invalid_argument("validate_monotonic_deficit: k range not contiguous");
        if (it->second < prev->second - 1) violations.push_back(it->first);
    }
    return violations;
}

BoundReport bound_report(int n, long k) {
    BoundReport r;
    r.n = n;
    r.k = k;
    r.entries.push_back({"bell_bound", mpq_class(bell_bound(n, k)), BoundKind::Upper});
    r.entries.push_back({"aliev_linear", mpq_class(aliev_linear(n, k)), BoundKind::Upper});
    r.entries.push_back({"averkov_linear", mpq_class(averkov_linear(n, k)), BoundKind::Upper});
    if (n == 2) r.entries.push_back({"c2_upper", mpq_class(c2_upper(k)), BoundKind::Upper});
    // Best deficit-chained lower bound from the exact small-k values
    // c(n,0) = 2^n, c(n,1) = c(n,2) = 2(2^n - 1).
    mpz_class lower;
    if (k == 0) lower = pow2(n);
    else if (k == 1) lower = pow2(n + 1) - 2;
    else lower = pow2(n + 1) - k;
    r.entries.push_back({"chained_deficit_lower", mpq_class(lower), BoundKind::Lower});
    r.entries.push_back({"ell_pigeonhole_k_plus_1", mpq_class(ell_pigeonhole(n, k + 1)), BoundKind::Info});
    for (const auto& lo : r.entries)
        if (lo.kind == BoundKind::Lower)
            for (const auto& hi : r.entries)
                if (hi.kind == BoundKind::Upper && hi.value < lo.value)
                    throw std::logic_error("bound_report: upper bound below lower bound");
    return r;
}

}  // namespace latgeo
