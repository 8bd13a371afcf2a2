#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "latgeo/numeric.hpp"

namespace latgeo {

mpz_class dbs_base(int n);                   // 2^n
mpz_class bell_bound(int n, long k);         // (k+2)^n
mpz_class aliev_linear(int n, long k);       // ceil(2(k+1)/3)*2^n - 2*ceil(2(k+1)/3) + 2
mpz_class averkov_linear(int n, long k);     // floor((k+1)/2)*(2^n-2) + 2^n

// Largest integer v with 100^3 * v^3 <= 443^3 * (k+4); floor(4.43*(k+4)^(1/3))
// evaluated without real cube roots.
mpz_class c2_upper(long k);

// Certified rational lower bound on the area of a convex lattice v-gon,
// v^3 / (8*pi^2) with pi replaced by the over-approximation 355/113 so the
// bound is never overstated.
mpq_class rabinowitz_min_area(long v);

mpz_class subspace_bound(int n, int d, const mpz_class& c_d_k);
mpz_class critical_bound(int n, const mpz_class& q);
mpz_class ell_pigeonhole(int n, long s);     // (s-1)*2^n + 1

struct LargeNBracket {
    mpz_class lower;   // 2^(n+1) - k
    mpz_class upper;   // c(k-1,k) + 2(2^n - 2)
    bool verified = false;
};

// Bracket for c(n,k) in high dimension. The k = 1 case of the printed lower
// bound contradicts the exact value c(n,1) = 2(2^n - 1), so this evaluator
// admits only 2 <= k <= n; k = 1 is rejected unless allow_unverified is set,
// and then the result carries verified = false.
LargeNBracket large_n_bracket(int n, long k,
                              std::optional<mpz_class> c_km1_k = std::nullopt,
                              bool allow_unverified = false);

// Violations of value(k) >= value(k-1) - 1 over a contiguous k range.
std::vector<long> validate_monotonic_deficit(const std::map<long, mpz_class>& table);

enum class BoundKind { Lower, Upper, Info };

struct BoundEntry {
    std::string name;
    mpq_class value;
    BoundKind kind = BoundKind::Info;
};

struct BoundReport {
    int n = 0;
    long k = 0;
    std::vector<BoundEntry> entries;
};

// All applicable named bounds for c(n,k). Throws std::logic_error if any
// upper entry dips below any lower entry (that would be a bug, not data).
BoundReport bound_report(int n, long k);

}  // namespace latgeo
