#pragma once

// Arbitrary-precision integers and rationals plus the elementary number
// theory the rest of the library leans on.

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/miller_rabin.hpp>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "k3pts/errors.hpp"

namespace k3pts {

namespace mp = boost::multiprecision;

using BigInt = mp::number<mp::gmp_int, mp::et_off>;
using Rat = mp::number<mp::gmp_rational, mp::et_off>;

inline BigInt num(const Rat& r) { return mp::numerator(r); }
inline BigInt den(const Rat& r) { return mp::denominator(r); }

inline Rat make_rat(const BigInt& n, const BigInt& d) {
    if (d == 0) throw invalid_argument("zero denominator");
    return Rat(n, d);
}

inline int sign(const BigInt& n) { return n.sign(); }
inline BigInt abs_big(const BigInt& n) { return n < 0 ? BigInt(-n) : n; }

inline BigInt gcd_big(const BigInt& a, const BigInt& b) { return mp::gcd(a, b); }
inline BigInt lcm_big(const BigInt& a, const BigInt& b) {
    if (a == 0 || b == 0) return 0;
    return abs_big(a / gcd_big(a, b) * b);
}

/// Floor of the square root of a nonnegative integer.
inline BigInt isqrt(const BigInt& n) {
    if (n < 0) throw invalid_argument("isqrt of negative integer");
    return mp::sqrt(n);
}

/// Exact square root when n is a perfect square.
inline std::optional<BigInt> exact_sqrt(const BigInt& n) {
    if (n < 0) return std::nullopt;
    BigInt r = isqrt(n);
    if (r * r == n) return r;
    return std::nullopt;
}

struct SquareTest {
    bool is_square = false;
    BigInt root;  // meaningful only when is_square
};

inline SquareTest is_square_integer(const BigInt& n) {
    auto r = exact_sqrt(n);
    if (!r) return {false, 0};
    return {true, *r};
}

/// Natural log of |n| for n != 0, accurate for arbitrarily large n.
inline double log_abs(const BigInt& n) {
    if (n == 0) throw invalid_argument("log of zero");
    BigInt m = abs_big(n);
    std::size_t bits = mp::msb(m) + 1;
    if (bits <= 1000) return std::log(m.convert_to<double>());
    std::size_t shift = bits - 64;
    BigInt top = m >> shift;
    return std::log(top.convert_to<double>()) + static_cast<double>(shift) * std::log(2.0);
}

inline double to_double(const Rat& r) {
    if (r == 0) return 0.0;
    double l = log_abs(num(r)) - log_abs(den(r));
    return (r < 0 ? -1.0 : 1.0) * std::exp(l);
}

/// Exponent of p in n (n != 0) together with the p-free cofactor.
inline std::pair<int, BigInt> valuation(const BigInt& n, const BigInt& p) {
    if (n == 0) throw invalid_argument("valuation of zero");
    int v = 0;
    BigInt m = n;
    while (m % p == 0) {
        m /= p;
        ++v;
    }
    return {v, m};
}

inline bool is_prime(const BigInt& n) {
    if (n < 2) return false;
    static const int small[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
    for (int q : small) {
        if (n == q) return true;
        if (n % q == 0) return false;
    }
    if (n < 1369) return true;
    return mp::miller_rabin_test(n, 30);
}

inline bool is_prime(std::int64_t n) { return is_prime(BigInt(n)); }

/// Primes in [lo, hi].
inline std::vector<std::int64_t> primes_in(std::int64_t lo, std::int64_t hi) {
    std::vector<std::int64_t> out;
    for (std::int64_t q = std::max<std::int64_t>(lo, 2); q <= hi; ++q)
        if (is_prime(q)) out.push_back(q);
    return out;
}

inline constexpr std::int64_t kTrialDivisionBound = 1000000;

struct Factorization {
    BigInt unit = 1;                                   // sign of the input
    std::vector<std::pair<BigInt, int>> prime_powers;  // ascending primes
};

/// Full factorization by trial division up to `bound`. The leftover cofactor
/// is accepted as prime when it is below bound^2 or passes a probable-prime
/// test; anything else is outside the supported input size.
inline Factorization factor_integer(const BigInt& n, std::int64_t bound = kTrialDivisionBound) {
    if (n == 0) throw invalid_argument("cannot factor zero");
    Factorization out;
    out.unit = n < 0 ? -1 : 1;
    BigInt m = abs_big(n);
    for (std::int64_t q = 2; q <= bound && BigInt(q) * q <= m; q += (q == 2 ? 1 : 2)) {
        if (m % q != 0) continue;
        int e = 0;
        while (m % q == 0) {
            m /= q;
            ++e;
        }
        out.prime_powers.emplace_back(BigInt(q), e);
    }
    if (m > 1) {
        if (m < BigInt(bound) * bound || is_prime(m)) {
            out.prime_powers.emplace_back(m, 1);
        } else if (auto r = exact_sqrt(m); r && is_prime(*r)) {
            out.prime_powers.emplace_back(*r, 2);
        } else {
            throw invalid_argument("integer too large for trial-division factorization: " + m.str());
        }
    }
    return out;
}

/// Signed squarefree kernel: n = s * m^2 with s squarefree (sign carried by s).
struct SquarefreeDecomposition {
    BigInt squarefree;
    BigInt cofactor;
};

inline SquarefreeDecomposition squarefree_part(const BigInt& n) {
    if (n == 0) return {0, 0};
    // Strip small primes exactly; the large remainder r is handled without
    // factoring: if r < bound^3 and r is not a square, r is squarefree.
    BigInt s = n < 0 ? -1 : 1;
    BigInt m = 1;
    BigInt rest = abs_big(n);
    constexpr std::int64_t bound = 100000;
    for (std::int64_t q = 2; q <= bound && BigInt(q) * q <= rest; q += (q == 2 ? 1 : 2)) {
        if (rest % q != 0) continue;
        int e = 0;
        while (rest % q == 0) {
            rest /= q;
            ++e;
        }
        if (e % 2) s *= q;
        BigInt qq = mp::pow(BigInt(q), e / 2);
        m *= qq;
    }
    if (rest > 1) {
        if (auto r = exact_sqrt(rest)) {
            m *= *r;
        } else if (rest < BigInt(bound) * bound * bound || is_prime(rest)) {
            s *= rest;
        } else {
            throw invalid_argument("integer too large for squarefree detection: " + rest.str());
        }
    }
    return {s, m};
}

inline bool is_squarefree(const BigInt& n) {
    if (n == 0) return false;
    auto d = squarefree_part(n);
    return d.cofactor == 1;
}

/// Positive divisors of n != 0, ascending.
inline std::vector<BigInt> divisors(const BigInt& n) {
    auto f = factor_integer(n);
    std::vector<BigInt> out{1};
    for (const auto& [q, e] : f.prime_powers) {
        std::size_t base = out.size();
        BigInt pw = 1;
        for (int i = 1; i <= e; ++i) {
            pw *= q;
            for (std::size_t j = 0; j < base; ++j) out.push_back(out[j] * pw);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

inline BigInt powmod(BigInt base, BigInt e, const BigInt& m) {
    return mp::powm(((base % m) + m) % m, e, m);
}

inline BigInt mod_floor(const BigInt& a, const BigInt& m) {
    BigInt r = a % m;
    if (r < 0) r += m;
    return r;
}

/// Parse a decimal integer; accepts an optional leading sign.
inline BigInt parse_bigint(const std::string& s) {
    if (s.empty()) throw invalid_argument("empty integer literal");
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) throw invalid_argument("bad integer literal: " + s);
    for (std::size_t j = i; j < s.size(); ++j)
        if (s[j] < '0' || s[j] > '9') throw invalid_argument("bad integer literal: " + s);
    BigInt v(s[0] == '+' ? s.substr(1) : s);
    return v;
}

/// Parse "p/q" or "p".
inline Rat parse_rat(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rat(parse_bigint(s));
    BigInt d = parse_bigint(s.substr(slash + 1));
    return make_rat(parse_bigint(s.substr(0, slash)), d);
}

inline std::string to_string(const Rat& r) {
    if (den(r) == 1) return num(r).str();
    return num(r).str() + "/" + den(r).str();
}

}  // namespace k3pts
