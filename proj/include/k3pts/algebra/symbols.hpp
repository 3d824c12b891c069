#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "k3pts/algebra/finite_field.hpp"
#include "k3pts/algebra/integer.hpp"

namespace k3pts {

/// (a / p) in {-1, 0, 1} for an odd prime p.
inline int legendre_symbol(const BigInt& a, std::int64_t p) {
    require_odd_prime(p);
    return Fp::from_big(a, p).chi();
}

/// A place of Q: a prime, or the real place (prime == 0).
struct Place {
    std::int64_t prime = 0;

    static Place infinity() { return {0}; }
    static Place finite(std::int64_t p) {
        if (!is_prime(p)) throw invalid_argument("not a prime: " + std::to_string(p));
        return {p};
    }
    bool is_infinite() const { return prime == 0; }
    std::string label() const { return is_infinite() ? "inf" : std::to_string(prime); }
    friend bool operator==(const Place&, const Place&) = default;
    friend auto operator<=>(const Place&, const Place&) = default;
};

namespace detail {
// A nonzero rational lies in the same square class as num * den.
inline BigInt square_class_rep(const Rat& r) { return num(r) * den(r); }

inline int hilbert_odd(const BigInt& a, const BigInt& b, std::int64_t p) {
    auto [alpha, u] = valuation(a, BigInt(p));
    auto [beta, v] = valuation(b, BigInt(p));
    int s = 1;
    if ((alpha % 2) && (beta % 2) && ((p - 1) / 2) % 2) s = -s;
    if (beta % 2) s *= legendre_symbol(u, p);
    if (alpha % 2) s *= legendre_symbol(v, p);
    return s;
}

// epsilon(u) = (u - 1)/2 mod 2, omega(u) = (u^2 - 1)/8 mod 2 on 2-adic units.
inline int hilbert_two(const BigInt& a, const BigInt& b) {
    auto [alpha, u] = valuation(a, BigInt(2));
    auto [beta, v] = valuation(b, BigInt(2));
    const int u8 = mod_floor(u, 8).convert_to<int>();
    const int v8 = mod_floor(v, 8).convert_to<int>();
    auto eps = [](int x) { return ((x - 1) / 2) % 2; };
    auto omega = [](int x) { return ((x * x - 1) / 8) % 2; };
    int e = eps(u8) * eps(v8) + alpha * omega(v8) + beta * omega(u8);
    return (e % 2) ? -1 : 1;
}
}  // namespace detail

/// Hilbert symbol (a, b)_v: +1 iff z^2 = a x^2 + b y^2 has a nontrivial
/// solution over Q_v.
inline int hilbert_symbol(const Rat& a, const Rat& b, const Place& v) {
    if (a == 0 || b == 0) throw invalid_argument("Hilbert symbol of zero");
    if (v.is_infinite()) return (a < 0 && b < 0) ? -1 : 1;
    BigInt ia = detail::square_class_rep(a), ib = detail::square_class_rep(b);
    if (v.prime == 2) return detail::hilbert_two(ia, ib);
    return detail::hilbert_odd(ia, ib, v.prime);
}

/// Places where (a, b)_v can differ from +1: infinity, 2, and primes dividing a*b.
inline std::vector<Place> relevant_places(const std::vector<Rat>& values) {
    std::set<std::int64_t> primes{2};
    for (const auto& r : values) {
        for (const BigInt& part : {num(r), den(r)}) {
            for (const auto& [q, e] : factor_integer(part).prime_powers) {
                (void)e;
                primes.insert(q.convert_to<std::int64_t>());
            }
        }
    }
    std::vector<Place> out{Place::infinity()};
    for (auto q : primes) out.push_back(Place{q});
    return out;
}

/// Smallest nonnegative x with x = r_i mod m_i for pairwise coprime m_i.
inline BigInt crt(const std::vector<std::pair<BigInt, BigInt>>& residues) {
    BigInt x = 0, m = 1;
    for (const auto& [r, mi] : residues) {
        if (mi <= 0) throw invalid_argument("CRT moduli must be positive");
        if (gcd_big(m, mi) != 1) throw invalid_argument("CRT moduli not pairwise coprime");
        // x + m*k = r mod mi
        BigInt a = mod_floor(m, mi), b = mi, s0 = 1, s1 = 0;
        while (b != 0) {
            BigInt q = a / b;
            a = std::exchange(b, a - q * b);
            s0 = std::exchange(s1, s0 - q * s1);
        }
        const BigInt minv = mod_floor(s0, mi);
        BigInt k = mod_floor((r - x) * minv, mi);
        x += m * k;
        m *= mi;
        x = mod_floor(x, m);
    }
    return x;
}

}  // namespace k3pts
