#pragma once

// Factorization of univariate polynomials over F_p: distinct-degree
// splitting followed by Cantor-Zassenhaus equal-degree splitting.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <vector>

#include "k3pts/algebra/finite_field.hpp"
#include "k3pts/algebra/poly.hpp"

namespace k3pts {

using FpPoly = Poly<Fp>;

inline FpPoly reduce_mod_p(const IntPoly& f, std::int64_t p) {
    std::vector<Fp> c;
    for (const auto& x : f.coeffs()) c.push_back(Fp::from_big(x, p));
    return FpPoly(std::move(c), Fp(0, p));
}

/// base^e mod m.
inline FpPoly powmod(FpPoly base, BigInt e, const FpPoly& m) {
    FpPoly acc = FpPoly::constant(one_like(m.zero())) % m;
    base = base % m;
    while (e > 0) {
        if (mp::bit_test(e, 0)) acc = (acc * base) % m;
        base = (base * base) % m;
        e >>= 1;
    }
    return acc;
}

struct DistinctDegreeFactor {
    int degree;
    FpPoly product;  // product of all irreducible factors of that degree
};

/// f must be monic and squarefree.
inline std::vector<DistinctDegreeFactor> distinct_degree_factorization(FpPoly f) {
    const std::int64_t p = f.zero().modulus();
    std::vector<DistinctDegreeFactor> out;
    FpPoly x = FpPoly::monomial(one_like(f.zero()), 1);
    FpPoly h = x % f;
    int d = 0;
    while (f.degree() >= 2 * (d + 1)) {
        ++d;
        h = powmod(h, BigInt(p), f);
        FpPoly g = poly_gcd(f, h - x);
        if (g.degree() > 0) {
            out.push_back({d, g});
            f = f / g;
            h = h % f;
        }
    }
    if (f.degree() > 0) out.push_back({f.degree(), f});
    return out;
}

/// Splits a product of distinct irreducibles of degree d into its factors.
inline std::vector<FpPoly> equal_degree_factorization(const FpPoly& f, int d, std::mt19937_64& rng) {
    if (f.degree() == d) return {f.monic()};
    const std::int64_t p = f.zero().modulus();
    std::uniform_int_distribution<std::int64_t> coeff(0, p - 1);
    BigInt e = (mp::pow(BigInt(p), static_cast<unsigned>(d)) - 1) / 2;
    while (true) {
        std::vector<Fp> c;
        for (int i = 0; i < f.degree(); ++i) c.emplace_back(coeff(rng), p);
        FpPoly a(std::move(c), f.zero());
        if (a.degree() < 1) continue;
        FpPoly g = poly_gcd(f, a);
        if (g.degree() > 0 && g.degree() < f.degree()) {
            auto left = equal_degree_factorization(g, d, rng);
            auto right = equal_degree_factorization(f / g, d, rng);
            left.insert(left.end(), right.begin(), right.end());
            return left;
        }
        FpPoly b = powmod(a, e, f) - FpPoly::constant(one_like(f.zero()));
        g = poly_gcd(f, b);
        if (g.degree() > 0 && g.degree() < f.degree()) {
            auto left = equal_degree_factorization(g, d, rng);
            auto right = equal_degree_factorization(f / g, d, rng);
            left.insert(left.end(), right.begin(), right.end());
            return left;
        }
    }
}

/// Seed derived from the input so repeated runs split identically.
inline std::uint64_t factor_seed(const IntPoly& f, std::int64_t p) {
    std::uint64_t h = 1469598103934665603ull ^ static_cast<std::uint64_t>(p);
    for (const auto& c : f.coeffs()) {
        for (char ch : c.str()) {
            h ^= static_cast<unsigned char>(ch);
            h *= 1099511628211ull;
        }
        h ^= 0x9e3779b97f4a7c15ull;
    }
    return h;
}

/// Monic irreducible factors of a squarefree f mod p, sorted by degree then
/// coefficients. Requires p not dividing lc(f) * disc(f).
inline std::vector<FpPoly> factor_squarefree_mod_p(const IntPoly& f, std::int64_t p) {
    FpPoly fp = reduce_mod_p(f, p);
    if (fp.degree() != f.degree()) throw invalid_argument("p divides the leading coefficient");
    std::mt19937_64 rng(factor_seed(f, p));
    std::vector<FpPoly> out;
    for (const auto& part : distinct_degree_factorization(fp.monic())) {
        auto fs = equal_degree_factorization(part.product, part.degree, rng);
        out.insert(out.end(), fs.begin(), fs.end());
    }
    std::sort(out.begin(), out.end(), [](const FpPoly& a, const FpPoly& b) {
        if (a.degree() != b.degree()) return a.degree() < b.degree();
        for (int i = a.degree(); i >= 0; --i) {
            auto x = a[static_cast<std::size_t>(i)].value(), y = b[static_cast<std::size_t>(i)].value();
            if (x != y) return x < y;
        }
        return false;
    });
    return out;
}

/// Degrees of the irreducible factors of f mod p (ascending), or nullopt
/// when p divides lc(f) * disc(f) and the cycle type is undefined.
inline std::optional<std::vector<int>> factor_cycle_type(const IntPoly& f, std::int64_t p) {
    require_odd_prime(p);
    if (f.degree() < 1) throw invalid_argument("cycle type of a constant polynomial");
    if (f.lead() % p == 0) return std::nullopt;
    if (discriminant(f) % p == 0) return std::nullopt;
    std::vector<int> degs;
    for (const auto& part : distinct_degree_factorization(reduce_mod_p(f, p).monic()))
        for (int k = 0; k < part.product.degree() / part.degree; ++k) degs.push_back(part.degree);
    std::sort(degs.begin(), degs.end());
    return degs;
}

}  // namespace k3pts
