#include <gtest/gtest.h>

#include <map>
#include <random>
#include <set>

#include "k3pts/algebra/factor_mod_p.hpp"
#include "k3pts/algebra/quadratic_field.hpp"
#include "k3pts/algebra/symbols.hpp"

using namespace k3pts;

namespace {

// Sylvester-matrix determinant by fraction-free Gaussian elimination over Q.
BigInt sylvester_resultant(const IntPoly& f, const IntPoly& g) {
    const int m = f.degree(), n = g.degree();
    const int size = m + n;
    std::vector<std::vector<Rat>> a(static_cast<std::size_t>(size), std::vector<Rat>(static_cast<std::size_t>(size), 0));
    for (int r = 0; r < n; ++r)
        for (int i = 0; i <= m; ++i) a[r][r + i] = Rat(f[static_cast<std::size_t>(m - i)]);
    for (int r = 0; r < m; ++r)
        for (int i = 0; i <= n; ++i) a[n + r][r + i] = Rat(g[static_cast<std::size_t>(n - i)]);
    Rat det = 1;
    for (int c = 0; c < size; ++c) {
        int piv = -1;
        for (int r = c; r < size; ++r)
            if (a[r][c] != 0) {
                piv = r;
                break;
            }
        if (piv < 0) return 0;
        if (piv != c) {
            std::swap(a[piv], a[c]);
            det = -det;
        }
        det *= a[c][c];
        for (int r = c + 1; r < size; ++r) {
            Rat k = a[r][c] / a[c][c];
            for (int j = c; j < size; ++j) a[r][j] -= k * a[c][j];
        }
    }
    return num(det);
}

IntPoly random_poly(std::mt19937_64& rng, int deg, int bound) {
    std::uniform_int_distribution<int> d(-bound, bound);
    std::vector<BigInt> c;
    for (int i = 0; i < deg; ++i) c.emplace_back(d(rng));
    int lead = 0;
    while (lead == 0) lead = d(rng);
    c.emplace_back(lead);
    return IntPoly(std::move(c));
}

// Does z^2 = a x^2 + b y^2 have a primitive solution modulo p^k?
bool primitive_solution_mod(long a, long b, long p, int k) {
    long m = 1;
    for (int i = 0; i < k; ++i) m *= p;
    std::vector<char> sq_unit(static_cast<std::size_t>(m), 0), sq_any(static_cast<std::size_t>(m), 0);
    for (long z = 0; z < m; ++z) {
        long s = z * z % m;
        sq_any[static_cast<std::size_t>(s)] = 1;
        if (z % p) sq_unit[static_cast<std::size_t>(s)] = 1;
    }
    auto md = [m](long v) { return ((v % m) + m) % m; };
    for (long x = 0; x < m; ++x)
        for (long y = 0; y < m; ++y) {
            long r = md(md(a) * (x * x % m) + md(b) * (y * y % m));
            bool xy_primitive = (x % p) || (y % p);
            if (xy_primitive ? sq_any[static_cast<std::size_t>(r)] : sq_unit[static_cast<std::size_t>(r)]) return true;
        }
    return false;
}

}  // namespace

TEST(Integer, SquareTestsAndSquarefreeParts) {
    auto t = is_square_integer(144);
    EXPECT_TRUE(t.is_square);
    EXPECT_EQ(t.root, 12);
    EXPECT_FALSE(is_square_integer(148).is_square);
    auto z = is_square_integer(0);
    EXPECT_TRUE(z.is_square);
    EXPECT_EQ(z.root, 0);
    auto s = squarefree_part(148);
    EXPECT_EQ(s.squarefree, 37);
    EXPECT_EQ(s.cofactor, 2);
    auto neg = squarefree_part(-72);
    EXPECT_EQ(neg.squarefree, -2);
    EXPECT_EQ(neg.cofactor, 6);
    // large prime square times a small squarefree part
    BigInt big = BigInt("1000000007") * BigInt("1000000007") * 6;
    auto l = squarefree_part(big);
    EXPECT_EQ(l.squarefree, 6);
    EXPECT_EQ(l.cofactor, BigInt("1000000007"));
}

TEST(Integer, LogAbsMatchesForHugeValues) {
    BigInt n = mp::pow(BigInt(10), 5000);
    EXPECT_NEAR(log_abs(n), 5000 * std::log(10.0), 1e-6);
    EXPECT_NEAR(log_abs(BigInt(-12)), std::log(12.0), 1e-12);
}

TEST(Legendre, Examples) {
    EXPECT_EQ(legendre_symbol(2, 5), -1);
    EXPECT_EQ(legendre_symbol(1, 7), 1);
    EXPECT_EQ(legendre_symbol(1, 101), 1);
    EXPECT_EQ(legendre_symbol(10, 5), 0);
    EXPECT_THROW(legendre_symbol(3, 2), k3pts::invalid_argument);
    EXPECT_THROW(legendre_symbol(3, 9), k3pts::invalid_argument);
}

TEST(Legendre, EulerCriterionProperty) {
    std::mt19937_64 rng(7);
    auto primes = primes_in(3, 2000);
    std::uniform_int_distribution<std::size_t> pick(0, primes.size() - 1);
    std::uniform_int_distribution<long> val(-100000, 100000);
    for (int i = 0; i < 1000; ++i) {
        std::int64_t p = primes[pick(rng)];
        long a = val(rng);
        BigInt e = powmod(BigInt(a), BigInt((p - 1) / 2), BigInt(p));
        int expected = e == 0 ? 0 : (e == 1 ? 1 : -1);
        ASSERT_EQ(legendre_symbol(a, p), expected) << a << " mod " << p;
        long b = val(rng);
        ASSERT_EQ(legendre_symbol(BigInt(a) * b, p), legendre_symbol(a, p) * legendre_symbol(b, p));
    }
}

TEST(Hilbert, Examples) {
    for (std::int64_t p : {3, 5, 7, 11}) EXPECT_EQ(hilbert_symbol(1, 6, Place::finite(p)), 1);
    EXPECT_EQ(hilbert_symbol(1, -3, Place::finite(2)), 1);
    EXPECT_EQ(hilbert_symbol(-1, -1, Place::infinity()), -1);
    EXPECT_EQ(hilbert_symbol(-1, -1, Place::finite(2)), -1);
    // (2,5)_5: no primitive zero of z^2 - 2x^2 - 5y^2 modulo some 5^k, k <= 4.
    bool solvable_all = true;
    for (int k = 1; k <= 4; ++k) solvable_all = solvable_all && primitive_solution_mod(2, 5, 5, k);
    EXPECT_FALSE(solvable_all);
    EXPECT_EQ(hilbert_symbol(2, 5, Place::finite(5)), -1);
    EXPECT_THROW(hilbert_symbol(0, 5, Place::finite(5)), k3pts::invalid_argument);
}

TEST(Hilbert, RationalArgumentsUseSquareClasses) {
    EXPECT_EQ(hilbert_symbol(Rat(2, 9), Rat(5, 4), Place::finite(5)), hilbert_symbol(2, 5, Place::finite(5)));
    EXPECT_EQ(hilbert_symbol(Rat(1, 2), Rat(5), Place::finite(5)), hilbert_symbol(2, 5, Place::finite(5)));
}

TEST(Hilbert, AgreesWithBruteForceLocalSolvability) {
    // Squarefree entries only, so a primitive solution modulo p^3 (odd p) or
    // 2^6 decides solvability over Z_p.
    std::vector<long> vals;
    for (long v = -15; v <= 15; ++v)
        if (v != 0 && is_squarefree(v)) vals.push_back(v);
    for (long p : {3L, 5L, 7L}) {
        for (long a : vals)
            for (long b : vals) {
                if (std::abs(a) > 7 || std::abs(b) > 7) continue;
                bool brute = primitive_solution_mod(a, b, p, p == 7 ? 2 : 3);
                ASSERT_EQ(hilbert_symbol(a, b, Place::finite(p)) == 1, brute) << a << "," << b << " at " << p;
            }
    }
    for (long a : {-7L, -6L, -3L, -2L, -1L, 1L, 2L, 3L, 5L, 6L, 7L, 10L})
        for (long b : {-7L, -5L, -2L, -1L, 1L, 2L, 3L, 5L, 6L, 7L})
            ASSERT_EQ(hilbert_symbol(a, b, Place::finite(2)) == 1, primitive_solution_mod(a, b, 2, 6)) << a << "," << b;
}

TEST(Hilbert, SymmetryBimultiplicativityAndProductFormula) {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<long> val(-500, 500);
    auto nonzero = [&]() {
        long v = 0;
        while (v == 0) v = val(rng);
        return v;
    };
    for (int i = 0; i < 200; ++i) {
        Rat a(nonzero(), std::abs(nonzero())), b(nonzero(), std::abs(nonzero())), c(nonzero());
        int product = 1;
        for (const auto& v : relevant_places({a, b, c})) {
            int ab = hilbert_symbol(a, b, v);
            ASSERT_EQ(ab, hilbert_symbol(b, a, v));
            ASSERT_EQ(hilbert_symbol(a, b * c, v), ab * hilbert_symbol(a, c, v));
            product *= ab;
        }
        ASSERT_EQ(product, 1) << a << " " << b;
    }
}

TEST(Crt, Examples) {
    EXPECT_EQ(crt({{7, 49}, {1, 11}}), 56);
    EXPECT_EQ(crt({{0, 97}}), 0);
    EXPECT_EQ(crt({{5, 25}, {1, 11}}), 155);
    EXPECT_THROW(crt({{1, 6}, {1, 4}}), k3pts::invalid_argument);
    BigInt x = crt({{3, 7}, {4, 11}, {-1, 13}});
    EXPECT_EQ(x % 7, 3);
    EXPECT_EQ(x % 11, 4);
    EXPECT_EQ(x % 13, 12);
}

TEST(Resultant, Examples) {
    EXPECT_EQ(resultant(int_poly({-2, 1}), int_poly({-4, 0, 1})), 0);
    EXPECT_EQ(discriminant(int_poly({1, 0, 1})), -4);
    IntPoly sq = int_poly({-1, 1}) * int_poly({-1, 1});
    EXPECT_EQ(discriminant(sq * int_poly({3, 0, 1, 2, 1})), 0);
    EXPECT_THROW(resultant(IntPoly(), int_poly({1, 1})), k3pts::invalid_argument);
}

TEST(Resultant, MatchesSylvesterDeterminant) {
    std::mt19937_64 rng(3);
    for (int i = 0; i < 60; ++i) {
        IntPoly f = random_poly(rng, 1 + static_cast<int>(rng() % 6), 9);
        IntPoly g = random_poly(rng, 1 + static_cast<int>(rng() % 6), 9);
        ASSERT_EQ(resultant(f, g), sylvester_resultant(f, g)) << f << " " << g;
    }
    IntPoly sextic = int_poly({56, 0, 1, 0, 0, 0, 1});
    BigInt disc = discriminant(sextic);
    EXPECT_EQ(disc, -sylvester_resultant(sextic, sextic.derivative()));  // n(n-1)/2 = 15 is odd
}

TEST(Resultant, Multiplicativity) {
    std::mt19937_64 rng(5);
    for (int i = 0; i < 100; ++i) {
        IntPoly f = random_poly(rng, 1 + static_cast<int>(rng() % 4), 6);
        IntPoly g = random_poly(rng, 1 + static_cast<int>(rng() % 3), 6);
        IntPoly h = random_poly(rng, 1 + static_cast<int>(rng() % 3), 6);
        ASSERT_EQ(resultant(f, g * h), resultant(f, g) * resultant(f, h));
    }
}

TEST(QuadraticField, ConjugationNormTrace) {
    std::mt19937_64 rng(9);
    std::uniform_int_distribution<long> v(-50, 50);
    for (long d : {-7L, -1L, 2L, 5L, 33L}) {
        for (int i = 0; i < 50; ++i) {
            QuadFieldElem x = QuadFieldElem::checked(d, Rat(v(rng), 1 + std::abs(v(rng))), Rat(v(rng), 3));
            QuadFieldElem y = QuadFieldElem::checked(d, Rat(v(rng)), Rat(v(rng), 7));
            ASSERT_EQ(x.conj().conj(), x);
            QuadFieldElem n = x * x.conj();
            ASSERT_TRUE(n.is_rational());
            ASSERT_EQ(n.rational_part(), x.norm());
            ASSERT_EQ((x + x.conj()).rational_part(), x.trace());
            ASSERT_EQ((x * y).conj(), x.conj() * y.conj());
            if (x.norm() != 0) {
                ASSERT_EQ(x * x.inverse(), one_like(x));
            }
        }
    }
    EXPECT_THROW(QuadFieldElem::checked(4, 1, 1), k3pts::invalid_argument);
    EXPECT_THROW(QuadFieldElem::checked(1, 1, 1), k3pts::invalid_argument);
}

TEST(FiniteField, QuadraticExtensionUsesSmallestNonresidue) {
    EXPECT_EQ(smallest_nonresidue(11), 2);
    EXPECT_EQ(smallest_nonresidue(7), 3);
    const std::int64_t p = 11, n = smallest_nonresidue(p);
    // every nonzero element of F_121 has an inverse; the unit group is cyclic of order 120
    int squares = 0;
    for (int a = 0; a < p; ++a)
        for (int b = 0; b < p; ++b) {
            Fp2 z(Fp(a, p), Fp(b, p), n);
            if (z.is_zero()) continue;
            ASSERT_EQ(z * z.inverse(), one_like(z));
            if (z.chi() == 1) ++squares;
        }
    EXPECT_EQ(squares, 60);
}

TEST(CycleType, Examples) {
    auto t = factor_cycle_type(int_poly({-1, 0, 0, 0, 0, 0, 1}), 7);
    ASSERT_TRUE(t);
    EXPECT_EQ(*t, (std::vector<int>{1, 1, 1, 1, 1, 1}));
    auto q = factor_cycle_type(int_poly({1, 0, 1}), 3);
    ASSERT_TRUE(q);
    EXPECT_EQ(*q, (std::vector<int>{2}));
    EXPECT_FALSE(factor_cycle_type(int_poly({56, 0, 1, 0, 0, 0, 1}), 7));  // 7 | disc
}

TEST(CycleType, SexticModThirteenMatchesExhaustiveSearch) {
    const std::int64_t p = 13;
    IntPoly f = int_poly({56, 0, 1, 0, 0, 0, 1});
    // Oracle: strip off monic factors of degree 1, 2, 3 by trial division over
    // every candidate; what remains after that is irreducible.
    FpPoly g = reduce_mod_p(f, p);
    std::vector<int> degs;
    for (int d = 1; d <= 3; ++d) {
        std::int64_t count = 1;
        for (int i = 0; i < d; ++i) count *= p;
        for (std::int64_t code = 0; code < count; ++code) {
            std::vector<Fp> c;
            std::int64_t k = code;
            for (int i = 0; i < d; ++i) {
                c.emplace_back(k % p, p);
                k /= p;
            }
            c.emplace_back(1, p);
            FpPoly cand(std::move(c), Fp(0, p));
            while (g.degree() >= d && (g % cand).is_zero()) {
                g = g / cand;
                degs.push_back(d);
            }
        }
    }
    if (g.degree() > 0) degs.push_back(g.degree());
    std::sort(degs.begin(), degs.end());
    auto t = factor_cycle_type(f, p);
    ASSERT_TRUE(t);
    EXPECT_EQ(*t, degs);
    EXPECT_EQ(*t, (std::vector<int>{1, 1, 2, 2}));
}

TEST(CycleType, EqualDegreeSplittingReassembles) {
    std::mt19937_64 rng(21);
    for (std::int64_t p : {5, 13, 31, 101}) {
        for (int i = 0; i < 10; ++i) {
            IntPoly f = random_poly(rng, 6, 30);
            if (f.lead() % p == 0 || discriminant(f) % p == 0) continue;
            auto fs = factor_squarefree_mod_p(f, p);
            FpPoly prod = FpPoly::constant(Fp(1, p));
            for (const auto& g : fs) prod *= g;
            ASSERT_EQ(prod, reduce_mod_p(f, p).monic());
            auto t = factor_cycle_type(f, p);
            std::vector<int> degs;
            for (const auto& g : fs) degs.push_back(g.degree());
            std::sort(degs.begin(), degs.end());
            ASSERT_EQ(*t, degs);
            // deterministic: same seed, same factors
            ASSERT_EQ(fs, factor_squarefree_mod_p(f, p));
        }
    }
}
