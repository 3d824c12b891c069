#include <gtest/gtest.h>

#include <cmath>

#include "k3pts/frobenius.hpp"

using namespace k3pts;

namespace {

// #C over F_p by pairing every x with every y.
std::int64_t brute_count_p(const std::vector<long>& f, long p, int at_infinity) {
    std::int64_t n = at_infinity;
    for (long x = 0; x < p; ++x) {
        long fx = 0, xp = 1;
        for (long c : f) {
            fx = ((fx + ((c % p) + p) % p * xp) % p);
            xp = xp * x % p;
        }
        for (long y = 0; y < p; ++y)
            if (y * y % p == fx) ++n;
    }
    return n;
}

// #C over F_p^2 = F_p[t]/(t^2 - n) with n the largest non-residue, pairing
// every x with every y.
std::int64_t brute_count_p2(const std::vector<long>& f, long p, int at_infinity) {
    long n = 0;
    for (long c = p - 1; c > 0; --c) {
        bool sq = false;
        for (long y = 0; y < p; ++y) sq |= (y * y % p == c);
        if (!sq) {
            n = c;
            break;
        }
    }
    using E = std::pair<long, long>;
    auto mul = [&](E a, E b) {
        return E{(a.first * b.first + a.second * b.second % p * n) % p, (a.first * b.second + a.second * b.first) % p};
    };
    std::int64_t total = at_infinity;
    for (long x0 = 0; x0 < p; ++x0)
        for (long x1 = 0; x1 < p; ++x1) {
            E x{x0, x1}, acc{0, 0}, xp{1, 0};
            for (long c : f) {
                long cc = ((c % p) + p) % p;
                acc = {(acc.first + cc * xp.first) % p, (acc.second + cc * xp.second) % p};
                xp = mul(xp, x);
            }
            for (long y0 = 0; y0 < p; ++y0)
                for (long y1 = 0; y1 < p; ++y1)
                    if (mul({y0, y1}, {y0, y1}) == acc) ++total;
        }
    return total;
}

const IntPoly kAnchor = int_poly({121, 44, -132, 4, 1});

}  // namespace

TEST(PointCount, FamilyAnchorAtEleven) {
    auto c = CurveModel::even_family(1, 1);
    EXPECT_EQ(count_points(c, 11), 16);
    EXPECT_EQ(count_points_p2(c, 11), 158);
    auto c2 = CurveModel::even_family(1, 56);
    EXPECT_EQ(count_points(c2, 11), 16);
    EXPECT_EQ(count_points_p2(c2, 11), 158);
}

TEST(PointCount, QuinticOverF3) {
    auto c = CurveModel::odd_quintic({1, 0, 0, 0, 0, 1});
    EXPECT_EQ(count_points(c, 3), brute_count_p({1, 0, 0, 0, 0, 1}, 3, 1));
    EXPECT_EQ(count_points(c, 3), 4);
}

TEST(PointCount, BadReductionCarriesPrime) {
    auto c = CurveModel::odd_quintic({1, 0, 0, 0, 0, 1});
    try {
        count_points(c, 5);
        FAIL();
    } catch (const bad_reduction& e) {
        EXPECT_EQ(e.prime(), 5);
    }
}

TEST(PointCount, MatchesBruteForceAndWeil) {
    std::vector<std::vector<long>> quintics = {{1, 0, 0, 0, 0, 1}, {1, 1, 0, 0, 0, 1}, {-3, 2, 0, 1, 0, 1}, {5, 1, 3, 0, 0, 1}};
    for (const auto& fq : quintics) {
        std::vector<BigInt> co(fq.begin(), fq.end());
        auto c = CurveModel::odd_quintic(co);
        for (auto p : primes_in(3, 30)) {
            if (!c.good_reduction(p)) continue;
            auto n1 = count_points(c, p);
            EXPECT_EQ(n1, brute_count_p(fq, p, 1));
            EXPECT_LE(std::abs(static_cast<double>(n1 - (p + 1))), 4 * std::sqrt(static_cast<double>(p)));
            if (p <= 13) {
                EXPECT_EQ(count_points_p2(c, p), brute_count_p2(fq, p, 1)) << p;
            }
        }
    }
    auto e = CurveModel::even_family(1, 56);
    std::vector<long> fe = {56, 0, 1, 0, 0, 0, 1};
    for (auto p : {11L, 13L}) EXPECT_EQ(count_points_p2(e, p), brute_count_p2(fe, p, 2)) << p;
}

TEST(CharPoly, ElevenFromCounts) {
    for (auto [a, b] : {std::pair{1, 1}, std::pair{1, 56}, std::pair{12, 155}}) {
        auto d = char_poly(CurveModel::even_family(a, b), 11);
        EXPECT_EQ(d.t, -4);
        EXPECT_EQ(d.s, 26);
        EXPECT_EQ(d.char_poly, int_poly({11, 2, 1}) * int_poly({11, 2, 1}));
        EXPECT_EQ(d.jacobian_order(), 196);
        EXPECT_FALSE(d.irreducible);
        EXPECT_EQ(d.s_minus_variant, -132);
    }
}

TEST(CharPoly, SignFlippedVariantGivesAnchorCoefficient) {
    EXPECT_EQ(frobenius_s_minus_variant(11, 16, 158), -132);
    EXPECT_EQ(frobenius_s(11, 16, 158), 26);
    EXPECT_EQ(assemble_char_poly(11, frobenius_trace(11, 16), frobenius_s_minus_variant(11, 16, 158)), kAnchor);
    EXPECT_THROW(frobenius_s(11, 16, 157), consistency_error);
}

TEST(CharPoly, EvenFamilyIsProductOfEllipticQuotients) {
    // y^2 = x^6 + a x^2 + b covers y^2 = u^3 + a u + b (u = x^2) and
    // y^2 = b w^3 + a w^2 + 1 (w = 1/x^2).
    for (auto [a, b] : {std::pair{1L, 56L}, std::pair{1L, 1L}, std::pair{3L, 7L}, std::pair{12L, 155L}}) {
        auto c = CurveModel::even_family(a, b);
        for (auto p : primes_in(3, 40)) {
            if (!c.good_reduction(p)) continue;
            auto trace = [&](const std::vector<long>& g) { return p + 1 - brute_count_p(g, p, 1); };
            long a1 = trace({b, a, 0, 1}), a2 = trace({1, 0, a, b});
            IntPoly expect = IntPoly(std::vector<BigInt>{p, -a1, 1}) * IntPoly(std::vector<BigInt>{p, -a2, 1});
            auto d = char_poly(c, p);
            EXPECT_EQ(d.char_poly, expect) << a << "," << b << " p=" << p;
            EXPECT_FALSE(d.irreducible);
        }
    }
}

TEST(CharPoly, FunctionalEquationShape) {
    auto c = CurveModel::odd_quintic({-3, 2, 0, 1, 0, 1});
    for (auto p : primes_in(3, 60)) {
        if (!c.good_reduction(p)) continue;
        auto d = char_poly(c, p);
        EXPECT_EQ(d.char_poly[4], 1);
        EXPECT_EQ(d.char_poly[0], BigInt(p) * p);
        EXPECT_EQ(d.char_poly[1], BigInt(p) * d.char_poly[3]);
        EXPECT_LE(abs_big(d.s).convert_to<double>(), 2.0 * p + d.t.convert_to<double>() * d.t.convert_to<double>() / 2);
    }
}

TEST(CharPoly, BadPrimeThrows) {
    auto c = CurveModel::even_family(1, 56);
    EXPECT_THROW(char_poly(c, 7), bad_reduction);
    EXPECT_THROW(char_poly(c, 2), invalid_argument);
}

TEST(Quartic, Irreducibility) {
    EXPECT_TRUE(is_irreducible_quartic(kAnchor));
    EXPECT_FALSE(is_irreducible_quartic(int_poly({1, 0, 2, 0, 1})));
    EXPECT_TRUE(is_irreducible_quartic(int_poly({-2, 0, 0, 0, 1})));
    EXPECT_FALSE(is_irreducible_quartic(int_poly({-4, 0, 0, 0, 1})));     // (x^2-2)(x^2+2)
    EXPECT_FALSE(is_irreducible_quartic(int_poly({4, 0, 0, 0, 1})));      // (x^2+2x+2)(x^2-2x+2)
    EXPECT_FALSE(is_irreducible_quartic(int_poly({2, -3, 3, -3, 1})));  // (x-1)(x-2)(x^2+1)
    EXPECT_THROW(is_irreducible_quartic(int_poly({1, 1, 1})), invalid_argument);
}

TEST(Quartic, FactorsMultiplyBack) {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> d(-6, 6);
    for (int trial = 0; trial < 200; ++trial) {
        IntPoly g = int_poly({d(rng), d(rng), 1 + std::abs(d(rng)) % 3});
        IntPoly h = int_poly({d(rng), d(rng), 1});
        if (g[0] == 0 && g[1] == 0) continue;
        IntPoly f = g * h;
        auto fs = factor_small_degree(f);
        EXPECT_GE(fs.size(), 2u);
        IntPoly prod = int_poly({1});
        for (const auto& x : fs) prod = prod * x;
        IntPoly prim = detail::make_primitive(f);
        EXPECT_TRUE(prod == prim || prod == -prim) << f;
    }
}

TEST(PhiSquared, Examples) {
    EXPECT_EQ(phi_squared_min_degree(kAnchor), 4);
    auto info = phi_squared_info(int_poly({1, 0, 0, 0, 1}));
    EXPECT_EQ(info.r, int_poly({1, 0, 2, 0, 1}));
    EXPECT_EQ(info.min_degree, 2);
    EXPECT_FALSE(info.r_squarefree);
    EXPECT_EQ(square_root_transform(kAnchor), int_poly({14641, -33880, 17314, -280, 1}));
    EXPECT_THROW(phi_squared_min_degree(int_poly({1, 0, 2, 0, 1})), invalid_argument);
}

TEST(PhiSquared, InvariantUnderReflection) {
    auto c = CurveModel::odd_quintic({-3, 2, 0, 1, 0, 1});
    for (auto p : primes_in(3, 80)) {
        if (!c.good_reduction(p)) continue;
        auto d = char_poly(c, p);
        if (!d.irreducible) continue;
        std::vector<BigInt> neg = d.char_poly.coeffs();
        for (std::size_t i = 1; i < neg.size(); i += 2) neg[i] = -neg[i];
        EXPECT_EQ(phi_squared_min_degree(IntPoly(neg)), *d.phi2_min_degree);
    }
}

TEST(Simplicity, FamilyCurveNeverProven) {
    auto c = CurveModel::even_family(1, 56);
    for (const auto& budget : {std::vector<std::int64_t>{11}, primes_in(3, 60)}) {
        auto cert = simplicity_certificate(c, budget);
        EXPECT_EQ(cert.simple_over_Q, Verdict::inconclusive);
        EXPECT_EQ(cert.simple_over_all_quadratics, Verdict::inconclusive);
        EXPECT_FALSE(cert.witness_prime());
    }
}

TEST(Simplicity, GenericQuinticProven) {
    auto cert = simplicity_certificate(CurveModel::odd_quintic({-3, 2, 0, 1, 0, 1}), primes_in(3, 60));
    EXPECT_EQ(cert.simple_over_Q, Verdict::proven);
    ASSERT_TRUE(cert.witness_Q);
    auto d = char_poly(CurveModel::odd_quintic({-3, 2, 0, 1, 0, 1}), *cert.witness_Q);
    EXPECT_TRUE(d.irreducible);
}

TEST(Simplicity, ReduciblePrimesStayInconclusive) {
    auto c = CurveModel::odd_quintic({0, -1, 0, 0, 0, 1});
    auto cert = simplicity_certificate(c, {13, 5, 7});
    EXPECT_EQ(cert.simple_over_Q, Verdict::inconclusive);
    EXPECT_EQ(cert.simple_over_all_quadratics, Verdict::inconclusive);
    EXPECT_FALSE(cert.witness_prime());
    ASSERT_EQ(cert.observations.size(), 3u);
    EXPECT_EQ(cert.observations.front().p, 5);
    for (const auto& o : cert.observations) EXPECT_FALSE(o.irreducible);
}

TEST(Simplicity, ExtraAutomorphismBlocksQuadraticCertificate) {
    // x -> -1/x, y -> y/x^3 has order 4 and is defined over Q(i)
    auto cert = simplicity_certificate(CurveModel::odd_quintic({0, -1, 0, 0, 0, 1}), primes_in(3, 60));
    EXPECT_EQ(cert.simple_over_Q, Verdict::proven);
    EXPECT_EQ(cert.witness_Q, 3);
    EXPECT_EQ(cert.simple_over_all_quadratics, Verdict::inconclusive);
    for (const auto& o : cert.observations)
        if (o.irreducible) {
            EXPECT_EQ(o.phi2_min_degree, 2);
        }
}

TEST(Simplicity, OnlyBadPrimes) {
    auto c = CurveModel::even_family(1, 56);
    EXPECT_THROW(simplicity_certificate(c, {2, 7}), no_witness);
}
