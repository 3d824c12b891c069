#pragma once

// The quartic surface attached to y^2 = x^6 + a x^2 + b, its special points
// coming from classes [P - sigma(P)], projective heights, and the
// five-parameter symmetric quartic family.

#include <array>
#include <cmath>
#include <string>
#include <vector>

#include "k3pts/curve.hpp"

namespace k3pts {

/// Point of P^3 as coprime integers with first nonzero coordinate positive.
class ProjPoint3 {
   public:
    ProjPoint3(BigInt k1, BigInt k2, BigInt k3, BigInt k4) : k_{std::move(k1), std::move(k2), std::move(k3), std::move(k4)} {
        canonicalize();
    }
    explicit ProjPoint3(const std::array<BigInt, 4>& k) : k_(k) { canonicalize(); }

    /// Scales rational coordinates to the canonical integer representative.
    static ProjPoint3 from_rationals(const std::array<Rat, 4>& c) {
        BigInt l = 1;
        for (const auto& x : c) l = lcm_big(l, den(x));
        std::array<BigInt, 4> k;
        for (std::size_t i = 0; i < 4; ++i) k[i] = num(c[i]) * (l / den(c[i]));
        return ProjPoint3(k);
    }

    const BigInt& operator[](std::size_t i) const { return k_[i]; }
    const std::array<BigInt, 4>& coords() const { return k_; }

    friend bool operator==(const ProjPoint3& x, const ProjPoint3& y) { return x.k_ == y.k_; }
    friend bool operator!=(const ProjPoint3& x, const ProjPoint3& y) { return !(x == y); }
    friend bool operator<(const ProjPoint3& x, const ProjPoint3& y) { return x.k_ < y.k_; }

    std::string str() const {
        return "(" + k_[0].str() + ":" + k_[1].str() + ":" + k_[2].str() + ":" + k_[3].str() + ")";
    }

   private:
    void canonicalize() {
        BigInt g = 0;
        for (const auto& x : k_) g = gcd_big(g, x);
        if (g == 0) throw invalid_argument("(0:0:0:0) is not a point of P^3");
        for (const auto& x : k_)
            if (x != 0) {
                if (x < 0) g = -g;
                break;
            }
        if (g != 1)
            for (auto& x : k_) x /= g;
    }

    std::array<BigInt, 4> k_;
};

/// log max |k_i| of the canonical representative.
inline double naive_height_P3(const ProjPoint3& pt) {
    double h = 0.0;
    for (const auto& x : pt.coords())
        if (x != 0) h = std::max(h, log_abs(x));
    return h;
}

/// k^e for a homogeneous monomial.
struct Monomial {
    BigInt coef;
    std::array<int, 4> exp;
    std::string label;
};

/// Monomial x^e evaluated at integer coordinates.
template <class T>
T monomial_value(const std::array<int, 4>& e, const std::array<T, 4>& k) {
    T v = 1;
    for (std::size_t i = 0; i < 4; ++i)
        for (int j = 0; j < e[i]; ++j) v *= k[i];
    return v;
}

template <class T>
T eval_form(const std::vector<Monomial>& form, const std::array<T, 4>& k) {
    T acc = 0;
    for (const auto& m : form) acc += T(m.coef) * monomial_value(m.exp, k);
    return acc;
}

/// Coefficients of A k4^2 + B k4 + C for fixed (k1, k2, k3).
template <class T>
struct K4Quadratic {
    T A, B, C;
};

class KummerQuartic {
   public:
    KummerQuartic(BigInt a, BigInt b) : a_(std::move(a)), b_(std::move(b)) {
        // Rejects a vanishing discriminant of x^6 + a x^2 + b.
        CurveModel::even_family(a_, b_);
    }

    const BigInt& a() const { return a_; }
    const BigInt& b() const { return b_; }

    /// The quartic in the fixed order k2^2k4^2, k1k3k4^2, k1^3k4, k1^2k3k4,
    /// k3^3k4, k1^4, k1^2k3^2, k1k2^2k3, k2^4, k2^2k3^2.
    std::vector<Monomial> monomials() const {
        return {
            {1, {0, 2, 0, 2}, "k2^2*k4^2"},     {-4, {1, 0, 1, 2}, "k1*k3*k4^2"},
            {-4 * b_, {3, 0, 0, 1}, "k1^3*k4"}, {2 * a_, {2, 0, 1, 1}, "k1^2*k3*k4"},
            {2, {0, 0, 3, 1}, "k3^3*k4"},       {-4 * a_ * b_, {4, 0, 0, 0}, "k1^4"},
            {-4 * b_, {2, 0, 2, 0}, "k1^2*k3^2"}, {8 * b_, {1, 2, 1, 0}, "k1*k2^2*k3"},
            {-4 * b_, {0, 4, 0, 0}, "k2^4"},    {-4 * a_, {0, 2, 2, 0}, "k2^2*k3^2"},
        };
    }

    /// A, B, C with a, b of type T (BigInt or a machine integer).
    template <class T>
    static K4Quadratic<T> k4_coefficients(const T& a, const T& b, const T& k1, const T& k2, const T& k3) {
        const T k1s = k1 * k1, k2s = k2 * k2, k3s = k3 * k3;
        K4Quadratic<T> q;
        q.A = k2s - 4 * k1 * k3;
        q.B = -4 * k1s * k1 * b + 2 * k1s * k3 * a + 2 * k3s * k3;
        q.C = -4 * k1s * k1s * a * b - 4 * k1s * k3s * b + 8 * k1 * k2s * k3 * b - 4 * k2s * k2s * b - 4 * k2s * k3s * a;
        return q;
    }

    K4Quadratic<BigInt> k4_coefficients(const BigInt& k1, const BigInt& k2, const BigInt& k3) const {
        return k4_coefficients<BigInt>(a_, b_, k1, k2, k3);
    }

    BigInt eval(const std::array<BigInt, 4>& k) const {
        auto q = k4_coefficients(k[0], k[1], k[2]);
        return (q.A * k[3] + q.B) * k[3] + q.C;
    }

    /// Partial derivatives in k1..k4.
    std::array<BigInt, 4> gradient(const std::array<BigInt, 4>& k) const {
        const BigInt &k1 = k[0], &k2 = k[1], &k3 = k[2], &k4 = k[3];
        const BigInt &a = a_, &b = b_;
        std::array<BigInt, 4> g;
        g[0] = -4 * k3 * k4 * k4 - 12 * k1 * k1 * b * k4 + 4 * k1 * k3 * a * k4 - 16 * k1 * k1 * k1 * a * b -
               8 * k1 * k3 * k3 * b + 8 * k2 * k2 * k3 * b;
        g[1] = 2 * k2 * k4 * k4 + 16 * k1 * k2 * k3 * b - 16 * k2 * k2 * k2 * b - 8 * k2 * k3 * k3 * a;
        g[2] = -4 * k1 * k4 * k4 + 2 * k1 * k1 * a * k4 + 6 * k3 * k3 * k4 - 8 * k1 * k1 * k3 * b +
               8 * k1 * k2 * k2 * b - 8 * k2 * k2 * k3 * a;
        g[3] = 2 * (k2 * k2 - 4 * k1 * k3) * k4 - 4 * k1 * k1 * k1 * b + 2 * k1 * k1 * k3 * a + 2 * k3 * k3 * k3;
        return g;
    }

    /// Second partials, for the advisory node test.
    std::array<std::array<BigInt, 4>, 4> hessian(const std::array<BigInt, 4>& k) const {
        const BigInt &k1 = k[0], &k2 = k[1], &k3 = k[2], &k4 = k[3];
        const BigInt &a = a_, &b = b_;
        std::array<std::array<BigInt, 4>, 4> H;
        H[0][0] = -24 * k1 * b * k4 + 4 * k3 * a * k4 - 48 * k1 * k1 * a * b - 8 * k3 * k3 * b;
        H[0][1] = 16 * k2 * k3 * b;
        H[0][2] = -4 * k4 * k4 + 4 * k1 * a * k4 - 16 * k1 * k3 * b + 8 * k2 * k2 * b;
        H[0][3] = -8 * k3 * k4 - 12 * k1 * k1 * b + 4 * k1 * k3 * a;
        H[1][1] = 2 * k4 * k4 + 16 * k1 * k3 * b - 48 * k2 * k2 * b - 8 * k3 * k3 * a;
        H[1][2] = 16 * k1 * k2 * b - 16 * k2 * k3 * a;
        H[1][3] = 4 * k2 * k4;
        H[2][2] = 12 * k3 * k4 - 8 * k1 * k1 * b - 8 * k2 * k2 * a;
        H[2][3] = -8 * k1 * k4 + 2 * k1 * k1 * a + 6 * k3 * k3;
        H[3][3] = 2 * (k2 * k2 - 4 * k1 * k3);
        for (std::size_t i = 0; i < 4; ++i)
            for (std::size_t j = 0; j < i; ++j) H[i][j] = H[j][i];
        return H;
    }

   private:
    BigInt a_, b_;
};

inline BigInt quartic_eval(const KummerQuartic& K, const ProjPoint3& pt) { return K.eval(pt.coords()); }

inline bool is_singular_point(const KummerQuartic& K, const ProjPoint3& pt) {
    if (quartic_eval(K, pt) != 0) throw invalid_argument("point " + pt.str() + " is not on the surface");
    for (const auto& g : K.gradient(pt.coords()))
        if (g != 0) return false;
    return true;
}

/// Rank over Q of an integer matrix.
template <std::size_t N>
int matrix_rank(const std::array<std::array<BigInt, N>, N>& M) {
    std::vector<std::vector<Rat>> a(N, std::vector<Rat>(N));
    for (std::size_t i = 0; i < N; ++i)
        for (std::size_t j = 0; j < N; ++j) a[i][j] = Rat(M[i][j]);
    int rank = 0;
    for (std::size_t c = 0, r = 0; c < N && r < N; ++c) {
        std::size_t piv = r;
        while (piv < N && a[piv][c] == 0) ++piv;
        if (piv == N) continue;
        std::swap(a[piv], a[r]);
        for (std::size_t i = r + 1; i < N; ++i) {
            Rat f = a[i][c] / a[r][c];
            for (std::size_t j = c; j < N; ++j) a[i][j] -= f * a[r][j];
        }
        ++r;
        ++rank;
    }
    return rank;
}

/// Advisory only: at a singular point of a quartic surface, Hessian rank 3
/// means an ordinary node.
inline int hessian_rank(const KummerQuartic& K, const ProjPoint3& pt) { return matrix_rank(K.hessian(pt.coords())); }

/// L(x0) = 2 x0^6 + 2 a x0^2 - 4 b, the k4 coefficient on (1 : 2x0 : x0^2 : k4).
inline Rat special_linear_coefficient(const KummerQuartic& K, const Rat& x0) {
    Rat x2 = x0 * x0;
    return 2 * x2 * x2 * x2 + 2 * Rat(K.a()) * x2 - 4 * Rat(K.b());
}

/// Image of the class [P - sigma(P)] with x(P) = x0: the surface point
/// (1 : 2x0 : x0^2 : k4), where k2^2 - 4 k1 k3 = 0 makes k4 a linear solve.
inline ProjPoint3 special_point(const KummerQuartic& K, const Rat& x0) {
    Rat L = special_linear_coefficient(K, x0);
    if (L == 0) throw degenerate_input("x0 = " + to_string(x0) + " lies on the degenerate locus L(x0) = 0");
    Rat x2 = x0 * x0, x4 = x2 * x2;
    Rat a(K.a()), b(K.b());
    Rat C = -4 * a * b - 36 * b * x4 - 16 * a * x4 * x2;
    return ProjPoint3::from_rationals({Rat(1), 2 * x0, x2, -C / L});
}

// ---------------------------------------------------------------------------
// a(x^4+y^4+z^4+w^4) + b xyzw + c(x^2y^2+z^2w^2) + d(x^2w^2+y^2z^2) + e(x^2z^2+y^2w^2)

struct MumfordFamilyQuartic {
    Rat a, b, c, d, e;

    Rat eval(const std::array<Rat, 4>& p) const {
        const Rat &x = p[0], &y = p[1], &z = p[2], &w = p[3];
        Rat x2 = x * x, y2 = y * y, z2 = z * z, w2 = w * w;
        return a * (x2 * x2 + y2 * y2 + z2 * z2 + w2 * w2) + b * x * y * z * w + c * (x2 * y2 + z2 * w2) +
               d * (x2 * w2 + y2 * z2) + e * (x2 * z2 + y2 * w2);
    }

    std::array<Rat, 4> gradient(const std::array<Rat, 4>& p) const {
        const Rat &x = p[0], &y = p[1], &z = p[2], &w = p[3];
        Rat x2 = x * x, y2 = y * y, z2 = z * z, w2 = w * w;
        return {4 * a * x2 * x + b * y * z * w + 2 * x * (c * y2 + d * w2 + e * z2),
                4 * a * y2 * y + b * x * z * w + 2 * y * (c * x2 + d * z2 + e * w2),
                4 * a * z2 * z + b * x * y * w + 2 * z * (c * w2 + d * y2 + e * x2),
                4 * a * w2 * w + b * x * y * z + 2 * w * (c * z2 + d * x2 + e * y2)};
    }
};

inline std::array<Rat, 4> to_rat_coords(const ProjPoint3& pt) {
    return {Rat(pt[0]), Rat(pt[1]), Rat(pt[2]), Rat(pt[3])};
}

inline Rat mumford_family_eval(const MumfordFamilyQuartic& Q, const ProjPoint3& pt) { return Q.eval(to_rat_coords(pt)); }

inline bool mumford_family_singular(const MumfordFamilyQuartic& Q, const ProjPoint3& pt) {
    for (const auto& g : Q.gradient(to_rat_coords(pt)))
        if (g != 0) return false;
    return true;
}

}  // namespace k3pts
