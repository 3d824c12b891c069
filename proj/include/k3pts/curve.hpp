#pragma once

// Genus-2 curve models y^2 = f(x) and point counts over F_p and F_p^2.

#include <cstdint>
#include <string>
#include <vector>

#include "k3pts/algebra/factor_mod_p.hpp"
#include "k3pts/algebra/finite_field.hpp"
#include "k3pts/algebra/poly.hpp"

namespace k3pts {

enum class CurveKind { odd_quintic, even_family };

inline std::string to_string(CurveKind k) { return k == CurveKind::odd_quintic ? "odd-quintic" : "even-family"; }

/// y^2 = f(x) over Q with integer f: either a monic quintic f0 + ... + x^5,
/// or the sextic family x^6 + a x^2 + b.
class CurveModel {
   public:
    static CurveModel odd_quintic(std::vector<BigInt> coeffs, std::string label = {}) {
        if (coeffs.size() != 6) throw invalid_argument("odd-quintic model needs six coefficients f0..f5");
        if (coeffs[5] != 1) throw invalid_argument("odd-quintic model must be monic of degree 5");
        return CurveModel(CurveKind::odd_quintic, IntPoly(std::move(coeffs)), 0, 0, std::move(label));
    }

    static CurveModel even_family(BigInt a, BigInt b, std::string label = {}) {
        IntPoly f(std::vector<BigInt>{b, 0, a, 0, 0, 0, 1});
        return CurveModel(CurveKind::even_family, std::move(f), std::move(a), std::move(b), std::move(label));
    }

    CurveKind kind() const { return kind_; }
    const IntPoly& f() const { return f_; }
    const BigInt& a() const { return a_; }
    const BigInt& b() const { return b_; }
    const std::string& label() const { return label_; }
    const BigInt& discriminant() const { return disc_; }

    /// Points at infinity on the smooth model: one for the odd quintic, two for
    /// a monic sextic over any field.
    int points_at_infinity() const { return kind_ == CurveKind::odd_quintic ? 1 : 2; }

    bool good_reduction(std::int64_t p) const { return p > 2 && is_prime(p) && disc_ % p != 0; }

    void require_good(std::int64_t p) const {
        require_odd_prime(p);
        if (!good_reduction(p)) throw bad_reduction(p);
    }

   private:
    CurveModel(CurveKind kind, IntPoly f, BigInt a, BigInt b, std::string label)
        : kind_(kind), f_(std::move(f)), a_(std::move(a)), b_(std::move(b)), label_(std::move(label)) {
        disc_ = k3pts::discriminant(f_);
        if (disc_ == 0) throw invalid_argument("curve polynomial has a repeated root");
    }

    CurveKind kind_;
    IntPoly f_;
    BigInt a_, b_;
    std::string label_;
    BigInt disc_;
};

/// #C(F_p) on the smooth projective model.
inline std::int64_t count_points(const CurveModel& c, std::int64_t p) {
    c.require_good(p);
    FpPoly f = reduce_mod_p(c.f(), p);
    std::int64_t total = c.points_at_infinity();
    for (std::int64_t x = 0; x < p; ++x) total += 1 + f(Fp(x, p)).chi();
    return total;
}

/// #C(F_{p^2}) on the smooth projective model.
inline std::int64_t count_points_p2(const CurveModel& c, std::int64_t p) {
    c.require_good(p);
    const std::int64_t n = smallest_nonresidue(p);
    std::vector<Fp2> coeffs;
    for (const auto& x : c.f().coeffs()) coeffs.push_back(Fp2::embed(Fp::from_big(x, p), n));
    Poly<Fp2> f(std::move(coeffs), Fp2::embed(Fp(0, p), n));
    std::int64_t total = c.points_at_infinity();
    for (std::int64_t u = 0; u < p; ++u)
        for (std::int64_t w = 0; w < p; ++w) total += 1 + f(Fp2(Fp(u, p), Fp(w, p), n)).chi();
    return total;
}

}  // namespace k3pts
