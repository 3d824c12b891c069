#pragma once

// Jacobian arithmetic on odd-degree genus-2 models (Mumford representation,
// Cantor composition and reduction), Galois conjugation over Q(sqrt d), and
// the antisymmetric classes [P - sigma(P)].

#include <cmath>
#include <cstdint>
#include <optional>
#include <string>
#include <type_traits>
#include <vector>

#include "k3pts/algebra/quadratic_field.hpp"
#include "k3pts/algebra/symbols.hpp"
#include "k3pts/curve.hpp"
#include "k3pts/frobenius.hpp"

namespace k3pts {

inline bool same_field(const Rat&, const Rat&) { return true; }
inline bool same_field(const Fp& a, const Fp& b) { return a.modulus() == b.modulus(); }
inline bool same_field(const QuadFieldElem& a, const QuadFieldElem& b) { return a.d() == b.d(); }

/// Reduced divisor class (u, v): u monic of degree <= 2, deg v < deg u,
/// u | v^2 - f. The identity is (1, 0).
template <class F>
struct MumfordDivisor {
    Poly<F> u;
    Poly<F> v;

    static MumfordDivisor identity(const F& any) {
        return {Poly<F>::constant(one_like(any)), Poly<F>({}, zero_like(any))};
    }
    /// [P - infinity] for an affine point P = (x, y).
    static MumfordDivisor from_point(const F& x, const F& y) {
        return {Poly<F>::linear_root(x), Poly<F>::constant(y) + Poly<F>({}, zero_like(x))};
    }
    bool is_identity() const { return u.degree() == 0; }
    int degree() const { return u.degree(); }
    friend bool operator==(const MumfordDivisor& a, const MumfordDivisor& b) { return a.u == b.u && a.v == b.v; }
    friend bool operator!=(const MumfordDivisor& a, const MumfordDivisor& b) { return !(a == b); }
};

/// The Jacobian of y^2 = f(x), deg f = 5, over the field of F.
template <class F>
class Jacobian {
   public:
    explicit Jacobian(Poly<F> f) : f_(std::move(f)) {
        if (f_.degree() != 5) throw invalid_argument("Cantor arithmetic needs a degree-5 model");
    }

    const Poly<F>& f() const { return f_; }
    MumfordDivisor<F> identity() const { return MumfordDivisor<F>::identity(f_.zero()); }

    bool is_valid(const MumfordDivisor<F>& d) const {
        if (!d.u.is_monic() || d.u.degree() > 2 || d.v.degree() >= d.u.degree()) return false;
        return ((d.v * d.v - f_) % d.u).is_zero();
    }

    MumfordDivisor<F> negate(const MumfordDivisor<F>& d) const { return {d.u, -d.v}; }

    MumfordDivisor<F> add(const MumfordDivisor<F>& a, const MumfordDivisor<F>& b) const {
        if (!same_field(a.u.zero(), b.u.zero()) || !same_field(a.u.zero(), f_.zero()))
            throw invalid_argument("divisors live over different fields");
        auto [d1, e1, e2] = poly_xgcd(a.u, b.u);
        auto [d, c1, c2] = poly_xgcd(d1, a.v + b.v);
        Poly<F> s1 = c1 * e1, s2 = c1 * e2, s3 = c2;
        Poly<F> u = (a.u * b.u) / (d * d);
        Poly<F> v = (s1 * a.u * b.v + s2 * b.u * a.v + s3 * (a.v * b.v + f_)) / d;
        v = v % u;
        return reduce(std::move(u), std::move(v));
    }

    MumfordDivisor<F> dbl(const MumfordDivisor<F>& a) const { return add(a, a); }

    MumfordDivisor<F> multiply(const MumfordDivisor<F>& a, BigInt n) const {
        if (n < 0) return multiply(negate(a), -n);
        MumfordDivisor<F> acc = identity(), base = a;
        while (n > 0) {
            if (mp::bit_test(n, 0)) acc = add(acc, base);
            n >>= 1;
            if (n > 0) base = dbl(base);
        }
        return acc;
    }

   private:
    MumfordDivisor<F> reduce(Poly<F> u, Poly<F> v) const {
        while (u.degree() > 2) {
            Poly<F> u2 = (f_ - v * v) / u;
            Poly<F> v2 = (-v) % u2;
            u = std::move(u2);
            v = std::move(v2);
        }
        u = u.monic();
        v = v % u;
        return {std::move(u), std::move(v)};
    }

    Poly<F> f_;
};

inline Rat embed_integer(const BigInt& x, const Rat&) { return Rat(x); }
inline Fp embed_integer(const BigInt& x, const Fp& proto) { return Fp::from_big(x, proto.modulus()); }
inline QuadFieldElem embed_integer(const BigInt& x, const QuadFieldElem& proto) { return {proto.d(), Rat(x), 0}; }

template <class F>
Poly<F> lift_poly(const IntPoly& f, const F& proto) {
    std::vector<F> c;
    for (const auto& x : f.coeffs()) c.push_back(embed_integer(x, proto));
    return Poly<F>(std::move(c), zero_like(proto));
}


inline void require_odd_quintic(const CurveModel& c) {
    if (c.kind() != CurveKind::odd_quintic) throw invalid_argument("operation needs an odd-quintic model");
}

inline Jacobian<Fp> jacobian_mod_p(const CurveModel& c, std::int64_t p) {
    require_odd_quintic(c);
    c.require_good(p);
    return Jacobian<Fp>(lift_poly(c.f(), Fp(0, p)));
}
inline Jacobian<Rat> jacobian_over_Q(const CurveModel& c) {
    require_odd_quintic(c);
    return Jacobian<Rat>(lift_poly(c.f(), Rat(0)));
}
inline Jacobian<QuadFieldElem> jacobian_over(const CurveModel& c, const BigInt& d) {
    require_odd_quintic(c);
    return Jacobian<QuadFieldElem>(lift_poly(c.f(), QuadFieldElem::checked(d, 0, 0)));
}

/// Coefficientwise sigma on a divisor over Q(sqrt d); the identity on Q.
inline MumfordDivisor<QuadFieldElem> galois_conjugate(const MumfordDivisor<QuadFieldElem>& d) {
    return {conjugate(d.u), conjugate(d.v)};
}
inline MumfordDivisor<Rat> galois_conjugate(const MumfordDivisor<Rat>& d) { return d; }

// ---------------------------------------------------------------------------
// Antisymmetric classes q = [P - sigma(P)] for P = (x0, sqrt f(x0)).

/// Over Q(sqrt d) the `_field` members are set; for d = 1 the `_rational` ones.
struct AntisymmetricPoint {
    Rat x0;
    BigInt d = 1;             // Q(sqrt d) is the field of definition of P
    bool weierstrass = false;  // f(x0) = 0: P = sigma(P), q trivial
    std::optional<MumfordDivisor<QuadFieldElem>> q_field, p_field;
    std::optional<MumfordDivisor<Rat>> q_rational, p_rational;
};

inline AntisymmetricPoint antisymmetric_point(const CurveModel& curve, const Rat& x0) {
    require_odd_quintic(curve);
    AntisymmetricPoint out;
    out.x0 = x0;
    RatPoly f = to_rat(curve.f());
    Rat fx = f(x0);
    if (fx == 0) {
        out.weierstrass = true;
        out.q_rational = MumfordDivisor<Rat>::identity(Rat(0));
        return out;
    }
    // f(x0) = r/s  =>  sqrt(f(x0)) = sqrt(r s)/s = (m/s) sqrt(d) with r s = d m^2.
    auto sf = squarefree_part(num(fx) * den(fx));
    out.d = sf.squarefree;
    Rat coeff(sf.cofactor, den(fx));
    Rat fpx = f.derivative()(x0);
    RatPoly u = RatPoly::linear_root(x0) * RatPoly::linear_root(x0);
    if (out.d == 1) {
        // y0 rational: sigma is trivial and q = [P - iota(P)] = 2[P - infinity].
        Rat y0 = coeff;
        RatPoly v(std::vector<Rat>{y0 - fpx / (2 * y0) * x0, fpx / (2 * y0)});
        out.q_rational = MumfordDivisor<Rat>{u, v};
        out.p_rational = MumfordDivisor<Rat>::from_point(x0, y0);
        return out;
    }
    QuadFieldElem y0(out.d, 0, coeff);  // (m/s) sqrt d
    QuadFieldElem slope = QuadFieldElem(out.d, fpx, 0) * (QuadFieldElem(out.d, 2, 0) * y0).inverse();
    QuadFieldElem x0q(out.d, x0, 0);
    std::vector<QuadFieldElem> uc;
    for (const auto& c : u.coeffs()) uc.emplace_back(out.d, c, 0);
    Poly<QuadFieldElem> uq(std::move(uc), QuadFieldElem(out.d, 0, 0));
    Poly<QuadFieldElem> vq(std::vector<QuadFieldElem>{y0 - slope * x0q, slope}, QuadFieldElem(out.d, 0, 0));
    out.q_field = MumfordDivisor<QuadFieldElem>{uq, vq};
    out.p_field = MumfordDivisor<QuadFieldElem>::from_point(x0q, y0);
    return out;
}

// ---------------------------------------------------------------------------
// Heights.

inline Rat rational_value(const Rat& x) { return x; }
inline Rat rational_value(const QuadFieldElem& x) {
    if (!x.is_rational()) throw domain_error("naive height needs a rational u-coordinate");
    return x.rational_part();
}

/// log max |c_i| of the Kummer image (1 : -u1 : u0), or (0 : 1 : -u0) when
/// deg u = 1, scaled to coprime integers. The identity has height 0.
template <class F>
double naive_height(const MumfordDivisor<F>& D) {
    if (D.is_identity()) return 0.0;
    std::vector<Rat> c;
    if (D.degree() == 2)
        c = {Rat(1), -rational_value(D.u[1]), rational_value(D.u[0])};
    else
        c = {Rat(0), Rat(1), -rational_value(D.u[0])};
    BigInt l = 1;
    for (const auto& x : c) l = lcm_big(l, den(x));
    BigInt g = 0;
    std::vector<BigInt> ints;
    for (const auto& x : c) {
        ints.push_back(num(x) * (l / den(x)));
        g = gcd_big(g, ints.back());
    }
    double best = 0.0;
    for (const auto& x : ints)
        if (x != 0) best = std::max(best, log_abs(x / g));
    return best;
}

struct HeightEstimate {
    double value = 0.0;
    double error = 0.0;
    int depth_used = 0;
    bool truncated = false;
    std::vector<double> iterates;  // h(2^n D) / 4^n for n = 1..depth_used
};

struct HeightOptions {
    int depth = 4;
    double digit_budget = 20000;  // decimal digits allowed in a coordinate before doubling
};

/// Limit of h(2^n D)/4^n with one Richardson step; the error is the gap
/// between the last two iterates, doubled when the digit budget cut the run.
template <class F>
HeightEstimate canonical_height(const Jacobian<F>& J, const MumfordDivisor<F>& D, const HeightOptions& opt = {}) {
    if (opt.depth < 2) throw invalid_argument("canonical_height needs depth >= 2");
    HeightEstimate est;
    MumfordDivisor<F> cur = D;
    double scale = 1.0;
    for (int n = 1; n <= opt.depth; ++n) {
        if (4.0 * naive_height(cur) / std::log(10.0) > opt.digit_budget) {
            est.truncated = true;
            break;
        }
        cur = J.dbl(cur);
        scale *= 4.0;
        est.iterates.push_back(naive_height(cur) / scale);
    }
    est.depth_used = static_cast<int>(est.iterates.size());
    if (est.depth_used == 0) {
        est.value = naive_height(D);
        est.error = std::max(1.0, est.value);
        return est;
    }
    if (est.depth_used == 1) {
        est.value = est.iterates[0];
        est.error = std::max(1.0, est.value);
        return est;
    }
    double last = est.iterates.back(), prev = est.iterates[est.iterates.size() - 2];
    est.value = std::max(0.0, last + (last - prev) / 3.0);
    est.error = std::abs(last - prev) * (est.truncated ? 2.0 : 1.0);
    return est;
}

/// gcd over the listed good primes of #J(F_p) = P_p(1).
inline BigInt torsion_bound(const CurveModel& curve, const std::vector<std::int64_t>& primes) {
    if (primes.empty()) throw invalid_argument("torsion_bound needs at least one prime");
    BigInt g = 0;
    for (auto p : primes) {
        curve.require_good(p);
        g = gcd_big(g, char_poly(curve, p).jacobian_order());
    }
    return g;
}

// ---------------------------------------------------------------------------
// Lemma report for q = [P - sigma(P)].

struct LemmaOptions {
    HeightOptions height;
    double tolerance = 0.05;
    double epsilon = 1e-3;
    std::vector<std::int64_t> primes = primes_in(3, 100);
};

struct LemmaQReport {
    Rat x0;
    BigInt d = 1;
    bool degenerate = false;
    bool sigma_antisymmetry = false;
    bool divisor_valid = false;
    HeightEstimate height_p, height_q;
    bool height_bound_ok = false;
    bool nontorsion = false;
    std::string nontorsion_method = "none";  // "height", "torsion_bound" or "none"
    std::optional<BigInt> torsion_bound;
    std::vector<std::int64_t> split_primes;
};

namespace detail {

template <class F>
void fill_lemma_report(LemmaQReport& r, const Jacobian<F>& J, const MumfordDivisor<F>& p, const MumfordDivisor<F>& q,
                       const CurveModel& curve, const LemmaOptions& opt) {
    r.divisor_valid = J.is_valid(q) && J.is_valid(p);
    if constexpr (std::is_same_v<F, Rat>) {
        // sigma is trivial over Q; the class is p - iota(p) = 2p instead.
        r.sigma_antisymmetry = q == J.dbl(p);
    } else {
        r.sigma_antisymmetry = galois_conjugate(q) == J.negate(q) && J.add(q, galois_conjugate(q)) == J.identity();
    }
    r.height_p = canonical_height(J, p, opt.height);
    r.height_q = canonical_height(J, q, opt.height);
    const double hp = r.height_p.value, hq = r.height_q.value;
    r.height_bound_ok = hq <= 4.0 * hp + opt.tolerance * std::max(1.0, hp);
    if (hq > opt.epsilon) {
        r.nontorsion = true;
        r.nontorsion_method = "height";
        return;
    }
    for (auto ell : opt.primes) {
        if (!curve.good_reduction(ell)) continue;
        if (r.d != 1 && legendre_symbol(r.d, ell) != 1) continue;
        r.split_primes.push_back(ell);
    }
    if (r.split_primes.empty()) return;
    r.torsion_bound = k3pts::torsion_bound(curve, r.split_primes);
    if (J.multiply(q, *r.torsion_bound) != J.identity()) {
        r.nontorsion = true;
        r.nontorsion_method = "torsion_bound";
    }
}

}  // namespace detail

inline LemmaQReport lemma_q_report(const CurveModel& curve, const Rat& x0, const LemmaOptions& opt = {}) {
    AntisymmetricPoint ap = antisymmetric_point(curve, x0);
    LemmaQReport r;
    r.x0 = x0;
    r.d = ap.d;
    if (ap.weierstrass) {
        r.degenerate = true;
        return r;
    }
    if (ap.q_rational)
        detail::fill_lemma_report(r, jacobian_over_Q(curve), *ap.p_rational, *ap.q_rational, curve, opt);
    else
        detail::fill_lemma_report(r, jacobian_over(curve, ap.d), *ap.p_field, *ap.q_field, curve, opt);
    return r;
}

}  // namespace k3pts
