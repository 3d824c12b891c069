#pragma once

// Frobenius characteristic polynomials of genus-2 Jacobians at good primes
// and the simplicity certificates built on them.

#include <cmath>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "k3pts/curve.hpp"

namespace k3pts {

// ---------------------------------------------------------------------------
// Factorization over Z in degree <= 4: rational roots, then a search for a
// product of two quadratics over divisor pairs of the outer coefficients.

namespace detail {

inline BigInt content(const IntPoly& f) {
    BigInt g = 0;
    for (const auto& c : f.coeffs()) g = gcd_big(g, c);
    return g;
}

inline IntPoly make_primitive(const IntPoly& f) {
    if (f.is_zero()) return f;
    BigInt g = content(f);
    if (f.lead() < 0) g = -g;
    std::vector<BigInt> c = f.coeffs();
    for (auto& x : c) x /= g;
    return IntPoly(std::move(c));
}

/// Exact quotient over Z; throws when g does not divide f.
inline IntPoly exact_quotient(const IntPoly& f, const IntPoly& g) {
    auto [q, r] = divmod(to_rat(f), to_rat(g));
    if (!r.is_zero()) throw consistency_error("non-exact polynomial division over Z");
    std::vector<BigInt> c;
    for (const auto& x : q.coeffs()) {
        if (den(x) != 1) throw consistency_error("non-integral quotient over Z");
        c.push_back(num(x));
    }
    return IntPoly(std::move(c));
}

inline std::optional<IntPoly> find_linear_factor(const IntPoly& f) {
    if (f[0] == 0) return int_poly({0, 1});
    for (const auto& s : divisors(f.lead()))
        for (const auto& r : divisors(f[0]))
            for (int sgn : {1, -1}) {
                Rat root(BigInt(sgn) * r, s);
                if (to_rat(f)(root) == 0) return IntPoly(std::vector<BigInt>{-num(root), den(root)});
            }
    return std::nullopt;
}

/// (al x^2 + be x + ga)(de x^2 + ep x + ze) = f with al > 0. Given the outer
/// coefficients, be and ep follow from a 2x2 system, or from a quadratic in
/// be when that system is singular.
inline std::optional<std::pair<IntPoly, IntPoly>> find_quadratic_pair(const IntPoly& f) {
    const BigInt& a0 = f[0];
    const BigInt& a1 = f[1];
    const BigInt& a2 = f[2];
    const BigInt& a3 = f[3];
    const BigInt& a4 = f[4];
    auto try_pair = [&](const BigInt& al, const BigInt& be, const BigInt& ga, const BigInt& de, const BigInt& ep,
                        const BigInt& ze) -> std::optional<std::pair<IntPoly, IntPoly>> {
        IntPoly g(std::vector<BigInt>{ga, be, al}), h(std::vector<BigInt>{ze, ep, de});
        if (g * h == f) return std::make_pair(g, h);
        return std::nullopt;
    };
    for (const auto& al : divisors(a4)) {
        const BigInt de = a4 / al;
        for (const auto& g0 : divisors(a0)) {
            for (int sgn : {1, -1}) {
                const BigInt ga = BigInt(sgn) * g0;
                const BigInt ze = a0 / ga;
                // al*ep + be*de = a3 and be*ze + ga*ep = a1
                const BigInt det = de * ga - al * ze;
                if (det != 0) {
                    BigInt bn = a3 * ga - al * a1;
                    BigInt en = de * a1 - ze * a3;
                    if (bn % det != 0 || en % det != 0) continue;
                    if (auto r = try_pair(al, bn / det, ga, de, en / det, ze)) return r;
                    continue;
                }
                // de*be^2 - a3*be + al*(a2 - al*ze - ga*de) = 0
                const BigInt qc = al * (a2 - al * ze - ga * de);
                const BigInt disc = a3 * a3 - 4 * de * qc;
                auto sq = is_square_integer(disc);
                if (!sq.is_square) continue;
                for (const BigInt& num_be : {a3 + sq.root, a3 - sq.root}) {
                    if (num_be % (2 * de) != 0) continue;
                    BigInt be = num_be / (2 * de);
                    BigInt rest = a3 - be * de;
                    if (rest % al != 0) continue;
                    if (auto r = try_pair(al, be, ga, de, rest / al, ze)) return r;
                }
            }
        }
    }
    return std::nullopt;
}

}  // namespace detail

/// Irreducible primitive factors over Z (with repetition) of a nonzero
/// polynomial of degree 1..4, ascending by degree.
inline std::vector<IntPoly> factor_small_degree(const IntPoly& f) {
    if (f.degree() < 1 || f.degree() > 4) throw invalid_argument("factor_small_degree needs degree 1..4");
    IntPoly g = detail::make_primitive(f);
    std::vector<IntPoly> out;
    while (g.degree() >= 2) {
        auto lin = detail::find_linear_factor(g);
        if (!lin) break;
        out.push_back(detail::make_primitive(*lin));
        g = detail::make_primitive(detail::exact_quotient(g, *lin));
    }
    if (g.degree() == 4) {
        if (auto pr = detail::find_quadratic_pair(g)) {
            out.push_back(detail::make_primitive(pr->first));
            out.push_back(detail::make_primitive(pr->second));
            g = int_poly({1});
        }
    }
    if (g.degree() >= 1) out.push_back(g);
    std::stable_sort(out.begin(), out.end(), [](const IntPoly& x, const IntPoly& y) { return x.degree() < y.degree(); });
    return out;
}

inline bool is_irreducible_quartic(const IntPoly& P) {
    if (P.degree() != 4) throw invalid_argument("is_irreducible_quartic needs a degree-4 polynomial");
    return factor_small_degree(P).size() == 1;
}

/// R with R(X^2) = P(X) P(-X); its roots are the squares of the roots of P.
inline IntPoly square_root_transform(const IntPoly& P) {
    std::vector<BigInt> neg = P.coeffs();
    for (std::size_t i = 1; i < neg.size(); i += 2) neg[i] = -neg[i];
    IntPoly prod = P * IntPoly(std::move(neg));
    std::vector<BigInt> even;
    for (std::size_t i = 0; i < prod.coeffs().size(); i += 2) even.push_back(prod.coeffs()[i]);
    return IntPoly(std::move(even));
}

struct Phi2Info {
    int min_degree = 0;         // degree of the minimal polynomial of phi^2
    bool r_squarefree = false;  // false flags repeated roots among the alpha_i^2
    IntPoly r;                  // R(X) with R(X^2) = P(X) P(-X)
};

inline Phi2Info phi_squared_info(const IntPoly& P) {
    if (!is_irreducible_quartic(P)) throw invalid_argument("phi_squared_min_degree needs an irreducible quartic");
    Phi2Info info;
    info.r = square_root_transform(P);
    RatPoly r = to_rat(info.r);
    RatPoly g = poly_gcd(r, r.derivative());
    info.r_squarefree = g.degree() == 0;
    IntPoly sqfree = primitive_part(r / g);
    int best = 0;
    for (const auto& fac : factor_small_degree(sqfree))
        if (4 % fac.degree() == 0) best = std::max(best, fac.degree());
    info.min_degree = best;
    return info;
}

inline int phi_squared_min_degree(const IntPoly& P) { return phi_squared_info(P).min_degree; }

struct FrobeniusData {
    std::int64_t p = 0;
    BigInt t, s;
    IntPoly char_poly;  // X^4 - t X^3 + s X^2 - p t X + p^2, ascending coefficients
    bool irreducible = false;
    std::optional<int> phi2_min_degree;  // only defined when irreducible
    std::int64_t points_p = 0, points_p2 = 0;
    BigInt s_minus_variant;  // (N1^2 - N2)/2 + p - (p+1) N1, the sign-flipped s

    BigInt jacobian_order() const { return char_poly(BigInt(1)); }
};

inline IntPoly assemble_char_poly(std::int64_t p, const BigInt& t, const BigInt& s) {
    BigInt pp(p);
    return IntPoly(std::vector<BigInt>{pp * pp, -pp * t, s, -t, 1});
}

/// t = p + 1 - N1.
inline BigInt frobenius_trace(std::int64_t p, const BigInt& n1) { return BigInt(p + 1) - n1; }

/// s = (N1^2 + N2)/2 + p - (p+1) N1, from N2 = p^2 + 1 - (t^2 - 2s).
inline BigInt frobenius_s(std::int64_t p, const BigInt& n1, const BigInt& n2) {
    BigInt twice = n1 * n1 + n2;
    if (twice % 2 != 0) throw consistency_error("#C(F_p)^2 + #C(F_p^2) is odd at p = " + std::to_string(p));
    return twice / 2 + p - BigInt(p + 1) * n1;
}

/// The same expression with N2 subtracted. It is not the Frobenius coefficient.
inline BigInt frobenius_s_minus_variant(std::int64_t p, const BigInt& n1, const BigInt& n2) {
    BigInt twice = n1 * n1 - n2;
    if (twice % 2 != 0) throw consistency_error("#C(F_p)^2 - #C(F_p^2) is odd at p = " + std::to_string(p));
    return twice / 2 + p - BigInt(p + 1) * n1;
}

inline FrobeniusData char_poly(const CurveModel& curve, std::int64_t p) {
    curve.require_good(p);
    FrobeniusData d;
    d.p = p;
    d.points_p = count_points(curve, p);
    d.points_p2 = count_points_p2(curve, p);
    const BigInt n1 = d.points_p, n2 = d.points_p2;
    d.t = frobenius_trace(p, n1);
    d.s = frobenius_s(p, n1, n2);
    d.s_minus_variant = frobenius_s_minus_variant(p, n1, n2);
    const double t = d.t.convert_to<double>(), fp = static_cast<double>(p);
    if (t * t > 16.0 * fp) throw consistency_error("trace violates the Weil bound at p = " + std::to_string(p));
    if (abs_big(d.s).convert_to<double>() > 2.0 * fp + t * t / 2.0)
        throw consistency_error("s violates the Weil bound at p = " + std::to_string(p));
    d.char_poly = assemble_char_poly(p, d.t, d.s);
    d.irreducible = is_irreducible_quartic(d.char_poly);
    if (d.irreducible) d.phi2_min_degree = phi_squared_min_degree(d.char_poly);
    return d;
}

enum class Verdict { proven, inconclusive };
inline std::string to_string(Verdict v) { return v == Verdict::proven ? "proven" : "inconclusive"; }

struct PrimeObservation {
    std::int64_t p;
    bool good;
    bool irreducible = false;
    std::optional<int> phi2_min_degree;
};

struct SimplicityCertificate {
    Verdict simple_over_Q = Verdict::inconclusive;
    Verdict simple_over_all_quadratics = Verdict::inconclusive;
    std::optional<std::int64_t> witness_Q;
    std::optional<std::int64_t> witness_quadratic;
    std::vector<PrimeObservation> observations;

    /// The prime carrying the strongest proven claim.
    std::optional<std::int64_t> witness_prime() const { return witness_quadratic ? witness_quadratic : witness_Q; }
};

class no_witness : public domain_error {
   public:
    using domain_error::domain_error;
};

/// Scans the budget in ascending order. Only the proving direction exists:
/// a reducible characteristic polynomial leaves the verdict inconclusive.
inline SimplicityCertificate simplicity_certificate(const CurveModel& curve, std::vector<std::int64_t> budget) {
    std::sort(budget.begin(), budget.end());
    SimplicityCertificate cert;
    bool any_good = false;
    for (auto p : budget) {
        if (p < 3 || !is_prime(p) || !curve.good_reduction(p)) {
            cert.observations.push_back({p, false, false, std::nullopt});
            continue;
        }
        any_good = true;
        FrobeniusData d = char_poly(curve, p);
        cert.observations.push_back({p, true, d.irreducible, d.phi2_min_degree});
        if (d.irreducible && !cert.witness_Q) {
            cert.simple_over_Q = Verdict::proven;
            cert.witness_Q = p;
        }
        if (d.irreducible && d.phi2_min_degree == 4) {
            cert.simple_over_all_quadratics = Verdict::proven;
            cert.witness_quadratic = p;
            break;
        }
    }
    if (!any_good) throw no_witness("no prime of good reduction in the budget");
    return cert;
}

}  // namespace k3pts
