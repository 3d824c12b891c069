#pragma once

// The sextic family y^2 = x^6 + a x^2 + b with a = 1 mod p', b = p' mod p'^2
// and a = b = 1 mod 11: generation by CRT, local checks at p' and 11, and
// the descriptor fed to the parity bookkeeping.

#include <algorithm>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "k3pts/curve.hpp"
#include "k3pts/parity.hpp"

namespace k3pts {

struct FamilyMember {
    std::int64_t p_prime = 0;
    BigInt a, b;

    CurveModel curve() const {
        return CurveModel::even_family(a, b, "family p'=" + std::to_string(p_prime) + " a=" + a.str() + " b=" + b.str());
    }
    friend bool operator==(const FamilyMember&, const FamilyMember&) = default;
};

inline void require_family_prime(std::int64_t p) {
    if (!is_prime(p)) throw invalid_argument("family prime must be prime, got " + std::to_string(p));
    if (66 % p == 0) throw invalid_argument("family prime must not divide 66, got " + std::to_string(p));
}

/// Residues: a = ra mod ma, b = rb mod mb.
struct FamilyCongruences {
    BigInt ra, ma, rb, mb;
};

inline FamilyCongruences family_congruences(std::int64_t p) {
    require_family_prime(p);
    BigInt P(p);
    return {crt({{1, P}, {1, 11}}), 11 * P, crt({{P, P * P}, {1, 11}}), 11 * P * P};
}

struct GenerationResult {
    std::vector<FamilyMember> members;
    bool complete = true;  // false when the bound stopped generation short of count
};

namespace detail {
/// Positive integers = r mod m up to bound, ascending.
inline std::vector<BigInt> residue_class_up_to(const BigInt& r, const BigInt& m, const BigInt& bound) {
    std::vector<BigInt> out;
    BigInt x = mod_floor(r, m);
    if (x == 0) x = m;
    for (; x <= bound; x += m) out.push_back(x);
    return out;
}
}  // namespace detail

/// Members with positive a, b ordered by max(a, b), then a; zero
/// discriminants are skipped.
inline GenerationResult generate(std::int64_t p_prime, std::size_t count, const BigInt& coefficient_bound) {
    const auto c = family_congruences(p_prime);
    if (coefficient_bound < 1) throw invalid_argument("coefficient bound must be positive");
    auto as = detail::residue_class_up_to(c.ra, c.ma, coefficient_bound);
    auto bs = detail::residue_class_up_to(c.rb, c.mb, coefficient_bound);
    struct Cand {
        BigInt a, b;
    };
    std::vector<Cand> cands;
    for (const auto& a : as)
        for (const auto& b : bs) cands.push_back({a, b});
    std::stable_sort(cands.begin(), cands.end(), [](const Cand& x, const Cand& y) {
        BigInt mx = std::max(x.a, x.b), my = std::max(y.a, y.b);
        if (mx != my) return mx < my;
        if (x.a != y.a) return x.a < y.a;
        return x.b < y.b;
    });
    GenerationResult res;
    for (const auto& cd : cands) {
        if (res.members.size() == count) break;
        IntPoly f(std::vector<BigInt>{cd.b, 0, cd.a, 0, 0, 0, 1});
        if (discriminant(f) == 0) continue;
        res.members.push_back({p_prime, cd.a, cd.b});
    }
    res.complete = res.members.size() == count;
    return res;
}

inline GenerationResult generate(std::int64_t p_prime, std::size_t count, std::int64_t coefficient_bound) {
    return generate(p_prime, count, BigInt(coefficient_bound));
}

struct NamedCheck {
    std::string name;
    bool passed;
    std::string detail;
};

struct ValidationReport {
    FamilyMember member;
    std::vector<NamedCheck> checks;
    std::optional<int> toric_rank;

    bool all_passed() const {
        return std::all_of(checks.begin(), checks.end(), [](const NamedCheck& c) { return c.passed; });
    }
    const NamedCheck* find(const std::string& name) const {
        for (const auto& c : checks)
            if (c.name == name) return &c;
        return nullptr;
    }
};

/// Runs every check; failures are reported, never thrown.
inline ValidationReport validate(const FamilyMember& m) {
    ValidationReport r{m, {}, std::nullopt};
    const std::int64_t p = m.p_prime;
    const bool prime_ok = is_prime(p) && 66 % p != 0;
    const BigInt P(p);
    IntPoly f(std::vector<BigInt>{m.b, 0, m.a, 0, 0, 0, 1});
    const BigInt disc = discriminant(f);

    bool cong = prime_ok && mod_floor(m.a, P) == 1 && mod_floor(m.b, P * P) == mod_floor(P, P * P) &&
                mod_floor(m.a, 11) == 1 && mod_floor(m.b, 11) == 1;
    r.checks.push_back({"congruences", cong,
                        prime_ok ? "a = 1 mod p', b = p' mod p'^2, a = b = 1 mod 11" : "p' must be a prime not dividing 66"});
    r.checks.push_back({"discriminant_nonzero", disc != 0, "disc = " + disc.str()});
    r.checks.push_back({"good_reduction_at_11", disc != 0 && disc % 11 != 0, "11 does not divide disc"});

    bool node = false;
    std::string node_detail = "p' is not an admissible prime";
    if (prime_ok) {
        // y^2 = x^2 (x^4 + a) mod p': singular points are (x0, 0) with x0 a repeated root
        FpPoly fb = reduce_mod_p(f, p);
        FpPoly g = poly_gcd(fb, fb.derivative());
        node = mod_floor(m.b, P) == 0 && g.degree() == 1 && g[0].value() == 0;
        node_detail = "gcd(f, f') mod p' has degree " + std::to_string(g.degree());
    }
    r.checks.push_back({"unique_node_at_origin", node, node_detail});

    bool split = prime_ok && legendre_symbol(m.a, p) == 1;
    r.checks.push_back({"split_tangent_directions", split, "a is a nonzero square mod p'"});

    bool regular = prime_ok && m.b != 0 && valuation(m.b, P).first == 1;
    r.checks.push_back({"regular_model", regular,
                        prime_ok && m.b != 0 ? "v_p'(b) = " + std::to_string(valuation(m.b, P).first) : "b = 0"});

    bool toric = node && split && regular;
    if (toric) r.toric_rank = 1;
    r.checks.push_back({"toric_rank_one", toric, "single split node with a loop as dual graph"});
    return r;
}

inline AbelianVarietyDescriptor family_descriptor(const FamilyMember& m) {
    auto report = validate(m);
    if (!report.all_passed()) {
        std::string failed;
        for (const auto& c : report.checks)
            if (!c.passed) failed += (failed.empty() ? "" : ", ") + c.name;
        throw invalid_argument("family member fails validation: " + failed);
    }
    AbelianVarietyDescriptor A;
    A.dimension = 2;
    A.base_field_real_places = 1;
    A.places = {PlaceDescriptor::finite(m.p_prime, Reduction::split_semistable, 1),
                PlaceDescriptor::finite(11, Reduction::good)};
    return A;
}

}  // namespace k3pts
