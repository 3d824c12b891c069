#pragma once

// Local root-number signs, the two sufficient conditions for a sign change
// under quadratic base change, twist discriminant search and the
// conditional rank-jump certificate.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "k3pts/algebra/symbols.hpp"

namespace k3pts {

enum class PlaceKind { finite, real, complex };
enum class Reduction { good, split_semistable, other };

inline std::string to_string(PlaceKind k) {
    switch (k) {
        case PlaceKind::finite: return "finite";
        case PlaceKind::real: return "real";
        case PlaceKind::complex: return "complex";
    }
    return {};
}

inline std::string to_string(Reduction r) {
    switch (r) {
        case Reduction::good: return "good";
        case Reduction::split_semistable: return "split-semistable";
        case Reduction::other: return "other";
    }
    return {};
}

struct PlaceDescriptor {
    PlaceKind kind = PlaceKind::finite;
    std::int64_t residue_prime = 0;
    std::optional<Reduction> reduction;
    std::optional<int> toric_rank;

    static PlaceDescriptor finite(std::int64_t p, Reduction r, std::optional<int> t = std::nullopt) {
        PlaceDescriptor d{PlaceKind::finite, p, r, t};
        d.validate();
        return d;
    }
    static PlaceDescriptor real() { return {PlaceKind::real, 0, std::nullopt, std::nullopt}; }
    static PlaceDescriptor complex() { return {PlaceKind::complex, 0, std::nullopt, std::nullopt}; }

    std::string label() const {
        if (kind == PlaceKind::finite) return std::to_string(residue_prime);
        return kind == PlaceKind::real ? "inf" : "complex";
    }

    void validate() const {
        if (kind == PlaceKind::finite) {
            if (!is_prime(residue_prime)) throw invalid_argument("finite place needs a prime, got " + std::to_string(residue_prime));
            if (!reduction) throw invalid_argument("finite place " + label() + " has no reduction type");
            bool split = *reduction == Reduction::split_semistable;
            if (split != toric_rank.has_value())
                throw invalid_argument("toric rank must be given exactly for split-semistable places (place " + label() + ")");
            if (toric_rank && *toric_rank < 0) throw invalid_argument("negative toric rank at place " + label());
            return;
        }
        if (reduction || toric_rank) throw invalid_argument(label() + " place carries reduction data");
    }
};

struct AbelianVarietyDescriptor {
    int dimension = 1;
    int base_field_real_places = 0;
    std::vector<PlaceDescriptor> places;
    std::optional<std::int64_t> rank_over_k;

    void validate() const {
        if (dimension < 1) throw invalid_argument("abelian variety dimension must be positive");
        if (base_field_real_places < 0) throw invalid_argument("negative number of real places");
        if (rank_over_k && *rank_over_k < 0) throw invalid_argument("negative rank");
        for (const auto& v : places) v.validate();
    }
};

/// (-1)^t at a split-semistable place with toric rank t.
inline int local_root_sign_semistable(int t) {
    if (t < 0) throw invalid_argument("toric rank must be nonnegative");
    return t % 2 ? -1 : 1;
}

/// (-1)^dim at an archimedean place.
inline int local_root_sign_real(int dim) {
    if (dim < 1) throw invalid_argument("dimension must be positive");
    return dim % 2 ? -1 : 1;
}

enum class ConditionStatus { condition1, condition2, both, neither };

inline std::string to_string(ConditionStatus c) {
    switch (c) {
        case ConditionStatus::condition1: return "condition1";
        case ConditionStatus::condition2: return "condition2";
        case ConditionStatus::both: return "both";
        case ConditionStatus::neither: return "neither";
    }
    return {};
}

inline bool has_odd_toric_place(const AbelianVarietyDescriptor& A) {
    for (const auto& v : A.places)
        if (v.kind == PlaceKind::finite && v.reduction == Reduction::split_semistable && *v.toric_rank % 2 == 1) return true;
    return false;
}

inline ConditionStatus check_conditions(const AbelianVarietyDescriptor& A) {
    A.validate();
    const bool c1 = has_odd_toric_place(A);
    const bool c2 = A.dimension % 2 == 1 && A.base_field_real_places >= 1;
    if (c1 && c2) return ConditionStatus::both;
    if (c1) return ConditionStatus::condition1;
    if (c2) return ConditionStatus::condition2;
    return ConditionStatus::neither;
}

// ---------------------------------------------------------------------------
// Splitting of places of Q in Q(sqrt d).

enum class Splitting { split, inert, ramified };

inline std::string to_string(Splitting s) {
    switch (s) {
        case Splitting::split: return "split";
        case Splitting::inert: return "inert";
        case Splitting::ramified: return "ramified";
    }
    return {};
}

/// Behaviour of the place v in Q(sqrt d) for squarefree d != 1. At the real
/// place "inert" means d < 0.
inline Splitting splitting_type(std::int64_t d, const Place& v) {
    if (d == 0 || d == 1) throw invalid_argument("twist discriminant must be a squarefree integer other than 0 and 1");
    if (v.is_infinite()) return d > 0 ? Splitting::split : Splitting::inert;
    if (v.prime == 2) {
        const std::int64_t r = ((d % 8) + 8) % 8;
        if (r == 1) return Splitting::split;
        if (r == 5) return Splitting::inert;
        return Splitting::ramified;
    }
    const int chi = legendre_symbol(BigInt(d), v.prime);
    if (chi == 0) return Splitting::ramified;
    return chi == 1 ? Splitting::split : Splitting::inert;
}

struct TwistCheck {
    Place place;
    bool want_split;
    Splitting observed;
    bool ok() const { return want_split ? observed == Splitting::split : observed == Splitting::inert; }
};

struct TwistCandidate {
    std::int64_t d;
    std::vector<TwistCheck> checks;
};

namespace detail {
inline void require_disjoint(const std::vector<Place>& s1, const std::vector<Place>& s2) {
    for (const auto& v : s1)
        for (const auto& w : s2)
            if (v == w) throw invalid_argument("place " + v.label() + " is asked to both split and stay non-split");
}
}  // namespace detail

/// Recomputes every splitting condition for d.
inline TwistCandidate verify_twist(std::int64_t d, const std::vector<Place>& split, const std::vector<Place>& nonsplit) {
    if (!is_squarefree(BigInt(d))) throw invalid_argument("twist discriminant " + std::to_string(d) + " is not squarefree");
    TwistCandidate c{d, {}};
    for (const auto& v : split) c.checks.push_back({v, true, splitting_type(d, v)});
    for (const auto& v : nonsplit) c.checks.push_back({v, false, splitting_type(d, v)});
    return c;
}

/// The first `count` squarefree d != 1, ordered by |d| with d before -d,
/// that split every place of `split` and leave every place of `nonsplit`
/// inert. Ramified candidates are rejected at listed places.
inline std::vector<TwistCandidate> find_twists(const std::vector<Place>& split, const std::vector<Place>& nonsplit,
                                               std::size_t count, std::int64_t search_limit = 10000000) {
    detail::require_disjoint(split, nonsplit);
    for (const auto& v : split)
        if (!v.is_infinite() && !is_prime(v.prime)) throw invalid_argument("not a place of Q: " + v.label());
    for (const auto& v : nonsplit)
        if (!v.is_infinite() && !is_prime(v.prime)) throw invalid_argument("not a place of Q: " + v.label());
    std::vector<TwistCandidate> out;
    for (std::int64_t m = 1; out.size() < count; ++m) {
        if (m > search_limit) throw domain_error("twist search exhausted |d| <= " + std::to_string(search_limit));
        if (!is_squarefree(BigInt(m))) continue;
        for (std::int64_t d : {m, -m}) {
            if (d == 1 || out.size() == count) continue;
            TwistCandidate c = verify_twist(d, split, nonsplit);
            bool good = true;
            for (const auto& chk : c.checks) good = good && chk.ok();
            if (good) out.push_back(std::move(c));
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Rank-jump certificate. Only listed places and the real places of k = Q can
// change the global sign; everything else is taken to be sign-neutral.

struct SignPlace {
    Place place;
    int local_sign;
    Splitting splitting;
};

struct RankJumpCertificate {
    std::int64_t d;
    int w_ratio;
    std::string conditional = "Parity Conjecture";
    std::string conclusion = "rk A(k(sqrt d)) >= rk A(k) + 1";
    ConditionStatus conditions;
    Place distinguished;
    std::vector<SignPlace> places;
    std::optional<std::int64_t> rank_lower_bound;
};

/// Places with a local sign of -1 under the two printed formulas, with their
/// behaviour in Q(sqrt d).
inline std::vector<SignPlace> sign_contributing_places(const AbelianVarietyDescriptor& A, std::int64_t d) {
    std::vector<SignPlace> out;
    for (const auto& v : A.places) {
        if (v.kind != PlaceKind::finite || v.reduction != Reduction::split_semistable) continue;
        int w = local_root_sign_semistable(*v.toric_rank);
        if (w == -1) out.push_back({Place{v.residue_prime}, w, splitting_type(d, Place{v.residue_prime})});
    }
    if (A.base_field_real_places == 1 && local_root_sign_real(A.dimension) == -1)
        out.push_back({Place::infinity(), -1, splitting_type(d, Place::infinity())});
    return out;
}

/// w(A/l) / w(A/k) for l = k(sqrt d): a split place contributes w^2 = 1 over
/// l in place of w, an inert one keeps w.
inline RankJumpCertificate rank_jump_certificate(const AbelianVarietyDescriptor& A, std::int64_t d) {
    const ConditionStatus cond = check_conditions(A);
    if (cond == ConditionStatus::neither) throw invalid_argument("descriptor satisfies neither sign-change condition");
    if (A.base_field_real_places > 1) throw invalid_argument("twist bookkeeping is over Q: at most one real place");
    if (!is_squarefree(BigInt(d))) throw invalid_argument("twist discriminant " + std::to_string(d) + " is not squarefree");
    auto places = sign_contributing_places(A, d);
    int w_ratio = 1;
    std::vector<Place> split;
    for (const auto& sp : places) {
        if (sp.splitting == Splitting::ramified)
            throw invalid_argument("place " + sp.place.label() + " ramifies in Q(sqrt " + std::to_string(d) + ")");
        if (sp.splitting == Splitting::split) {
            w_ratio *= sp.local_sign;
            split.push_back(sp.place);
        }
    }
    if (split.empty()) throw invalid_argument("d = " + std::to_string(d) + " splits no sign-contributing place");
    if (split.size() > 1) {
        std::string list;
        for (const auto& v : split) list += (list.empty() ? "" : ", ") + v.label();
        throw invalid_argument("d = " + std::to_string(d) + " splits several sign-contributing places (" + list +
                               "), w_ratio = " + std::to_string(w_ratio) + "; place " + split[1].label() +
                               " must stay non-split");
    }
    if (w_ratio != -1) throw consistency_error("single split sign place did not flip the root number");
    RankJumpCertificate cert{d, w_ratio, "Parity Conjecture", "rk A(k(sqrt d)) >= rk A(k) + 1", cond, split[0],
                             std::move(places), std::nullopt};
    if (A.rank_over_k) cert.rank_lower_bound = *A.rank_over_k + 1;
    return cert;
}

}  // namespace k3pts
