#pragma once

// JSON records for every module. Integers that do not fit in 64 bits are
// written as decimal strings; rationals are "n/d" strings unless integral.

#include <fstream>
#include <iomanip>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "k3pts/family.hpp"
#include "k3pts/frobenius.hpp"
#include "k3pts/jacobian.hpp"
#include "k3pts/parity.hpp"
#include "k3pts/picard.hpp"
#include "k3pts/search.hpp"

namespace k3pts::io {

using json = nlohmann::ordered_json;

inline json big(const BigInt& x) {
    static const BigInt lo(std::numeric_limits<std::int64_t>::min()), hi(std::numeric_limits<std::int64_t>::max());
    if (x >= lo && x <= hi) return x.convert_to<std::int64_t>();
    return x.str();
}

inline json rat(const Rat& r) {
    if (den(r) == 1) return big(num(r));
    return to_string(r);
}

inline BigInt parse_big_json(const json& j) {
    if (j.is_number_integer()) return BigInt(j.get<std::int64_t>());
    if (j.is_string()) return parse_bigint(j.get<std::string>());
    throw invalid_argument("expected an integer or a decimal string, got " + j.dump());
}

inline Rat parse_rat_json(const json& j) {
    if (j.is_number_integer()) return Rat(j.get<std::int64_t>());
    if (j.is_string()) return parse_rat(j.get<std::string>());
    throw invalid_argument("expected a rational as integer or \"n/d\", got " + j.dump());
}

inline json poly(const IntPoly& f) {
    json a = json::array();
    for (const auto& c : f.coeffs()) a.push_back(big(c));
    return a;
}

inline json poly(const RatPoly& f) {
    json a = json::array();
    for (const auto& c : f.coeffs()) a.push_back(rat(c));
    return a;
}

/// [a, b] for a + b sqrt(d).
inline json poly(const Poly<QuadFieldElem>& f) {
    json a = json::array();
    for (const auto& c : f.coeffs()) a.push_back({rat(c.rational_part()), rat(c.sqrt_part())});
    return a;
}

template <class F>
json divisor(const MumfordDivisor<F>& D) {
    return {{"u", poly(D.u)}, {"v", poly(D.v)}};
}

// ---------------------------------------------------------------------------
// Curves: {"kind": "odd-quintic", "f": [f0..f5]} or {"kind": "even-family", "f": {"a": .., "b": ..}}.

inline CurveModel curve_from_json(const json& j) {
    if (!j.is_object() || !j.contains("kind") || !j.contains("f")) throw invalid_argument("curve record needs kind and f");
    const std::string kind = j.at("kind").get<std::string>();
    const std::string label = j.value("label", std::string{});
    if (kind == "odd-quintic") {
        std::vector<BigInt> c;
        for (const auto& x : j.at("f")) c.push_back(parse_big_json(x));
        return CurveModel::odd_quintic(std::move(c), label);
    }
    if (kind == "even-family") {
        const auto& f = j.at("f");
        return CurveModel::even_family(parse_big_json(f.at("a")), parse_big_json(f.at("b")), label);
    }
    throw invalid_argument("unknown curve kind " + kind);
}

inline json curve_to_json(const CurveModel& c) {
    json j;
    j["kind"] = to_string(c.kind());
    if (c.kind() == CurveKind::odd_quintic) j["f"] = poly(c.f());
    else j["f"] = {{"a", big(c.a())}, {"b", big(c.b())}};
    j["label"] = c.label();
    return j;
}

inline json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw invalid_argument("cannot open " + path);
    try {
        return json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw invalid_argument(path + ": " + e.what());
    }
}

// ---------------------------------------------------------------------------
// frobenius

inline json to_json(const FrobeniusData& d) {
    json j;
    j["p"] = d.p;
    j["points_p"] = d.points_p;
    j["points_p2"] = d.points_p2;
    j["t"] = big(d.t);
    j["s"] = big(d.s);
    j["charpoly"] = poly(d.char_poly);
    j["irreducible"] = d.irreducible;
    j["phi2_min_degree"] = d.phi2_min_degree ? json(*d.phi2_min_degree) : json(nullptr);
    j["jacobian_order"] = big(d.jacobian_order());
    j["s_minus_variant"] = big(d.s_minus_variant);
    j["charpoly_minus_variant"] = poly(assemble_char_poly(d.p, d.t, d.s_minus_variant));
    return j;
}

inline json to_json(const SimplicityCertificate& c) {
    json obs = json::array();
    for (const auto& o : c.observations)
        obs.push_back({{"p", o.p},
                       {"good", o.good},
                       {"irreducible", o.irreducible},
                       {"phi2_min_degree", o.phi2_min_degree ? json(*o.phi2_min_degree) : json(nullptr)}});
    return {{"simple_over_Q", to_string(c.simple_over_Q)},
            {"simple_over_all_quadratics", to_string(c.simple_over_all_quadratics)},
            {"witness_Q", c.witness_Q ? json(*c.witness_Q) : json(nullptr)},
            {"witness_quadratic", c.witness_quadratic ? json(*c.witness_quadratic) : json(nullptr)},
            {"observations", obs}};
}

// ---------------------------------------------------------------------------
// kummer and search

inline json to_json(const ProjPoint3& p) {
    json a = json::array();
    for (const auto& x : p.coords()) a.push_back(big(x));
    return a;
}

inline json to_json(const Monomial& m) {
    return {{"label", m.label}, {"coefficient", big(m.coef)}, {"exponents", m.exp}};
}

inline json to_json(const CountTable& t) {
    json rows = json::array();
    for (const auto& r : t.rows) rows.push_back({{"B", r.B}, {"count", r.n}});
    return rows;
}

inline json to_json(const GrowthFit& f, GrowthModel m) {
    return {{"model", m == GrowthModel::exponential ? "exp" : "pow"},
            {"parameter", f.parameter},
            {"intercept", f.intercept},
            {"r_squared", f.r_squared},
            {"rows_used", f.rows_used}};
}

inline std::string table_csv(const CountTable& t) {
    std::ostringstream os;
    os << "B,n\n" << std::fixed << std::setprecision(6);
    for (const auto& r : t.rows) os << r.B << "," << r.n << "\n";
    return os.str();
}

/// Reads the B,n format written by table_csv.
inline CountTable table_from_csv(std::istream& in) {
    CountTable t;
    std::string line;
    if (!std::getline(in, line) || line.rfind("B,n", 0) != 0) throw invalid_argument("count table must start with the header B,n");
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        auto comma = line.find(',');
        if (comma == std::string::npos) throw invalid_argument("malformed count row: " + line);
        try {
            t.rows.push_back({std::stod(line.substr(0, comma)), std::stoll(line.substr(comma + 1))});
        } catch (const std::exception&) {
            throw invalid_argument("malformed count row: " + line);
        }
    }
    return t;
}

/// Parses "k1^2*k4 - 3*k2" style forms, or the names "special-conic" and
/// "special-curve" for the two special forms.
inline Form parse_form(const std::string& text, const KummerQuartic& K) {
    if (text == "special-conic") return special_curve_forms(K)[0];
    if (text == "special-curve") return special_curve_forms(K)[1];
    Form out;
    std::string s;
    for (char c : text)
        if (c != ' ') s += c;
    std::size_t i = 0;
    while (i < s.size()) {
        int sgn = 1;
        if (s[i] == '+' || s[i] == '-') sgn = s[i++] == '-' ? -1 : 1;
        std::size_t j = i;
        while (j < s.size() && s[j] != '+' && s[j] != '-') ++j;
        std::string term = s.substr(i, j - i);
        if (term.empty()) throw invalid_argument("empty term in form " + text);
        BigInt coef = 1;
        std::array<int, 4> e{0, 0, 0, 0};
        std::stringstream ts(term);
        std::string factor;
        bool any_var = false;
        while (std::getline(ts, factor, '*')) {
            if (factor.empty()) throw invalid_argument("bad factor in form " + text);
            if (factor[0] == 'k') {
                if (factor.size() < 2 || factor[1] < '1' || factor[1] > '4')
                    throw invalid_argument("unknown variable " + factor);
                int v = factor[1] - '1';
                int pw = 1;
                if (factor.size() > 2) {
                    if (factor[2] != '^') throw invalid_argument("bad power in " + factor);
                    pw = std::stoi(factor.substr(3));
                }
                e[v] += pw;
                any_var = true;
            } else {
                coef *= parse_bigint(factor);
            }
        }
        if (!any_var) throw invalid_argument("constant term in homogeneous form " + text);
        out.push_back({coef * sgn, e, term});
        i = j;
    }
    form_degree(out);
    return out;
}

// ---------------------------------------------------------------------------
// jacobian

inline json to_json(const HeightEstimate& h) {
    return {{"value", h.value},
            {"error", h.error},
            {"depth_used", h.depth_used},
            {"truncated", h.truncated},
            {"iterates", h.iterates}};
}

inline json to_json(const AntisymmetricPoint& a) {
    json j{{"x0", rat(a.x0)}, {"d", big(a.d)}, {"weierstrass", a.weierstrass}};
    if (a.q_field) {
        j["p"] = divisor(*a.p_field);
        j["q"] = divisor(*a.q_field);
    } else if (a.q_rational) {
        if (a.p_rational) j["p"] = divisor(*a.p_rational);
        j["q"] = divisor(*a.q_rational);
    }
    return j;
}

inline json to_json(const LemmaQReport& r) {
    return {{"x0", rat(r.x0)},
            {"d", big(r.d)},
            {"degenerate", r.degenerate},
            {"sigma_antisymmetry", r.sigma_antisymmetry},
            {"divisor_valid", r.divisor_valid},
            {"height_p", to_json(r.height_p)},
            {"height_q", to_json(r.height_q)},
            {"height_bound_ok", r.height_bound_ok},
            {"nontorsion", r.nontorsion},
            {"nontorsion_method", r.nontorsion_method},
            {"torsion_bound", r.torsion_bound ? big(*r.torsion_bound) : json(nullptr)},
            {"split_primes", r.split_primes}};
}

// ---------------------------------------------------------------------------
// parity

inline PlaceDescriptor place_from_json(const json& j) {
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "real") return PlaceDescriptor::real();
    if (kind == "complex") return PlaceDescriptor::complex();
    if (kind != "finite") throw invalid_argument("unknown place kind " + kind);
    const std::string red = j.at("reduction").get<std::string>();
    Reduction r;
    if (red == "good") r = Reduction::good;
    else if (red == "split-semistable") r = Reduction::split_semistable;
    else if (red == "other") r = Reduction::other;
    else throw invalid_argument("unknown reduction type " + red);
    std::optional<int> t;
    if (j.contains("toric_rank")) t = j.at("toric_rank").get<int>();
    return PlaceDescriptor::finite(j.at("residue_prime").get<std::int64_t>(), r, t);
}

inline json to_json(const PlaceDescriptor& v) {
    json j{{"kind", to_string(v.kind)}};
    if (v.kind == PlaceKind::finite) {
        j["residue_prime"] = v.residue_prime;
        j["reduction"] = to_string(*v.reduction);
        if (v.toric_rank) j["toric_rank"] = *v.toric_rank;
    }
    return j;
}

inline AbelianVarietyDescriptor descriptor_from_json(const json& j) {
    AbelianVarietyDescriptor A;
    A.dimension = j.at("dimension").get<int>();
    A.base_field_real_places = j.value("base_field_real_places", 0);
    for (const auto& v : j.value("places", json::array())) A.places.push_back(place_from_json(v));
    if (j.contains("rank_over_k") && !j.at("rank_over_k").is_null()) A.rank_over_k = j.at("rank_over_k").get<std::int64_t>();
    A.validate();
    return A;
}

inline json to_json(const AbelianVarietyDescriptor& A) {
    json places = json::array();
    for (const auto& v : A.places) places.push_back(to_json(v));
    return {{"dimension", A.dimension},
            {"base_field_real_places", A.base_field_real_places},
            {"places", places},
            {"rank_over_k", A.rank_over_k ? json(*A.rank_over_k) : json(nullptr)}};
}

inline json to_json(const TwistCandidate& c) {
    json checks = json::array();
    for (const auto& k : c.checks)
        checks.push_back({{"place", k.place.label()},
                          {"required", k.want_split ? "split" : "non-split"},
                          {"observed", to_string(k.observed)},
                          {"ok", k.ok()}});
    return {{"d", c.d}, {"checks", checks}};
}

inline json to_json(const RankJumpCertificate& c) {
    json places = json::array();
    for (const auto& p : c.places)
        places.push_back({{"place", p.place.label()}, {"local_sign", p.local_sign}, {"splitting", to_string(p.splitting)}});
    json j{{"d", c.d},
           {"w_ratio", c.w_ratio},
           {"conditional", c.conditional},
           {"conclusion", c.conclusion},
           {"conditions", to_string(c.conditions)},
           {"distinguished_place", c.distinguished.label()},
           {"sign_places", places}};
    if (c.rank_lower_bound) j["rank_lower_bound"] = *c.rank_lower_bound;
    return j;
}

// ---------------------------------------------------------------------------
// picard

inline json to_json(const TraceTable& t) {
    json rows = json::array();
    for (const auto& r : t.rows)
        rows.push_back({{"class", r.label},
                        {"representative", to_cycle_string(r.representative)},
                        {"size", r.size},
                        {"trace", r.trace},
                        {"subtotal", r.subtotal}});
    return {{"rows", rows}, {"order", t.total_size}, {"total", t.total}, {"notes", t.notes}};
}

inline json to_json(const IsotropyCertificate& c) {
    json local = json::array();
    for (const auto& L : c.local) {
        json l{{"place", L.place.label()}, {"isotropic", L.isotropic}, {"hasse_invariant", L.hasse}};
        if (!L.reason.empty()) l["reason"] = L.reason;
        local.push_back(l);
    }
    json zero = json::array();
    for (const auto& z : c.zero) zero.push_back(big(z));
    return {{"isotropic", c.isotropic},
            {"zero", c.isotropic ? zero : json(nullptr)},
            {"obstruction_place", c.obstruction ? json(c.obstruction->label()) : json(nullptr)},
            {"reason", c.reason},
            {"local", local}};
}

inline json to_json(const GaloisImageEstimate& e) {
    json obs = json::array();
    for (const auto& [t, n] : e.observed) obs.push_back({{"cycle_type", t}, {"count", n}});
    return {{"primes_used", e.primes_used.size()},
            {"primes_skipped", e.primes_skipped},
            {"observed", obs},
            {"consistent", e.consistent},
            {"exact_match", e.exact_match},
            {"s6_likely", e.s6_likely}};
}

// ---------------------------------------------------------------------------
// family

inline json to_json(const FamilyMember& m) { return {{"p_prime", m.p_prime}, {"a", big(m.a)}, {"b", big(m.b)}}; }

inline json to_json(const ValidationReport& r) {
    json checks = json::array();
    for (const auto& c : r.checks) checks.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
    return {{"member", to_json(r.member)},
            {"checks", checks},
            {"all_passed", r.all_passed()},
            {"toric_rank", r.toric_rank ? json(*r.toric_rank) : json(nullptr)}};
}

}  // namespace k3pts::io
