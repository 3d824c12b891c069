#pragma once

// Permutation action on the 16 exceptional classes of a desingularised
// Kummer surface, invariant ranks, trace tables, the rank-4 Picard lattice
// over k and its isotropy, and a Frobenius cycle-type estimate of the
// Galois image in S6.

#include <algorithm>
#include <array>
#include <bitset>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <unordered_set>
#include <vector>

#include "k3pts/algebra/factor_mod_p.hpp"
#include "k3pts/algebra/symbols.hpp"

namespace k3pts {

// ---------------------------------------------------------------------------
// Permutations of {1..6}, stored zero-based.

using Perm = std::array<std::uint8_t, 6>;

inline Perm identity_perm() { return {0, 1, 2, 3, 4, 5}; }

/// (g * h)(i) = g(h(i)).
inline Perm compose(const Perm& g, const Perm& h) {
    Perm r{};
    for (int i = 0; i < 6; ++i) r[i] = g[h[i]];
    return r;
}

inline Perm inverse(const Perm& g) {
    Perm r{};
    for (int i = 0; i < 6; ++i) r[g[i]] = static_cast<std::uint8_t>(i);
    return r;
}

/// Index in 0..719 of a permutation in lexicographic order.
inline int perm_index(const Perm& g) {
    static const int fact[6] = {120, 24, 6, 2, 1, 1};
    int idx = 0;
    for (int i = 0; i < 6; ++i) {
        int smaller = 0;
        for (int j = i + 1; j < 6; ++j) smaller += g[j] < g[i];
        idx += smaller * fact[i];
    }
    return idx;
}

/// Parses one-based cycle notation such as "(12)(345)" or "(1 2)(3 4 5)".
inline Perm parse_cycles(const std::string& s) {
    Perm g = identity_perm();
    std::vector<int> cyc;
    bool open = false;
    std::array<bool, 6> seen{};
    auto close = [&] {
        for (std::size_t i = 0; i < cyc.size(); ++i) g[cyc[i]] = static_cast<std::uint8_t>(cyc[(i + 1) % cyc.size()]);
        cyc.clear();
    };
    for (char ch : s) {
        if (ch == '(') {
            if (open) throw invalid_argument("nested cycle in " + s);
            open = true;
        } else if (ch == ')') {
            if (!open) throw invalid_argument("unbalanced cycle in " + s);
            open = false;
            close();
        } else if (ch >= '1' && ch <= '6') {
            if (!open) throw invalid_argument("letter outside a cycle in " + s);
            int x = ch - '1';
            if (seen[x]) throw invalid_argument("repeated letter in " + s);
            seen[x] = true;
            cyc.push_back(x);
        } else if (ch != ' ' && ch != ',') {
            throw invalid_argument("unexpected character in permutation " + s);
        }
    }
    if (open) throw invalid_argument("unbalanced cycle in " + s);
    return g;
}

/// Cycle lengths >= 2, ascending.
inline std::vector<int> cycle_type(const Perm& g) {
    std::array<bool, 6> seen{};
    std::vector<int> out;
    for (int i = 0; i < 6; ++i) {
        if (seen[i]) continue;
        int len = 0;
        for (int j = i; !seen[j]; j = g[j]) {
            seen[j] = true;
            ++len;
        }
        if (len > 1) out.push_back(len);
    }
    std::sort(out.begin(), out.end());
    return out;
}

/// Full partition of 6, ascending, including fixed points.
inline std::vector<int> full_cycle_type(const Perm& g) {
    auto t = cycle_type(g);
    int moved = 0;
    for (int x : t) moved += x;
    std::vector<int> out(static_cast<std::size_t>(6 - moved), 1);
    out.insert(out.end(), t.begin(), t.end());
    return out;
}

/// "(12)(345)" style label of a cycle type, letters assigned consecutively.
inline std::string cycle_type_label(const std::vector<int>& type) {
    if (type.empty()) return "(1)";
    std::string s;
    int next = 1;
    for (int len : type) {
        s += '(';
        for (int k = 0; k < len; ++k) s += static_cast<char>('0' + next++);
        s += ')';
    }
    return s;
}

inline std::string to_cycle_string(const Perm& g) {
    std::array<bool, 6> seen{};
    std::string s;
    for (int i = 0; i < 6; ++i) {
        if (seen[i] || g[i] == i) continue;
        s += '(';
        for (int j = i; !seen[j]; j = g[j]) {
            seen[j] = true;
            s += static_cast<char>('1' + j);
        }
        s += ')';
    }
    return s.empty() ? "()" : s;
}

class PermGroup {
   public:
    /// Closure of the generators under composition.
    static PermGroup generate(const std::vector<Perm>& gens) {
        PermGroup G;
        G.gens_ = gens;
        std::vector<bool> in(720, false);
        std::vector<Perm> todo{identity_perm()};
        in[perm_index(identity_perm())] = true;
        G.elements_.push_back(identity_perm());
        while (!todo.empty()) {
            Perm x = todo.back();
            todo.pop_back();
            for (const auto& s : gens) {
                Perm y = compose(s, x);
                int k = perm_index(y);
                if (in[k]) continue;
                in[k] = true;
                G.elements_.push_back(y);
                todo.push_back(y);
            }
        }
        std::sort(G.elements_.begin(), G.elements_.end(),
                  [](const Perm& a, const Perm& b) { return perm_index(a) < perm_index(b); });
        return G;
    }

    static PermGroup trivial() { return generate({}); }

    /// Symmetric group on {1..n}, fixing n+1..6.
    static PermGroup symmetric(int n) {
        if (n < 1 || n > 6) throw invalid_argument("symmetric group degree must be 1..6");
        std::vector<Perm> gens;
        for (int i = 0; i + 1 < n; ++i) {
            Perm t = identity_perm();
            std::swap(t[i], t[i + 1]);
            gens.push_back(t);
        }
        return generate(gens);
    }

    const std::vector<Perm>& generators() const { return gens_; }
    const std::vector<Perm>& elements() const { return elements_; }
    std::size_t order() const { return elements_.size(); }

    bool contains(const Perm& g) const {
        return std::binary_search(elements_.begin(), elements_.end(), g,
                                  [](const Perm& a, const Perm& b) { return perm_index(a) < perm_index(b); });
    }

    std::vector<bool> membership() const {
        std::vector<bool> in(720, false);
        for (const auto& g : elements_) in[perm_index(g)] = true;
        return in;
    }

    /// Conjugacy classes under conjugation by G, each listed by its elements.
    std::vector<std::vector<Perm>> conjugacy_classes() const {
        std::vector<bool> done(720, false);
        std::vector<std::vector<Perm>> out;
        for (const auto& x : elements_) {
            if (done[perm_index(x)]) continue;
            std::vector<Perm> cls;
            for (const auto& g : elements_) {
                Perm y = compose(compose(g, x), inverse(g));
                int k = perm_index(y);
                if (done[k]) continue;
                done[k] = true;
                cls.push_back(y);
            }
            out.push_back(std::move(cls));
        }
        return out;
    }

    std::vector<int> orbit_sizes() const {
        std::array<int, 6> root{0, 1, 2, 3, 4, 5};
        auto find = [&](int x) {
            while (root[x] != x) x = root[x];
            return x;
        };
        for (const auto& g : elements_)
            for (int i = 0; i < 6; ++i) root[find(i)] = find(g[i]);
        std::map<int, int> cnt;
        for (int i = 0; i < 6; ++i) ++cnt[find(i)];
        std::vector<int> out;
        for (auto [r, c] : cnt) out.push_back(c);
        std::sort(out.begin(), out.end());
        return out;
    }

    bool is_transitive() const { return orbit_sizes().size() == 1; }

   private:
    std::vector<Perm> gens_;
    std::vector<Perm> elements_;
};

// ---------------------------------------------------------------------------
// The module E: e1 plus e_ij for 1 <= i < j <= 6.

inline constexpr int kPairLabels = 15;
inline constexpr int kModuleRank = 16;

inline int pair_index(int i, int j) {
    if (i > j) std::swap(i, j);
    // zero-based i < j
    return i * (11 - i) / 2 + (j - i - 1);
}

inline std::vector<std::string> module_labels() {
    std::vector<std::string> out{"e1"};
    for (int i = 0; i < 6; ++i)
        for (int j = i + 1; j < 6; ++j) out.push_back("e" + std::to_string(i + 1) + std::to_string(j + 1));
    return out;
}

/// Image of basis vector k (0 = e1, 1 + pair_index otherwise) under g.
inline int act_on_label(const Perm& g, int k) {
    if (k == 0) return 0;
    for (int i = 0; i < 6; ++i)
        for (int j = i + 1; j < 6; ++j)
            if (1 + pair_index(i, j) == k) return 1 + pair_index(g[i], g[j]);
    throw invalid_argument("module label out of range");
}

/// Fixed pair labels: the trace of g on E/(f1).
inline int pair_trace(const Perm& g) {
    int fixed = 0;
    for (int i = 0; i < 6; ++i)
        for (int j = i + 1; j < 6; ++j) {
            int a = g[i], b = g[j];
            if ((a == i && b == j) || (a == j && b == i)) ++fixed;
        }
    return fixed;
}

inline int module_trace(const Perm& g) { return 1 + pair_trace(g); }

/// Average of the trace on E over G.
inline int invariant_rank(const PermGroup& G) {
    std::int64_t sum = 0;
    for (const auto& g : G.elements()) sum += module_trace(g);
    if (sum % static_cast<std::int64_t>(G.order()) != 0)
        throw consistency_error("trace average over the group is not an integer");
    return static_cast<int>(sum / static_cast<std::int64_t>(G.order()));
}

namespace detail {
inline int rational_rank(std::vector<std::vector<Rat>> a) {
    if (a.empty()) return 0;
    const std::size_t rows = a.size(), cols = a[0].size();
    int rank = 0;
    for (std::size_t c = 0, r = 0; c < cols && r < rows; ++c) {
        std::size_t piv = r;
        while (piv < rows && a[piv][c] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(a[piv], a[r]);
        for (std::size_t i = r + 1; i < rows; ++i) {
            if (a[i][c] == 0) continue;
            Rat f = a[i][c] / a[r][c];
            for (std::size_t j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
        }
        ++r;
        ++rank;
    }
    return rank;
}
}  // namespace detail

/// Rank of {v in E : g v = v for every generator}, from the stacked
/// matrices g - 1. Independent of the trace formula.
inline int invariant_rank_by_kernel(const PermGroup& G) {
    std::vector<std::vector<Rat>> rows;
    for (const auto& g : G.generators()) {
        for (int k = 0; k < kModuleRank; ++k) {
            // row k of (P_g - I): P_g has a 1 at (g(k), k)
            std::vector<Rat> row(kModuleRank, Rat(0));
            for (int c = 0; c < kModuleRank; ++c)
                if (act_on_label(g, c) == k) row[c] += 1;
            row[k] -= 1;
            rows.push_back(std::move(row));
        }
    }
    return kModuleRank - detail::rational_rank(std::move(rows));
}

/// Orbit sums on the 16 labels: a Z-basis of the fixed sublattice.
inline std::vector<std::vector<int>> fixed_sublattice_basis(const PermGroup& G) {
    std::vector<int> orbit(kModuleRank, -1);
    std::vector<std::vector<int>> basis;
    for (int k = 0; k < kModuleRank; ++k) {
        if (orbit[k] >= 0) continue;
        std::vector<int> v(kModuleRank, 0);
        for (const auto& g : G.elements()) {
            int m = act_on_label(g, k);
            orbit[m] = static_cast<int>(basis.size());
            v[m] = 1;
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

struct TraceRow {
    std::string label;  // cycle type of the class
    Perm representative;
    std::size_t size;
    int trace;
    std::int64_t subtotal;
};

struct TraceTable {
    std::vector<TraceRow> rows;
    std::size_t total_size = 0;
    std::int64_t total = 0;
    std::vector<std::string> notes;

    const TraceRow* find(const std::string& label) const {
        for (const auto& r : rows)
            if (r.label == label) return &r;
        return nullptr;
    }
};

/// One row per conjugacy class, trace taken on the 15 pair labels E/(f1).
/// Rows are ordered by number of cycles, then by cycle lengths.
inline TraceTable trace_table(const PermGroup& G) {
    TraceTable t;
    for (const auto& cls : G.conjugacy_classes()) {
        const Perm& rep = *std::min_element(cls.begin(), cls.end(), [](const Perm& a, const Perm& b) {
            return perm_index(a) < perm_index(b);
        });
        int tr = pair_trace(rep);
        for (const auto& g : cls)
            if (pair_trace(g) != tr) throw consistency_error("trace is not a class function");
        t.rows.push_back({cycle_type_label(cycle_type(rep)), rep, cls.size(), tr,
                          static_cast<std::int64_t>(cls.size()) * tr});
    }
    std::stable_sort(t.rows.begin(), t.rows.end(), [](const TraceRow& a, const TraceRow& b) {
        auto ta = cycle_type(a.representative), tb = cycle_type(b.representative);
        if (ta.size() != tb.size()) return ta.size() < tb.size();
        return ta < tb;
    });
    for (const auto& r : t.rows) {
        t.total_size += r.size;
        t.total += r.subtotal;
    }
    if (t.total_size != G.order()) throw consistency_error("class sizes do not sum to the group order");
    return t;
}

/// Printed rows of the two reference tables: label, size, trace, subtotal.
struct PrintedTraceRow {
    const char* label;
    std::size_t size;
    int trace;
    std::int64_t subtotal;
};

inline const std::vector<PrintedTraceRow>& printed_s5_table() {
    static const std::vector<PrintedTraceRow> rows{{"(1)", 1, 15, 15},       {"(12)", 10, 7, 70},
                                                   {"(123)", 20, 3, 60},     {"(1234)", 30, 1, 30},
                                                   {"(12345)", 24, 0, 0},    {"(12)(34)", 15, 3, 45},
                                                   {"(12)(345)", 20, 1, 20}};
    return rows;
}

inline const std::vector<PrintedTraceRow>& printed_s6_table() {
    static const std::vector<PrintedTraceRow> rows{
        {"(1)", 1, 15, 15},          {"(12)", 15, 7, 105},      {"(123)", 40, 3, 120},     {"(1234)", 90, 1, 90},
        {"(12345)", 144, 0, 0},      {"(123456)", 120, 0, 0},   {"(12)(34)", 45, 3, 135},  {"(12)(345)", 120, 1, 120},
        {"(12)(3456)", 90, 1, 90},   {"(123)(456)", 40, 0, 20}, {"(12)(34)(56)", 15, 3, 45}};
    return rows;
}

/// Appends a note for every row whose computed values differ from the
/// printed reference.
inline void annotate_against(TraceTable& t, const std::vector<PrintedTraceRow>& printed, std::int64_t printed_total) {
    for (const auto& p : printed) {
        const TraceRow* r = t.find(p.label);
        if (!r) {
            t.notes.push_back(std::string("class ") + p.label + " missing from the computed table");
            continue;
        }
        if (r->size != p.size || r->trace != p.trace || r->subtotal != p.subtotal)
            t.notes.push_back(std::string("class ") + p.label + ": computed size " + std::to_string(r->size) +
                              ", trace " + std::to_string(r->trace) + ", subtotal " + std::to_string(r->subtotal) +
                              "; printed size " + std::to_string(p.size) + ", trace " + std::to_string(p.trace) +
                              ", subtotal " + std::to_string(p.subtotal));
    }
    std::int64_t printed_sum = 0;
    for (const auto& p : printed) printed_sum += p.subtotal;
    if (printed_sum != printed_total)
        t.notes.push_back("printed subtotals sum to " + std::to_string(printed_sum) + ", printed total is " +
                          std::to_string(printed_total) + ", computed total is " + std::to_string(t.total));
}

inline int picard_rank(const PermGroup& G, int ns_invariant_rank = 1) {
    if (ns_invariant_rank < 1) throw invalid_argument("Neron-Severi invariant rank must be positive");
    return invariant_rank(G) + ns_invariant_rank;
}

inline int geometric_picard_rank(int ns_rank) {
    if (ns_rank < 1 || ns_rank > 4) throw invalid_argument("abelian surface Neron-Severi rank must be 1..4");
    return ns_rank + 16;
}

// ---------------------------------------------------------------------------
// Isotropy of diagonal forms over Q.

struct LocalIsotropy {
    Place place;
    bool isotropic;
    int hasse;                   // prod_{i<j} (a_i, a_j)_v
    bool disc_square = false;    // quaternary forms only
    std::string reason;
};

struct IsotropyCertificate {
    bool isotropic = false;
    std::vector<BigInt> zero;           // set when isotropic
    std::optional<Place> obstruction;   // set when anisotropic
    std::string reason;
    std::vector<LocalIsotropy> local;
};

namespace detail {
inline bool is_local_square(const BigInt& d, const Place& v) {
    if (v.is_infinite()) return d > 0;
    auto [e, u] = valuation(d, BigInt(v.prime));
    if (e % 2) return false;
    if (v.prime == 2) return mod_floor(u, 8) == 1;
    return legendre_symbol(u, v.prime) == 1;
}

inline LocalIsotropy local_isotropy(const std::vector<BigInt>& a, const Place& v) {
    LocalIsotropy L{v, true, 1, false, {}};
    if (v.is_infinite()) {
        bool pos = false, neg = false;
        for (const auto& x : a) (x > 0 ? pos : neg) = true;
        L.isotropic = pos && neg;
        if (!L.isotropic) L.reason = "form is definite over R";
    }
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = i + 1; j < a.size(); ++j) L.hasse *= hilbert_symbol(Rat(a[i]), Rat(a[j]), v);
    if (v.is_infinite()) return L;
    BigInt d = 1;
    for (const auto& x : a) d *= x;
    if (a.size() == 3) {
        int want = hilbert_symbol(Rat(-1), Rat(-d), v);
        L.isotropic = L.hasse == want;
        if (!L.isotropic)
            L.reason = "ternary: Hasse invariant " + std::to_string(L.hasse) + " differs from (-1, -d)_" + v.label() +
                       " = " + std::to_string(want);
    } else {
        L.disc_square = is_local_square(d, v);
        int m = hilbert_symbol(Rat(-1), Rat(-1), v);
        L.isotropic = !L.disc_square || L.hasse == m;
        if (!L.isotropic)
            L.reason = "quaternary: discriminant is a square in Q_" + v.label() + " and Hasse invariant " +
                       std::to_string(L.hasse) + " differs from (-1, -1)_" + v.label() + " = " + std::to_string(m);
    }
    return L;
}

/// A primitive integer zero with |x_i| <= bound for the first n - 1
/// coordinates, solving for the last one.
inline std::optional<std::vector<BigInt>> search_zero(const std::vector<BigInt>& a, std::int64_t bound) {
    const std::size_t n = a.size();
    std::vector<std::int64_t> x(n - 1, -bound);
    const BigInt& last = a[n - 1];
    while (true) {
        bool nonzero = false;
        BigInt s = 0;
        for (std::size_t i = 0; i + 1 < n; ++i) {
            s += a[i] * x[i] * x[i];
            nonzero = nonzero || x[i] != 0;
        }
        if (nonzero && s % last == 0) {
            BigInt t = -s / last;
            if (t >= 0) {
                if (auto r = exact_sqrt(t)) {
                    std::vector<BigInt> z;
                    for (auto xi : x) z.push_back(BigInt(xi));
                    z.push_back(*r);
                    BigInt g = 0;
                    for (const auto& zi : z) g = gcd_big(g, zi);
                    for (auto& zi : z) zi /= g;
                    return z;
                }
            }
        }
        std::size_t k = 0;
        while (k < n - 1 && x[k] == bound) x[k++] = -bound;
        if (k == n - 1) return std::nullopt;
        ++x[k];
    }
}
}  // namespace detail

/// Local pass at infinity, 2 and the primes dividing the coefficients, then
/// a search with doubling bounds when every local test passes.
inline IsotropyCertificate is_isotropic_over_Q(const std::vector<BigInt>& diag, std::int64_t search_limit = 10000) {
    if (diag.size() != 3 && diag.size() != 4) throw invalid_argument("isotropy test needs 3 or 4 diagonal entries");
    std::vector<Rat> vals;
    for (const auto& x : diag) {
        if (x == 0) throw invalid_argument("diagonal entries must be nonzero");
        vals.emplace_back(x);
    }
    IsotropyCertificate cert;
    for (const auto& v : relevant_places(vals)) cert.local.push_back(detail::local_isotropy(diag, v));
    const LocalIsotropy* primary = nullptr;
    for (const auto& L : cert.local) {
        if (L.isotropic) continue;
        // preference: definiteness, then the smallest odd prime, then 2
        auto rank = [](const Place& p) { return p.is_infinite() ? 0 : (p.prime == 2 ? 2 : 1); };
        if (!primary || rank(L.place) < rank(primary->place) ||
            (rank(L.place) == rank(primary->place) && L.place.prime < primary->place.prime))
            primary = &L;
    }
    if (primary) {
        cert.obstruction = primary->place;
        cert.reason = primary->reason;
        return cert;
    }
    const std::int64_t limit = diag.size() == 3 ? search_limit : std::min<std::int64_t>(search_limit, 1000);
    for (std::int64_t B = 4;; B = std::min(2 * B, limit)) {
        if (auto z = detail::search_zero(diag, B)) {
            cert.isotropic = true;
            cert.zero = *z;
            cert.reason = "explicit zero";
            return cert;
        }
        if (B == limit) break;
    }
    throw domain_error("locally isotropic form has no zero within the search limit " + std::to_string(limit));
}

inline IsotropyCertificate is_isotropic_over_Q(std::initializer_list<long long> diag, std::int64_t search_limit = 10000) {
    std::vector<BigInt> d;
    for (auto x : diag) d.emplace_back(x);
    return is_isotropic_over_Q(d, search_limit);
}

enum class FibrationCase { s5_generic, s6_generic };

inline std::string to_string(FibrationCase c) { return c == FibrationCase::s5_generic ? "S5-generic" : "S6-generic"; }

/// Gram matrix of (h, f1, f2, f3) in the S5 case.
inline std::array<std::array<std::int64_t, 4>, 4> s5_gram_matrix() {
    return {{{4, 0, 0, 0}, {0, -2, 0, 0}, {0, 0, -10, 0}, {0, 0, 0, -20}}};
}

struct FibrationVerdict {
    FibrationCase which;
    bool has_elliptic_fibration;
    std::vector<BigInt> diagonal;
    std::string reduction;
    IsotropyCertificate certificate;
};

/// An elliptic fibration over k exists iff Pic contains a nonzero class of
/// square zero. The S6 case reduces to the S5 lattice.
inline FibrationVerdict elliptic_fibration_over_k(FibrationCase which, bool generic_rank17 = true) {
    if (!generic_rank17) throw invalid_argument("the fibration verdict needs the generic geometric rank 17 assumption");
    auto g = s5_gram_matrix();
    std::vector<BigInt> diag;
    for (int i = 0; i < 4; ++i) diag.emplace_back(g[i][i]);
    FibrationVerdict v{which, false, diag,
                       which == FibrationCase::s6_generic ? "reduced to the S5 lattice" : "S5 lattice", {}};
    v.certificate = is_isotropic_over_Q(diag);
    v.has_elliptic_fibration = v.certificate.isotropic;
    return v;
}

// ---------------------------------------------------------------------------
// Subgroups of S6 up to conjugacy and the Frobenius cycle-type estimate.

using CycleTypeSet = std::set<std::vector<int>>;

struct SubgroupClass {
    std::string label;
    std::size_t order;
    std::vector<int> orbits;
    bool transitive;
    CycleTypeSet cycle_types;  // full partitions of 6
    PermGroup group;
};

namespace detail {

inline std::string subgroup_label(const PermGroup& H) {
    const std::size_t n = H.order();
    bool even = true, order4 = false, six_cycle = false;
    for (const auto& g : H.elements()) {
        auto t = cycle_type(g);
        int moved_parity = 0;
        for (int x : t) moved_parity += x - 1;
        even = even && moved_parity % 2 == 0;
        for (int x : t) order4 = order4 || x == 4;
        six_cycle = six_cycle || (t.size() == 1 && t[0] == 6);
        if (!six_cycle && t == std::vector<int>{2, 3}) six_cycle = true;  // element of order 6
    }
    auto orbits = H.orbit_sizes();
    if (n == 1) return "trivial";
    if (!H.is_transitive()) {
        std::string o;
        for (int x : orbits) o += (o.empty() ? "" : "+") + std::to_string(x);
        if (n == 120 && orbits == std::vector<int>{1, 5}) return "S5 (point stabilizer)";
        return "order " + std::to_string(n) + ", orbits " + o;
    }
    switch (n) {
        case 6: return six_cycle ? "6T1 C6" : "6T2 S3";
        case 12: return six_cycle ? "6T3 D6" : "6T4 A4";
        case 18: return "6T5 F18";
        case 24: return order4 ? (even ? "6T7 S4+" : "6T8 S4-") : "6T6 2A4";
        case 36: return order4 ? "6T10 F36" : "6T9 S3xS3";
        case 48: return "6T11 2S4";
        case 60: return "6T12 A5";
        case 72: return "6T13 F36:2";
        case 120: return "6T14 S5";
        case 360: return "6T15 A6";
        case 720: return "6T16 S6";
        default: return "transitive order " + std::to_string(n);
    }
}

}  // namespace detail

/// All subgroups of S6 up to conjugacy, from joining class representatives
/// with single elements: every subgroup is generated by a maximal subgroup
/// and one more element, so the search is complete.
inline const std::vector<SubgroupClass>& s6_subgroup_classes() {
    static const std::vector<SubgroupClass> classes = [] {
        // index arithmetic on all of S6
        std::vector<Perm> perm(720);
        const PermGroup S6 = PermGroup::symmetric(6);
        for (const auto& g : S6.elements()) perm[perm_index(g)] = g;
        std::vector<std::uint16_t> mul(720 * 720), inv(720);
        for (int i = 0; i < 720; ++i) {
            inv[i] = static_cast<std::uint16_t>(perm_index(inverse(perm[i])));
            for (int j = 0; j < 720; ++j) mul[i * 720 + j] = static_cast<std::uint16_t>(perm_index(compose(perm[i], perm[j])));
        }
        using Bits = std::bitset<720>;
        struct Rep {
            std::vector<int> gens;
            std::vector<int> elems;
            Bits in;
        };
        auto close = [&](const std::vector<int>& gens) {
            Rep r{gens, {0}, {}};
            r.in.set(0);
            for (std::size_t k = 0; k < r.elems.size(); ++k)
                for (int s : gens) {
                    int y = mul[s * 720 + r.elems[k]];
                    if (r.in[y]) continue;
                    r.in.set(static_cast<std::size_t>(y));
                    r.elems.push_back(y);
                }
            return r;
        };
        std::vector<Rep> reps;
        std::unordered_set<Bits> seen;  // every conjugate of every representative
        auto add = [&](Rep r) {
            if (seen.count(r.in)) return;
            for (int g = 0; g < 720; ++g) {
                Bits c;
                for (int x : r.elems) c.set(mul[mul[g * 720 + x] * 720 + inv[g]]);
                seen.insert(c);
            }
            reps.push_back(std::move(r));
        };
        add(close({}));
        for (std::size_t i = 0; i < reps.size(); ++i) {
            for (int x = 0; x < 720; ++x) {
                if (reps[i].in[x]) continue;
                auto gens = reps[i].gens;
                gens.push_back(x);
                add(close(gens));
            }
        }
        std::vector<SubgroupClass> out;
        for (const auto& r : reps) {
            std::vector<Perm> gens;
            for (int g : r.gens) gens.push_back(perm[g]);
            PermGroup H = PermGroup::generate(gens);
            SubgroupClass c{detail::subgroup_label(H), H.order(), H.orbit_sizes(), H.is_transitive(), {}, H};
            for (const auto& g : H.elements()) c.cycle_types.insert(full_cycle_type(g));
            out.push_back(std::move(c));
        }
        std::stable_sort(out.begin(), out.end(),
                         [](const SubgroupClass& a, const SubgroupClass& b) { return a.order < b.order; });
        return out;
    }();
    return classes;
}

struct GaloisImageEstimate {
    std::vector<std::int64_t> primes_used;
    std::vector<std::int64_t> primes_skipped;
    std::map<std::vector<int>, int> observed;  // full partition -> count
    std::vector<std::string> consistent;       // subgroups containing every observed type
    std::vector<std::string> exact_match;      // subgroups whose cycle types are exactly the observed set
    bool s6_likely = false;
};

/// Accumulates Frobenius cycle types of a squarefree sextic over the first
/// `prime_count` odd primes, skipping primes dividing lc(f) disc(f).
inline GaloisImageEstimate galois_image_estimate(const IntPoly& f, int prime_count) {
    if (f.degree() != 6) throw invalid_argument("Galois image estimate needs a sextic");
    if (discriminant(f) == 0) throw invalid_argument("sextic is not squarefree");
    if (prime_count < 1) throw invalid_argument("prime budget must be positive");
    GaloisImageEstimate est;
    for (std::int64_t p = 3; static_cast<int>(est.primes_used.size()) < prime_count; p += 2) {
        if (!is_prime(p)) continue;
        auto t = factor_cycle_type(f, p);
        if (!t) {
            est.primes_skipped.push_back(p);
            continue;
        }
        est.primes_used.push_back(p);
        ++est.observed[*t];
    }
    // the identity lies in every candidate even when no prime splits completely
    CycleTypeSet seen{{1, 1, 1, 1, 1, 1}};
    for (const auto& [t, c] : est.observed) seen.insert(t);
    std::set<std::string> cons, exact;
    for (const auto& c : s6_subgroup_classes()) {
        if (!std::includes(c.cycle_types.begin(), c.cycle_types.end(), seen.begin(), seen.end())) continue;
        cons.insert(c.label);
        if (c.cycle_types == seen) exact.insert(c.label);
    }
    est.consistent.assign(cons.begin(), cons.end());
    est.exact_match.assign(exact.begin(), exact.end());
    est.s6_likely = seen.size() == 11;
    return est;
}

}  // namespace k3pts
