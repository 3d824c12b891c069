#pragma once

// Box enumeration of rational points on the quartic surface, counting tables,
// growth fits, and counts along the curve of special points.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numeric>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "k3pts/kummer.hpp"

namespace k3pts {

using Form = std::vector<Monomial>;

inline int form_degree(const Form& f) {
    if (f.empty()) throw invalid_argument("empty exclusion form");
    int deg = -1;
    for (const auto& m : f) {
        int d = m.exp[0] + m.exp[1] + m.exp[2] + m.exp[3];
        for (int e : m.exp)
            if (e < 0) throw invalid_argument("negative exponent in exclusion form");
        if (deg >= 0 && d != deg) throw invalid_argument("exclusion form is not homogeneous");
        deg = d;
    }
    return deg;
}

inline bool excluded_by(const std::vector<Form>& exclusions, const ProjPoint3& pt) {
    for (const auto& f : exclusions)
        if (eval_form(f, pt.coords()) == 0) return true;
    return false;
}

/// Closed range of k1 values, 0 <= lo <= hi <= H.
struct Shard {
    std::int64_t lo, hi;
};

struct SearchJob {
    KummerQuartic surface;
    std::int64_t height_bound;  // max |k_i| <= H
    std::vector<Form> exclusions;
    std::vector<Shard> shards;  // empty means the whole box
};

struct CountRow {
    double B;
    std::int64_t n;
};

struct CountTable {
    std::vector<CountRow> rows;

    /// Count with height <= B.
    std::int64_t count_at(double B) const {
        std::int64_t n = 0;
        for (const auto& r : rows)
            if (r.B <= B + 1e-12) n = r.n;
        return n;
    }
};

/// One row per distinct height, with cumulative counts.
inline CountTable count_table_from_heights(std::vector<double> heights) {
    std::sort(heights.begin(), heights.end());
    CountTable t;
    for (std::size_t i = 0; i < heights.size(); ++i) {
        if (i + 1 < heights.size() && heights[i + 1] - heights[i] < 1e-12) continue;
        t.rows.push_back({heights[i], static_cast<std::int64_t>(i + 1)});
    }
    return t;
}

/// Counts at the given thresholds.
inline CountTable count_table_at(std::vector<double> heights, const std::vector<double>& thresholds) {
    std::sort(heights.begin(), heights.end());
    CountTable t;
    for (double B : thresholds) {
        auto it = std::upper_bound(heights.begin(), heights.end(), B + 1e-12);
        t.rows.push_back({B, static_cast<std::int64_t>(it - heights.begin())});
    }
    return t;
}

struct SearchResult {
    std::vector<ProjPoint3> points;    // on the surface, off every exclusion, lexicographic
    std::vector<ProjPoint3> excluded;  // on the surface and on some exclusion
    CountTable table;
};

namespace detail {

using i128 = __int128;

inline i128 isqrt128(i128 n) {
    if (n < 0) return -1;
    i128 r = static_cast<i128>(std::sqrt(static_cast<long double>(n)));
    while (r > 0 && r * r > n) --r;
    while ((r + 1) * (r + 1) <= n) ++r;
    return r;
}

/// Integer roots k4 in [-H, H] of A k4^2 + B k4 + C, calling emit for each.
template <class T, class Sqrt, class Emit>
void integer_k4_roots(const K4Quadratic<T>& q, const T& H, Sqrt isqrt, Emit emit) {
    if (q.A != 0) {
        T disc = q.B * q.B - 4 * q.A * q.C;
        if (disc < 0) return;
        T r = isqrt(disc);
        if (r * r != disc) return;
        T den = 2 * q.A;
        for (T numer : {-q.B + r, -q.B - r}) {
            if (numer % den != 0) continue;
            T k4 = numer / den;
            if (k4 < -H || k4 > H) continue;
            emit(k4);
            if (r == 0) break;
        }
    } else if (q.B != 0) {
        if (q.C % q.B != 0) return;
        T k4 = -q.C / q.B;
        if (k4 >= -H && k4 <= H) emit(k4);
    } else if (q.C == 0) {
        for (T k4 = -H; k4 <= H; ++k4) emit(k4);
    }
}

/// Does every intermediate of the k4 solve stay below 2^120 in the box?
inline bool fits_int128(const KummerQuartic& K, std::int64_t H) {
    long double h = static_cast<long double>(H);
    long double a = std::abs(K.a().convert_to<long double>()), b = std::abs(K.b().convert_to<long double>());
    long double m = std::max({a, b, 1.0L});
    long double coeff = 60.0L * m * m * h * h * h * h;  // bounds |A|, |B|, |C|
    long double disc = 8.0L * coeff * coeff;
    return disc < std::ldexp(1.0L, 120) && h < std::ldexp(1.0L, 30);
}

inline std::int64_t gcd64(std::int64_t x, std::int64_t y) {
    x = x < 0 ? -x : x;
    y = y < 0 ? -y : y;
    while (y) {
        std::int64_t t = x % y;
        x = y;
        y = t;
    }
    return x;
}

/// Canonical points whose k1 lies in the shard.
inline void enumerate_shard(const KummerQuartic& K, std::int64_t H, const Shard& s, std::vector<ProjPoint3>& out) {
    const bool small = fits_int128(K, H);
    const i128 a128 = small ? static_cast<i128>(K.a().convert_to<long long>()) : 0;
    const i128 b128 = small ? static_cast<i128>(K.b().convert_to<long long>()) : 0;
    for (std::int64_t k1 = s.lo; k1 <= s.hi; ++k1) {
        for (std::int64_t k2 = (k1 == 0 ? 0 : -H); k2 <= H; ++k2) {
            for (std::int64_t k3 = (k1 == 0 && k2 == 0 ? 0 : -H); k3 <= H; ++k3) {
                const std::int64_t g3 = gcd64(gcd64(k1, k2), k3);
                // With (k1, k2, k3) = 0 the first nonzero coordinate is k4.
                const bool zero3 = g3 == 0;
                auto keep = [&](std::int64_t k4) {
                    if (zero3 ? k4 != 1 : gcd64(g3, k4) != 1) return;
                    out.emplace_back(BigInt(k1), BigInt(k2), BigInt(k3), BigInt(k4));
                };
                if (small) {
                    auto q = KummerQuartic::k4_coefficients<i128>(a128, b128, k1, k2, k3);
                    integer_k4_roots<i128>(q, static_cast<i128>(H), isqrt128,
                                           [&](i128 k4) { keep(static_cast<std::int64_t>(k4)); });
                } else {
                    auto q = K.k4_coefficients(BigInt(k1), BigInt(k2), BigInt(k3));
                    integer_k4_roots<BigInt>(q, BigInt(H), [](const BigInt& n) { return isqrt(n); },
                                             [&](const BigInt& k4) { keep(k4.convert_to<std::int64_t>()); });
                }
            }
        }
    }
}

}  // namespace detail

/// Splits [0, H] into `count` contiguous k1 ranges of near-equal length.
inline std::vector<Shard> make_shards(std::int64_t H, std::size_t count) {
    if (count == 0) throw invalid_argument("shard count must be positive");
    std::vector<Shard> out;
    std::int64_t n = H + 1;
    std::int64_t c = std::min<std::int64_t>(static_cast<std::int64_t>(count), n);
    std::int64_t lo = 0;
    for (std::int64_t i = 0; i < c; ++i) {
        std::int64_t len = n / c + (i < n % c ? 1 : 0);
        out.push_back({lo, lo + len - 1});
        lo += len;
    }
    return out;
}

inline void validate_shards(std::vector<Shard> shards, std::int64_t H) {
    std::sort(shards.begin(), shards.end(), [](const Shard& x, const Shard& y) { return x.lo < y.lo; });
    std::int64_t next = 0;
    for (const auto& s : shards) {
        if (s.lo != next || s.hi < s.lo) throw invalid_argument("shards do not partition the k1 range exactly");
        next = s.hi + 1;
    }
    if (next != H + 1) throw invalid_argument("shards do not partition the k1 range exactly");
}

/// All canonical points with max |k_i| <= H on the surface. Points on an
/// exclusion form go to `excluded`. Output is independent of `threads`.
inline SearchResult enumerate(const SearchJob& job, unsigned threads = 1) {
    const std::int64_t H = job.height_bound;
    if (H < 1) throw invalid_argument("height bound must be at least 1");
    for (const auto& f : job.exclusions) form_degree(f);
    std::vector<Shard> shards = job.shards.empty() ? make_shards(H, std::max(1u, threads) * 4) : job.shards;
    validate_shards(shards, H);
    std::vector<std::vector<ProjPoint3>> parts(shards.size());
    threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(shards.size())));
    if (threads == 1) {
        for (std::size_t i = 0; i < shards.size(); ++i) detail::enumerate_shard(job.surface, H, shards[i], parts[i]);
    } else {
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < threads; ++t)
            pool.emplace_back([&, t] {
                for (std::size_t i = t; i < shards.size(); i += threads)
                    detail::enumerate_shard(job.surface, H, shards[i], parts[i]);
            });
        for (auto& th : pool) th.join();
    }
    SearchResult res;
    for (auto& p : parts)
        for (auto& pt : p) (excluded_by(job.exclusions, pt) ? res.excluded : res.points).push_back(std::move(pt));
    std::sort(res.points.begin(), res.points.end());
    std::sort(res.excluded.begin(), res.excluded.end());
    std::vector<double> hs;
    for (const auto& pt : res.points) hs.push_back(naive_height_P3(pt));
    res.table = count_table_from_heights(std::move(hs));
    return res;
}

// ---------------------------------------------------------------------------

enum class GrowthModel { power, exponential };

struct GrowthFit {
    double parameter = 0.0;
    double intercept = 0.0;
    double r_squared = 0.0;
    std::size_t rows_used = 0;
};

/// Least squares of log n against log B (power) or B (exponential), over
/// rows with n > 0 (and B > 0 for the power model).
inline GrowthFit fit_growth(const CountTable& t, GrowthModel model) {
    std::vector<double> xs, ys;
    for (const auto& r : t.rows) {
        if (r.n <= 0) continue;
        if (model == GrowthModel::power && r.B <= 0) continue;
        xs.push_back(model == GrowthModel::power ? std::log(r.B) : r.B);
        ys.push_back(std::log(static_cast<double>(r.n)));
    }
    if (xs.size() < 4) throw invalid_argument("growth fit needs at least 4 usable rows");
    const double n = static_cast<double>(xs.size());
    double sx = 0, sy = 0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        sx += xs[i];
        sy += ys[i];
    }
    const double mx = sx / n, my = sy / n;
    double sxx = 0, sxy = 0, syy = 0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        sxx += (xs[i] - mx) * (xs[i] - mx);
        sxy += (xs[i] - mx) * (ys[i] - my);
        syy += (ys[i] - my) * (ys[i] - my);
    }
    if (sxx == 0) throw invalid_argument("growth fit needs distinct thresholds");
    GrowthFit f;
    f.parameter = sxy / sxx;
    f.intercept = my - f.parameter * mx;
    f.r_squared = syy == 0 ? 1.0 : (sxy * sxy) / (sxx * syy);
    f.rows_used = xs.size();
    return f;
}

// ---------------------------------------------------------------------------
// The curve x0 -> special_point(K, x0).

/// Half the smallest max|coord| / max(|m|,|n|)^8 over sampled directions,
/// before removing the common factor of the coordinates.
inline double special_height_floor(const KummerQuartic& K) {
    const double a = K.a().convert_to<double>(), b = K.b().convert_to<double>();
    double best = std::numeric_limits<double>::infinity();
    for (int i = 0; i <= 4000; ++i) {
        // (m, n) on the boundary of the unit square, n > 0
        double t = -1.0 + 2.0 * i / 4000.0;
        for (auto [m, n] : {std::pair{t, 1.0}, std::pair{1.0, (t + 1.0) / 2.0}, std::pair{-1.0, (t + 1.0) / 2.0}}) {
            double D = std::pow(m, 6) + a * m * m * std::pow(n, 4) - 2 * b * std::pow(n, 6);
            double N = 2 * a * b * std::pow(n, 6) + 18 * b * std::pow(m, 4) * n * n + 8 * a * std::pow(m, 6);
            double v = std::max({std::abs(n * n * D), std::abs(2 * m * n * D), std::abs(m * m * D), std::abs(n * n * N)});
            best = std::min(best, v);
        }
    }
    return best / 2.0;
}

/// Largest common factor of (n^2 D, 2mn D, m^2 D, n^2 N) over coprime
/// (m, n) with max(|m|, n) <= side, where the special point is
/// (n^2 D : 2mn D : m^2 D : n^2 N) before reduction.
inline BigInt special_gcd_preview(const KummerQuartic& K, std::int64_t side) {
    BigInt best = 1;
    const BigInt &a = K.a(), &b = K.b();
    for (std::int64_t n = 1; n <= side; ++n)
        for (std::int64_t m = -side; m <= side; ++m) {
            if (std::gcd(m, n) != 1) continue;
            BigInt M(m), Nn(n);
            BigInt m2 = M * M, n2 = Nn * Nn;
            BigInt D = m2 * m2 * m2 + a * m2 * n2 * n2 - 2 * b * n2 * n2 * n2;
            BigInt N = 2 * a * b * n2 * n2 * n2 + 18 * b * m2 * m2 * n2 + 8 * a * m2 * m2 * m2;
            if (D == 0) continue;
            BigInt g = gcd_big(D, N);
            if (g > best) best = g;
        }
    return best;
}

struct SpecialFamilyResult {
    CountTable table;
    std::int64_t box = 0;            // max(|m|, |n|) enumerated
    std::vector<ProjPoint3> points;  // height <= max threshold, not excluded
    std::vector<ProjPoint3> excluded;
    std::vector<Rat> degenerate_x0;  // L(x0) = 0
};

namespace detail {

inline SpecialFamilyResult collect_special_points(const KummerQuartic& K, double Bmax, const std::vector<Form>& exclusions,
                                                  std::int64_t max_box, std::vector<double>& hs) {
    for (const auto& f : exclusions) form_degree(f);
    SpecialFamilyResult res;
    const double floor = special_height_floor(K);
    const double gmax = special_gcd_preview(K, 64).convert_to<double>();
    double T = floor > 0 ? std::ceil(std::pow(std::exp(Bmax) * gmax / floor, 1.0 / 8.0)) : static_cast<double>(max_box);
    res.box = std::max<std::int64_t>(1, std::min<std::int64_t>(max_box, static_cast<std::int64_t>(T)));
    for (std::int64_t n = 1; n <= res.box; ++n)
        for (std::int64_t m = -res.box; m <= res.box; ++m) {
            if (gcd64(m, n) != 1) continue;
            Rat x0(m, n);
            if (special_linear_coefficient(K, x0) == 0) {
                res.degenerate_x0.push_back(x0);
                continue;
            }
            ProjPoint3 pt = special_point(K, x0);
            double h = naive_height_P3(pt);
            if (h > Bmax + 1e-12) continue;
            if (excluded_by(exclusions, pt)) {
                res.excluded.push_back(pt);
                continue;
            }
            res.points.push_back(pt);
            hs.push_back(h);
        }
    std::sort(res.points.begin(), res.points.end());
    std::sort(res.excluded.begin(), res.excluded.end());
    return res;
}

}  // namespace detail

/// Counts of special_point(K, m/n), gcd(m, n) = 1, n >= 1, at the given
/// thresholds. The (m, n) box is sized from a sampled lower bound on the
/// height form and the largest coordinate gcd seen in a preview box, so a
/// point whose gcd exceeds that preview can be missed.
inline SpecialFamilyResult special_family_count(const KummerQuartic& K, const std::vector<double>& thresholds,
                                                const std::vector<Form>& exclusions = {}, std::int64_t max_box = 4000) {
    if (thresholds.empty()) return {};
    std::vector<double> hs;
    auto res = detail::collect_special_points(K, *std::max_element(thresholds.begin(), thresholds.end()), exclusions,
                                              max_box, hs);
    res.table = count_table_at(std::move(hs), thresholds);
    return res;
}

/// Same, with one row per distinct height up to B.
inline SpecialFamilyResult special_family_count(const KummerQuartic& K, double B,
                                                const std::vector<Form>& exclusions = {}, std::int64_t max_box = 4000) {
    std::vector<double> hs;
    auto res = detail::collect_special_points(K, B, exclusions, max_box, hs);
    res.table = count_table_from_heights(std::move(hs));
    return res;
}

/// Forms cutting out the special curve: k2^2 - 4 k1 k3 and the linear
/// relation L k4 + C = 0 written homogeneously in (k1, k2, k3, k4).
inline std::vector<Form> special_curve_forms(const KummerQuartic& K) {
    // The second form is the quartic restricted to the cone k2^2 = 4 k1 k3.
    const BigInt &a = K.a(), &b = K.b();
    Form conic = {{1, {0, 2, 0, 0}, "k2^2"}, {-4, {1, 0, 1, 0}, "k1*k3"}};
    Form linear = {{2, {0, 0, 3, 1}, "k3^3*k4"},          {2 * a, {2, 0, 1, 1}, "k1^2*k3*k4"},
                   {-4 * b, {3, 0, 0, 1}, "k1^3*k4"},      {-4 * a * b, {4, 0, 0, 0}, "k1^4"},
                   {-36 * b, {2, 0, 2, 0}, "k1^2*k3^2"},   {-16 * a, {1, 0, 3, 0}, "k1*k3^3"}};
    return {conic, linear};
}

}  // namespace k3pts
