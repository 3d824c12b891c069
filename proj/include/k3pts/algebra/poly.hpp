#pragma once

#include <cstdint>
#include <ostream>
#include <utility>
#include <vector>

#include "k3pts/algebra/integer.hpp"

namespace k3pts {

// Coefficient-ring hooks. Field element types that carry their own modulus
// (Fp, Fp2, QuadFieldElem) provide the same overloads next to their
// definitions, so Poly never has to conjure an element out of thin air.
inline BigInt zero_like(const BigInt&) { return 0; }
inline BigInt one_like(const BigInt&) { return 1; }
inline BigInt from_int_like(const BigInt&, std::int64_t v) { return v; }
inline BigInt exact_div(const BigInt& a, const BigInt& b) {
    if (b == 0) throw invalid_argument("division by zero");
    return a / b;
}

inline Rat zero_like(const Rat&) { return 0; }
inline Rat one_like(const Rat&) { return 1; }
inline Rat from_int_like(const Rat&, std::int64_t v) { return Rat(v); }
inline Rat inv(const Rat& a) {
    if (a == 0) throw invalid_argument("inverse of zero");
    return Rat(1) / a;
}
inline Rat exact_div(const Rat& a, const Rat& b) { return a * inv(b); }

/// Dense univariate polynomial, coefficients in ascending degree. The zero
/// polynomial has no coefficients and degree -1.
template <class R>
class Poly {
   public:
    explicit Poly(std::vector<R> coeffs = {}, R zero = R(0)) : c_(std::move(coeffs)), zero_(std::move(zero)) {
        if (!c_.empty()) zero_ = zero_like(c_.front());
        trim();
    }

    static Poly constant(const R& a) { return Poly(std::vector<R>{a}, zero_like(a)); }
    static Poly monomial(const R& a, int deg) {
        std::vector<R> c(static_cast<std::size_t>(deg) + 1, zero_like(a));
        c.back() = a;
        return Poly(std::move(c), zero_like(a));
    }
    /// x - r
    static Poly linear_root(const R& r) { return Poly(std::vector<R>{-r, one_like(r)}, zero_like(r)); }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const std::vector<R>& coeffs() const { return c_; }
    const R& zero() const { return zero_; }
    R one() const { return one_like(zero_); }

    const R& operator[](std::size_t i) const { return i < c_.size() ? c_[i] : zero_; }
    const R& lead() const {
        if (c_.empty()) throw invalid_argument("leading coefficient of zero polynomial");
        return c_.back();
    }
    bool is_monic() const { return !c_.empty() && c_.back() == one(); }

    R operator()(const R& x) const {
        R acc = zero_like(x);
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
        return acc;
    }

    Poly operator-() const {
        std::vector<R> c = c_;
        for (auto& a : c) a = -a;
        return Poly(std::move(c), zero_);
    }

    friend Poly operator+(const Poly& f, const Poly& g) {
        std::vector<R> c(std::max(f.c_.size(), g.c_.size()), f.zero_);
        for (std::size_t i = 0; i < c.size(); ++i) c[i] = f[i] + g[i];
        return Poly(std::move(c), f.zero_);
    }
    friend Poly operator-(const Poly& f, const Poly& g) {
        std::vector<R> c(std::max(f.c_.size(), g.c_.size()), f.zero_);
        for (std::size_t i = 0; i < c.size(); ++i) c[i] = f[i] - g[i];
        return Poly(std::move(c), f.zero_);
    }
    friend Poly operator*(const Poly& f, const Poly& g) {
        if (f.is_zero() || g.is_zero()) return Poly({}, f.zero_);
        std::vector<R> c(f.c_.size() + g.c_.size() - 1, f.zero_);
        for (std::size_t i = 0; i < f.c_.size(); ++i) {
            if (f.c_[i] == f.zero_) continue;
            for (std::size_t j = 0; j < g.c_.size(); ++j) c[i + j] = c[i + j] + f.c_[i] * g.c_[j];
        }
        return Poly(std::move(c), f.zero_);
    }
    friend Poly operator*(const R& a, const Poly& f) {
        std::vector<R> c = f.c_;
        for (auto& x : c) x = a * x;
        return Poly(std::move(c), f.zero_);
    }
    friend bool operator==(const Poly& f, const Poly& g) { return f.c_ == g.c_; }
    friend bool operator!=(const Poly& f, const Poly& g) { return !(f == g); }

    Poly& operator+=(const Poly& g) { return *this = *this + g; }
    Poly& operator-=(const Poly& g) { return *this = *this - g; }
    Poly& operator*=(const Poly& g) { return *this = *this * g; }

    Poly derivative() const {
        if (c_.size() <= 1) return Poly({}, zero_);
        std::vector<R> c(c_.size() - 1, zero_);
        for (std::size_t i = 1; i < c_.size(); ++i) c[i - 1] = from_int_like(zero_, static_cast<std::int64_t>(i)) * c_[i];
        return Poly(std::move(c), zero_);
    }

    /// Coefficients divided exactly by a scalar (field inverse or exact ring division).
    Poly div_scalar(const R& a) const {
        std::vector<R> c = c_;
        for (auto& x : c) x = exact_div(x, a);
        return Poly(std::move(c), zero_);
    }

    Poly monic() const {
        if (is_zero()) return *this;
        return div_scalar(lead());
    }

    Poly shift(int k) const {
        if (is_zero()) return *this;
        std::vector<R> c(static_cast<std::size_t>(k), zero_);
        c.insert(c.end(), c_.begin(), c_.end());
        return Poly(std::move(c), zero_);
    }

   private:
    void trim() {
        while (!c_.empty() && c_.back() == zero_) c_.pop_back();
    }

    std::vector<R> c_;
    R zero_;
};

/// Quotient and remainder over a field.
template <class R>
std::pair<Poly<R>, Poly<R>> divmod(const Poly<R>& a, const Poly<R>& b) {
    if (b.is_zero()) throw invalid_argument("polynomial division by zero");
    const R z = a.zero();
    if (a.degree() < b.degree()) return {Poly<R>({}, z), a};
    R lead_inv = inv(b.lead());
    std::vector<R> rem = a.coeffs();
    std::vector<R> quo(static_cast<std::size_t>(a.degree() - b.degree()) + 1, z);
    const int db = b.degree();
    for (int i = a.degree(); i >= db; --i) {
        R q = rem[static_cast<std::size_t>(i)] * lead_inv;
        quo[static_cast<std::size_t>(i - db)] = q;
        if (q == z) continue;
        for (int j = 0; j <= db; ++j) rem[static_cast<std::size_t>(i - db + j)] -= q * b[static_cast<std::size_t>(j)];
    }
    rem.erase(rem.begin() + db, rem.end());
    return {Poly<R>(std::move(quo), z), Poly<R>(std::move(rem), z)};
}

template <class R>
Poly<R> operator%(const Poly<R>& a, const Poly<R>& b) {
    return divmod(a, b).second;
}
template <class R>
Poly<R> operator/(const Poly<R>& a, const Poly<R>& b) {
    return divmod(a, b).first;
}

/// lc(b)^(deg a - deg b + 1) * a mod b, valid over any commutative ring.
template <class R>
Poly<R> pseudo_remainder(const Poly<R>& a, const Poly<R>& b) {
    if (b.is_zero()) throw invalid_argument("pseudo-division by zero");
    if (a.degree() < b.degree()) return a;
    const R z = a.zero();
    std::vector<R> rem = a.coeffs();
    const R& lb = b.lead();
    const int db = b.degree();
    for (int i = a.degree(); i >= db; --i) {
        R top = rem[static_cast<std::size_t>(i)];
        for (auto& x : rem) x = x * lb;
        for (int j = 0; j <= db; ++j) rem[static_cast<std::size_t>(i - db + j)] -= top * b[static_cast<std::size_t>(j)];
    }
    rem.erase(rem.begin() + db, rem.end());
    return Poly<R>(std::move(rem), z);
}

template <class R>
Poly<R> poly_gcd(Poly<R> a, Poly<R> b) {
    while (!b.is_zero()) {
        auto r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

/// Monic g = gcd(a, b) with s*a + t*b = g.
template <class R>
struct XgcdResult {
    Poly<R> g, s, t;
};

template <class R>
XgcdResult<R> poly_xgcd(const Poly<R>& a, const Poly<R>& b) {
    const R z = a.is_zero() ? b.zero() : a.zero();
    const R one = one_like(z);
    Poly<R> r0 = a, r1 = b;
    Poly<R> s0 = Poly<R>::constant(one), s1({}, z);
    Poly<R> t0({}, z), t1 = Poly<R>::constant(one);
    while (!r1.is_zero()) {
        auto [q, r] = divmod(r0, r1);
        r0 = std::exchange(r1, r);
        s0 = std::exchange(s1, s0 - q * s1);
        t0 = std::exchange(t1, t0 - q * t1);
    }
    if (r0.is_zero()) return {r0, s0, t0};
    R li = inv(r0.lead());
    return {li * r0, li * s0, li * t0};
}

template <class R>
R ring_pow(R base, unsigned e) {
    R acc = one_like(base);
    while (e) {
        if (e & 1u) acc = acc * base;
        base = base * base;
        e >>= 1u;
    }
    return acc;
}

/// Resultant over an integral domain by the subresultant chain, so every
/// division is exact and intermediate growth stays polynomial.
template <class R>
R resultant(Poly<R> a, Poly<R> b) {
    if (a.is_zero() || b.is_zero()) throw invalid_argument("resultant of zero polynomial");
    const R z = a.zero();
    const R one = one_like(z);
    R s = one;
    if (a.degree() < b.degree()) {
        std::swap(a, b);
        if ((a.degree() % 2) && (b.degree() % 2)) s = -s;
    }
    if (b.degree() == 0) return s * ring_pow(b.lead(), static_cast<unsigned>(a.degree()));
    R g = one, h = one;
    while (true) {
        const int delta = a.degree() - b.degree();
        if ((a.degree() % 2) && (b.degree() % 2)) s = -s;
        Poly<R> r = pseudo_remainder(a, b);
        a = b;
        if (r.is_zero()) return z;
        R divisor = g * ring_pow(h, static_cast<unsigned>(delta));
        b = r.div_scalar(divisor);
        g = a.lead();
        // h <- g^delta / h^(delta - 1)
        if (delta > 0)
            h = exact_div(ring_pow(g, static_cast<unsigned>(delta)), ring_pow(h, static_cast<unsigned>(delta - 1)));
        if (b.degree() == 0) break;
    }
    // final: h^(1 - deg a) * lc(b)^deg a
    const int da = a.degree();
    R lb_pow = ring_pow(b.lead(), static_cast<unsigned>(da));
    R val = da >= 1 ? exact_div(lb_pow, ring_pow(h, static_cast<unsigned>(da - 1))) : lb_pow * h;
    return s * val;
}

/// disc(f) = (-1)^(n(n-1)/2) Res(f, f') / lc(f).
template <class R>
R discriminant(const Poly<R>& f) {
    if (f.is_zero()) throw invalid_argument("discriminant of zero polynomial");
    const int n = f.degree();
    if (n < 1) throw invalid_argument("discriminant of constant polynomial");
    if (n == 1) return one_like(f.zero());
    R r = exact_div(resultant(f, f.derivative()), f.lead());
    if (((n * (n - 1)) / 2) % 2) r = -r;
    return r;
}

using IntPoly = Poly<BigInt>;
using RatPoly = Poly<Rat>;

inline IntPoly int_poly(std::initializer_list<long long> c) {
    std::vector<BigInt> v;
    for (long long x : c) v.emplace_back(x);
    return IntPoly(std::move(v));
}

inline RatPoly to_rat(const IntPoly& f) {
    std::vector<Rat> v;
    for (const auto& x : f.coeffs()) v.emplace_back(x);
    return RatPoly(std::move(v));
}

/// Primitive integer polynomial proportional to a nonzero rational one, with
/// positive leading coefficient.
inline IntPoly primitive_part(const RatPoly& f) {
    if (f.is_zero()) return IntPoly();
    BigInt l = 1;
    for (const auto& x : f.coeffs()) l = lcm_big(l, den(x));
    std::vector<BigInt> v;
    BigInt g = 0;
    for (const auto& x : f.coeffs()) {
        v.push_back(num(x) * (l / den(x)));
        g = gcd_big(g, v.back());
    }
    if (v.back() < 0) g = -g;
    for (auto& x : v) x /= g;
    return IntPoly(std::move(v));
}

template <class R>
std::ostream& operator<<(std::ostream& os, const Poly<R>& f) {
    os << "[";
    for (std::size_t i = 0; i < f.coeffs().size(); ++i) os << (i ? ", " : "") << f.coeffs()[i];
    return os << "]";
}

}  // namespace k3pts
