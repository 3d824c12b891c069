#pragma once

// Prime fields F_p with a runtime odd modulus and their quadratic extensions
// F_p[t]/(t^2 - n), n the smallest positive non-residue.

#include <cstdint>
#include <ostream>

#include "k3pts/algebra/integer.hpp"
#include "k3pts/errors.hpp"

namespace k3pts {

namespace detail {
inline std::int64_t mulmod(std::int64_t a, std::int64_t b, std::int64_t m) {
    return static_cast<std::int64_t>(static_cast<__int128>(a) * b % m);
}
inline std::int64_t powmod64(std::int64_t b, std::uint64_t e, std::int64_t m) {
    std::int64_t r = 1 % m;
    b %= m;
    if (b < 0) b += m;
    while (e) {
        if (e & 1u) r = mulmod(r, b, m);
        b = mulmod(b, b, m);
        e >>= 1u;
    }
    return r;
}
}  // namespace detail

class Fp {
   public:
    Fp(std::int64_t value, std::int64_t p) : p_(p), v_(value % p) {
        if (v_ < 0) v_ += p_;
    }
    static Fp from_big(const BigInt& value, std::int64_t p) {
        return Fp(mod_floor(value, BigInt(p)).convert_to<std::int64_t>(), p);
    }

    std::int64_t value() const { return v_; }
    std::int64_t modulus() const { return p_; }
    bool is_zero() const { return v_ == 0; }

    friend Fp operator+(Fp a, const Fp& b) { return a += b; }
    friend Fp operator-(Fp a, const Fp& b) { return a -= b; }
    friend Fp operator*(Fp a, const Fp& b) { return a *= b; }
    Fp operator-() const { return Fp(v_ == 0 ? 0 : p_ - v_, p_); }
    Fp& operator+=(const Fp& b) {
        v_ += b.v_;
        if (v_ >= p_) v_ -= p_;
        return *this;
    }
    Fp& operator-=(const Fp& b) {
        v_ -= b.v_;
        if (v_ < 0) v_ += p_;
        return *this;
    }
    Fp& operator*=(const Fp& b) {
        v_ = detail::mulmod(v_, b.v_, p_);
        return *this;
    }
    friend bool operator==(const Fp& a, const Fp& b) { return a.v_ == b.v_ && a.p_ == b.p_; }
    friend bool operator!=(const Fp& a, const Fp& b) { return !(a == b); }

    Fp pow(std::uint64_t e) const { return Fp(detail::powmod64(v_, e, p_), p_); }
    Fp inverse() const {
        if (v_ == 0) throw invalid_argument("inverse of zero in F_p");
        return pow(static_cast<std::uint64_t>(p_ - 2));
    }
    /// Quadratic character as an integer in {-1, 0, 1}.
    int chi() const {
        if (v_ == 0) return 0;
        return pow(static_cast<std::uint64_t>((p_ - 1) / 2)) == Fp(1, p_) ? 1 : -1;
    }

    friend std::ostream& operator<<(std::ostream& os, const Fp& a) { return os << a.v_; }

   private:
    std::int64_t p_;
    std::int64_t v_;
};

inline Fp zero_like(const Fp& a) { return Fp(0, a.modulus()); }
inline Fp one_like(const Fp& a) { return Fp(1, a.modulus()); }
inline Fp from_int_like(const Fp& a, std::int64_t v) { return Fp(v, a.modulus()); }
inline Fp inv(const Fp& a) { return a.inverse(); }
inline Fp exact_div(const Fp& a, const Fp& b) { return a * b.inverse(); }

inline void require_odd_prime(std::int64_t p) {
    if (p < 3 || !is_prime(p)) throw invalid_argument("modulus must be an odd prime, got " + std::to_string(p));
}

inline std::int64_t smallest_nonresidue(std::int64_t p) {
    require_odd_prime(p);
    for (std::int64_t n = 2; n < p; ++n)
        if (Fp(n, p).chi() == -1) return n;
    throw consistency_error("no quadratic non-residue found");
}

/// a + b t with t^2 = n.
class Fp2 {
   public:
    Fp2(Fp a, Fp b, std::int64_t n) : a_(a), b_(b), n_(n) {}
    static Fp2 embed(const Fp& a, std::int64_t n) { return Fp2(a, zero_like(a), n); }

    const Fp& re() const { return a_; }
    const Fp& im() const { return b_; }
    std::int64_t nonresidue() const { return n_; }
    std::int64_t modulus() const { return a_.modulus(); }

    friend Fp2 operator+(const Fp2& x, const Fp2& y) { return Fp2(x.a_ + y.a_, x.b_ + y.b_, x.n_); }
    friend Fp2 operator-(const Fp2& x, const Fp2& y) { return Fp2(x.a_ - y.a_, x.b_ - y.b_, x.n_); }
    friend Fp2 operator*(const Fp2& x, const Fp2& y) {
        Fp nn(x.n_, x.modulus());
        return Fp2(x.a_ * y.a_ + nn * x.b_ * y.b_, x.a_ * y.b_ + x.b_ * y.a_, x.n_);
    }
    Fp2 operator-() const { return Fp2(-a_, -b_, n_); }
    Fp2& operator+=(const Fp2& y) { return *this = *this + y; }
    Fp2& operator-=(const Fp2& y) { return *this = *this - y; }
    Fp2& operator*=(const Fp2& y) { return *this = *this * y; }
    friend bool operator==(const Fp2& x, const Fp2& y) { return x.a_ == y.a_ && x.b_ == y.b_; }
    friend bool operator!=(const Fp2& x, const Fp2& y) { return !(x == y); }

    Fp2 conj() const { return Fp2(a_, -b_, n_); }
    Fp norm() const { return a_ * a_ - Fp(n_, modulus()) * b_ * b_; }
    bool is_zero() const { return a_.is_zero() && b_.is_zero(); }
    Fp2 inverse() const {
        Fp ni = norm().inverse();
        return Fp2(a_ * ni, -b_ * ni, n_);
    }
    /// Quadratic character of F_p^2: z is a square iff its norm is a square in F_p.
    int chi() const {
        if (is_zero()) return 0;
        return norm().chi();
    }

    friend std::ostream& operator<<(std::ostream& os, const Fp2& x) { return os << "(" << x.a_ << " + " << x.b_ << "t)"; }

   private:
    Fp a_, b_;
    std::int64_t n_;
};

inline Fp2 zero_like(const Fp2& x) { return Fp2(zero_like(x.re()), zero_like(x.re()), x.nonresidue()); }
inline Fp2 one_like(const Fp2& x) { return Fp2(one_like(x.re()), zero_like(x.re()), x.nonresidue()); }
inline Fp2 from_int_like(const Fp2& x, std::int64_t v) {
    return Fp2(from_int_like(x.re(), v), zero_like(x.re()), x.nonresidue());
}
inline Fp2 inv(const Fp2& x) { return x.inverse(); }
inline Fp2 exact_div(const Fp2& a, const Fp2& b) { return a * b.inverse(); }

}  // namespace k3pts
