#pragma once

#include <ostream>

#include "k3pts/algebra/integer.hpp"
#include "k3pts/algebra/poly.hpp"

namespace k3pts {

/// a + b*sqrt(d) in Q(sqrt(d)), d squarefree and != 0, 1.
class QuadFieldElem {
   public:
    QuadFieldElem(BigInt d, Rat a, Rat b = 0) : d_(std::move(d)), a_(std::move(a)), b_(std::move(b)) {}

    /// Validates d; used at the boundary where a field is first chosen.
    static QuadFieldElem checked(const BigInt& d, const Rat& a, const Rat& b) {
        if (d == 0 || d == 1 || !is_squarefree(d)) throw invalid_argument("d must be squarefree and != 0, 1: " + d.str());
        return QuadFieldElem(d, a, b);
    }
    static QuadFieldElem sqrt_d(const BigInt& d) { return checked(d, 0, 1); }

    const BigInt& d() const { return d_; }
    const Rat& rational_part() const { return a_; }
    const Rat& sqrt_part() const { return b_; }
    bool is_rational() const { return b_ == 0; }

    friend QuadFieldElem operator+(const QuadFieldElem& x, const QuadFieldElem& y) {
        check(x, y);
        return {x.d_, x.a_ + y.a_, x.b_ + y.b_};
    }
    friend QuadFieldElem operator-(const QuadFieldElem& x, const QuadFieldElem& y) {
        check(x, y);
        return {x.d_, x.a_ - y.a_, x.b_ - y.b_};
    }
    friend QuadFieldElem operator*(const QuadFieldElem& x, const QuadFieldElem& y) {
        check(x, y);
        return {x.d_, x.a_ * y.a_ + Rat(x.d_) * x.b_ * y.b_, x.a_ * y.b_ + x.b_ * y.a_};
    }
    QuadFieldElem operator-() const { return {d_, -a_, -b_}; }
    QuadFieldElem& operator+=(const QuadFieldElem& y) { return *this = *this + y; }
    QuadFieldElem& operator-=(const QuadFieldElem& y) { return *this = *this - y; }
    QuadFieldElem& operator*=(const QuadFieldElem& y) { return *this = *this * y; }
    friend bool operator==(const QuadFieldElem& x, const QuadFieldElem& y) {
        return x.a_ == y.a_ && x.b_ == y.b_ && (x.d_ == y.d_ || (x.b_ == 0));
    }
    friend bool operator!=(const QuadFieldElem& x, const QuadFieldElem& y) { return !(x == y); }

    /// Galois conjugation sigma(a + b sqrt d) = a - b sqrt d.
    QuadFieldElem conj() const { return {d_, a_, -b_}; }
    Rat norm() const { return a_ * a_ - Rat(d_) * b_ * b_; }
    Rat trace() const { return 2 * a_; }
    QuadFieldElem inverse() const {
        Rat n = norm();
        if (n == 0) throw invalid_argument("inverse of zero in Q(sqrt d)");
        return {d_, a_ / n, -b_ / n};
    }

    friend std::ostream& operator<<(std::ostream& os, const QuadFieldElem& x) {
        return os << to_string(x.a_) << " + " << to_string(x.b_) << "*sqrt(" << x.d_ << ")";
    }

   private:
    static void check(const QuadFieldElem& x, const QuadFieldElem& y) {
        if (x.d_ != y.d_) throw invalid_argument("mixing elements of different quadratic fields");
    }

    BigInt d_;
    Rat a_, b_;
};

inline QuadFieldElem zero_like(const QuadFieldElem& x) { return {x.d(), 0, 0}; }
inline QuadFieldElem one_like(const QuadFieldElem& x) { return {x.d(), 1, 0}; }
inline QuadFieldElem from_int_like(const QuadFieldElem& x, std::int64_t v) { return {x.d(), Rat(v), 0}; }
inline QuadFieldElem inv(const QuadFieldElem& x) { return x.inverse(); }
inline QuadFieldElem exact_div(const QuadFieldElem& a, const QuadFieldElem& b) { return a * b.inverse(); }

inline Poly<QuadFieldElem> conjugate(const Poly<QuadFieldElem>& f) {
    std::vector<QuadFieldElem> c;
    for (const auto& x : f.coeffs()) c.push_back(x.conj());
    return Poly<QuadFieldElem>(std::move(c), f.zero());
}

}  // namespace k3pts
