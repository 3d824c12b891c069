#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace k3pts {

/// Caller supplied something outside an operation's domain (wrong arity,
/// overlapping place sets, non-coprime moduli, ...).
class invalid_argument : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

/// Mathematically well-formed input for which the requested object does not
/// exist or is degenerate (bad reduction, Weierstrass points, ...).
class domain_error : public std::domain_error {
   public:
    using std::domain_error::domain_error;
};

class bad_reduction : public domain_error {
   public:
    explicit bad_reduction(std::int64_t p)
        : domain_error("bad reduction at p = " + std::to_string(p)), prime_(p) {}
    std::int64_t prime() const noexcept { return prime_; }

   private:
    std::int64_t prime_;
};

class degenerate_input : public domain_error {
   public:
    using domain_error::domain_error;
};

/// A computed quantity violated an identity that must always hold.
class consistency_error : public std::logic_error {
   public:
    using std::logic_error::logic_error;
};

}  // namespace k3pts
