#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

#include "mhs/errors.hpp"

namespace mhs {

using Int = mpz_class;

/// Arbitrary-precision signed rational, always kept in lowest terms with a
/// positive denominator; zero is 0/1. All arithmetic is exact.
class Rational {
public:
    Rational() : q_(0) {}
    Rational(long n) : q_(n) {}                 // NOLINT(*explicit*)
    Rational(const Int& n) : q_(n) {}           // NOLINT(*explicit*)
    Rational(const Int& num, const Int& den);
    Rational(long num, long den);

    /// Parses "a/b" or "a" (base 10).
    static Rational from_string(std::string_view s);

    const Int num() const { return q_.get_num(); }
    const Int den() const { return q_.get_den(); }

    bool is_zero() const { return sgn(q_) == 0; }
    bool is_negative() const { return sgn(q_) < 0; }
    bool is_integer() const { return q_.get_den() == 1; }

    /// Multiplicative inverse; defined only for nonzero values.
    Rational inverse() const;

    std::string to_string() const { return q_.get_str(); }

    friend Rational operator+(const Rational& a, const Rational& b) { return Rational(a.q_ + b.q_); }
    friend Rational operator-(const Rational& a, const Rational& b) { return Rational(a.q_ - b.q_); }
    friend Rational operator*(const Rational& a, const Rational& b) { return Rational(a.q_ * b.q_); }
    friend Rational operator/(const Rational& a, const Rational& b);
    Rational operator-() const { return Rational(mpq_class(-q_)); }

    Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
    Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
    Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.q_ != b.q_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.q_ < b.q_; }

    /// Exact power; negative exponents require a nonzero base.
    static Rational pow(const Rational& base, long exp);

private:
    explicit Rational(mpq_class q) : q_(std::move(q)) {}

    mpq_class q_;
};

/// floor(q), taken toward minus infinity.
Int rational_floor(const Rational& q);

/// q - floor(q); always in [0, 1), so frac_part(-4/3) = 2/3.
Rational frac_part(const Rational& q);

/// Binomial coefficient with the usual out-of-range convention
/// (k < 0 or k > n gives 0).
Int binomial(std::uint64_t n, std::int64_t k);

/// base^exp for machine-sized bases with exact big-integer result.
Int int_pow(std::uint64_t base, std::uint64_t exp);

Int factorial(std::uint64_t n);

}  // namespace mhs
