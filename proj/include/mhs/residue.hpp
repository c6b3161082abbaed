#pragma once

#include <cstdint>
#include <string>

#include "mhs/rational.hpp"

namespace mhs {

/// Modulus p^e with p an odd prime and e in {1, 2}.
struct Modulus {
    std::uint64_t prime = 0;
    unsigned exponent = 1;
    std::uint64_t value = 0;

    static Modulus p(std::uint64_t prime) { return Modulus{prime, 1, prime}; }
    static Modulus p2(std::uint64_t prime) { return Modulus{prime, 2, prime * prime}; }

    friend bool operator==(const Modulus&, const Modulus&) = default;
};

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m);
std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m);

/// Inverse by extended gcd; throws NonUnitError when gcd(a, m) != 1.
std::uint64_t inverse_mod(std::uint64_t a, std::uint64_t m);

/// Integer residue paired with its modulus. Mixed-modulus arithmetic is an
/// error, not a silent coercion.
class Residue {
public:
    Residue() = default;
    Residue(std::uint64_t value, Modulus m) : v_(value % m.value), m_(m) {}

    static Residue from_int(std::int64_t x, Modulus m);
    static Residue from_int(const Int& x, Modulus m);

    std::uint64_t value() const { return v_; }
    const Modulus& modulus() const { return m_; }
    bool is_zero() const { return v_ == 0; }

    Residue inverse() const { return Residue(inverse_mod(v_, m_.value), m_); }
    Residue pow(std::uint64_t e) const { return Residue(pow_mod(v_, e, m_.value), m_); }

    friend Residue operator+(const Residue& a, const Residue& b) {
        a.check(b);
        std::uint64_t s = a.v_ + b.v_;
        if (s >= a.m_.value) s -= a.m_.value;
        return Residue(s, a.m_);
    }
    friend Residue operator-(const Residue& a, const Residue& b) {
        a.check(b);
        std::uint64_t s = a.v_ >= b.v_ ? a.v_ - b.v_ : a.v_ + a.m_.value - b.v_;
        return Residue(s, a.m_);
    }
    friend Residue operator*(const Residue& a, const Residue& b) {
        a.check(b);
        return Residue(mul_mod(a.v_, b.v_, a.m_.value), a.m_);
    }
    Residue operator-() const {
        return Residue(v_ == 0 ? 0 : m_.value - v_, m_);
    }
    friend bool operator==(const Residue& a, const Residue& b) {
        a.check(b);
        return a.v_ == b.v_;
    }

    std::string to_string() const;

private:
    void check(const Residue& o) const {
        if (!(m_ == o.m_)) throw ModulusMismatchError();
    }

    std::uint64_t v_ = 0;
    Modulus m_{};
};

/// True iff p does not divide the (lowest-terms) denominator of q.
bool is_p_integral(const Rational& q, std::uint64_t p);

/// Maps a p-integral rational to num * den^-1 mod m; a ring homomorphism on
/// the p-integral rationals. Throws NotPIntegralError otherwise.
Residue reduce(const Rational& q, Modulus m);

}  // namespace mhs
