#include "mhs/rational.hpp"

namespace mhs {

Rational::Rational(const Int& num, const Int& den) {
    if (den == 0) throw DivisionByZeroError();
    q_ = mpq_class(num, den);
    q_.canonicalize();
}

Rational::Rational(long num, long den) : Rational(Int(num), Int(den)) {}

Rational Rational::from_string(std::string_view s) {
    mpq_class q;
    if (q.set_str(std::string(s), 10) != 0)
        throw Error("cannot parse rational from '" + std::string(s) + "'");
    if (q.get_den() == 0) throw DivisionByZeroError();
    q.canonicalize();
    return Rational(std::move(q));
}

Rational Rational::inverse() const {
    if (is_zero()) throw DivisionByZeroError();
    return Rational(mpq_class(1) / q_);
}

Rational operator/(const Rational& a, const Rational& b) {
    if (b.is_zero()) throw DivisionByZeroError();
    return Rational(mpq_class(a.q_ / b.q_));
}

Rational Rational::pow(const Rational& base, long exp) {
    if (exp < 0) return pow(base.inverse(), -exp);
    mpq_class r;
    mpz_pow_ui(r.get_num_mpz_t(), base.q_.get_num_mpz_t(), static_cast<unsigned long>(exp));
    mpz_pow_ui(r.get_den_mpz_t(), base.q_.get_den_mpz_t(), static_cast<unsigned long>(exp));
    return Rational(std::move(r));  // powers of a canonical fraction stay canonical
}

Int rational_floor(const Rational& q) {
    Int f;
    mpz_fdiv_q(f.get_mpz_t(), q.num().get_mpz_t(), q.den().get_mpz_t());
    return f;
}

Rational frac_part(const Rational& q) {
    return q - Rational(rational_floor(q));
}

Int binomial(std::uint64_t n, std::int64_t k) {
    if (k < 0 || static_cast<std::uint64_t>(k) > n) return Int(0);
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), n, static_cast<unsigned long>(k));
    return r;
}

Int int_pow(std::uint64_t base, std::uint64_t exp) {
    Int r;
    mpz_ui_pow_ui(r.get_mpz_t(), base, exp);
    return r;
}

Int factorial(std::uint64_t n) {
    Int r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

}  // namespace mhs
