#include "mhs/residue.hpp"

namespace mhs {

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(static_cast<__uint128_t>(a) * b % m);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    base %= m;
    while (exp > 0) {
        if (exp & 1) r = mul_mod(r, base, m);
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    return r;
}

std::uint64_t inverse_mod(std::uint64_t a, std::uint64_t m) {
    // Extended gcd on (a, m); works for prime and prime-square moduli alike.
    std::int64_t t = 0, new_t = 1;
    std::int64_t r = static_cast<std::int64_t>(m), new_r = static_cast<std::int64_t>(a % m);
    while (new_r != 0) {
        std::int64_t q = r / new_r;
        std::int64_t tmp = t - q * new_t;
        t = new_t;
        new_t = tmp;
        tmp = r - q * new_r;
        r = new_r;
        new_r = tmp;
    }
    if (r != 1) throw NonUnitError(a % m);
    if (t < 0) t += static_cast<std::int64_t>(m);
    return static_cast<std::uint64_t>(t);
}

Residue Residue::from_int(std::int64_t x, Modulus m) {
    std::int64_t v = x % static_cast<std::int64_t>(m.value);
    if (v < 0) v += static_cast<std::int64_t>(m.value);
    return Residue(static_cast<std::uint64_t>(v), m);
}

Residue Residue::from_int(const Int& x, Modulus m) {
    Int r;
    Int mm(static_cast<unsigned long>(m.value));
    mpz_mod(r.get_mpz_t(), x.get_mpz_t(), mm.get_mpz_t());
    return Residue(r.get_ui(), m);
}

std::string Residue::to_string() const {
    return std::to_string(v_) + " (mod " + std::to_string(m_.value) + ")";
}

bool is_p_integral(const Rational& q, std::uint64_t p) {
    return !mpz_divisible_ui_p(q.den().get_mpz_t(), p);
}

Residue reduce(const Rational& q, Modulus m) {
    if (!is_p_integral(q, m.prime))
        throw NotPIntegralError(m.prime, q.den().get_str());
    Residue num = Residue::from_int(q.num(), m);
    Residue den = Residue::from_int(q.den(), m);
    return num * den.inverse();
}

}  // namespace mhs
