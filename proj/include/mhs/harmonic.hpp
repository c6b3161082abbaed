#pragma once

#include <cstdint>
#include <vector>

#include "mhs/rational.hpp"
#include "mhs/residue.hpp"
#include "mhs/weights.hpp"

namespace mhs {

inline constexpr std::uint64_t kDefaultEnumerationCap = 10'000'000;

/// Exponent vector (s_1, ..., s_n) with index range 0 < k_1 < ... < k_n <= N
/// (strict) or 0 < k_1 <= ... <= k_n <= N (non-strict).
struct MHSSignature {
    std::vector<unsigned> exponents;
    std::uint64_t bound = 0;
    bool strict = true;

    unsigned depth() const { return static_cast<unsigned>(exponents.size()); }
    unsigned weight() const {
        unsigned w = 0;
        for (unsigned s : exponents) w += s;
        return w;
    }
};

/// Alternating variant: entry r_i contributes sgn(r_i)^{k_i} / k_i^{|r_i|}.
struct SignedSignature {
    std::vector<int> entries;
    std::uint64_t bound = 0;
};

/// Exact value by direct enumeration of index tuples; the brute-force
/// oracle for the modular fast paths. Empty ranges give 0.
Rational mhs_exact(const MHSSignature& sig);

/// Exact weighted sum with the character attached at the designated index.
Rational mhs_exact_weighted(const MHSSignature& sig, const WeightChar& weight, std::uint64_t p);

Rational alt_mhs_exact(const SignedSignature& sig);

/// Fast path: prefix dynamic programming in O(depth * N) residue
/// operations. Requires bound < p so every denominator is a unit.
Residue mhs_mod(const MHSSignature& sig, const WeightChar& weight, Modulus m);

/// Same recurrence with a monomial weight base^{k} attached at one index.
Residue mhs_mod_power(const MHSSignature& sig, WeightAttach attach, const Residue& base, Modulus m);

Residue alt_mhs_mod(const SignedSignature& sig, Modulus m);

/// sum_{k=1}^{p-1} x^k / k^n mod m.
Residue power_series_sum_mod(const Residue& x, unsigned n, Modulus m);

/// sum over ordered tuples k_1 + ... + k_n = p (k_i >= 1) of
/// weight(k_1) / (k_1 ... k_n), by direct enumeration of all
/// C(p-1, n-1) compositions; the oracle for the collapsed path. Throws
/// EnumerationCapExceededError when the composition count exceeds cap.
Residue composition_sum_bruteforce(std::uint64_t p, unsigned depth, WeightKind weight, Modulus m,
                                   std::uint64_t cap = kDefaultEnumerationCap);

/// Equivalent composition sum computed as
///   -(n-1)! * sum_{0 < l_{n-2} < ... < l_1 < l < p} weight(p-l) / (l^2 l_1 ... l_{n-2}),
/// i.e. a strict MHS with signature (1,...,1,2) of depth n-1 and the
/// reflected weight on the top index. Valid mod p only (exponent 1).
Residue composition_sum_collapsed(std::uint64_t p, unsigned depth, WeightKind weight, Modulus m);

}  // namespace mhs
