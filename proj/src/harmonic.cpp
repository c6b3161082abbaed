#include "mhs/harmonic.hpp"

#include <functional>

namespace mhs {

namespace {

// Shared prefix-DP recurrence. term(d, k) must return the full factor for
// index k at depth d (weight times k^{-s_d}), already reduced mod m.
// Strict sums fold depths top-down so each A[d-1] read predates index k;
// non-strict sums fold bottom-up so ties k_{d-1} = k_d are admitted.
template <typename TermFn>
std::uint64_t prefix_dp(unsigned depth, std::uint64_t bound, bool strict, std::uint64_t m,
                        TermFn&& term) {
    std::vector<std::uint64_t> acc(depth + 1, 0);
    acc[0] = 1 % m;
    for (std::uint64_t k = 1; k <= bound; ++k) {
        if (strict) {
            for (unsigned d = depth; d >= 1; --d)
                acc[d] = (acc[d] + mul_mod(acc[d - 1], term(d, k), m)) % m;
        } else {
            for (unsigned d = 1; d <= depth; ++d)
                acc[d] = (acc[d] + mul_mod(acc[d - 1], term(d, k), m)) % m;
        }
    }
    return acc[depth];
}

// Exact analogue of prefix_dp, used only by the enumeration oracles below.
void enumerate_tuples(const MHSSignature& sig, unsigned d, std::uint64_t start,
                      const Rational& partial, Rational& total,
                      const std::function<Rational(unsigned, std::uint64_t)>& factor) {
    const unsigned depth = sig.depth();
    for (std::uint64_t k = start; k <= sig.bound; ++k) {
        Rational next = partial * factor(d, k);
        if (d == depth) {
            total += next;
        } else {
            enumerate_tuples(sig, d + 1, sig.strict ? k + 1 : k, next, total, factor);
        }
    }
}

Rational exact_sum(const MHSSignature& sig,
                   const std::function<Rational(unsigned, std::uint64_t)>& factor) {
    if (sig.depth() == 0) return Rational(0);
    Rational total;
    enumerate_tuples(sig, 1, 1, Rational(1), total, factor);
    return total;
}

std::uint64_t residue_of_int(int w, std::uint64_t m) {
    std::int64_t v = w % static_cast<std::int64_t>(m);
    if (v < 0) v += static_cast<std::int64_t>(m);
    return static_cast<std::uint64_t>(v);
}

void require_unit_bound(std::uint64_t bound, Modulus m) {
    if (bound >= m.prime) throw NonUnitDenominatorError(bound, m.prime);
}

// Weighted DP with per-k weight values supplied for the attached index.
std::uint64_t weighted_dp(const MHSSignature& sig, WeightAttach attach,
                          const std::vector<std::uint64_t>& weight_by_k, Modulus m) {
    const unsigned depth = sig.depth();
    const std::uint64_t mod = m.value;
    const unsigned pos = attach == WeightAttach::first ? 1 : depth;

    // inv_pow[d][k] = k^{-s_d}, with the weight folded in at the attached depth.
    std::vector<std::vector<std::uint64_t>> term(depth + 1);
    std::vector<std::uint64_t> inv(sig.bound + 1, 0);
    for (std::uint64_t k = 1; k <= sig.bound; ++k) inv[k] = inverse_mod(k % mod, mod);
    for (unsigned d = 1; d <= depth; ++d) {
        term[d].assign(sig.bound + 1, 0);
        for (std::uint64_t k = 1; k <= sig.bound; ++k) {
            std::uint64_t t = pow_mod(inv[k], sig.exponents[d - 1], mod);
            if (d == pos) t = mul_mod(t, weight_by_k[k], mod);
            term[d][k] = t;
        }
    }
    return prefix_dp(depth, sig.bound, sig.strict, mod,
                     [&](unsigned d, std::uint64_t k) { return term[d][k]; });
}

}  // namespace

Rational mhs_exact(const MHSSignature& sig) {
    return exact_sum(sig, [&](unsigned d, std::uint64_t k) {
        return Rational(1) / Rational::pow(Rational(Int(k)), sig.exponents[d - 1]);
    });
}

Rational mhs_exact_weighted(const MHSSignature& sig, const WeightChar& weight, std::uint64_t p) {
    const unsigned pos = weight.attach == WeightAttach::first ? 1 : sig.depth();
    return exact_sum(sig, [&](unsigned d, std::uint64_t k) {
        Rational f = Rational(1) / Rational::pow(Rational(Int(k)), sig.exponents[d - 1]);
        if (d == pos) f *= Rational(weight_value(weight.kind, p, k));
        return f;
    });
}

Rational alt_mhs_exact(const SignedSignature& sig) {
    MHSSignature shape;
    shape.bound = sig.bound;
    shape.strict = true;
    for (int r : sig.entries) shape.exponents.push_back(static_cast<unsigned>(r < 0 ? -r : r));
    return exact_sum(shape, [&](unsigned d, std::uint64_t k) {
        Rational f = Rational(1) / Rational::pow(Rational(Int(k)), shape.exponents[d - 1]);
        if (sig.entries[d - 1] < 0 && k % 2 == 1) f = -f;
        return f;
    });
}

Residue mhs_mod(const MHSSignature& sig, const WeightChar& weight, Modulus m) {
    require_unit_bound(sig.bound, m);
    if (sig.depth() == 0) return Residue(0, m);
    std::vector<std::uint64_t> w(sig.bound + 1, 0);
    for (std::uint64_t k = 1; k <= sig.bound; ++k)
        w[k] = residue_of_int(weight_value(weight.kind, m.prime, k), m.value);
    return Residue(weighted_dp(sig, weight.attach, w, m), m);
}

Residue mhs_mod_power(const MHSSignature& sig, WeightAttach attach, const Residue& base,
                      Modulus m) {
    require_unit_bound(sig.bound, m);
    if (sig.depth() == 0) return Residue(0, m);
    std::vector<std::uint64_t> w(sig.bound + 1, 0);
    std::uint64_t running = 1 % m.value;
    for (std::uint64_t k = 1; k <= sig.bound; ++k) {
        running = mul_mod(running, base.value(), m.value);
        w[k] = running;
    }
    return Residue(weighted_dp(sig, attach, w, m), m);
}

Residue alt_mhs_mod(const SignedSignature& sig, Modulus m) {
    require_unit_bound(sig.bound, m);
    const unsigned depth = static_cast<unsigned>(sig.entries.size());
    if (depth == 0) return Residue(0, m);
    const std::uint64_t mod = m.value;

    std::vector<std::vector<std::uint64_t>> term(depth + 1);
    for (unsigned d = 1; d <= depth; ++d) {
        const int entry = sig.entries[d - 1];
        const unsigned exponent = static_cast<unsigned>(entry < 0 ? -entry : entry);
        term[d].assign(sig.bound + 1, 0);
        for (std::uint64_t k = 1; k <= sig.bound; ++k) {
            std::uint64_t t = pow_mod(inverse_mod(k % mod, mod), exponent, mod);
            if (entry < 0 && k % 2 == 1) t = t == 0 ? 0 : mod - t;
            term[d][k] = t;
        }
    }
    std::uint64_t v = prefix_dp(depth, sig.bound, /*strict=*/true, mod,
                                [&](unsigned d, std::uint64_t k) { return term[d][k]; });
    return Residue(v, m);
}

Residue power_series_sum_mod(const Residue& x, unsigned n, Modulus m) {
    const std::uint64_t mod = m.value;
    std::uint64_t sum = 0;
    std::uint64_t xk = 1 % mod;
    for (std::uint64_t k = 1; k < m.prime; ++k) {
        xk = mul_mod(xk, x.value(), mod);
        const std::uint64_t invn = pow_mod(inverse_mod(k, mod), n, mod);
        sum = (sum + mul_mod(xk, invn, mod)) % mod;
    }
    return Residue(sum, m);
}

Residue composition_sum_bruteforce(std::uint64_t p, unsigned depth, WeightKind weight, Modulus m,
                                   std::uint64_t cap) {
    if (depth < 2) throw Error("composition sums need depth >= 2");
    const Int count = binomial(p - 1, static_cast<std::int64_t>(depth) - 1);
    if (count > Int(static_cast<unsigned long>(cap)))
        throw EnumerationCapExceededError(count.get_str(), cap);

    const std::uint64_t mod = m.value;
    std::vector<std::uint64_t> inv(p, 0);
    for (std::uint64_t k = 1; k < p; ++k) inv[k] = inverse_mod(k % mod, mod);

    std::uint64_t total = 0;
    // DFS over parts; part d leaves at least depth-d-1 for the remainder.
    std::function<void(unsigned, std::uint64_t, std::uint64_t)> rec =
        [&](unsigned d, std::uint64_t remaining, std::uint64_t acc) {
            if (d == depth) {
                total = (total + mul_mod(acc, inv[remaining], mod)) % mod;
                return;
            }
            for (std::uint64_t k = 1; k + (depth - d) <= remaining; ++k)
                rec(d + 1, remaining - k, mul_mod(acc, inv[k], mod));
        };
    for (std::uint64_t k1 = 1; k1 + (depth - 1) <= p; ++k1) {
        const std::uint64_t w = residue_of_int(weight_value(weight, p, k1), mod);
        if (w == 0) continue;
        rec(2, p - k1, mul_mod(w, inv[k1], mod));
    }
    return Residue(total, m);
}

Residue composition_sum_collapsed(std::uint64_t p, unsigned depth, WeightKind weight, Modulus m) {
    if (depth < 2) throw Error("composition sums need depth >= 2");
    if (m.exponent != 1) throw Error("collapsed composition sums are congruences mod p only");
    require_unit_bound(p - 1, m);

    MHSSignature sig;
    sig.bound = p - 1;
    sig.strict = true;
    sig.exponents.assign(depth - 1, 1);
    sig.exponents.back() = 2;

    // Transport the weight through k_1 = p - l onto the top index l.
    std::vector<std::uint64_t> w(sig.bound + 1, 0);
    for (std::uint64_t l = 1; l <= sig.bound; ++l)
        w[l] = residue_of_int(weight_value(weight, p, p - l), m.value);

    const std::uint64_t inner = weighted_dp(sig, WeightAttach::last, w, m);
    const std::uint64_t fac = Residue::from_int(factorial(depth - 1), m).value();
    return -Residue(mul_mod(fac, inner, m.value), m);
}

}  // namespace mhs
