#pragma once

#include <cstdint>
#include <vector>

#include "mhs/rational.hpp"

namespace mhs {

/// B_n, computed by the defining recurrence
///   B_0 = 1,   sum_{j=0}^{n-1} C(n, j) B_j = 0   (n >= 2),
/// so B_1 = -1/2. Values are memoized in a shared table; requesting index n
/// fills 0..n once, and concurrent readers always see a consistent table.
Rational bernoulli_number(unsigned n);

/// B_n(x) via the finite expansion sum_{k=0}^{n} C(n, k) B_{n-k} x^k.
Rational bernoulli_poly(unsigned n, const Rational& x);

enum class Parity { even, odd };

/// Closed forms for Bernoulli polynomials at the seven special points
/// 1/2, 1/4, 3/4, 1/3, 2/3, 1/6, 5/6. The index is 2n (parity even) or
/// 2n+1 (parity odd), n >= 1.
///
/// Even index 2n:
///   B(1/2)          = (2^(1-2n) - 1) B_{2n}
///   B(1/4) = B(3/4) = (2 - 2^(2n)) / 4^(2n) * B_{2n}
///   B(1/3) = B(2/3) = (3 - 3^(2n)) / (2*3^(2n)) * B_{2n}
///   B(1/6) = B(5/6) = (2 - 2^(2n))(3 - 3^(2n)) / (2*6^(2n)) * B_{2n}
/// Odd index 2n+1:
///   B(1/2) = 0,  B(2/3) = -B_{2n+1}(1/3),
///   B(1/6) = -B(5/6) = (1 + 2^(-2n)) B_{2n+1}(1/3);
/// odd-index values at 1/4, 3/4, 1/3 have no closed form here and raise
/// UnsupportedSpecialValueError.
Rational special_value(unsigned n, Parity parity, const Rational& point);

/// Sum of x^k over 0 <= x <= p-1 with x ≡ r (mod m), evaluated both by
/// direct summation and by the closed form
///   (m^k / (k+1)) * (B_{k+1}(p/m + {(r-p)/m}) - B_{k+1}({r/m})).
/// The two routes must agree exactly; a mismatch throws
/// IdentityViolationError and means the implementation is broken.
Int power_sum_ap(std::uint64_t p, std::uint64_t m, unsigned k, std::int64_t r);

/// Coefficients c_r = C(k+1, r) B_r / (k+1) for r = 0..k, such that
/// sum_{x=1}^{N-1} x^k = sum_r c_r N^(k+1-r). Requires k >= 1.
std::vector<Rational> power_sum_coeffs(unsigned k);

}  // namespace mhs
