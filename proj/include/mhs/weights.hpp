#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>

namespace mhs {

/// chi3(k): the quadratic character mod 3, i.e. 0, 1, -1 for k ≡ 0, 1, 2.
int chi3(std::int64_t k);

/// delta3(k) = chi3(k+1) - chi3(k-1), which simplifies to 2 when 3 | k and
/// -1 otherwise.
int delta3(std::int64_t k);

/// Periodic coefficient attached to one index of a harmonic sum. Every kind
/// has period dividing 6 in k once p is fixed.
enum class WeightKind {
    none,                  // 1
    alt,                   // (-1)^k
    chi3_k,                // chi3(k)
    delta3_k,              // delta3(k)
    alt_chi3,              // (-1)^k chi3(k)
    alt_delta3,            // (-1)^k delta3(k)
    alt_chi3_reflected,    // (-1)^k chi3(p-k)
    reflected_alt_chi3,    // (-1)^(p-k) chi3(p-k)
    shifted_alt_chi3,      // (-1)^(p+k) chi3(p+k)
    shifted_alt_delta3,    // (-1)^(p+k) delta3(p+k)
    reflected_alt_delta3,  // (-1)^(p-k) delta3(p-k)
};

/// Which index of the tuple carries the weight.
enum class WeightAttach { first, last };

struct WeightChar {
    WeightKind kind = WeightKind::none;
    WeightAttach attach = WeightAttach::last;
};

/// Weight value at index k (integer in [-2, 2]).
int weight_value(WeightKind kind, std::uint64_t p, std::uint64_t k);

/// The same weight as a lookup table indexed by k mod 6.
std::array<int, 6> weight_table(WeightKind kind, std::uint64_t p);

/// (-1)^m chi3(m) as a function of m mod 6: {0, -1, -1, 0, 1, 1}.
int alt_chi3_by_mod6(std::uint64_t m);

/// (-1)^m delta3(m) as a function of m mod 6: {2, 1, -1, -2, -1, 1}.
int alt_delta3_by_mod6(std::uint64_t m);

std::string_view weight_name(WeightKind kind);
WeightKind weight_from_name(std::string_view name);
std::span<const WeightKind> all_weight_kinds();

}  // namespace mhs
