#pragma once

#include <cstdint>
#include <vector>

namespace mhs {

/// Deterministic primality by trial division; ample for sweep-scale inputs.
bool is_prime(std::uint64_t n);

/// All primes in [lo, hi], ascending.
std::vector<std::uint64_t> primes_in(std::uint64_t lo, std::uint64_t hi);

}  // namespace mhs
