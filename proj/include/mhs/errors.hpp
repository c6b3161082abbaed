#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace mhs {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DivisionByZeroError : Error {
    DivisionByZeroError() : Error("division by zero") {}
};

// Raised by reduce() when the denominator is divisible by the prime.
struct NotPIntegralError : Error {
    NotPIntegralError(std::uint64_t prime, std::string denominator)
        : Error("value is not " + std::to_string(prime) +
                "-integral (denominator " + denominator + ")"),
          prime(prime),
          denominator(std::move(denominator)) {}

    std::uint64_t prime;
    std::string denominator;
};

struct ModulusMismatchError : Error {
    ModulusMismatchError() : Error("residue operands have different moduli") {}
};

struct NonUnitError : Error {
    explicit NonUnitError(std::uint64_t value)
        : Error("no inverse: " + std::to_string(value) +
                " is not a unit for this modulus") {}
};

// Harmonic evaluators require bound N < p so every denominator is a unit.
struct NonUnitDenominatorError : Error {
    NonUnitDenominatorError(std::uint64_t bound, std::uint64_t prime)
        : Error("bound " + std::to_string(bound) +
                " admits non-unit denominators mod " + std::to_string(prime)) {}
};

struct EnumerationCapExceededError : Error {
    EnumerationCapExceededError(std::string terms, std::uint64_t cap)
        : Error("composition enumeration needs " + terms +
                " terms, cap is " + std::to_string(cap)) {}
};

struct UnsupportedSpecialValueError : Error {
    explicit UnsupportedSpecialValueError(const std::string& what)
        : Error("no closed form for " + what) {}
};

// Two supposedly equal evaluation routes disagreed: an implementation bug.
struct IdentityViolationError : Error {
    using Error::Error;
};

}  // namespace mhs
