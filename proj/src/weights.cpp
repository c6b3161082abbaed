#include "mhs/weights.hpp"

#include <stdexcept>

namespace mhs {

namespace {

int parity_sign(std::uint64_t m) { return m % 2 == 0 ? 1 : -1; }

constexpr WeightKind kAllKinds[] = {
    WeightKind::none,
    WeightKind::alt,
    WeightKind::chi3_k,
    WeightKind::delta3_k,
    WeightKind::alt_chi3,
    WeightKind::alt_delta3,
    WeightKind::alt_chi3_reflected,
    WeightKind::reflected_alt_chi3,
    WeightKind::shifted_alt_chi3,
    WeightKind::shifted_alt_delta3,
    WeightKind::reflected_alt_delta3,
};

}  // namespace

int chi3(std::int64_t k) {
    switch (((k % 3) + 3) % 3) {
        case 0: return 0;
        case 1: return 1;
        default: return -1;
    }
}

int delta3(std::int64_t k) { return k % 3 == 0 ? 2 : -1; }

int weight_value(WeightKind kind, std::uint64_t p, std::uint64_t k) {
    const auto sk = static_cast<std::int64_t>(k);
    const auto sp = static_cast<std::int64_t>(p);
    switch (kind) {
        case WeightKind::none: return 1;
        case WeightKind::alt: return parity_sign(k);
        case WeightKind::chi3_k: return chi3(sk);
        case WeightKind::delta3_k: return delta3(sk);
        case WeightKind::alt_chi3: return parity_sign(k) * chi3(sk);
        case WeightKind::alt_delta3: return parity_sign(k) * delta3(sk);
        case WeightKind::alt_chi3_reflected: return parity_sign(k) * chi3(sp - sk);
        case WeightKind::reflected_alt_chi3: return parity_sign(p + k) * chi3(sp - sk);
        case WeightKind::shifted_alt_chi3: return alt_chi3_by_mod6(p + k);
        case WeightKind::shifted_alt_delta3: return alt_delta3_by_mod6(p + k);
        case WeightKind::reflected_alt_delta3: return parity_sign(p + k) * delta3(sp - sk);
    }
    throw std::logic_error("unhandled weight kind");
}

std::array<int, 6> weight_table(WeightKind kind, std::uint64_t p) {
    std::array<int, 6> t{};
    for (std::uint64_t k = 0; k < 6; ++k)
        t[k] = weight_value(kind, p, k + 6 * p);  // k+6p keeps p-k arguments nonnegative
    return t;
}

int alt_chi3_by_mod6(std::uint64_t m) {
    static constexpr int table[6] = {0, -1, -1, 0, 1, 1};
    return table[m % 6];
}

int alt_delta3_by_mod6(std::uint64_t m) {
    static constexpr int table[6] = {2, 1, -1, -2, -1, 1};
    return table[m % 6];
}

std::string_view weight_name(WeightKind kind) {
    switch (kind) {
        case WeightKind::none: return "none";
        case WeightKind::alt: return "alt";
        case WeightKind::chi3_k: return "chi3";
        case WeightKind::delta3_k: return "delta3";
        case WeightKind::alt_chi3: return "alt*chi3";
        case WeightKind::alt_delta3: return "alt*delta3";
        case WeightKind::alt_chi3_reflected: return "alt*chi3(p-k)";
        case WeightKind::reflected_alt_chi3: return "alt(p-k)*chi3(p-k)";
        case WeightKind::shifted_alt_chi3: return "alt(p+k)*chi3(p+k)";
        case WeightKind::shifted_alt_delta3: return "alt(p+k)*delta3(p+k)";
        case WeightKind::reflected_alt_delta3: return "alt(p-k)*delta3(p-k)";
    }
    return "?";
}

WeightKind weight_from_name(std::string_view name) {
    for (WeightKind kind : kAllKinds) {
        if (weight_name(kind) == name) return kind;
    }
    throw std::invalid_argument("unknown weight kind '" + std::string(name) + "'");
}

std::span<const WeightKind> all_weight_kinds() { return kAllKinds; }

}  // namespace mhs
