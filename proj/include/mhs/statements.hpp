#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mhs/harmonic.hpp"
#include "mhs/residue.hpp"

namespace mhs {

/// One concrete parameter tuple to verify. `a`/`b` are only meaningful for
/// the double-sum statement lem-2.5; `n` is ignored by statements with a
/// fixed or absent depth.
struct StatementInstance {
    std::string id;
    std::uint64_t p = 0;
    unsigned n = 0;
    unsigned a = 0;
    unsigned b = 0;
};

enum class Status { pass, fail, skipped };

std::string_view status_name(Status s);

/// Outcome of one instance: both sides as residues with a common modulus,
/// pass iff they are equal. Skips carry a machine-readable reason from
/// {guard, enumeration-cap, p2-cap}. `detail` pinpoints the failing inner
/// argument for pointwise statements (e.g. "x=2").
struct VerificationRecord {
    StatementInstance instance;
    std::uint64_t modulus = 0;
    std::uint64_t lhs = 0;
    std::uint64_t rhs = 0;
    Status status = Status::skipped;
    std::string reason;
    std::string detail;
    std::int64_t micros = 0;
};

struct EvalOptions {
    std::uint64_t enumeration_cap = kDefaultEnumerationCap;
    std::uint64_t p2_prime_cap = 61;
};

enum class StatementKey {
    eq_1_1,
    eq_1_2_even,
    eq_1_2_odd,
    eq_1_3,
    eq_3_6,
    lem_2_4,
    lem_2_5,
    lem_2_6,
    lem_2_7,
    rem_qp2,
    thm_1_1,
    thm_1_2,
    thm_1_3,
};

/// Catalog entry: identity, applicability guard, and evaluator wiring for
/// one congruence. Statement ids are a stable public API.
struct StatementDescriptor {
    std::string id;
    StatementKey key;
    unsigned modulus_exponent = 1;
    bool takes_depth = false;   // sweeps expand n over the depth range
    bool takes_ab = false;      // sweeps expand (a, b) with a + b <= 6
    std::string lhs_text;
    std::string rhs_text;
    std::string guard_text;

    /// True iff the parameter tuple satisfies the statement's hypothesis
    /// (p is additionally required to be an odd prime).
    bool guard(std::uint64_t p, unsigned n, unsigned a, unsigned b) const;
};

/// All thirteen statements, ordered by id.
const std::vector<StatementDescriptor>& catalog();

const StatementDescriptor* find_statement(std::string_view id);

/// Evaluates one instance: runs the guard, computes LHS and RHS residues
/// by independent paths, and compares. Pointwise statements (lem-2.4,
/// lem-2.6) iterate every residue x mod p and pass only if all x pass.
/// Evaluator-level errors surface as skipped records, never as pass/fail.
VerificationRecord evaluate(const StatementInstance& instance, const EvalOptions& options = {});

enum class RhsSumFlavor { thm11_even, thm12_odd, thm13_even };

/// The Bernoulli-sum right-hand sides of the main theorems (full closed
/// form for the branch, including factorial and character-symbol terms),
/// reduced mod p. Each term is certified p-integral before reduction; odd
/// r >= 3 terms vanish with B_r.
Residue rhs_bernoulli_sum(std::uint64_t p, unsigned n, RhsSumFlavor flavor);

}  // namespace mhs
