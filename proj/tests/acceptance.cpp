// Acceptance suite: runs every criterion end to end at exact (zero)
// tolerance and prints one pass/fail line each. A criterion that fails
// prints the offending instances; the process exits nonzero if any
// criterion failed.

#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "mhs/bernoulli.hpp"
#include "mhs/harmonic.hpp"
#include "mhs/primes.hpp"
#include "mhs/statements.hpp"
#include "mhs/sweep.hpp"

using namespace mhs;

namespace {

struct Outcome {
    bool ok = true;
    std::string detail;
};

std::string brief_failures(const SweepReport& report, std::size_t limit = 6) {
    std::ostringstream out;
    std::size_t shown = 0;
    for (const auto& r : report.records) {
        if (r.status != Status::fail) continue;
        if (shown++ < limit) {
            out << (shown == 1 ? "" : ", ") << r.instance.id << "(p=" << r.instance.p;
            if (r.instance.n != 0) out << ",n=" << r.instance.n;
            out << ")";
        }
    }
    if (shown > limit) out << ", ... " << shown << " failing instances total";
    return out.str();
}

Outcome expect_all_pass(const SweepReport& report) {
    Outcome o;
    std::ostringstream detail;
    detail << report.summary.pass << " pass, " << report.summary.fail << " fail, "
           << report.summary.skipped << " skipped";
    if (report.summary.fail != 0) {
        o.ok = false;
        detail << " — " << brief_failures(report);
    }
    if (report.summary.pass == 0) o.ok = false;
    o.detail = detail.str();
    return o;
}

// 1. thm-1.1/1.2/1.3 over 5 <= p <= 101, n <= 6, collapsed LHS path
//    (enumeration cap 0 disables the brute-force cross-check entirely).
Outcome criterion_main_theorems() {
    SweepConfig config;
    config.p_min = 5;
    config.p_max = 101;
    config.n_min = 1;
    config.n_max = 6;
    config.statements = {"thm-1.1", "thm-1.2", "thm-1.3"};
    config.enumeration_cap = 0;
    return expect_all_pass(run_sweep(config));
}

// 2. eq-1.1, eq-1.2-even, eq-1.3, lem-2.5, lem-2.7, eq-3.6, rem-qp2 over
//    5 <= p <= 101 at the applicable depths.
Outcome criterion_prior_work() {
    SweepConfig config;
    config.p_min = 5;
    config.p_max = 101;
    config.n_min = 1;
    config.n_max = 6;
    config.statements = {"eq-1.1", "eq-1.2-even", "eq-1.3", "lem-2.5", "lem-2.7", "eq-3.6", "rem-qp2"};
    return expect_all_pass(run_sweep(config));
}

// 3. eq-1.2-odd mod p^2 for odd n <= 5 and max(n+2,5) <= p <= 61.
Outcome criterion_mod_p2() {
    Outcome o;
    std::size_t pass = 0;
    std::ostringstream bad;
    for (unsigned n : {1u, 3u, 5u}) {
        for (std::uint64_t p : primes_in(std::max<std::uint64_t>(n + 2, 5), 61)) {
            const VerificationRecord r = evaluate({"eq-1.2-odd", p, n, 0, 0});
            if (r.status == Status::pass && r.modulus == p * p) {
                ++pass;
            } else {
                o.ok = false;
                bad << " (p=" << p << ",n=" << n << ":" << status_name(r.status) << ")";
            }
        }
    }
    o.detail = std::to_string(pass) + " instances mod p^2" + bad.str();
    return o;
}

// 4. lem-2.4 and lem-2.6 pointwise over every x mod p, 5 <= p <= 31, n <= 4.
Outcome criterion_polynomial_congruences() {
    SweepConfig config;
    config.p_min = 5;
    config.p_max = 31;
    config.n_min = 1;
    config.n_max = 4;
    config.statements = {"lem-2.4", "lem-2.6"};
    return expect_all_pass(run_sweep(config));
}

// 5a. composition_sum_collapsed == composition_sum_bruteforce for all
//     5 <= p <= 31, 2 <= n <= 5, every weight kind.
// 5b. mhs_mod == reduce(weighted mhs_exact) on the harmonic-module grid.
Outcome criterion_oracle_equivalence() {
    Outcome o;
    std::size_t checked = 0;
    for (std::uint64_t p : primes_in(5, 31)) {
        const Modulus m = Modulus::p(p);
        for (unsigned depth = 2; depth <= 5; ++depth) {
            if (p <= depth + 1) continue;
            for (WeightKind kind : all_weight_kinds()) {
                ++checked;
                if (!(composition_sum_bruteforce(p, depth, kind, m) ==
                      composition_sum_collapsed(p, depth, kind, m))) {
                    o.ok = false;
                    o.detail += " composition mismatch p=" + std::to_string(p) +
                                " n=" + std::to_string(depth) + " w=" + std::string(weight_name(kind));
                }
            }
        }
    }

    std::vector<std::vector<unsigned>> signatures;
    for (unsigned s1 = 1; s1 <= 3; ++s1) {
        signatures.push_back({s1});
        for (unsigned s2 = 1; s2 <= 3; ++s2) {
            signatures.push_back({s1, s2});
            for (unsigned s3 = 1; s3 <= 3; ++s3) signatures.push_back({s1, s2, s3});
        }
    }
    for (std::uint64_t p : {29ull, 31ull}) {
        for (const auto& exps : signatures) {
            for (bool strict : {true, false}) {
                for (WeightKind kind : all_weight_kinds()) {
                    const MHSSignature sig{std::vector<unsigned>(exps), 25, strict};
                    const Rational exact = mhs_exact_weighted(sig, {kind, WeightAttach::last}, p);
                    for (Modulus m : {Modulus::p(p), Modulus::p2(p)}) {
                        ++checked;
                        if (!(mhs_mod(sig, {kind, WeightAttach::last}, m) == reduce(exact, m))) {
                            o.ok = false;
                            o.detail += " dp mismatch p=" + std::to_string(p);
                        }
                    }
                }
            }
        }
    }
    if (o.ok) o.detail = std::to_string(checked) + " oracle comparisons";
    return o;
}

// 6. The six anchor values, each evaluated directly and matched inside a
//    sweep report.
Outcome criterion_spot_values() {
    struct Spot {
        const char* id;
        std::uint64_t p;
        unsigned n;
        std::uint64_t value;
    };
    const Spot spots[] = {
        {"eq-1.3", 5, 0, 3}, {"thm-1.1", 5, 1, 1}, {"thm-1.2", 5, 2, 4},
        {"thm-1.3", 7, 3, 4}, {"lem-2.7", 5, 2, 2}, {"rem-qp2", 5, 0, 1},
    };
    Outcome o;
    for (const Spot& s : spots) {
        const VerificationRecord direct = evaluate({s.id, s.p, s.n, 0, 0});
        bool ok = direct.status == Status::pass && direct.lhs == s.value && direct.rhs == s.value;

        SweepConfig config;
        config.p_min = 5;
        config.p_max = s.p;
        config.n_min = 1;
        config.n_max = std::max(s.n, 1u);
        config.statements = {s.id};
        bool in_sweep = false;
        for (const auto& r : run_sweep(config).records) {
            if (r.instance.p == s.p && (r.instance.n == s.n || !find_statement(s.id)->takes_depth) &&
                r.status == Status::pass && r.lhs == s.value) {
                in_sweep = true;
            }
        }
        if (!(ok && in_sweep)) {
            o.ok = false;
            o.detail += std::string(" ") + s.id + " expected " + std::to_string(s.value);
        }
    }
    if (o.ok) o.detail = "6 anchors, direct and swept";
    return o;
}

// 7. Exact identity suites: progression power sums, special values,
//    reflection / multiplication / difference equations, von Staudt-
//    Clausen, Wolstenholme.
Outcome criterion_exact_identities() {
    Outcome o;
    std::size_t checked = 0;
    auto fail = [&](const std::string& what) {
        o.ok = false;
        o.detail += " " + what;
    };

    // progression power sums: direct vs closed form (internal cross-check)
    for (std::uint64_t p = 1; p <= 30; ++p)
        for (std::uint64_t m = 1; m <= 6; ++m)
            for (unsigned k = 0; k <= 8; ++k)
                for (std::int64_t r = -static_cast<std::int64_t>(m); r <= static_cast<std::int64_t>(m); ++r) {
                    ++checked;
                    try {
                        power_sum_ap(p, m, k, r);
                    } catch (const IdentityViolationError&) {
                        fail("power-sum(p=" + std::to_string(p) + ")");
                    }
                }

    // special values vs direct evaluation, indices <= 15
    const Rational pts_even[] = {{1, 2}, {1, 4}, {3, 4}, {1, 3}, {2, 3}, {1, 6}, {5, 6}};
    const Rational pts_odd[] = {{1, 2}, {2, 3}, {1, 6}, {5, 6}};
    for (unsigned n = 1; n <= 7; ++n) {
        for (const Rational& x : pts_even) {
            ++checked;
            if (!(special_value(n, Parity::even, x) == bernoulli_poly(2 * n, x)))
                fail("special-even(" + std::to_string(2 * n) + ")");
        }
        for (const Rational& x : pts_odd) {
            ++checked;
            if (!(special_value(n, Parity::odd, x) == bernoulli_poly(2 * n + 1, x)))
                fail("special-odd(" + std::to_string(2 * n + 1) + ")");
        }
    }

    // reflection, multiplication, difference
    for (unsigned n = 0; n <= 20; ++n)
        for (const Rational& x : {Rational(1, 3), Rational(1, 4), Rational(1, 6), Rational(2, 5)}) {
            ++checked;
            const Rational rhs = bernoulli_poly(n, x);
            if (!(bernoulli_poly(n, Rational(1) - x) == (n % 2 == 0 ? rhs : -rhs))) fail("reflection");
        }
    for (unsigned a : {2u, 3u})
        for (unsigned n = 1; n <= 12; ++n)
            for (const Rational& x : {Rational(1, 6), Rational(1, 4)}) {
                ++checked;
                Rational sum;
                for (unsigned k = 0; k < a; ++k) sum += bernoulli_poly(n, x + Rational(Int(k), Int(a)));
                if (!(bernoulli_poly(n, Rational(Int(a)) * x) ==
                      Rational::pow(Rational(Int(a)), static_cast<long>(n) - 1) * sum))
                    fail("multiplication");
            }
    for (unsigned n = 1; n <= 12; ++n)
        for (const Rational& x : {Rational(0), Rational(1), Rational(1, 3), Rational(-2, 7)}) {
            ++checked;
            if (!(bernoulli_poly(n, x + Rational(1)) - bernoulli_poly(n, x) ==
                  Rational(Int(n)) * Rational::pow(x, static_cast<long>(n) - 1)))
                fail("difference");
        }

    // von Staudt-Clausen, even indices <= 60
    for (unsigned n = 2; n <= 60; n += 2) {
        ++checked;
        Rational v = bernoulli_number(n);
        for (std::uint64_t prime : primes_in(2, n + 1))
            if (n % (prime - 1) == 0) v += Rational(Int(1), Int(static_cast<unsigned long>(prime)));
        if (!v.is_integer()) fail("von-staudt-clausen(" + std::to_string(n) + ")");
    }

    // Wolstenholme mod p^2 for 5 <= p <= 97
    for (std::uint64_t p : primes_in(5, 97)) {
        ++checked;
        Rational h;
        for (std::uint64_t k = 1; k < p; ++k) h += Rational(Int(1), Int(static_cast<unsigned long>(k)));
        if (reduce(h, Modulus::p2(p)).value() != 0) fail("wolstenholme(" + std::to_string(p) + ")");
    }

    if (o.ok) o.detail = std::to_string(checked) + " exact identities";
    return o;
}

// 8. Bytewise-identical reports (minus timing) across worker counts, and
//    exit code 0 on an all-pass sweep.
Outcome criterion_determinism() {
    SweepConfig config;
    config.p_min = 5;
    config.p_max = 61;
    config.n_min = 1;
    config.n_max = 5;
    config.statements = {"eq-1.1", "eq-1.2-even", "eq-1.2-odd", "eq-1.3", "lem-2.5", "lem-2.7",
                         "eq-3.6", "rem-qp2"};
    config.workers = 1;
    const SweepReport serial = run_sweep(config);
    config.workers = 8;
    const SweepReport parallel = run_sweep(config);

    Outcome o;
    if (report_json(serial, false) != report_json(parallel, false)) {
        o.ok = false;
        o.detail += " json reports differ across worker counts";
    }
    if (report_csv(serial, false) != report_csv(parallel, false)) {
        o.ok = false;
        o.detail += " csv reports differ across worker counts";
    }
    if (exit_code_for(parallel) != 0) {
        o.ok = false;
        o.detail += " exit code nonzero (" + std::to_string(parallel.summary.fail) + " fails)";
    }
    if (o.ok)
        o.detail = std::to_string(parallel.records.size()) + " records identical at 1 and 8 workers";
    return o;
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
        {"main-theorem sweep (thm-1.1/1.2/1.3, p <= 101, n <= 6, collapsed path)", criterion_main_theorems},
        {"prior-work sweep (eq-1.1, eq-1.2-even, eq-1.3, lem-2.5, lem-2.7, eq-3.6, rem-qp2)", criterion_prior_work},
        {"mod p^2 branch (eq-1.2-odd, odd n <= 5, p <= 61)", criterion_mod_p2},
        {"polynomial congruences for every x (lem-2.4, lem-2.6, p <= 31, n <= 4)", criterion_polynomial_congruences},
        {"oracle equivalence (collapsed vs direct; DP vs exact)", criterion_oracle_equivalence},
        {"spot values (six anchors, direct and swept)", criterion_spot_values},
        {"exact identity suites (power sums, special values, Wolstenholme)", criterion_exact_identities},
        {"determinism and exit codes", criterion_determinism},
    };

    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o.ok = false;
            o.detail = std::string("exception: ") + e.what();
        }
        if (!o.ok) ++failures;
        std::printf("[%s] criterion %zu: %s — %s\n", o.ok ? "PASS" : "FAIL", i + 1,
                    criteria[i].first.c_str(), o.detail.c_str());
        std::fflush(stdout);
    }
    std::printf("%zu/%zu criteria passed\n", criteria.size() - failures, criteria.size());
    return failures == 0 ? 0 : 1;
}
