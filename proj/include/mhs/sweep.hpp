#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "mhs/statements.hpp"

namespace mhs {

enum class ReportFormat { json, csv };

struct SweepConfig {
    std::uint64_t p_min = 5;
    std::uint64_t p_max = 101;
    unsigned n_min = 1;
    unsigned n_max = 6;
    std::vector<std::string> statements;  // empty means the whole catalog
    std::uint64_t enumeration_cap = kDefaultEnumerationCap;
    std::uint64_t p2_prime_cap = 61;
    ReportFormat format = ReportFormat::json;
    std::string out_path;  // empty means no file output
    unsigned workers = 0;  // 0 means hardware concurrency
};

/// Throws std::invalid_argument on empty ranges, p_min < 3, or unknown
/// statement ids.
void validate(const SweepConfig& config);

struct SweepSummary {
    std::size_t pass = 0;
    std::size_t fail = 0;
    std::size_t skipped = 0;
    std::int64_t elapsed_micros = 0;

    std::size_t total() const { return pass + fail + skipped; }
};

struct SweepReport {
    SweepConfig config;
    std::vector<VerificationRecord> records;  // sorted by (id, p, n, a, b)
    SweepSummary summary;
};

/// Cartesian expansion of (statement, p, n, extra) over the config ranges;
/// guards run later, at evaluation time, so out-of-hypothesis tuples are
/// recorded as skipped rather than silently dropped.
std::vector<StatementInstance> enumerate_instances(const SweepConfig& config);

/// Evaluates every instance (data-parallel across instances), assembles the
/// deterministically ordered report, and writes it to config.out_path when
/// set. Record order and content are independent of the worker count.
SweepReport run_sweep(const SweepConfig& config);

/// Timing fields (micros, elapsed) are the only nondeterministic content;
/// include_timing=false zeroes them so reports can be compared bytewise.
std::string report_json(const SweepReport& report, bool include_timing = true);
std::string report_csv(const SweepReport& report, bool include_timing = true);
void write_report(const SweepReport& report, std::ostream& out, ReportFormat format,
                  bool include_timing = true);

/// 0 when no record failed, 1 otherwise.
int exit_code_for(const SweepReport& report);

}  // namespace mhs
