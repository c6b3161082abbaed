#include "mhs/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <fstream>
#include <ostream>
#include <sstream>
#include <thread>
#include <tuple>

#include <json.hpp>

#include "mhs/primes.hpp"

namespace mhs {

namespace {

std::vector<const StatementDescriptor*> selected_statements(const SweepConfig& config) {
    std::vector<const StatementDescriptor*> out;
    if (config.statements.empty()) {
        for (const auto& d : catalog()) out.push_back(&d);
        return out;
    }
    for (const auto& id : config.statements) {
        const StatementDescriptor* d = find_statement(id);
        if (d == nullptr) throw std::invalid_argument("unknown statement id '" + id + "'");
        out.push_back(d);
    }
    std::sort(out.begin(), out.end(),
              [](const StatementDescriptor* a, const StatementDescriptor* b) { return a->id < b->id; });
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::string extra_field(const VerificationRecord& r) {
    std::string extra;
    if (r.instance.a != 0 || r.instance.b != 0)
        extra = "a=" + std::to_string(r.instance.a) + ";b=" + std::to_string(r.instance.b);
    if (!r.detail.empty()) extra += (extra.empty() ? "" : ";") + r.detail;
    return extra;
}

}  // namespace

void validate(const SweepConfig& config) {
    if (config.p_min < 3) throw std::invalid_argument("p_min must be at least 3");
    if (config.p_max < config.p_min) throw std::invalid_argument("empty prime range");
    if (config.n_max < config.n_min) throw std::invalid_argument("empty depth range");
    selected_statements(config);  // rejects unknown ids
}

std::vector<StatementInstance> enumerate_instances(const SweepConfig& config) {
    validate(config);
    std::vector<StatementInstance> out;
    const auto primes = primes_in(config.p_min, config.p_max);
    for (const StatementDescriptor* d : selected_statements(config)) {
        for (std::uint64_t p : primes) {
            if (d->takes_ab) {
                for (unsigned a = 1; a <= 5; ++a)
                    for (unsigned b = 1; a + b <= 6; ++b)
                        out.push_back({d->id, p, 0, a, b});
            } else if (d->takes_depth) {
                for (unsigned n = config.n_min; n <= config.n_max; ++n)
                    out.push_back({d->id, p, n, 0, 0});
            } else {
                // Fixed shape: eq-1.3 is the depth-3 composition sum,
                // rem-qp2 has no depth parameter.
                out.push_back({d->id, p, d->key == StatementKey::eq_1_3 ? 3u : 0u, 0, 0});
            }
        }
    }
    std::sort(out.begin(), out.end(), [](const StatementInstance& x, const StatementInstance& y) {
        return std::tie(x.id, x.p, x.n, x.a, x.b) < std::tie(y.id, y.p, y.n, y.a, y.b);
    });
    return out;
}

SweepReport run_sweep(const SweepConfig& config) {
    validate(config);

    // Open the output file up front so an unwritable path fails before any
    // evaluation happens.
    std::ofstream file;
    if (!config.out_path.empty() && config.out_path != "-") {
        file.open(config.out_path, std::ios::trunc);
        if (!file) throw Error("cannot open output path '" + config.out_path + "'");
    }

    SweepReport report;
    report.config = config;

    const auto instances = enumerate_instances(config);
    report.records.resize(instances.size());

    const EvalOptions options{config.enumeration_cap, config.p2_prime_cap};
    unsigned workers = config.workers != 0 ? config.workers : std::thread::hardware_concurrency();
    if (workers == 0) workers = 1;
    workers = std::min<std::size_t>(workers, std::max<std::size_t>(instances.size(), 1));

    const auto started = std::chrono::steady_clock::now();
    std::atomic<std::size_t> next{0};
    auto drain = [&]() {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= instances.size()) return;
            report.records[i] = evaluate(instances[i], options);
        }
    };
    if (workers <= 1) {
        drain();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (unsigned w = 0; w < workers; ++w) pool.emplace_back(drain);
        for (auto& t : pool) t.join();
    }
    const auto stopped = std::chrono::steady_clock::now();

    for (const auto& r : report.records) {
        switch (r.status) {
            case Status::pass: ++report.summary.pass; break;
            case Status::fail: ++report.summary.fail; break;
            case Status::skipped: ++report.summary.skipped; break;
        }
    }
    report.summary.elapsed_micros =
        std::chrono::duration_cast<std::chrono::microseconds>(stopped - started).count();

    if (file.is_open()) {
        write_report(report, file, config.format);
        if (!file) throw Error("failed writing report to '" + config.out_path + "'");
    }
    return report;
}

std::string report_json(const SweepReport& report, bool include_timing) {
    nlohmann::ordered_json j;
    // The worker count is deliberately not echoed: reports from different
    // worker counts must be byte-identical.
    j["config"] = {
        {"p_min", report.config.p_min},
        {"p_max", report.config.p_max},
        {"n_min", report.config.n_min},
        {"n_max", report.config.n_max},
        {"statements", report.config.statements.empty()
                           ? std::vector<std::string>{"all"}
                           : report.config.statements},
        {"enumeration_cap", report.config.enumeration_cap},
        {"p2_prime_cap", report.config.p2_prime_cap},
    };
    j["summary"] = {
        {"pass", report.summary.pass},
        {"fail", report.summary.fail},
        {"skipped", report.summary.skipped},
        {"total", report.summary.total()},
        {"elapsed_micros", include_timing ? report.summary.elapsed_micros : 0},
    };
    j["records"] = nlohmann::ordered_json::array();
    for (const auto& r : report.records) {
        nlohmann::ordered_json rec = {
            {"statement_id", r.instance.id},
            {"p", r.instance.p},
            {"n", r.instance.n},
            {"extra", extra_field(r)},
            {"status", std::string(status_name(r.status))},
            {"reason", r.reason},
            {"micros", include_timing ? r.micros : 0},
        };
        if (r.status == Status::skipped) {
            rec["modulus"] = nullptr;
            rec["lhs"] = nullptr;
            rec["rhs"] = nullptr;
        } else {
            rec["modulus"] = r.modulus;
            rec["lhs"] = r.lhs;
            rec["rhs"] = r.rhs;
        }
        j["records"].push_back(std::move(rec));
    }
    return j.dump(2) + "\n";
}

std::string report_csv(const SweepReport& report, bool include_timing) {
    std::ostringstream out;
    out << "statement_id,p,n,extra,modulus,lhs,rhs,status,reason,micros\n";
    for (const auto& r : report.records) {
        out << r.instance.id << ',' << r.instance.p << ',' << r.instance.n << ',' << extra_field(r)
            << ',';
        if (r.status == Status::skipped) {
            out << ",,";
        } else {
            out << r.modulus << ',' << r.lhs << ',' << r.rhs;
        }
        out << ',' << status_name(r.status) << ',' << r.reason << ','
            << (include_timing ? r.micros : 0) << '\n';
    }
    return out.str();
}

void write_report(const SweepReport& report, std::ostream& out, ReportFormat format,
                  bool include_timing) {
    out << (format == ReportFormat::json ? report_json(report, include_timing)
                                         : report_csv(report, include_timing));
}

int exit_code_for(const SweepReport& report) { return report.summary.fail == 0 ? 0 : 1; }

}  // namespace mhs
