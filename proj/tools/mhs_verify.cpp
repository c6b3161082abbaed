#include <CLI11.hpp>

#include <cstdio>
#include <iostream>
#include <sstream>
#include <string>

#include "mhs/statements.hpp"
#include "mhs/sweep.hpp"

namespace {

// "5..101" or a single value "7".
std::pair<std::uint64_t, std::uint64_t> parse_range(const std::string& text) {
    const auto dots = text.find("..");
    if (dots == std::string::npos) {
        const std::uint64_t v = std::stoull(text);
        return {v, v};
    }
    return {std::stoull(text.substr(0, dots)), std::stoull(text.substr(dots + 2))};
}

std::vector<std::string> parse_statement_filter(const std::string& text) {
    if (text == "all") return {};
    std::vector<std::string> ids;
    std::stringstream ss(text);
    std::string id;
    while (std::getline(ss, id, ',')) {
        if (!id.empty()) ids.push_back(id);
    }
    return ids;
}

int run_verify(const std::string& primes, const std::string& depths, const std::string& statements,
               const std::string& format, const std::string& out, std::uint64_t cap,
               std::uint64_t p2_max, unsigned workers) {
    mhs::SweepConfig config;
    std::tie(config.p_min, config.p_max) = parse_range(primes);
    const auto depth_range = parse_range(depths);
    config.n_min = static_cast<unsigned>(depth_range.first);
    config.n_max = static_cast<unsigned>(depth_range.second);
    config.statements = parse_statement_filter(statements);
    config.enumeration_cap = cap;
    config.p2_prime_cap = p2_max;
    config.format = format == "csv" ? mhs::ReportFormat::csv : mhs::ReportFormat::json;
    config.out_path = out;
    config.workers = workers;

    mhs::validate(config);
    const mhs::SweepReport report = mhs::run_sweep(config);
    if (out.empty() || out == "-") {
        mhs::write_report(report, std::cout, config.format);
    }
    std::cerr << "pass " << report.summary.pass << ", fail " << report.summary.fail << ", skipped "
              << report.summary.skipped << " (" << report.summary.elapsed_micros / 1000 << " ms)\n";
    return mhs::exit_code_for(report);
}

int run_list() {
    for (const auto& d : mhs::catalog()) {
        std::cout << d.id << "\n"
                  << "  modulus:  p^" << d.modulus_exponent << "\n"
                  << "  guard:    " << d.guard_text << "\n"
                  << "  lhs:      " << d.lhs_text << "\n"
                  << "  rhs:      " << d.rhs_text << "\n";
    }
    return 0;
}

int run_spot(const std::string& id, std::uint64_t p, unsigned n, unsigned a, unsigned b,
             std::uint64_t cap, std::uint64_t p2_max) {
    if (mhs::find_statement(id) == nullptr) {
        std::cerr << "unknown statement id '" << id << "'\n";
        return 2;
    }
    mhs::StatementInstance instance{id, p, n, a, b};
    const mhs::VerificationRecord record = mhs::evaluate(instance, {cap, p2_max});
    std::cout << id << " p=" << p;
    if (n != 0) std::cout << " n=" << n;
    if (a != 0 || b != 0) std::cout << " a=" << a << " b=" << b;
    std::cout << "\n";
    if (record.status == mhs::Status::skipped) {
        std::cout << "skipped: " << record.reason << "\n";
        return 0;
    }
    std::cout << "lhs = " << record.lhs << " (mod " << record.modulus << ")\n"
              << "rhs = " << record.rhs << " (mod " << record.modulus << ")\n"
              << mhs::status_name(record.status);
    if (!record.detail.empty()) std::cout << " [" << record.detail << "]";
    std::cout << "\n";
    return record.status == mhs::Status::pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact verification of harmonic-sum congruences"};
    app.require_subcommand(1);

    // verify
    std::string primes = "5..101", depths = "1..6", statements = "all", format = "json", out;
    std::uint64_t cap = mhs::kDefaultEnumerationCap, p2_max = 61;
    unsigned workers = 0;
    auto* verify = app.add_subcommand("verify", "run a verification sweep and emit a report");
    verify->add_option("--primes", primes, "prime range, e.g. 5..101")->capture_default_str();
    verify->add_option("--depths", depths, "depth range, e.g. 1..6")->capture_default_str();
    verify->add_option("--statements", statements, "all or comma-separated statement ids")
        ->capture_default_str();
    verify->add_option("--format", format, "json or csv")
        ->check(CLI::IsMember({"json", "csv"}))
        ->capture_default_str();
    verify->add_option("--out", out, "output path ('-' or empty prints to stdout)");
    verify->add_option("--cap", cap, "composition enumeration cap")->capture_default_str();
    verify->add_option("--p2-max", p2_max, "largest prime evaluated mod p^2")->capture_default_str();
    verify->add_option("--workers", workers, "worker threads (0 = all cores)")->capture_default_str();

    // list-statements
    auto* list = app.add_subcommand("list-statements", "print the statement catalog");

    // spot
    std::string spot_id;
    std::uint64_t spot_p = 0;
    unsigned spot_n = 0, spot_a = 0, spot_b = 0;
    auto* spot = app.add_subcommand("spot", "evaluate one instance and print both sides");
    spot->add_option("--statement", spot_id, "statement id")->required();
    spot->add_option("--p", spot_p, "odd prime")->required();
    spot->add_option("--n", spot_n, "depth (where applicable)");
    spot->add_option("--a", spot_a, "first exponent (lem-2.5)");
    spot->add_option("--b", spot_b, "second exponent (lem-2.5)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (verify->parsed())
            return run_verify(primes, depths, statements, format, out, cap, p2_max, workers);
        if (list->parsed()) return run_list();
        if (spot->parsed()) return run_spot(spot_id, spot_p, spot_n, spot_a, spot_b, cap, p2_max);
    } catch (const std::invalid_argument& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
