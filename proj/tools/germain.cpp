// germain — certify Sophie Germain's Theorem hypotheses, reproduce the
// Legendre-style auxiliary table, run bounded Condition-NC scans, and
// compute solution-size lower bounds.
//
// Exit codes: 0 success (for `check`: both hypotheses hold),
//             1 hypotheses fail, 2 usage or precondition error.

#include <chrono>
#include <cstdint>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "germain/arith.hpp"
#include "germain/bounds.hpp"
#include "germain/report.hpp"
#include "germain/residues.hpp"
#include "germain/search.hpp"

namespace {

using germain::report::Format;

Format parse_format(const std::string& s) {
    if (s == "text") return Format::text;
    if (s == "csv") return Format::csv;
    if (s == "json") return Format::json;
    throw CLI::ValidationError("--format", "must be one of text, csv, json");
}

germain::PrimeModulus make_modulus(std::uint64_t theta) {
    try {
        return germain::PrimeModulus(theta);
    } catch (const std::invalid_argument&) {
        throw CLI::ValidationError("theta", "theta must be an odd prime (got "
                                            + std::to_string(theta) + ")");
    }
}

void require_odd_prime(std::uint64_t p) {
    if (p < 3 || p % 2 == 0 || !germain::is_prime(p))
        throw CLI::ValidationError("p", "p must be an odd prime (got " + std::to_string(p) + ")");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Sophie Germain auxiliary-prime toolkit"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string format_name = "text";
    unsigned threads = 1;
    app.add_option("--format", format_name, "Output format: text, csv or json")
        ->capture_default_str();
    app.add_option("--threads", threads, "Worker threads for scans (0 = auto)")
        ->capture_default_str();

    std::uint64_t p = 0, theta = 0, bound = 0, p_max = 0, n_max = 1000;
    bool paired = false, include_p_condition = false;

    auto* cmd_residues = app.add_subcommand("residues", "List the nonzero p-th power residues mod theta");
    cmd_residues->add_option("-p,--exponent", p, "Odd prime exponent p")->required();
    cmd_residues->add_option("-t,--theta", theta, "Prime modulus theta")->required();
    cmd_residues->add_flag("--paired", paired, "Render as ±r pairs (text format)");

    auto* cmd_check = app.add_subcommand("check", "Certify both SGT hypotheses for (p, theta)");
    cmd_check->add_option("-p,--exponent", p, "Odd prime exponent p")->required();
    cmd_check->add_option("-t,--theta", theta, "Prime modulus theta")->required();

    auto* cmd_table = app.add_subcommand("table", "Reproduce the auxiliary table for odd primes <= p-max");
    cmd_table->add_option("--p-max", p_max, "Largest exponent to include")->required();
    cmd_table->add_option("--n-max", n_max, "Search limit on N in theta = 2Np+1")
        ->capture_default_str();

    auto* cmd_scan = app.add_subcommand("scan", "Scan primes theta <= bound for Condition NC");
    cmd_scan->add_option("-p,--exponent", p, "Odd prime exponent p")->required();
    cmd_scan->add_option("--bound", bound, "Upper bound on theta")->required();
    cmd_scan->add_flag("--include-p-condition", include_p_condition,
                       "Also require p not a p-th power residue");

    std::uint64_t scan_bound = 0;
    auto* cmd_bound = app.add_subcommand("bound", "Solution-size lower bound from an NC scan");
    cmd_bound->add_option("-p,--exponent", p, "Odd prime exponent p")->required();
    cmd_bound->add_option("--scan-bound", scan_bound, "Upper bound on theta for the scan")
        ->required();

    try {
        app.parse(argc, argv);
        const Format fmt = parse_format(format_name);

        if (*cmd_residues) {
            require_odd_prime(p);
            auto rs = germain::ResidueSet::subgroup(p, make_modulus(theta));
            std::cout << germain::report::render_residues(rs, fmt, paired);
            return 0;
        }
        if (*cmd_check) {
            require_odd_prime(p);
            auto cert = germain::certify_sgt(p, make_modulus(theta));
            std::cout << germain::report::render_certificate(cert, fmt);
            return cert.holds() ? 0 : 1;
        }
        if (*cmd_table) {
            auto table = germain::legendre_table(p_max, n_max);
            std::cout << germain::report::render_table(table, fmt);
            if (!table.missing.empty()) {
                std::cerr << "error: " << table.missing.size()
                          << " exponent(s) without a certified auxiliary\n";
                return 1;
            }
            return 0;
        }
        if (*cmd_scan) {
            require_odd_prime(p);
            const auto start = std::chrono::steady_clock::now();
            auto report = germain::scan_nc(p, bound, include_p_condition, threads);
            const std::chrono::duration<double> elapsed =
                std::chrono::steady_clock::now() - start;
            std::cout << germain::report::render_scan(report, fmt, elapsed.count());
            return 0;
        }
        if (*cmd_bound) {
            require_odd_prime(p);
            auto report = germain::scan_nc(p, scan_bound, /*include_p_condition=*/false, threads);
            auto size = germain::size_lower_bound(p, report);
            std::cout << germain::report::render_bound(size, fmt);
            return 0;
        }
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}
