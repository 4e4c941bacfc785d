#pragma once

// Candidate auxiliary primes theta = 2Np+1, the Legendre-style table for
// odd primes p < 100, and bounded Condition-NC scans.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <thread>
#include <utility>
#include <vector>

#include "germain/arith.hpp"
#include "germain/residues.hpp"

namespace germain {

inline constexpr std::uint64_t kScanBoundCap = 1'000'000'000;

struct Candidate {
    std::uint64_t n;      // theta = 2*n*p + 1
    std::uint64_t theta;
};

// Prime values of 2Np+1 for N = 1 .. n_max, ascending. Only theta = 1
// (mod 2p) can satisfy NC (for theta > 3 every other prime makes p-th
// powering a bijection, so 1 and 2 are both residues).
inline std::vector<Candidate> candidates(std::uint64_t p, std::uint64_t n_max) {
    if (n_max < 1) throw std::invalid_argument("candidates: n_max must be >= 1");
    std::vector<Candidate> out;
    for (std::uint64_t n = 1; n <= n_max; ++n) {
        const std::uint64_t theta = 2 * n * p + 1;
        if (theta >= kModulusLimit) break;
        if (is_prime(theta)) out.push_back({n, theta});
    }
    return out;
}

// One row of the reproduced table: minimal N with a fully certified
// auxiliary theta = 2Np+1.
struct LegendreRow {
    std::uint64_t p;
    std::uint64_t n;
    std::uint64_t theta;
    std::vector<std::uint64_t> residues;
    SgtCertificate certificate;
};

inline std::optional<LegendreRow> smallest_auxiliary(std::uint64_t p, std::uint64_t n_max) {
    if (p >= (std::uint64_t(1) << 20))
        throw std::invalid_argument("smallest_auxiliary: p above sanity cap 2^20");
    for (const Candidate& c : candidates(p, n_max)) {
        PrimeModulus theta(c.theta);
        SgtCertificate cert = certify_sgt(p, theta);
        if (cert.holds()) {
            ResidueSet rs = ResidueSet::subgroup(p, theta);
            return LegendreRow{p, c.n, c.theta, rs.members(), cert};
        }
    }
    return std::nullopt;
}

struct TableResult {
    std::vector<LegendreRow> rows;
    std::vector<std::uint64_t> missing;  // primes with no auxiliary within n_max
};

// One row per odd prime p <= p_max, ordered by p.
inline TableResult legendre_table(std::uint64_t p_max, std::uint64_t n_max) {
    if (p_max > 1000) throw std::invalid_argument("legendre_table: p_max must be <= 1000");
    TableResult result;
    for (std::uint64_t p = 3; p <= p_max; p += 2) {
        if (!is_prime(p)) continue;
        if (auto row = smallest_auxiliary(p, n_max))
            result.rows.push_back(std::move(*row));
        else
            result.missing.push_back(p);
    }
    return result;
}

// Result of a bounded Grand Plan scan.
struct ScanReport {
    std::uint64_t p;
    std::uint64_t bound;
    bool include_p_condition;
    std::vector<std::uint64_t> qualifying;  // ascending, no duplicates
    bool exhaustive;
};

namespace detail {

// NC test for one candidate theta with a caller-provided scratch bitmap
// (at least theta+1 bits, all clear on entry and restored on exit).
// Walks the subgroup of p-th powers and aborts at the first adjacency.
inline bool nc_holds_fast(std::uint64_t p, std::uint64_t theta, bool include_p_condition,
                          std::vector<bool>& scratch) {
    PrimeModulus tm(theta);
    const std::uint64_t d = gcd_u64(p, theta - 1);
    const std::uint64_t h = pow_mod_u64(primitive_root(tm).g.value, d, theta);
    std::vector<std::uint64_t> placed;
    placed.reserve(64);
    bool ok = true;
    std::uint64_t r = 1;
    do {
        if ((r > 1 && scratch[r - 1]) || (r + 1 < theta && scratch[r + 1])) {
            ok = false;
            break;
        }
        scratch[r] = true;
        placed.push_back(r);
        r = mul_mod_u64(r, h, theta);
    } while (r != 1);
    if (ok && include_p_condition && scratch[p % theta]) ok = false;
    for (std::uint64_t m : placed) scratch[m] = false;
    return ok;
}

inline std::vector<std::uint64_t> scan_range(std::uint64_t p, std::uint64_t bound,
                                             bool include_p_condition,
                                             std::uint64_t n_lo, std::uint64_t n_hi) {
    std::vector<bool> scratch(bound + 2, false);
    std::vector<std::uint64_t> qualifying;
    for (std::uint64_t n = n_lo; n <= n_hi; ++n) {
        const std::uint64_t theta = 2 * n * p + 1;
        if (theta > bound) break;
        if (!is_prime(theta)) continue;
        if (nc_holds_fast(p, theta, include_p_condition, scratch))
            qualifying.push_back(theta);
    }
    return qualifying;
}

}  // namespace detail

// Tests every prime theta <= bound that can qualify (theta = 1 mod 2p,
// plus the theta = 3 edge case, checked rather than assumed). Internal
// parallelism partitions the N range; the merged output is identical to
// a sequential scan.
inline ScanReport scan_nc(std::uint64_t p, std::uint64_t bound, bool include_p_condition,
                          unsigned threads = 1) {
    if (p < 3 || !is_prime(p)) throw std::invalid_argument("scan_nc: p must be an odd prime");
    if (bound > kScanBoundCap) throw std::invalid_argument("scan_nc: bound above hard cap 10^9");
    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());

    ScanReport report{p, bound, include_p_condition, {}, true};

    // theta = 3 is the only qualifying shape outside 2Np+1; its NC status
    // is computed directly.
    if (bound >= 3 && p != 3) {
        PrimeModulus three(3);
        ResidueSet rs = ResidueSet::brute_force(p, three);
        bool ok = check_nc(rs).first;
        if (ok && include_p_condition) ok = check_p_not_residue(rs).first;
        if (ok) report.qualifying.push_back(3);
    }

    if (bound <= 2 * p) return report;
    const std::uint64_t n_max = (bound - 1) / (2 * p);

    if (threads <= 1 || n_max < 64) {
        auto q = detail::scan_range(p, bound, include_p_condition, 1, n_max);
        report.qualifying.insert(report.qualifying.end(), q.begin(), q.end());
        return report;
    }

    const std::uint64_t chunk = (n_max + threads - 1) / threads;
    std::vector<std::vector<std::uint64_t>> partial(threads);
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) {
        const std::uint64_t lo = 1 + t * chunk;
        const std::uint64_t hi = std::min(n_max, lo + chunk - 1);
        if (lo > n_max) break;
        pool.emplace_back([&, t, lo, hi] {
            partial[t] = detail::scan_range(p, bound, include_p_condition, lo, hi);
        });
    }
    for (auto& th : pool) th.join();
    for (auto& q : partial)
        report.qualifying.insert(report.qualifying.end(), q.begin(), q.end());
    std::sort(report.qualifying.begin(), report.qualifying.end());
    return report;
}

struct Frontier {
    std::optional<std::uint64_t> largest;
    std::size_t count = 0;
};

// Summary view of scan_nc: how many auxiliaries qualify below the bound
// and the largest one found.
inline Frontier nc_frontier(std::uint64_t p, std::uint64_t bound, unsigned threads = 1) {
    ScanReport report = scan_nc(p, bound, /*include_p_condition=*/false, threads);
    Frontier f;
    f.count = report.qualifying.size();
    if (!report.qualifying.empty()) f.largest = report.qualifying.back();
    return f;
}

}  // namespace germain
