#pragma once

// Lower bound on the size of a hypothetical Fermat solution: every
// NC-certified auxiliary divides one of x, y, z, distinct primes dividing
// xyz multiply, hence xyz >= prod(theta) and max(x,y,z) >= cbrt(prod).
// The only module using arbitrary-precision integers.

#include <cstdint>
#include <stdexcept>
#include <vector>

#include <gmpxx.h>

#include "germain/residues.hpp"
#include "germain/search.hpp"

namespace germain {

// Number of base-10 digits, exact.
inline std::size_t digits(const mpz_class& n) {
    if (n < 1) throw std::invalid_argument("digits: n must be >= 1");
    // sizeinbase may overestimate by one; settle it exactly.
    std::size_t d = mpz_sizeinbase(n.get_mpz_t(), 10);
    if (d > 1) {
        mpz_class pow10;
        mpz_ui_pow_ui(pow10.get_mpz_t(), 10, d - 1);
        if (n < pow10) --d;
    }
    return d;
}

// Smallest m with m^3 >= n, by integer binary search. No floating point.
inline mpz_class cbrt_ceil(const mpz_class& n) {
    if (n < 0) throw std::invalid_argument("cbrt_ceil: n must be >= 0");
    if (n == 0) return 0;
    mpz_class lo = 1;
    mpz_class hi = 1;
    hi <<= (mpz_sizeinbase(n.get_mpz_t(), 2) / 3 + 2);
    while (lo < hi) {
        mpz_class mid = (lo + hi) / 2;
        if (mid * mid * mid >= n)
            hi = mid;
        else
            lo = mid + 1;
    }
    return lo;
}

struct SizeBound {
    std::uint64_t p;
    std::vector<std::uint64_t> auxiliaries;
    mpz_class product;           // exact product of the auxiliaries
    mpz_class min_max_solution;  // ceil(product^(1/3))
    std::size_t decimal_digits;
};

// Builds the bound from an exhaustive scan. Every auxiliary is
// re-certified before use; a corrupted scan cannot produce a bound.
inline SizeBound size_lower_bound(std::uint64_t p, const ScanReport& scan) {
    if (!scan.exhaustive)
        throw std::invalid_argument("size_lower_bound: scan must be exhaustive");
    if (scan.p != p)
        throw std::invalid_argument("size_lower_bound: scan exponent mismatch");
    SizeBound bound{p, scan.qualifying, 1, 1, 1};
    for (std::uint64_t theta : scan.qualifying) {
        PrimeModulus tm(theta);
        ResidueSet rs = ResidueSet::subgroup(p, tm);
        if (!check_nc(rs).first)
            throw std::runtime_error("size_lower_bound: auxiliary " + std::to_string(theta)
                                     + " fails re-certification");
        if (scan.include_p_condition && !check_p_not_residue(rs).first)
            throw std::runtime_error("size_lower_bound: auxiliary " + std::to_string(theta)
                                     + " fails p-not-residue re-certification");
        bound.product *= mpz_class(static_cast<unsigned long>(theta));
    }
    bound.min_max_solution = cbrt_ceil(bound.product);
    if (bound.min_max_solution < 1) bound.min_max_solution = 1;
    bound.decimal_digits = digits(bound.min_max_solution);
    return bound;
}

}  // namespace germain
