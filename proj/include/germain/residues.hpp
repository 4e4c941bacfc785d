#pragma once

// Nonzero p-th power residues mod theta, computed by two independent
// algorithms, and the two hypotheses of Sophie Germain's Theorem.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "germain/arith.hpp"

namespace germain {

namespace detail {

inline void require_sgt_pair(std::uint64_t p, PrimeModulus theta) {
    if (p < 3 || p % 2 == 0 || !is_prime(p))
        throw std::invalid_argument("exponent p must be an odd prime");
    if (theta.value() == p)
        throw std::invalid_argument("auxiliary theta must differ from the exponent p");
}

}  // namespace detail

// The multiplicative subgroup { x^p mod theta : x nonzero }, with the
// sorted member list and a constant-time membership bitmap.
class ResidueSet {
public:
    // Direct enumeration of x^p for x = 1 .. theta-1. The oracle path.
    static ResidueSet brute_force(std::uint64_t p, PrimeModulus theta) {
        detail::require_sgt_pair(p, theta);
        const std::uint64_t t = theta.value();
        std::vector<bool> seen(t, false);
        for (std::uint64_t x = 1; x < t; ++x)
            seen[detail::pow_mod_u64(x, p, t)] = true;
        std::vector<std::uint64_t> members;
        for (std::uint64_t r = 1; r < t; ++r)
            if (seen[r]) members.push_back(r);
        return ResidueSet(p, theta, std::move(members), std::move(seen));
    }

    // Cyclic-subgroup walk: the p-th powers are exactly the powers of
    // g^d where g is a primitive root and d = gcd(p, theta-1).
    // O(|members|) multiplications instead of O(theta) exponentiations.
    static ResidueSet subgroup(std::uint64_t p, PrimeModulus theta) {
        detail::require_sgt_pair(p, theta);
        const std::uint64_t t = theta.value();
        const std::uint64_t d = gcd_u64(p, t - 1);
        const std::uint64_t h = detail::pow_mod_u64(primitive_root(theta).g.value, d, t);
        std::vector<bool> bitmap(t, false);
        std::vector<std::uint64_t> members;
        std::uint64_t r = 1;
        do {
            bitmap[r] = true;
            members.push_back(r);
            r = detail::mul_mod_u64(r, h, t);
        } while (r != 1);
        std::sort(members.begin(), members.end());
        return ResidueSet(p, theta, std::move(members), std::move(bitmap));
    }

    std::uint64_t exponent() const noexcept { return p_; }
    PrimeModulus modulus() const noexcept { return theta_; }
    const std::vector<std::uint64_t>& members() const noexcept { return members_; }

    bool contains(std::uint64_t r) const noexcept {
        return r < bitmap_.size() && bitmap_[r];
    }

private:
    ResidueSet(std::uint64_t p, PrimeModulus theta, std::vector<std::uint64_t> members,
               std::vector<bool> bitmap)
        : p_(p), theta_(theta), members_(std::move(members)), bitmap_(std::move(bitmap)) {}

    std::uint64_t p_;
    PrimeModulus theta_;
    std::vector<std::uint64_t> members_;
    std::vector<bool> bitmap_;
};

// Condition NC: no a with a and a+1 both nonzero members. The wrap pair
// (theta-1, 0) never counts since 0 is not a member. Returns the smallest
// violating pair on failure.
inline std::pair<bool, std::optional<std::pair<std::uint64_t, std::uint64_t>>>
check_nc(const ResidueSet& rs) {
    const std::uint64_t t = rs.modulus().value();
    for (std::uint64_t a : rs.members()) {
        if (a + 1 <= t - 1 && rs.contains(a + 1))
            return {false, std::make_pair(a, a + 1)};
    }
    return {true, std::nullopt};
}

// Second SGT hypothesis: p itself is not a p-th power residue mod theta.
inline std::pair<bool, std::optional<std::uint64_t>>
check_p_not_residue(const ResidueSet& rs) {
    const std::uint64_t r = rs.exponent() % rs.modulus().value();
    if (rs.contains(r)) return {false, r};
    return {true, std::nullopt};
}

// Evidence that (p, theta) satisfies both SGT hypotheses, or a concrete
// re-checkable counterexample witness.
struct SgtCertificate {
    std::uint64_t p;
    std::uint64_t theta;
    bool nc_holds;
    bool p_not_residue_holds;
    std::optional<std::pair<std::uint64_t, std::uint64_t>> nc_witness;
    std::optional<std::uint64_t> p_residue_witness;

    bool holds() const noexcept { return nc_holds && p_not_residue_holds; }

    // SGT conclusion when both hypotheses hold.
    std::string consequence() const {
        if (!holds()) return {};
        return "one of x, y, z must be divisible by " + std::to_string(p) + "^2 = "
               + std::to_string(p * p);
    }
};

inline SgtCertificate certify_sgt(std::uint64_t p, PrimeModulus theta) {
    const ResidueSet rs = ResidueSet::subgroup(p, theta);
    auto [nc, nc_wit] = check_nc(rs);
    auto [pnr, p_wit] = check_p_not_residue(rs);
    return {p, theta.value(), nc, pnr, nc_wit, p_wit};
}

// Outcome of the Grand Plan contrapositive step on a mod-theta solution:
// either a nonzero consecutive residue pair, or theta divides one of x,y,z.
struct GrandPlanStep {
    std::optional<std::pair<std::uint64_t, std::uint64_t>> pair;
    char divided = 0;  // 'x', 'y' or 'z' when no pair exists
};

// From z^p = x^p + y^p (mod theta) with theta dividing none of x,y,z,
// derive (z/x)^p = 1 + (y/x)^p (mod theta): the pair ((y/x)^p, (z/x)^p)
// is a nonzero consecutive pair of p-th power residues.
inline GrandPlanStep consecutive_pair_from_solution(std::uint64_t p, PrimeModulus theta,
                                                    std::uint64_t x, std::uint64_t y,
                                                    std::uint64_t z) {
    detail::require_sgt_pair(p, theta);
    const std::uint64_t t = theta.value();
    const std::uint64_t xp = detail::pow_mod_u64(x % t, p, t);
    const std::uint64_t yp = detail::pow_mod_u64(y % t, p, t);
    const std::uint64_t zp = detail::pow_mod_u64(z % t, p, t);
    if (zp != (xp + yp) % t)
        throw std::invalid_argument("inputs do not satisfy z^p = x^p + y^p (mod theta)");
    if (x % t == 0) return {std::nullopt, 'x'};
    if (y % t == 0) return {std::nullopt, 'y'};
    if (z % t == 0) return {std::nullopt, 'z'};
    const Residue xinv = inv_mod(Residue{x, theta});
    const std::uint64_t a = detail::pow_mod_u64(detail::mul_mod_u64(y % t, xinv.value, t), p, t);
    const std::uint64_t b = detail::pow_mod_u64(detail::mul_mod_u64(z % t, xinv.value, t), p, t);
    if (b != a + 1)
        throw std::logic_error("consecutive_pair_from_solution: derived pair not consecutive");
    const ResidueSet rs = ResidueSet::subgroup(p, theta);
    if (!rs.contains(a) || !rs.contains(b))
        throw std::logic_error("consecutive_pair_from_solution: pair not in residue set");
    return {std::make_pair(a, b), 0};
}

}  // namespace germain
