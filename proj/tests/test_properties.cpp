#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <random>

#include "germain/residues.hpp"
#include "germain/search.hpp"

using namespace germain;

namespace {

constexpr int kCases = 1000;

std::uint64_t random_odd_prime(std::mt19937_64& rng, std::uint64_t lo, std::uint64_t hi) {
    for (;;) {
        std::uint64_t n = lo + rng() % (hi - lo);
        n |= 1;
        if (n >= 3 && is_prime(n)) return n;
    }
}

struct RandomPair {
    std::uint64_t p;
    std::uint64_t theta;
};

RandomPair random_pair(std::mt19937_64& rng) {
    std::uint64_t p = random_odd_prime(rng, 3, 50);
    std::uint64_t theta;
    do {
        theta = random_odd_prime(rng, 3, 3000);
    } while (theta == p);
    return {p, theta};
}

}  // namespace

TEST_CASE("property: subgroup closure under multiplication and inversion") {
    std::mt19937_64 rng(1001);
    for (int i = 0; i < kCases; ++i) {
        auto [p, theta] = random_pair(rng);
        auto rs = ResidueSet::subgroup(p, PrimeModulus(theta));
        const auto& m = rs.members();
        std::uint64_t r = m[rng() % m.size()];
        std::uint64_t s = m[rng() % m.size()];
        REQUIRE(rs.contains(detail::mul_mod_u64(r, s, theta)));
        REQUIRE(rs.contains(inv_mod(Residue{r, PrimeModulus(theta)}).value));
    }
}

TEST_CASE("property: negation symmetry (p odd makes -1 a p-th power)") {
    std::mt19937_64 rng(1002);
    for (int i = 0; i < kCases; ++i) {
        auto [p, theta] = random_pair(rng);
        auto rs = ResidueSet::subgroup(p, PrimeModulus(theta));
        std::uint64_t r = rs.members()[rng() % rs.members().size()];
        REQUIRE(rs.contains(theta - r));
    }
}

TEST_CASE("property: cardinality (theta-1)/gcd(p, theta-1), with 1 a member") {
    std::mt19937_64 rng(1003);
    for (int i = 0; i < kCases; ++i) {
        auto [p, theta] = random_pair(rng);
        auto rs = ResidueSet::subgroup(p, PrimeModulus(theta));
        REQUIRE(rs.members().size() == (theta - 1) / gcd_u64(p, theta - 1));
        REQUIRE(rs.contains(1));
    }
}

TEST_CASE("property: NC fails whenever theta != 1 (mod p) and theta > 3") {
    std::mt19937_64 rng(1004);
    int checked = 0;
    while (checked < kCases) {
        auto [p, theta] = random_pair(rng);
        if (theta <= 3 || theta % p == 1) continue;
        ++checked;
        auto rs = ResidueSet::subgroup(p, PrimeModulus(theta));
        auto [ok, witness] = check_nc(rs);
        REQUIRE_FALSE(ok);
        REQUIRE(witness.has_value());
        // p-th powering is a bijection here, so 1 and 2 are both members
        REQUIRE(*witness == std::make_pair(std::uint64_t(1), std::uint64_t(2)));
    }
}

TEST_CASE("property: scan qualifying set is monotone in the bound") {
    std::mt19937_64 rng(1005);
    for (int i = 0; i < kCases; ++i) {
        std::uint64_t p = random_odd_prime(rng, 3, 30);
        std::uint64_t b1 = 10 + rng() % 2000;
        std::uint64_t b2 = b1 + rng() % 2000;
        auto small = scan_nc(p, b1, false);
        auto large = scan_nc(p, b2, false);
        REQUIRE(std::includes(large.qualifying.begin(), large.qualifying.end(),
                              small.qualifying.begin(), small.qualifying.end()));
    }
}

TEST_CASE("property: parallel scan output is identical to sequential") {
    std::mt19937_64 rng(1006);
    for (int i = 0; i < kCases; ++i) {
        std::uint64_t p = random_odd_prime(rng, 3, 30);
        std::uint64_t bound = 1000 + rng() % 10'000;
        unsigned threads = 2 + rng() % 6;
        auto seq = scan_nc(p, bound, false, 1);
        auto par = scan_nc(p, bound, false, threads);
        REQUIRE(seq.qualifying == par.qualifying);
    }
}

TEST_CASE("property: brute force and subgroup agree on random pairs") {
    std::mt19937_64 rng(1007);
    for (int i = 0; i < kCases; ++i) {
        auto [p, theta] = random_pair(rng);
        REQUIRE(ResidueSet::brute_force(p, PrimeModulus(theta)).members()
                == ResidueSet::subgroup(p, PrimeModulus(theta)).members());
    }
}

TEST_CASE("property: NC-certified theta forces theta | xyz on all mod-theta solutions") {
    // the Grand Plan divisibility step as a literal finite statement
    for (std::uint64_t p : {3ull, 5ull}) {
        for (std::uint64_t theta = 5; theta <= 101; theta += 2) {
            if (!is_prime(theta) || theta == p) continue;
            auto rs = ResidueSet::brute_force(p, PrimeModulus(theta));
            if (!check_nc(rs).first) continue;
            for (std::uint64_t x = 0; x < theta; ++x)
                for (std::uint64_t y = 0; y < theta; ++y)
                    for (std::uint64_t z = 0; z < theta; ++z) {
                        std::uint64_t lhs = detail::pow_mod_u64(z, p, theta);
                        std::uint64_t rhs = (detail::pow_mod_u64(x, p, theta)
                                             + detail::pow_mod_u64(y, p, theta)) % theta;
                        if (lhs != rhs) continue;
                        REQUIRE((x % theta) * (y % theta) * (z % theta) % theta == 0);
                    }
        }
    }
}
