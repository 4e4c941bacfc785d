#include <catch2/catch_amalgamated.hpp>

#include <numeric>
#include <random>
#include <vector>

#include "germain/arith.hpp"

using namespace germain;

namespace {

// Independent trial-division oracle.
bool trial_division_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

}  // namespace

TEST_CASE("is_prime on small inputs") {
    CHECK(is_prime(7));
    CHECK_FALSE(is_prime(1));
    CHECK(is_prime(2 * 3 * 5 + 1));  // 31, trial-division verified below
    CHECK(trial_division_prime(31));
    CHECK_FALSE(is_prime(0));
    CHECK(is_prime(2));
    CHECK_FALSE(is_prime(561));  // Carmichael
}

TEST_CASE("is_prime rejects out-of-range input") {
    CHECK_THROWS_AS(is_prime(std::uint64_t(1) << 62), std::out_of_range);
}

TEST_CASE("is_prime agrees with trial division below 10^6") {
    std::vector<bool> sieve(1'000'000, true);
    sieve[0] = sieve[1] = false;
    for (std::uint64_t i = 2; i * i < sieve.size(); ++i)
        if (sieve[i])
            for (std::uint64_t j = i * i; j < sieve.size(); j += i) sieve[j] = false;
    for (std::uint64_t n = 0; n < sieve.size(); ++n)
        REQUIRE(is_prime(n) == sieve[n]);
}

TEST_CASE("PrimeModulus validates") {
    CHECK_THROWS_AS(PrimeModulus(4), std::invalid_argument);
    CHECK_THROWS_AS(PrimeModulus(2), std::invalid_argument);
    CHECK_THROWS_AS(PrimeModulus(1), std::invalid_argument);
    CHECK(PrimeModulus(7).value() == 7);
}

TEST_CASE("mul_mod") {
    PrimeModulus m5(5);
    CHECK(mul_mod(Residue{2, m5}, Residue{3, m5}).value == 1);

    PrimeModulus m101(101);
    CHECK(mul_mod(Residue{42, m101}, Residue{1, m101}).value == 42);
    CHECK(mul_mod(Residue{100, m101}, Residue{100, m101}).value == 1);  // (-1)^2

    CHECK_THROWS_AS(mul_mod(Residue{1, m5}, Residue{1, m101}), std::invalid_argument);
}

TEST_CASE("mul_mod has no intermediate overflow near the cap") {
    PrimeModulus m((std::uint64_t(1) << 62) - 57);  // prime
    std::uint64_t big = m.value() - 2;
    // (m-2)^2 = m^2 - 4m + 4 = 4 - 4m = 4 + (-4)m, so (m-2)^2 mod m = 4
    CHECK(mul_mod(Residue{big, m}, Residue{big, m}).value == 4);
}

TEST_CASE("pow_mod") {
    PrimeModulus m7(7);
    CHECK(pow_mod(Residue{3, m7}, 3).value == 6);
    CHECK(pow_mod(Residue{5, m7}, 1).value == 5);
    CHECK(pow_mod(Residue{0, m7}, 0).value == 1);  // total by convention
    for (std::uint64_t a = 1; a < 7; ++a)
        CHECK(pow_mod(Residue{a, m7}, 6).value == 1);  // Fermat
}

TEST_CASE("pow_mod agrees with repeated multiplication") {
    std::mt19937_64 rng(20260825);
    PrimeModulus m(999999937);
    for (int i = 0; i < 500; ++i) {
        std::uint64_t a = rng() % m.value();
        std::uint64_t e = rng() % 65;
        Residue acc{1, m};
        for (std::uint64_t k = 0; k < e; ++k) acc = mul_mod(acc, Residue{a, m});
        CHECK(pow_mod(Residue{a, m}, e).value == acc.value);
    }
}

TEST_CASE("inv_mod") {
    PrimeModulus m5(5), m7(7);
    CHECK(inv_mod(Residue{2, m5}).value == 3);
    CHECK(inv_mod(Residue{1, m7}).value == 1);
    CHECK(inv_mod(Residue{5, m7}).value == 3);
    CHECK_THROWS_AS(inv_mod(Residue{0, m5}), std::domain_error);
}

TEST_CASE("inv_mod exhaustive for moduli below 1000, randomized above") {
    for (std::uint64_t t = 3; t < 1000; t += 2) {
        if (!is_prime(t)) continue;
        PrimeModulus m(t);
        for (std::uint64_t a = 1; a < t; ++a)
            REQUIRE(mul_mod(Residue{a, m}, inv_mod(Residue{a, m})).value == 1);
    }
    std::mt19937_64 rng(7);
    PrimeModulus big((std::uint64_t(1) << 61) - 1);  // Mersenne prime
    for (int i = 0; i < 200; ++i) {
        std::uint64_t a = rng() % (big.value() - 1) + 1;
        REQUIRE(mul_mod(Residue{a, big}, inv_mod(Residue{a, big})).value == 1);
    }
}

TEST_CASE("factorize") {
    CHECK(factorize(6) == Factorization{{2, 1}, {3, 1}});
    CHECK(factorize(12) == Factorization{{2, 2}, {3, 1}});
    CHECK(factorize(97) == Factorization{{97, 1}});
    CHECK(factorize(2) == Factorization{{2, 1}});
    CHECK_THROWS_AS(factorize(1), std::invalid_argument);
}

TEST_CASE("factorize rejects a too-hard cofactor instead of partial output") {
    // 1000003 * 1000033 — both factors above a cap of 1000
    std::uint64_t n = 1000003ULL * 1000033ULL;
    CHECK_THROWS_AS(factorize(n, 1000), std::runtime_error);
    // with the default cap it resolves fine
    auto f = factorize(n);
    CHECK(f == Factorization{{1000003, 1}, {1000033, 1}});
}

TEST_CASE("factorize multiplies back with prime factors") {
    std::mt19937_64 rng(42);
    for (int i = 0; i < 300; ++i) {
        std::uint64_t n = rng() % 10'000'000 + 2;
        std::uint64_t back = 1;
        for (auto [p, e] : factorize(n)) {
            REQUIRE(is_prime(p));
            for (int k = 0; k < e; ++k) back *= p;
        }
        REQUIRE(back == n);
    }
}

TEST_CASE("primitive_root on small moduli") {
    CHECK(primitive_root(PrimeModulus(7)).g.value == 3);
    CHECK(primitive_root(PrimeModulus(5)).g.value == 2);
    CHECK(primitive_root(PrimeModulus(3)).g.value == 2);
}

TEST_CASE("primitive_root generates the full group for moduli below 2000") {
    for (std::uint64_t t = 3; t < 2000; t += 2) {
        if (!is_prime(t)) continue;
        PrimeModulus m(t);
        auto pr = primitive_root(m);
        // certificate structure
        std::uint64_t n = 1;
        for (auto [q, e] : pr.order_factorization)
            for (int k = 0; k < e; ++k) n *= q;
        REQUIRE(n == t - 1);
        // full orbit
        std::vector<bool> hit(t, false);
        std::uint64_t r = 1;
        std::uint64_t count = 0;
        do {
            REQUIRE_FALSE(hit[r]);
            hit[r] = true;
            ++count;
            r = detail::mul_mod_u64(r, pr.g.value, t);
        } while (r != 1);
        REQUIRE(count == t - 1);
    }
}
