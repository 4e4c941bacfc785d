#pragma once

// Exact modular arithmetic on machine-word integers (moduli < 2^62),
// deterministic primality testing, trial-division factorization, and
// primitive-root computation for prime moduli.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace germain {

inline constexpr std::uint64_t kModulusLimit = std::uint64_t(1) << 62;

namespace detail {

inline std::uint64_t mul_mod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

inline std::uint64_t pow_mod_u64(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
    std::uint64_t result = 1 % m;
    std::uint64_t base = a % m;
    while (e > 0) {
        if (e & 1) result = mul_mod_u64(result, base, m);
        base = mul_mod_u64(base, base, m);
        e >>= 1;
    }
    return result;
}

// One strong-pseudoprime round for witness a; n odd, n-1 = d * 2^s.
inline bool miller_rabin_round(std::uint64_t n, std::uint64_t d, int s, std::uint64_t a) {
    std::uint64_t x = pow_mod_u64(a % n, d, n);
    if (x == 1 || x == n - 1) return true;
    for (int i = 1; i < s; ++i) {
        x = mul_mod_u64(x, x, n);
        if (x == n - 1) return true;
    }
    return false;
}

}  // namespace detail

// Deterministic for all n < 2^62: the first twelve prime witnesses are known
// to have no composite strong pseudoprime below 3.18e23.
inline bool is_prime(std::uint64_t n) {
    if (n >= kModulusLimit)
        throw std::out_of_range("is_prime: n must be < 2^62");
    if (n < 2) return false;
    for (std::uint64_t p : {2u, 3u, 5u, 7u, 11u, 13u, 17u, 19u, 23u, 29u, 31u, 37u}) {
        if (n == p) return true;
        if (n % p == 0) return false;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) { d >>= 1; ++s; }
    for (std::uint64_t a : {2u, 3u, 5u, 7u, 11u, 13u, 17u, 19u, 23u, 29u, 31u, 37u})
        if (!detail::miller_rabin_round(n, d, s, a)) return false;
    return true;
}

// A certified odd prime used as the residue-clock modulus.
class PrimeModulus {
public:
    explicit PrimeModulus(std::uint64_t value) : value_(value) {
        if (value < 3 || value >= kModulusLimit || value % 2 == 0 || !is_prime(value))
            throw std::invalid_argument("PrimeModulus: value must be an odd prime in [3, 2^62)");
    }

    std::uint64_t value() const noexcept { return value_; }

    friend bool operator==(PrimeModulus a, PrimeModulus b) noexcept { return a.value_ == b.value_; }
    friend bool operator!=(PrimeModulus a, PrimeModulus b) noexcept { return a.value_ != b.value_; }

private:
    std::uint64_t value_;
};

// An element of the residue clock mod theta, kept in [0, theta).
struct Residue {
    std::uint64_t value;
    PrimeModulus modulus;

    Residue(std::uint64_t v, PrimeModulus m) : value(v % m.value()), modulus(m) {}

    friend bool operator==(const Residue& a, const Residue& b) noexcept {
        return a.value == b.value && a.modulus == b.modulus;
    }
};

inline Residue mul_mod(const Residue& a, const Residue& b) {
    if (a.modulus != b.modulus)
        throw std::invalid_argument("mul_mod: modulus mismatch");
    return {detail::mul_mod_u64(a.value, b.value, a.modulus.value()), a.modulus};
}

// Square-and-multiply. Convention: a^0 = 1 for every a, including a = 0,
// so the operation is total.
inline Residue pow_mod(const Residue& a, std::uint64_t e) {
    return {detail::pow_mod_u64(a.value, e, a.modulus.value()), a.modulus};
}

// Division on the clock: inverse exists for every nonzero residue because
// the modulus is prime (a^(theta-2) by Fermat's little theorem).
inline Residue inv_mod(const Residue& a) {
    if (a.value == 0)
        throw std::domain_error("inv_mod: zero has no inverse");
    return pow_mod(a, a.modulus.value() - 2);
}

using Factorization = std::vector<std::pair<std::uint64_t, int>>;

// Complete prime factorization by trial division, primes ascending.
// Divisors are only tried up to effort_cap; if a composite cofactor
// survives (both factors above the cap) this throws rather than return
// a partial answer.
inline Factorization factorize(std::uint64_t n, std::uint64_t effort_cap = 10'000'000) {
    if (n < 2) throw std::invalid_argument("factorize: n must be >= 2");
    if (n >= kModulusLimit) throw std::out_of_range("factorize: n must be < 2^62");
    Factorization factors;
    auto push = [&](std::uint64_t p) {
        if (!factors.empty() && factors.back().first == p)
            ++factors.back().second;
        else
            factors.emplace_back(p, 1);
    };
    for (std::uint64_t d : {2u, 3u}) {
        while (n % d == 0) { push(d); n /= d; }
    }
    for (std::uint64_t d = 5; d <= effort_cap && d * d <= n; d += 6) {
        while (n % d == 0) { push(d); n /= d; }
        while (n % (d + 2) == 0) { push(d + 2); n /= d + 2; }
    }
    if (n > 1) {
        if (!is_prime(n))
            throw std::runtime_error("factorize: factorization too hard (cofactor "
                                     + std::to_string(n) + " exceeds effort cap)");
        push(n);
    }
    return factors;
}

// Generator of the full multiplicative group mod theta, certified by the
// factorization of theta-1.
struct PrimitiveRoot {
    Residue g;
    Factorization order_factorization;  // of theta-1
};

// Smallest primitive root g >= 2, for reproducibility across runs.
inline PrimitiveRoot primitive_root(PrimeModulus theta) {
    const std::uint64_t t = theta.value();
    const Factorization fac = factorize(t - 1);
    for (std::uint64_t g = 2; g < t; ++g) {
        bool ok = true;
        for (const auto& [q, e] : fac) {
            if (detail::pow_mod_u64(g, (t - 1) / q, t) == 1) { ok = false; break; }
        }
        if (ok) return {Residue{g, theta}, fac};
    }
    throw std::logic_error("primitive_root: none found (modulus not prime?)");
}

inline std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b) {
    while (b != 0) { std::uint64_t t = a % b; a = b; b = t; }
    return a;
}

}  // namespace germain
