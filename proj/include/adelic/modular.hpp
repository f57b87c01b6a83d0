#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace adelic {

/// Least non-negative residue of `a` modulo `m` (m > 0).
constexpr std::int64_t mod(std::int64_t a, std::int64_t m) {
    std::int64_t r = a % m;
    return r < 0 ? r + m : r;
}

constexpr std::int64_t pow_mod(std::int64_t base, std::uint64_t e, std::int64_t m) {
    std::int64_t result = 1 % m;
    base = mod(base, m);
    while (e > 0) {
        if (e & 1U) result = result * base % m;
        base = base * base % m;
        e >>= 1U;
    }
    return result;
}

/// Inverse of `a` modulo `m`; throws std::domain_error when gcd(a, m) != 1.
inline std::int64_t inv_mod(std::int64_t a, std::int64_t m) {
    std::int64_t r0 = m, r1 = mod(a, m);
    std::int64_t s0 = 0, s1 = 1;
    while (r1 != 0) {
        std::int64_t q = r0 / r1;
        std::int64_t tmp = r0 - q * r1;
        r0 = r1;
        r1 = tmp;
        tmp = s0 - q * s1;
        s0 = s1;
        s1 = tmp;
    }
    if (r0 != 1) throw std::domain_error("inv_mod: not invertible");
    return mod(s0, m);
}

constexpr bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

/// Distinct prime divisors in increasing order.
inline std::vector<std::uint64_t> prime_divisors(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

}  // namespace adelic
