#pragma once

#include <bit>
#include <cstdint>
#include <numeric>
#include <stdexcept>

namespace gf2circ::nt {

inline std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t n) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % n);
}

inline std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t n) {
    std::uint64_t result = 1 % n;
    base %= n;
    while (exp > 0) {
        if (exp & 1U) {
            result = mul_mod(result, base, n);
        }
        base = mul_mod(base, base, n);
        exp >>= 1U;
    }
    return result;
}

namespace detail {

inline bool miller_rabin_round(std::uint64_t n, std::uint64_t witness, std::uint64_t d, int s) {
    std::uint64_t x = pow_mod(witness, d, n);
    if (x == 1 || x == n - 1) {
        return true;
    }
    for (int r = 1; r < s; ++r) {
        x = mul_mod(x, x, n);
        if (x == n - 1) {
            return true;
        }
    }
    return false;
}

} // namespace detail

/// Trial division below 2^32; deterministic Miller-Rabin above.
inline bool is_prime(std::uint64_t n) {
    if (n < 2) {
        return false;
    }
    if (n < (std::uint64_t{1} << 32)) {
        if (n % 2 == 0) {
            return n == 2;
        }
        for (std::uint64_t d = 3; d * d <= n; d += 2) {
            if (n % d == 0) {
                return false;
            }
        }
        return true;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1U) == 0) {
        d >>= 1U;
        ++s;
    }
    // This witness set is exact for all 64-bit n.
    for (std::uint64_t w : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        if (!detail::miller_rabin_round(n, w, d, s)) {
            return false;
        }
    }
    return true;
}

/// Multiplicative order of `a` modulo `n`; requires gcd(a, n) == 1.
inline std::uint64_t multiplicative_order(std::uint64_t a, std::uint64_t n) {
    if (n < 2 || std::gcd(a % n, n) != 1) {
        throw std::domain_error("multiplicative_order: a not invertible mod n");
    }
    std::uint64_t x = a % n;
    std::uint64_t order = 1;
    while (x != 1) {
        x = mul_mod(x, a, n);
        ++order;
    }
    return order;
}

/// Inverse of `a` modulo `n` by the extended Euclidean algorithm.
inline std::int64_t inverse_mod(std::int64_t a, std::int64_t n) {
    std::int64_t r0 = n;
    std::int64_t r1 = ((a % n) + n) % n;
    std::int64_t s0 = 0;
    std::int64_t s1 = 1;
    while (r1 != 0) {
        const std::int64_t q = r0 / r1;
        std::int64_t tmp = r0 - q * r1;
        r0 = r1;
        r1 = tmp;
        tmp = s0 - q * s1;
        s0 = s1;
        s1 = tmp;
    }
    if (r0 != 1) {
        throw std::domain_error("inverse_mod: not invertible");
    }
    return ((s0 % n) + n) % n;
}

/// Non-negative residue of `a` modulo `n`.
constexpr std::int64_t mod(std::int64_t a, std::int64_t n) { return ((a % n) + n) % n; }

/// floor(log2(n)) for n >= 1.
constexpr int floor_log2(std::uint64_t n) { return static_cast<int>(std::bit_width(n)) - 1; }

constexpr int hamming_weight(std::uint64_t n) { return std::popcount(n); }

} // namespace gf2circ::nt
