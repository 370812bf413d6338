#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <vector>

namespace gf2circ {

/// One byte per bit, each entry 0 or 1. Index i is the coefficient of the i-th basis element.
using Bits = std::vector<std::uint8_t>;

inline Bits zeros(std::size_t n) { return Bits(n, 0); }

inline Bits ones(std::size_t n) { return Bits(n, 1); }

inline Bits unit(std::size_t n, std::size_t index) {
    Bits v(n, 0);
    v.at(index) = 1;
    return v;
}

inline bool is_zero(const Bits& v) {
    for (auto b : v) {
        if (b != 0) {
            return false;
        }
    }
    return true;
}

inline Bits complement(Bits v) {
    for (auto& b : v) {
        b ^= 1U;
    }
    return v;
}

inline Bits& xor_into(Bits& acc, const Bits& v) {
    for (std::size_t i = 0; i < acc.size() && i < v.size(); ++i) {
        acc[i] ^= v[i];
    }
    return acc;
}

/// Bits of `value`, least significant first.
inline Bits from_integer(std::uint64_t value, std::size_t n) {
    Bits v(n, 0);
    for (std::size_t i = 0; i < n && i < 64; ++i) {
        v[i] = static_cast<std::uint8_t>((value >> i) & 1U);
    }
    return v;
}

inline std::uint64_t to_integer(const Bits& v) {
    std::uint64_t value = 0;
    for (std::size_t i = 0; i < v.size() && i < 64; ++i) {
        value |= static_cast<std::uint64_t>(v[i] & 1U) << i;
    }
    return value;
}

/// "10100" style, index 0 first.
inline std::string to_string(const Bits& v) {
    std::string s;
    s.reserve(v.size());
    for (auto b : v) {
        s.push_back(b != 0 ? '1' : '0');
    }
    return s;
}

inline Bits from_string(std::string_view s) {
    Bits v;
    v.reserve(s.size());
    for (char c : s) {
        if (c == '0' || c == '1') {
            v.push_back(static_cast<std::uint8_t>(c - '0'));
        }
    }
    return v;
}

template <class Rng>
Bits random_bits(std::size_t n, Rng& rng) {
    std::bernoulli_distribution coin(0.5);
    Bits v(n, 0);
    for (auto& b : v) {
        b = coin(rng) ? 1 : 0;
    }
    return v;
}

} // namespace gf2circ
