#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "gf2circ/errors.hpp"
#include "gf2circ/field/element.hpp"
#include "gf2circ/number_theory.hpp"

namespace gf2circ {

/// True iff m + 1 is prime and 2 generates the multiplicative group mod m + 1, i.e. the all-one
/// polynomial of degree m is irreducible.
inline bool check_ghost_bit_support(int m) {
    if (m < 2) {
        return false;
    }
    const auto p = static_cast<std::uint64_t>(m) + 1;
    return nt::is_prime(p) && nt::multiplicative_order(2, p) == static_cast<std::uint64_t>(m);
}

inline void require_ghost_bit_support(int m) {
    if (!check_ghost_bit_support(m)) {
        throw UnsupportedDegree("no ghost-bit basis for m = " + std::to_string(m) +
                                " (needs m+1 prime with 2 primitive)");
    }
}

/// Squaring permutation: coefficient i moves to position 2i mod (m+1).
inline std::vector<int> ghost_square_permutation(int m) {
    std::vector<int> perm(static_cast<std::size_t>(m) + 1);
    for (int i = 0; i <= m; ++i) {
        perm[i] = static_cast<int>(nt::mod(2 * i, m + 1));
    }
    return perm;
}

/// Appends the zero ghost bit.
inline GhostBitElement phi_embed(const PolyElement& a) {
    require_ghost_bit_support(a.degree());
    Bits v = a.coeffs();
    v.push_back(0);
    return GhostBitElement(a.degree(), std::move(v));
}

/// Drops the ghost bit after XORing it into the other m coefficients.
inline PolyElement phi_retract(const GhostBitElement& a) {
    const int m = a.degree();
    require_ghost_bit_support(m);
    Bits v(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) {
        v[i] = a[i] ^ a[m];
    }
    return PolyElement(m, std::move(v));
}

/// a^(2^r): coefficient i moves to position 2^r * i mod (m+1).
inline GhostBitElement gbb_power(const GhostBitElement& a, int r) {
    const int n = a.degree() + 1;
    const auto shift = static_cast<std::int64_t>(nt::pow_mod(2, static_cast<std::uint64_t>(nt::mod(r, n - 1)), n));
    Bits out(static_cast<std::size_t>(n), 0);
    for (int i = 0; i < n; ++i) {
        out[static_cast<std::size_t>(nt::mod(shift * i, n))] = a[i];
    }
    return GhostBitElement(a.degree(), std::move(out));
}

inline GhostBitElement gbb_square(const GhostBitElement& a) { return gbb_power(a, 1); }

/// Cyclic convolution of the two (m+1)-vectors, i.e. the product in GF(2)[x]/(x^(m+1) + 1).
inline GhostBitElement gbb_mult(const GhostBitElement& a, const GhostBitElement& b) {
    if (a.degree() != b.degree()) {
        throw DegreeMismatch("ghost-bit operands of degree " + std::to_string(a.degree()) + " and " +
                             std::to_string(b.degree()));
    }
    const int n = a.degree() + 1;
    Bits out(static_cast<std::size_t>(n), 0);
    for (int i = 0; i < n; ++i) {
        std::uint8_t acc = 0;
        for (int j = 0; j < n; ++j) {
            acc ^= a[j] & b[static_cast<std::size_t>(nt::mod(i - j, n))];
        }
        out[i] = acc;
    }
    return GhostBitElement(a.degree(), std::move(out));
}

inline GhostBitElement gbb_one(int m) {
    return GhostBitElement(m, unit(static_cast<std::size_t>(m) + 1, 0));
}

/// Equal as field elements (a vector and its complement are the same element).
inline bool gbb_equivalent(const GhostBitElement& a, const GhostBitElement& b) {
    return a == b || a.coeffs() == complement(b.coeffs());
}

} // namespace gf2circ
