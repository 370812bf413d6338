#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "gf2circ/bits.hpp"
#include "gf2circ/errors.hpp"
#include "gf2circ/field/gaussian.hpp"
#include "gf2circ/number_theory.hpp"

namespace gf2circ {

namespace detail {

inline std::uint64_t clmul(std::uint64_t a, std::uint64_t b) {
    std::uint64_t r = 0;
    while (b != 0) {
        if (b & 1U) {
            r ^= a;
        }
        a <<= 1U;
        b >>= 1U;
    }
    return r;
}

inline std::uint64_t clmod(std::uint64_t a, std::uint64_t f) {
    const int df = static_cast<int>(std::bit_width(f)) - 1;
    for (int d = static_cast<int>(std::bit_width(a)) - 1; d >= df; --d) {
        if ((a >> d) & 1U) {
            a ^= f << (d - df);
        }
    }
    return a;
}

/// Trial division by every polynomial of degree 1..n/2.
inline bool small_is_irreducible(std::uint64_t f) {
    const int n = static_cast<int>(std::bit_width(f)) - 1;
    if (n < 1) {
        return false;
    }
    const std::uint64_t limit = std::uint64_t{1} << (n / 2 + 1);
    for (std::uint64_t g = 2; g < limit; ++g) {
        if (clmod(f, g) == 0) {
            return false;
        }
    }
    return true;
}

/// GF(2^n) = GF(2)[x]/(f) with elements packed in a word; n <= 31.
class SmallBinaryField {
  public:
    explicit SmallBinaryField(int n) : n_(n) {
        if (n < 1 || n > 31) {
            throw ConstructionFailed("extension degree " + std::to_string(n) + " out of range");
        }
        for (std::uint64_t low = 1;; low += 2) {
            const std::uint64_t f = (std::uint64_t{1} << n) | low;
            if (small_is_irreducible(f)) {
                modulus_ = f;
                break;
            }
        }
    }

    int degree() const noexcept { return n_; }
    std::uint64_t modulus() const noexcept { return modulus_; }
    std::uint64_t order() const noexcept { return (std::uint64_t{1} << n_) - 1; }

    std::uint64_t mul(std::uint64_t a, std::uint64_t b) const { return clmod(clmul(a, b), modulus_); }

    std::uint64_t pow(std::uint64_t a, std::uint64_t e) const {
        std::uint64_t r = 1;
        while (e != 0) {
            if (e & 1U) {
                r = mul(r, a);
            }
            a = mul(a, a);
            e >>= 1U;
        }
        return r;
    }

  private:
    int n_;
    std::uint64_t modulus_ = 0;
};

inline std::size_t gf2_rank(std::vector<std::uint64_t> rows) {
    std::size_t rank = 0;
    for (int bit = 63; bit >= 0; --bit) {
        const std::uint64_t mask = std::uint64_t{1} << bit;
        std::size_t pivot = rank;
        while (pivot < rows.size() && (rows[pivot] & mask) == 0) {
            ++pivot;
        }
        if (pivot == rows.size()) {
            continue;
        }
        std::swap(rows[rank], rows[pivot]);
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r != rank && (rows[r] & mask) != 0) {
                rows[r] ^= rows[rank];
            }
        }
        ++rank;
    }
    return rank;
}

} // namespace detail

struct IsomorphismOptions {
    /// Largest t*m for which GF(2^(tm)) is built explicitly.
    int max_tm = 24;
    /// Exhaustive over all pairs while m is at most this.
    int exhaustive_max_degree = 8;
    std::size_t random_pairs = 4096;
    std::size_t property_trials = 100;
    std::uint64_t seed = 0xB10F;
};

/// Algebraic sanity suite used when the explicit construction is too large: commutativity,
/// all-ones identity, a*a == a^2 and associativity on random operands.
inline bool gnb_property_suite(const GnbParams& params, std::size_t trials, std::uint64_t seed) {
    const int m = params.m;
    std::mt19937_64 rng(seed);
    const GnbElement one = gnb_one(m);
    for (std::size_t n = 0; n < trials; ++n) {
        const GnbElement a(m, random_bits(static_cast<std::size_t>(m), rng));
        const GnbElement b(m, random_bits(static_cast<std::size_t>(m), rng));
        const GnbElement c(m, random_bits(static_cast<std::size_t>(m), rng));
        const GnbElement ab = gnb_mult(params, a, b);
        if (ab != gnb_mult(params, b, a) || gnb_mult(params, a, one) != a ||
            gnb_mult(params, a, a) != gnb_square(a) ||
            gnb_mult(params, ab, c) != gnb_mult(params, a, gnb_mult(params, b, c))) {
            return false;
        }
    }
    return true;
}

/// Builds the Gauss period eta = sum_j alpha^(u^j) for a primitive p-th root of unity alpha in
/// GF(2^(tm)), maps the basis {eta^(2^i)} into that field and checks gnb_mult against the
/// field multiplication there. Falls back to gnb_property_suite when t*m > max_tm.
inline bool gnb_verify_isomorphism(const GnbParams& params, const IsomorphismOptions& options = {}) {
    const int m = params.m;
    const int tm = params.t * m;
    if (m < 2 || params.t < 1 || params.p != static_cast<std::uint64_t>(tm) + 1 || !nt::is_prime(params.p) ||
        params.f_table.size() != params.p - 1) {
        throw ConstructionFailed("malformed Gaussian normal basis parameters");
    }
    if (tm > options.max_tm) {
        return gnb_property_suite(params, options.property_trials, options.seed);
    }

    const detail::SmallBinaryField big(tm);
    if (big.order() % params.p != 0) {
        throw ConstructionFailed("p = " + std::to_string(params.p) + " does not divide 2^" + std::to_string(tm) + " - 1");
    }
    const std::uint64_t cofactor = big.order() / params.p;
    std::uint64_t root = 1;
    for (std::uint64_t g = 2; g <= big.order() && root == 1; ++g) {
        root = big.pow(g, cofactor);
    }
    if (root == 1) {
        throw ConstructionFailed("no primitive p-th root of unity in GF(2^" + std::to_string(tm) + ")");
    }

    std::uint64_t eta = 0;
    std::uint64_t exponent = 1;
    for (int j = 0; j < params.t; ++j) {
        eta ^= big.pow(root, exponent);
        exponent = nt::mul_mod(exponent, params.u, params.p);
    }
    std::vector<std::uint64_t> basis(static_cast<std::size_t>(m));
    basis[0] = eta;
    for (int i = 1; i < m; ++i) {
        basis[i] = big.mul(basis[i - 1], basis[i - 1]);
    }
    if (detail::gf2_rank(basis) != static_cast<std::size_t>(m)) {
        return false;
    }

    auto embed = [&](const GnbElement& a) {
        std::uint64_t x = 0;
        for (int i = 0; i < m; ++i) {
            if (a[i] != 0) {
                x ^= basis[i];
            }
        }
        return x;
    };
    auto agrees = [&](const GnbElement& a, const GnbElement& b) {
        return embed(gnb_mult(params, a, b)) == big.mul(embed(a), embed(b));
    };

    if (m <= options.exhaustive_max_degree) {
        const std::uint64_t count = std::uint64_t{1} << m;
        for (std::uint64_t x = 0; x < count; ++x) {
            const GnbElement a(m, from_integer(x, static_cast<std::size_t>(m)));
            for (std::uint64_t y = 0; y < count; ++y) {
                if (!agrees(a, GnbElement(m, from_integer(y, static_cast<std::size_t>(m))))) {
                    return false;
                }
            }
        }
        return true;
    }
    // Both products are bilinear, so agreement on basis pairs is already conclusive.
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < m; ++j) {
            if (!agrees(GnbElement(m, unit(static_cast<std::size_t>(m), static_cast<std::size_t>(i))),
                        GnbElement(m, unit(static_cast<std::size_t>(m), static_cast<std::size_t>(j))))) {
                return false;
            }
        }
    }
    std::mt19937_64 rng(options.seed);
    for (std::size_t n = 0; n < options.random_pairs; ++n) {
        if (!agrees(GnbElement(m, random_bits(static_cast<std::size_t>(m), rng)),
                    GnbElement(m, random_bits(static_cast<std::size_t>(m), rng)))) {
            return false;
        }
    }
    return true;
}

} // namespace gf2circ
