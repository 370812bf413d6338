#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>

#include "gf2circ/bits.hpp"
#include "gf2circ/errors.hpp"
#include "gf2circ/field/element.hpp"

namespace gf2circ {

// Dense GF(2)[x] arithmetic on coefficient vectors (index i <-> x^i). Trailing zeros are allowed
// on input; results are trimmed.
namespace poly {

inline int degree(const Bits& f) {
    for (std::size_t i = f.size(); i > 0; --i) {
        if (f[i - 1] != 0) {
            return static_cast<int>(i) - 1;
        }
    }
    return -1;
}

inline Bits trim(Bits f) {
    f.resize(static_cast<std::size_t>(degree(f) + 1));
    return f;
}

inline Bits add(const Bits& a, const Bits& b) {
    Bits sum(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        sum[i] ^= a[i];
    }
    for (std::size_t i = 0; i < b.size(); ++i) {
        sum[i] ^= b[i];
    }
    return trim(std::move(sum));
}

inline Bits mul(const Bits& a, const Bits& b) {
    const int da = degree(a);
    const int db = degree(b);
    if (da < 0 || db < 0) {
        return {};
    }
    Bits prod(static_cast<std::size_t>(da + db + 1), 0);
    for (int i = 0; i <= da; ++i) {
        if (a[i] == 0) {
            continue;
        }
        for (int j = 0; j <= db; ++j) {
            prod[i + j] ^= b[j];
        }
    }
    return prod;
}

/// (quotient, remainder) of a / b; b must be nonzero.
inline std::pair<Bits, Bits> divmod(const Bits& a, const Bits& b) {
    const int db = degree(b);
    if (db < 0) {
        throw std::domain_error("poly::divmod: division by zero");
    }
    Bits rem = trim(a);
    const int da = degree(rem);
    if (da < db) {
        return {Bits{}, rem};
    }
    Bits quot(static_cast<std::size_t>(da - db + 1), 0);
    for (int d = da; d >= db; --d) {
        if (rem[d] == 0) {
            continue;
        }
        quot[d - db] = 1;
        for (int j = 0; j <= db; ++j) {
            rem[d - db + j] ^= b[j];
        }
    }
    return {trim(std::move(quot)), trim(std::move(rem))};
}

inline Bits mod(const Bits& a, const Bits& f) { return divmod(a, f).second; }

inline Bits gcd(Bits a, Bits b) {
    a = trim(std::move(a));
    b = trim(std::move(b));
    while (degree(b) >= 0) {
        Bits r = mod(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

/// Ben-Or test: f of degree n is irreducible iff gcd(f, x^(2^i) - x) == 1 for i = 1..n/2.
inline bool is_irreducible(const Bits& f) {
    const int n = degree(f);
    if (n < 1) {
        return false;
    }
    const Bits x = {0, 1};
    Bits power = x;
    for (int i = 1; i <= n / 2; ++i) {
        power = mod(mul(power, power), f);
        const Bits g = gcd(f, add(power, x));
        if (degree(g) > 0) {
            return false;
        }
    }
    return true;
}

inline Bits all_one(int m) { return Bits(static_cast<std::size_t>(m) + 1, 1); }

/// Smallest degree-m irreducible polynomial, ordering candidates by their integer value
/// (x^m is the most significant bit).
inline Bits find_irreducible(int m) {
    if (m < 1) {
        throw UnsupportedDegree("find_irreducible: degree must be positive");
    }
    for (std::uint64_t low = 1;; low += 2) {
        Bits f = from_integer(low, static_cast<std::size_t>(m) + 1);
        f[static_cast<std::size_t>(m)] = 1;
        if (is_irreducible(f)) {
            return f;
        }
    }
}

} // namespace poly

/// GF(2)[x]/(f) in the polynomial basis. Used as an independent ground truth for the other
/// representations.
class PolyBasisField {
  public:
    explicit PolyBasisField(Bits modulus) : modulus_(poly::trim(std::move(modulus))) {
        m_ = poly::degree(modulus_);
        if (m_ < 2) {
            throw UnsupportedDegree("modulus degree must be at least 2");
        }
        if (!poly::is_irreducible(modulus_)) {
            throw InvalidParams("modulus is not irreducible");
        }
    }

    /// All-one polynomial when irreducible, otherwise the smallest irreducible polynomial.
    static PolyBasisField for_degree(int m) {
        if (m < 2) {
            throw UnsupportedDegree("extension degree must be at least 2");
        }
        Bits f = poly::all_one(m);
        if (!poly::is_irreducible(f)) {
            f = poly::find_irreducible(m);
        }
        return PolyBasisField(std::move(f));
    }

    int degree() const noexcept { return m_; }
    const Bits& modulus() const noexcept { return modulus_; }

    PolyElement one() const { return PolyElement(m_, unit(static_cast<std::size_t>(m_), 0)); }

    PolyElement multiply(const PolyElement& a, const PolyElement& b) const {
        check(a);
        check(b);
        return wrap(poly::mod(poly::mul(a.coeffs(), b.coeffs()), modulus_));
    }

    /// Inverse by the extended Euclidean algorithm; zero maps to zero.
    PolyElement inverse(const PolyElement& a) const {
        check(a);
        if (is_zero(a.coeffs())) {
            return PolyElement::zero(m_);
        }
        Bits r0 = modulus_;
        Bits r1 = poly::trim(a.coeffs());
        Bits s0;
        Bits s1 = {1};
        while (poly::degree(r1) > 0) {
            auto [q, r] = poly::divmod(r0, r1);
            Bits s = poly::add(s0, poly::mul(q, s1));
            r0 = std::move(r1);
            r1 = std::move(r);
            s0 = std::move(s1);
            s1 = std::move(s);
        }
        return wrap(poly::mod(s1, modulus_));
    }

  private:
    void check(const PolyElement& a) const {
        if (a.degree() != m_) {
            throw DegreeMismatch("element degree " + std::to_string(a.degree()) + " != field degree " +
                                 std::to_string(m_));
        }
    }

    PolyElement wrap(Bits v) const {
        v.resize(static_cast<std::size_t>(m_), 0);
        return PolyElement(m_, std::move(v));
    }

    Bits modulus_;
    int m_ = 0;
};

} // namespace gf2circ
