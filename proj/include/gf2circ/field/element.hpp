#pragma once

#include <cstddef>
#include <string>
#include <utility>

#include "gf2circ/bits.hpp"
#include "gf2circ/errors.hpp"

namespace gf2circ {

enum class Basis { Polynomial, GhostBit, Gaussian };

/// Coefficient vector of an element of GF(2^m) in basis `B`.
///
/// Polynomial and Gaussian elements carry m coefficients; ghost-bit elements carry m + 1, and a
/// ghost-bit vector and its bitwise complement denote the same field element.
template <Basis B>
class Element {
  public:
    static constexpr Basis basis = B;

    static constexpr std::size_t width_for(int m) {
        return B == Basis::GhostBit ? static_cast<std::size_t>(m) + 1 : static_cast<std::size_t>(m);
    }

    Element(int m, Bits coeffs) : m_(m), coeffs_(std::move(coeffs)) {
        if (m < 2) {
            throw UnsupportedDegree("extension degree must be at least 2, got " + std::to_string(m));
        }
        if (coeffs_.size() != width_for(m)) {
            throw DegreeMismatch("expected " + std::to_string(width_for(m)) + " coefficients, got " +
                                 std::to_string(coeffs_.size()));
        }
        for (auto& b : coeffs_) {
            b &= 1U;
        }
    }

    static Element zero(int m) { return Element(m, zeros(width_for(m))); }

    int degree() const noexcept { return m_; }
    std::size_t width() const noexcept { return coeffs_.size(); }
    const Bits& coeffs() const noexcept { return coeffs_; }
    std::uint8_t operator[](std::size_t i) const { return coeffs_[i]; }

    friend Element operator+(const Element& a, const Element& b) {
        if (a.m_ != b.m_) {
            throw DegreeMismatch("cannot add elements of different degree");
        }
        Bits sum = a.coeffs_;
        xor_into(sum, b.coeffs_);
        return Element(a.m_, std::move(sum));
    }

    friend bool operator==(const Element&, const Element&) = default;

  private:
    int m_;
    Bits coeffs_;
};

using PolyElement = Element<Basis::Polynomial>;
using GhostBitElement = Element<Basis::GhostBit>;
using GnbElement = Element<Basis::Gaussian>;

} // namespace gf2circ
