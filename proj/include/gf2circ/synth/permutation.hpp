#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "gf2circ/circuit/circuit.hpp"
#include "gf2circ/errors.hpp"
#include "gf2circ/field/field_spec.hpp"
#include "gf2circ/number_theory.hpp"

namespace gf2circ {

/// Maps logical coefficient l to position map[l] inside a register. Reading a register through a
/// permutation is how powers of two come for free.
class WirePermutation {
  public:
    WirePermutation() = default;

    explicit WirePermutation(std::vector<std::size_t> map) : map_(std::move(map)) {
        std::vector<bool> seen(map_.size(), false);
        for (auto v : map_) {
            if (v >= map_.size() || seen[v]) {
                throw InvalidParams("wire permutation is not a bijection");
            }
            seen[v] = true;
        }
    }

    static WirePermutation identity(std::size_t n) {
        std::vector<std::size_t> map(n);
        for (std::size_t i = 0; i < n; ++i) {
            map[i] = i;
        }
        return WirePermutation(std::move(map));
    }

    std::size_t size() const noexcept { return map_.size(); }
    std::size_t operator[](std::size_t l) const { return map_[l]; }
    const std::vector<std::size_t>& map() const noexcept { return map_; }

    /// Physical wire of each logical coefficient.
    std::vector<Wire> apply(const Register& reg) const {
        if (reg.length != map_.size()) {
            throw WidthMismatch("permutation of size " + std::to_string(map_.size()) + " applied to register '" +
                                reg.name + "' of length " + std::to_string(reg.length));
        }
        std::vector<Wire> wires(map_.size());
        for (std::size_t l = 0; l < map_.size(); ++l) {
            wires[l] = reg[map_[l]];
        }
        return wires;
    }

    friend bool operator==(const WirePermutation&, const WirePermutation&) = default;

  private:
    std::vector<std::size_t> map_;
};

/// Reading coefficient l of x^(2^s) from a register that holds x.
inline WirePermutation power_read_permutation(const FieldSpec& spec, int s) {
    const auto n = static_cast<std::int64_t>(spec.width());
    std::vector<std::size_t> map(spec.width());
    if (spec.representation() == Representation::GhostBit) {
        const std::int64_t m = spec.degree();
        const auto fwd = static_cast<std::int64_t>(nt::pow_mod(2, static_cast<std::uint64_t>(nt::mod(s, m)), n));
        const std::int64_t back = nt::inverse_mod(fwd, n);
        for (std::int64_t l = 0; l < n; ++l) {
            map[l] = static_cast<std::size_t>(nt::mod(l * back, n));
        }
    } else {
        for (std::int64_t l = 0; l < n; ++l) {
            map[l] = static_cast<std::size_t>(nt::mod(l - s, n));
        }
    }
    return WirePermutation(std::move(map));
}

/// Writing logical coefficient l of y so that the register ends up holding y^(2^s).
inline WirePermutation power_write_permutation(const FieldSpec& spec, int s) {
    const auto n = static_cast<std::int64_t>(spec.width());
    std::vector<std::size_t> map(spec.width());
    if (spec.representation() == Representation::GhostBit) {
        const std::int64_t m = spec.degree();
        const auto fwd = static_cast<std::int64_t>(nt::pow_mod(2, static_cast<std::uint64_t>(nt::mod(s, m)), n));
        for (std::int64_t l = 0; l < n; ++l) {
            map[l] = static_cast<std::size_t>(nt::mod(l * fwd, n));
        }
    } else {
        for (std::int64_t l = 0; l < n; ++l) {
            map[l] = static_cast<std::size_t>(nt::mod(l + s, n));
        }
    }
    return WirePermutation(std::move(map));
}

} // namespace gf2circ
