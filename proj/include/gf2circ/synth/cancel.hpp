#pragma once

#include <cstddef>
#include <cstdint>
#include <unordered_map>
#include <vector>

#include "gf2circ/circuit/circuit.hpp"

namespace gf2circ {

namespace detail {

struct GateHash {
    std::size_t operator()(const Gate& g) const noexcept {
        std::uint64_t h = g.control1();
        h = h * 0x9E3779B97F4A7C15ULL ^ g.control2();
        h = h * 0x9E3779B97F4A7C15ULL ^ g.target();
        return static_cast<std::size_t>(h);
    }
};

/// One left-to-right pass. Returns true if anything was removed.
inline bool cancel_pass(std::vector<Gate>& gates, std::size_t width) {
    constexpr std::int64_t kNever = -1;
    // Index of the latest gate writing / reading each wire.
    std::vector<std::int64_t> last_write(width, kNever);
    std::vector<std::int64_t> last_read(width, kNever);
    std::unordered_map<Gate, std::int64_t, GateHash> pending;
    std::vector<bool> removed(gates.size(), false);
    bool changed = false;

    for (std::size_t idx = 0; idx < gates.size(); ++idx) {
        const Gate& g = gates[idx];
        const auto j = static_cast<std::int64_t>(idx);
        auto it = pending.find(g);
        bool matched = false;
        if (it != pending.end()) {
            const std::int64_t i = it->second;
            // Something in between must neither write a control of g nor read g's target.
            bool blocked = last_write[g.control1()] > i || last_read[g.target()] > i;
            if (g.is_toffoli()) {
                blocked = blocked || last_write[g.control2()] > i;
            }
            if (!blocked) {
                removed[static_cast<std::size_t>(i)] = true;
                removed[idx] = true;
                pending.erase(it);
                matched = true;
                changed = true;
            }
        }
        if (!matched) {
            pending[g] = j;
        }
        last_write[g.target()] = j;
        last_read[g.control1()] = j;
        if (g.is_toffoli()) {
            last_read[g.control2()] = j;
        }
    }
    if (changed) {
        std::vector<Gate> kept;
        kept.reserve(gates.size());
        for (std::size_t idx = 0; idx < gates.size(); ++idx) {
            if (!removed[idx]) {
                kept.push_back(gates[idx]);
            }
        }
        gates = std::move(kept);
    }
    return changed;
}

} // namespace detail

/// Removes pairs of identical gates when every gate between them commutes with the pair,
/// repeating until nothing changes.
inline Circuit cancel_pairs(const Circuit& c) {
    std::vector<Gate> gates = c.gates();
    while (detail::cancel_pass(gates, c.width())) {
    }
    Circuit out = c;
    out.set_gates(std::move(gates));
    return out;
}

} // namespace gf2circ
