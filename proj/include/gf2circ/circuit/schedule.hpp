#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "gf2circ/circuit/circuit.hpp"

namespace gf2circ {

/// As-soon-as-possible layering: each gate goes one layer after the last layer touching any of
/// its wires.
struct Layering {
    /// 0-based layer of each gate.
    std::vector<std::uint32_t> layer;
    std::size_t depth = 0;
    std::size_t toffoli_depth = 0;
};

inline Layering layer_gates(const Circuit& c) {
    Layering out;
    out.layer.resize(c.size());
    std::vector<std::uint32_t> next_free(c.width(), 0);
    std::vector<std::uint8_t> has_toffoli;
    for (std::size_t g = 0; g < c.size(); ++g) {
        const Gate& gate = c.gates()[g];
        std::uint32_t layer = std::max(next_free[gate.control1()], next_free[gate.target()]);
        if (gate.is_toffoli()) {
            layer = std::max(layer, next_free[gate.control2()]);
        }
        out.layer[g] = layer;
        next_free[gate.control1()] = layer + 1;
        next_free[gate.target()] = layer + 1;
        if (gate.is_toffoli()) {
            next_free[gate.control2()] = layer + 1;
        }
        if (layer >= has_toffoli.size()) {
            has_toffoli.resize(layer + 1, 0);
        }
        has_toffoli[layer] |= gate.is_toffoli() ? 1 : 0;
    }
    out.depth = has_toffoli.size();
    for (auto t : has_toffoli) {
        out.toffoli_depth += t;
    }
    return out;
}

struct Depth {
    std::size_t depth = 0;
    std::size_t toffoli_depth = 0;

    friend bool operator==(const Depth&, const Depth&) = default;
};

inline Depth depth(const Circuit& c) {
    const auto l = layer_gates(c);
    return {l.depth, l.toffoli_depth};
}

} // namespace gf2circ
