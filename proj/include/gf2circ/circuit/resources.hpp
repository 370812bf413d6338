#pragma once

#include <cstddef>
#include <ostream>
#include <string>

#include "gf2circ/circuit/circuit.hpp"
#include "gf2circ/circuit/schedule.hpp"

namespace gf2circ {

/// Each Toffoli is charged 7 T gates at T-depth 6.
inline constexpr std::size_t kTPerToffoli = 7;
inline constexpr std::size_t kTDepthPerToffoliLayer = 6;

struct ResourceEstimate {
    std::size_t toffoli_count = 0;
    std::size_t cnot_count = 0;
    std::size_t depth = 0;
    std::size_t toffoli_depth = 0;
    std::size_t qubits = 0;
    std::size_t t_count = 0;
    /// 6 per layer that contains a Toffoli.
    std::size_t t_depth = 0;

    std::size_t gate_count() const noexcept { return toffoli_count + cnot_count; }
    /// 6 per layer of any kind; the coarser figure.
    std::size_t t_depth_coarse() const noexcept { return kTDepthPerToffoliLayer * depth; }

    friend bool operator==(const ResourceEstimate&, const ResourceEstimate&) = default;
};

inline ResourceEstimate resources(const Circuit& c) {
    ResourceEstimate r;
    for (const Gate& g : c.gates()) {
        if (g.is_toffoli()) {
            ++r.toffoli_count;
        } else {
            ++r.cnot_count;
        }
    }
    const auto d = depth(c);
    r.depth = d.depth;
    r.toffoli_depth = d.toffoli_depth;
    r.qubits = c.width();
    r.t_count = kTPerToffoli * r.toffoli_count;
    r.t_depth = kTDepthPerToffoliLayer * r.toffoli_depth;
    return r;
}

/// `key=value` lines in a fixed order.
inline void write_summary(std::ostream& os, const ResourceEstimate& r) {
    os << "toffoli=" << r.toffoli_count << '\n'
       << "cnot=" << r.cnot_count << '\n'
       << "depth=" << r.depth << '\n'
       << "toffoli_depth=" << r.toffoli_depth << '\n'
       << "qubits=" << r.qubits << '\n'
       << "t_count=" << r.t_count << '\n'
       << "t_depth=" << r.t_depth << '\n';
}

} // namespace gf2circ
