#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gf2circ/circuit/resources.hpp"
#include "gf2circ/errors.hpp"
#include "gf2circ/field/field_spec.hpp"
#include "gf2circ/field/gaussian.hpp"
#include "gf2circ/field/ghost_bit.hpp"
#include "gf2circ/invert/inverter.hpp"
#include "gf2circ/number_theory.hpp"

namespace gf2circ {

/// Closed-form resource bounds for the inverter, evaluated exactly as stated.
struct ResourceBound {
    std::int64_t depth_bound = 0;
    std::int64_t toffoli_bound = 0;
    std::int64_t cnot_bound = 0;
    /// Toffoli plus CNOT.
    std::int64_t gate_bound = 0;
    std::int64_t qubit_bound = 0;
    std::int64_t t_depth_bound = 0;
    std::int64_t t_count_bound = 0;

    friend bool operator==(const ResourceBound&, const ResourceBound&) = default;
};

struct TBound {
    std::int64_t t_depth_bound = 0;
    std::int64_t t_count_bound = 0;

    friend bool operator==(const TBound&, const TBound&) = default;
};

namespace detail {

struct ChainShape {
    std::int64_t log;
    std::int64_t hw1;
};

inline ChainShape chain_shape(int m) {
    const auto e = static_cast<std::uint64_t>(m - 1);
    return {nt::floor_log2(e), nt::hamming_weight(e) - 1};
}

} // namespace detail

inline TBound bounds_t(int m, Representation rep, std::optional<int> t = std::nullopt) {
    if (m < 2) {
        throw InvalidParams("extension degree must be at least 2");
    }
    const auto [L, H1] = detail::chain_shape(m);
    const std::int64_t M = m;
    if (rep == Representation::GhostBit) {
        if (!check_ghost_bit_support(m)) {
            throw InvalidParams("no ghost-bit basis for m = " + std::to_string(m));
        }
        return {12 * L * (2 * M + 2) + 12 * H1 * (M + 1),
                14 * L * (M * M + M) + 14 * H1 * (M * M + 2 * M + 1)};
    }
    if (!t || !is_gnb_type(m, *t)) {
        throw InvalidParams("no Gaussian normal basis of the given type for m = " + std::to_string(m));
    }
    const std::int64_t T = *t + *t % 2;
    const std::int64_t H = H1 + 1;
    return {6 * L * (6 * T * M - 6) + (12 * H - 6) * (T * M - 1),
            14 * L * (T * M * M - M) + 14 * H1 * (T * M * M - M)};
}

inline ResourceBound bounds_ghost(int m) {
    if (!check_ghost_bit_support(m)) {
        throw UnsupportedDegree("no ghost-bit basis for m = " + std::to_string(m));
    }
    const auto [L, H1] = detail::chain_shape(m);
    const std::int64_t M = m;
    ResourceBound b;
    b.depth_bound = 2 * L * (2 * M + 2) + 2 * H1 * (M + 1);
    b.toffoli_bound = 2 * L * (M * M + M) + 2 * H1 * (M * M + 2 * M + 1);
    b.cnot_bound = 2 * L * (M + 1);
    b.gate_bound = b.toffoli_bound + b.cnot_bound;
    b.qubit_bound = (1 + L) * (M + 1) + H1 * (M + 1);
    const auto tb = bounds_t(m, Representation::GhostBit);
    b.t_depth_bound = tb.t_depth_bound;
    b.t_count_bound = tb.t_count_bound;
    return b;
}

/// Gate figures count CNOT and Toffoli together, so each per-kind bound equals the total.
inline ResourceBound bounds_gnb(int m, int t) {
    if (!is_gnb_type(m, t)) {
        throw InvalidParams("no Gaussian normal basis of type " + std::to_string(t) + " for m = " +
                            std::to_string(m));
    }
    const auto [L, H1] = detail::chain_shape(m);
    const std::int64_t M = m;
    const std::int64_t T = t + t % 2;
    ResourceBound b;
    b.depth_bound = L * (6 * T * M - 6) + 2 * H1 * (T * M - 1);
    b.gate_bound = 2 * L * (T * M * M - M) + 2 * H1 * (T * M * M - M);
    b.toffoli_bound = b.gate_bound;
    b.cnot_bound = b.gate_bound;
    b.qubit_bound = (1 + L) * M + H1 * M;
    const auto tb = bounds_t(m, Representation::Gnb, t);
    b.t_depth_bound = tb.t_depth_bound;
    b.t_count_bound = tb.t_count_bound;
    return b;
}

inline ResourceBound bounds_for(const FieldSpec& spec) {
    return spec.representation() == Representation::GhostBit ? bounds_ghost(spec.degree())
                                                             : bounds_gnb(spec.degree(), spec.gnb().t);
}

struct BoundCheck {
    std::string metric;
    std::int64_t actual;
    std::int64_t bound;

    bool pass() const noexcept { return actual <= bound; }
};

struct BoundReport {
    ResourceEstimate actual;
    ResourceBound bound;
    std::vector<BoundCheck> checks;

    bool pass() const noexcept {
        for (const auto& c : checks) {
            if (!c.pass()) {
                return false;
            }
        }
        return true;
    }
};

inline BoundReport compare_to_bounds(const ResourceEstimate& r, const ResourceBound& b) {
    auto n = [](std::size_t v) { return static_cast<std::int64_t>(v); };
    BoundReport report{r, b, {}};
    report.checks = {
        {"depth", n(r.depth), b.depth_bound},
        {"toffoli", n(r.toffoli_count), b.toffoli_bound},
        {"cnot", n(r.cnot_count), b.cnot_bound},
        {"gates", n(r.gate_count()), b.gate_bound},
        {"qubits", n(r.qubits), b.qubit_bound},
        {"t_depth", n(r.t_depth), b.t_depth_bound},
        {"t_count", n(r.t_count), b.t_count_bound},
    };
    return report;
}

/// Synthesizes the inverter and measures it against the closed-form bounds.
inline BoundReport check_bounds(const FieldSpec& spec) {
    const auto inv = synth_inverter(spec);
    return compare_to_bounds(resources(inv.circuit), bounds_for(spec));
}

} // namespace gf2circ
