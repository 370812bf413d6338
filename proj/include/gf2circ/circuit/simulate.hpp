#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "gf2circ/bits.hpp"
#include "gf2circ/circuit/circuit.hpp"
#include "gf2circ/errors.hpp"

namespace gf2circ {

inline Bits simulate(const Circuit& c, Bits state) {
    if (state.size() != c.width()) {
        throw WidthMismatch("input has " + std::to_string(state.size()) + " bits, circuit has " +
                            std::to_string(c.width()) + " wires");
    }
    for (const Gate& g : c.gates()) {
        std::uint8_t flip = state[g.control1()];
        if (g.is_toffoli()) {
            flip &= state[g.control2()];
        }
        state[g.target()] ^= flip;
    }
    return state;
}

/// Bit-sliced simulation: bit k of state[w] is wire w in the k-th of 64 independent runs.
inline std::vector<std::uint64_t> simulate_packed(const Circuit& c, std::vector<std::uint64_t> state) {
    if (state.size() != c.width()) {
        throw WidthMismatch("packed input has " + std::to_string(state.size()) + " words, circuit has " +
                            std::to_string(c.width()) + " wires");
    }
    for (const Gate& g : c.gates()) {
        std::uint64_t flip = state[g.control1()];
        if (g.is_toffoli()) {
            flip &= state[g.control2()];
        }
        state[g.target()] ^= flip;
    }
    return state;
}

/// Packs up to 64 equally sized bit vectors into per-wire lane words.
inline std::vector<std::uint64_t> pack_lanes(const std::vector<Bits>& inputs, std::size_t width) {
    std::vector<std::uint64_t> words(width, 0);
    for (std::size_t lane = 0; lane < inputs.size() && lane < 64; ++lane) {
        for (std::size_t w = 0; w < width; ++w) {
            words[w] |= static_cast<std::uint64_t>(inputs[lane][w] & 1U) << lane;
        }
    }
    return words;
}

inline Bits unpack_lane(const std::vector<std::uint64_t>& words, std::size_t lane) {
    Bits v(words.size());
    for (std::size_t w = 0; w < words.size(); ++w) {
        v[w] = static_cast<std::uint8_t>((words[w] >> lane) & 1U);
    }
    return v;
}

/// Runs every input, 64 at a time.
inline std::vector<Bits> simulate_batch(const Circuit& c, const std::vector<Bits>& inputs) {
    std::vector<Bits> out;
    out.reserve(inputs.size());
    for (std::size_t first = 0; first < inputs.size(); first += 64) {
        const std::size_t n = std::min<std::size_t>(64, inputs.size() - first);
        std::vector<Bits> chunk(inputs.begin() + static_cast<std::ptrdiff_t>(first),
                                inputs.begin() + static_cast<std::ptrdiff_t>(first + n));
        for (const auto& in : chunk) {
            if (in.size() != c.width()) {
                throw WidthMismatch("batch input width does not match circuit");
            }
        }
        const auto result = simulate_packed(c, pack_lanes(chunk, c.width()));
        for (std::size_t lane = 0; lane < n; ++lane) {
            out.push_back(unpack_lane(result, lane));
        }
    }
    return out;
}

/// Reads a register's bits out of a full wire state.
inline Bits read_register(const Bits& state, const Register& r) {
    return Bits(state.begin() + static_cast<std::ptrdiff_t>(r.start),
                state.begin() + static_cast<std::ptrdiff_t>(r.end()));
}

inline void write_register(Bits& state, const Register& r, const Bits& value) {
    if (value.size() != r.length) {
        throw WidthMismatch("value of " + std::to_string(value.size()) + " bits for register '" + r.name +
                            "' of length " + std::to_string(r.length));
    }
    std::copy(value.begin(), value.end(), state.begin() + static_cast<std::ptrdiff_t>(r.start));
}

} // namespace gf2circ
