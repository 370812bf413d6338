#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "gf2circ/bits.hpp"
#include "gf2circ/circuit/circuit.hpp"
#include "gf2circ/circuit/simulate.hpp"
#include "gf2circ/errors.hpp"
#include "gf2circ/field/field_spec.hpp"
#include "gf2circ/field/itoh_tsujii.hpp"
#include "gf2circ/invert/inverter.hpp"
#include "gf2circ/synth/multipliers.hpp"

namespace gf2circ {

enum class CircuitKind { Add, Mult, SelfMult, Invert };

inline std::string to_string(CircuitKind kind) {
    switch (kind) {
    case CircuitKind::Add:
        return "add";
    case CircuitKind::Mult:
        return "mult";
    case CircuitKind::SelfMult:
        return "selfmult";
    case CircuitKind::Invert:
        return "invert";
    }
    return "?";
}

/// Synthesized circuit of the given kind; `r` only matters for SelfMult.
inline Circuit build_circuit(CircuitKind kind, const FieldSpec& spec, int r = 0) {
    switch (kind) {
    case CircuitKind::Add:
        return synth_add(spec.width());
    case CircuitKind::Mult:
        return synth_mult(spec).circuit;
    case CircuitKind::SelfMult:
        return synth_self_mult(spec, r).circuit;
    case CircuitKind::Invert:
        return synth_inverter(spec).circuit;
    }
    throw InvalidParams("unknown circuit kind");
}

inline constexpr std::uint64_t kDefaultSeed = 0xB10F;
inline constexpr std::size_t kDefaultSamples = 100;
/// Exhaustive verification refuses more simulated inputs than this.
inline constexpr std::uint64_t kExhaustiveCap = std::uint64_t{1} << 20;

struct VerifyMode {
    bool exhaustive = false;
    std::size_t samples = kDefaultSamples;
    std::uint64_t seed = kDefaultSeed;
};

struct Counterexample {
    Bits input;
    Bits expected;
    Bits actual;
};

struct VerifyResult {
    std::size_t inputs = 0;
    std::optional<Counterexample> counterexample;

    bool pass() const noexcept { return !counterexample.has_value(); }
};

/// Oracle for one circuit kind: which registers are free inputs and what the full wire state
/// must be afterwards. Every wire is compared, so preserved inputs and cleared ancillas are
/// checked too.
class CircuitOracle {
  public:
    CircuitOracle(CircuitKind kind, const FieldSpec& spec, int r, const Circuit& layout)
        : kind_(kind), spec_(spec), r_(r), layout_(layout) {
        switch (kind_) {
        case CircuitKind::Add:
            inputs_ = {layout_.reg("a"), layout_.reg("b")};
            break;
        case CircuitKind::Mult:
            inputs_ = {layout_.reg("a"), layout_.reg("b")};
            accumulator_ = layout_.reg("out");
            break;
        case CircuitKind::SelfMult:
            inputs_ = {layout_.reg("a")};
            accumulator_ = layout_.reg("out");
            break;
        case CircuitKind::Invert:
            inputs_ = {layout_.reg("input")};
            break;
        }
    }

    std::size_t width() const noexcept { return layout_.width(); }

    /// Bits enumerated by exhaustive mode (the accumulator stays zero there).
    std::size_t free_bits() const noexcept {
        std::size_t n = 0;
        for (const auto& r : inputs_) {
            n += r.length;
        }
        return n;
    }

    Bits state_from_index(std::uint64_t index) const {
        Bits state = zeros(width());
        std::size_t bit = 0;
        for (const auto& r : inputs_) {
            for (std::size_t i = 0; i < r.length; ++i, ++bit) {
                state[r.start + i] = static_cast<std::uint8_t>((index >> bit) & 1U);
            }
        }
        return state;
    }

    template <class Rng>
    Bits random_state(Rng& rng) const {
        Bits state = zeros(width());
        for (const auto& r : inputs_) {
            write_register(state, r, random_bits(r.length, rng));
        }
        if (accumulator_) {
            write_register(state, *accumulator_, random_bits(accumulator_->length, rng));
        }
        return state;
    }

    Bits expected(const Bits& state) const {
        Bits out = state;
        switch (kind_) {
        case CircuitKind::Add: {
            Bits b = read_register(state, inputs_[1]);
            write_register(out, inputs_[1], xor_into(b, read_register(state, inputs_[0])));
            break;
        }
        case CircuitKind::Mult: {
            Bits acc = read_register(state, *accumulator_);
            xor_into(acc, spec_.multiply(read_register(state, inputs_[0]), read_register(state, inputs_[1])));
            write_register(out, *accumulator_, acc);
            break;
        }
        case CircuitKind::SelfMult: {
            const Bits a = read_register(state, inputs_[0]);
            Bits acc = read_register(state, *accumulator_);
            xor_into(acc, spec_.multiply(a, spec_.power(a, r_)));
            write_register(out, *accumulator_, acc);
            break;
        }
        case CircuitKind::Invert:
            write_register(out, layout_.reg("output"),
                           itoh_tsujii_inverse(spec_, read_register(state, inputs_[0])));
            break;
        }
        return out;
    }

  private:
    CircuitKind kind_;
    const FieldSpec& spec_;
    int r_;
    const Circuit& layout_;
    std::vector<Register> inputs_;
    std::optional<Register> accumulator_;
};

/// Simulates `circuit` against the oracle for its kind. The register layout is taken from a
/// freshly synthesized reference, so a netlist read from disk must match its width.
inline VerifyResult verify_circuit(const Circuit& circuit, CircuitKind kind, const FieldSpec& spec, int r,
                                   const VerifyMode& mode) {
    const Circuit layout = build_circuit(kind, spec, r);
    if (circuit.width() != layout.width()) {
        throw WidthMismatch("netlist has " + std::to_string(circuit.width()) + " qubits, expected " +
                            std::to_string(layout.width()));
    }
    const CircuitOracle oracle(kind, spec, r, layout);

    std::uint64_t total = mode.samples;
    if (mode.exhaustive) {
        if (oracle.free_bits() >= 64 || (std::uint64_t{1} << oracle.free_bits()) > kExhaustiveCap) {
            throw InvalidParams("exhaustive verification would need 2^" + std::to_string(oracle.free_bits()) +
                                " inputs (cap 2^20)");
        }
        total = std::uint64_t{1} << oracle.free_bits();
    }

    std::mt19937_64 rng(mode.seed);
    VerifyResult result;
    std::vector<Bits> batch;
    for (std::uint64_t first = 0; first < total; first += 64) {
        batch.clear();
        for (std::uint64_t n = first; n < total && n < first + 64; ++n) {
            batch.push_back(mode.exhaustive ? oracle.state_from_index(n) : oracle.random_state(rng));
        }
        const auto outputs = simulate_batch(circuit, batch);
        for (std::size_t lane = 0; lane < batch.size(); ++lane) {
            ++result.inputs;
            Bits want = oracle.expected(batch[lane]);
            if (outputs[lane] != want) {
                result.counterexample = Counterexample{batch[lane], std::move(want), outputs[lane]};
                return result;
            }
        }
    }
    return result;
}

} // namespace gf2circ
