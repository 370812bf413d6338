#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "gf2circ/circuit/circuit.hpp"
#include "gf2circ/errors.hpp"
#include "gf2circ/field/field_spec.hpp"
#include "gf2circ/field/itoh_tsujii.hpp"
#include "gf2circ/synth/multipliers.hpp"
#include "gf2circ/synth/permutation.hpp"

namespace gf2circ {

enum class BlockKind { SelfPower, General };
enum class Pass { Forward, Uncompute };

/// Gates [first_gate, last_gate) of the inverter belong to one multiplier.
struct MultiplierBlock {
    BlockKind kind;
    Pass pass;
    std::size_t first_gate;
    std::size_t last_gate;
    /// Register the block writes.
    std::string target;
    /// Self-power exponent r, or the read power s of a combining step.
    int power;
};

struct InverterCircuit {
    Circuit circuit;
    InverterPlan plan;
    std::vector<MultiplierBlock> blocks;

    std::size_t count(Pass pass) const {
        std::size_t n = 0;
        for (const auto& b : blocks) {
            n += b.pass == pass ? 1 : 0;
        }
        return n;
    }

    std::size_t count(Pass pass, BlockKind kind) const {
        std::size_t n = 0;
        for (const auto& b : blocks) {
            n += (b.pass == pass && b.kind == kind) ? 1 : 0;
        }
        return n;
    }
};

/// Out-of-place Itoh-Tsujii inverter |alpha>|0...0> -> |alpha>|0...>|alpha^-1>.
///
/// Layout, each register one field element wide: "input", then one register per ladder step,
/// then one per combining step; the last register written is named "output". The ladder builds
/// beta_{2^j} with self-power multipliers, combining steps are general multipliers reading their
/// second operand through a power permutation, and the last multiplier writes its product in
/// squared order. Everything except that last multiplier is then run backwards to clear the
/// ancillas.
inline InverterCircuit synth_inverter(const FieldSpec& spec) {
    const int m = spec.degree();
    if (m < 3) {
        throw DegreeTooSmall("inverter needs m >= 3, got m = " + std::to_string(m));
    }
    InverterCircuit inv;
    inv.plan = addition_chain(m);
    const auto& plan = inv.plan;
    const std::size_t w = spec.width();
    const std::size_t ladder_regs = plan.ladder.size();
    const std::size_t combine_regs = plan.combine.size();
    inv.circuit = Circuit((1 + ladder_regs + combine_regs) * w);
    Circuit& c = inv.circuit;

    const std::size_t last_reg = ladder_regs + combine_regs;
    std::vector<Register> regs;
    regs.push_back(c.add_register("input", 0, w));
    for (std::size_t j = 1; j <= ladder_regs; ++j) {
        regs.push_back(c.add_register(j == last_reg ? "output" : "ladder_" + std::to_string(j), j * w, w));
    }
    for (std::size_t i = 1; i <= combine_regs; ++i) {
        const std::size_t idx = ladder_regs + i;
        regs.push_back(c.add_register(idx == last_reg ? "output" : "combine_" + std::to_string(i), idx * w, w));
    }

    const auto identity = WirePermutation::identity(w);
    const auto squared = power_write_permutation(spec, plan.final_power);
    auto target_wires = [&](std::size_t reg) { return (reg == last_reg ? squared : identity).apply(regs[reg]); };

    for (std::size_t j = 0; j < ladder_regs; ++j) {
        const auto& step = plan.ladder[j];
        const std::size_t first = c.size();
        const auto src = static_cast<std::size_t>(step.source);
        emit_self_mult(c, spec, step.r, identity.apply(regs[src]), target_wires(src + 1));
        inv.blocks.push_back({BlockKind::SelfPower, Pass::Forward, first, c.size(), regs[src + 1].name, step.r});
    }
    for (std::size_t i = 0; i < combine_regs; ++i) {
        const auto& step = plan.combine[i];
        const std::size_t acc = i == 0 ? ladder_regs : ladder_regs + i;
        const std::size_t dest = ladder_regs + i + 1;
        const std::size_t first = c.size();
        emit_mult(c, spec, identity.apply(regs[acc]),
                  power_read_permutation(spec, step.read_power).apply(regs[static_cast<std::size_t>(step.operand)]),
                  target_wires(dest));
        inv.blocks.push_back({BlockKind::General, Pass::Forward, first, c.size(), regs[dest].name, step.read_power});
    }

    const std::size_t forward = inv.blocks.size();
    c.reserve(2 * c.size());
    for (std::size_t b = forward - 1; b-- > 0;) {
        const MultiplierBlock fwd = inv.blocks[b];
        const std::size_t first = c.size();
        for (std::size_t g = fwd.last_gate; g-- > fwd.first_gate;) {
            const Gate gate = c.gates()[g];
            c.add(gate);
        }
        inv.blocks.push_back({fwd.kind, Pass::Uncompute, first, c.size(), fwd.target, fwd.power});
    }
    return inv;
}

/// Inverter followed by a register swap, leaving alpha^-1 in "input" and alpha in "output".
/// The swap adds 3w CNOTs that the resource bounds do not account for.
inline InverterCircuit synth_inverter_in_place(const FieldSpec& spec) {
    InverterCircuit inv = synth_inverter(spec);
    const Register in = inv.circuit.reg("input");
    const Register out = inv.circuit.reg("output");
    for (std::size_t i = 0; i < in.length; ++i) {
        inv.circuit.cnot(out[i], in[i]);
        inv.circuit.cnot(in[i], out[i]);
        inv.circuit.cnot(out[i], in[i]);
    }
    return inv;
}

} // namespace gf2circ
