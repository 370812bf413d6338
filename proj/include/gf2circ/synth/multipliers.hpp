#pragma once

#include <cstddef>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "gf2circ/circuit/circuit.hpp"
#include "gf2circ/errors.hpp"
#include "gf2circ/field/field_spec.hpp"
#include "gf2circ/field/gaussian.hpp"
#include "gf2circ/field/ghost_bit.hpp"
#include "gf2circ/number_theory.hpp"
#include "gf2circ/synth/permutation.hpp"

namespace gf2circ {

using Wires = std::vector<Wire>;

/// Gate indices grouped into stages (one per sigma or term key), each split into color
/// classes. Gates within one class touch pairwise-disjoint wires, and classes are emitted in
/// order, so stage-by-stage class counts give a valid layering.
struct ScheduleStage {
    int key = 0;
    std::vector<std::vector<std::size_t>> colors;
};

struct ColoringSchedule {
    std::vector<ScheduleStage> stages;

    std::size_t intended_depth() const noexcept {
        std::size_t d = 0;
        for (const auto& s : stages) {
            d += s.colors.size();
        }
        return d;
    }

    const ScheduleStage* stage(int key) const {
        for (const auto& s : stages) {
            if (s.key == key) {
                return &s;
            }
        }
        return nullptr;
    }
};

struct MultiplierCircuit {
    Circuit circuit;
    ColoringSchedule schedule;
};

namespace detail {

/// Collects gates into color classes of one stage, then flushes them class by class.
class StageEmitter {
  public:
    StageEmitter(Circuit& c, ColoringSchedule* schedule, int key, std::size_t colors)
        : circuit_(c), schedule_(schedule), key_(key), pending_(colors) {}

    void add(std::size_t color, const Gate& g) { pending_.at(color).push_back(g); }

    void flush() {
        ScheduleStage stage{key_, {}};
        for (auto& cls : pending_) {
            if (cls.empty()) {
                continue;
            }
            std::vector<std::size_t> ids;
            ids.reserve(cls.size());
            for (const auto& g : cls) {
                ids.push_back(circuit_.size());
                circuit_.add(g);
            }
            stage.colors.push_back(std::move(ids));
        }
        if (schedule_ != nullptr) {
            schedule_->stages.push_back(std::move(stage));
        }
    }

  private:
    Circuit& circuit_;
    ColoringSchedule* schedule_;
    int key_;
    std::vector<std::vector<Gate>> pending_;
};

inline void check_wires(const Wires& w, std::size_t n, const char* what) {
    if (w.size() != n) {
        throw WidthMismatch(std::string(what) + " wiring has " + std::to_string(w.size()) + " wires, expected " +
                            std::to_string(n));
    }
}

inline void check_exponent(int r, int m) {
    if (r < 0 || r > m) {
        throw ExponentOutOfRange("exponent r = " + std::to_string(r) + " outside 0.." + std::to_string(m));
    }
}

} // namespace detail

// ---------------------------------------------------------------------------------------------
// Ghost-bit basis

/// out += a * b. For fixed sigma = (i - 2j) mod (m+1) the m+1 Toffolis a_j b_{i-j} -> out_i are
/// wire-disjoint, so sigma = 0..m gives m+1 layers.
inline void emit_gbb_mult(Circuit& c, int m, const Wires& a, const Wires& b, const Wires& out,
                          ColoringSchedule* schedule = nullptr) {
    require_ghost_bit_support(m);
    const int n = m + 1;
    detail::check_wires(a, static_cast<std::size_t>(n), "a");
    detail::check_wires(b, static_cast<std::size_t>(n), "b");
    detail::check_wires(out, static_cast<std::size_t>(n), "out");
    for (int sigma = 0; sigma < n; ++sigma) {
        detail::StageEmitter stage(c, schedule, sigma, 1);
        for (int j = 0; j < n; ++j) {
            const auto i = nt::mod(sigma + 2 * j, n);
            stage.add(0, Gate::toffoli(a[j], b[static_cast<std::size_t>(nt::mod(i - j, n))], out[i]));
        }
        stage.flush();
    }
}

/// out += a * a^(2^r) reading a^(2^r) off the wires of a.
///
/// With R = 2^r mod (m+1) != 1, the product a_j a_l (l = pi^-r(i - j)) lands on target
/// i = j + R*l. Grouping by sigma = j + l gives one CNOT (j = l = sigma/2) and m/2 pairs {j, l}
/// each carrying two Toffolis; one orientation per pair forms color 0 together with the CNOT,
/// the other orientation color 1. When R == 1 the map is out += a^2, a single CNOT layer.
inline void emit_gbb_self_mult(Circuit& c, int m, int r, const Wires& a, const Wires& out,
                               ColoringSchedule* schedule = nullptr) {
    require_ghost_bit_support(m);
    detail::check_exponent(r, m);
    const int n = m + 1;
    detail::check_wires(a, static_cast<std::size_t>(n), "a");
    detail::check_wires(out, static_cast<std::size_t>(n), "out");
    const auto R = static_cast<std::int64_t>(nt::pow_mod(2, static_cast<std::uint64_t>(r), n));
    if (R == 1) {
        detail::StageEmitter stage(c, schedule, 0, 1);
        for (int j = 0; j < n; ++j) {
            stage.add(0, Gate::cnot(a[j], out[static_cast<std::size_t>(nt::mod(2 * j, n))]));
        }
        stage.flush();
        return;
    }
    const std::int64_t half = nt::inverse_mod(2, n);
    for (int sigma = 0; sigma < n; ++sigma) {
        detail::StageEmitter stage(c, schedule, sigma, 2);
        const auto h = nt::mod(sigma * half, n);
        stage.add(0, Gate::cnot(a[h], out[static_cast<std::size_t>(nt::mod(h * (1 + R), n))]));
        for (int j = 0; j < n; ++j) {
            const auto l = nt::mod(sigma - j, n);
            if (j >= l) {
                continue;
            }
            stage.add(0, Gate::toffoli(a[j], a[l], out[static_cast<std::size_t>(nt::mod(j + R * l, n))]));
            stage.add(1, Gate::toffoli(a[l], a[j], out[static_cast<std::size_t>(nt::mod(l + R * j, n))]));
        }
        stage.flush();
    }
}

// ---------------------------------------------------------------------------------------------
// Gaussian normal basis

/// out += a * b, one wire-disjoint layer of m Toffolis per formula term.
inline void emit_gnb_mult(Circuit& c, const GnbParams& params, const Wires& a, const Wires& b, const Wires& out,
                          ColoringSchedule* schedule = nullptr) {
    const int m = params.m;
    detail::check_wires(a, static_cast<std::size_t>(m), "a");
    detail::check_wires(b, static_cast<std::size_t>(m), "b");
    detail::check_wires(out, static_cast<std::size_t>(m), "out");
    for (const auto& term : gnb_terms(params)) {
        detail::StageEmitter stage(c, schedule, term.key, 1);
        for (int i = 0; i < m; ++i) {
            stage.add(0, Gate::toffoli(a[(term.a_offset + i) % m], b[(term.b_offset + i) % m], out[i]));
        }
        stage.flush();
    }
}

/// Offset difference delta = F(p-k) - r - F(k+1) of a self-power term, mod m.
inline int gnb_self_delta(const GnbTerm& term, int r, int m) {
    return static_cast<int>(nt::mod(term.b_offset - r - term.a_offset, m));
}

/// out += a * a^(2^r). Per term the controls are a_{v} and a_{v + delta} (v = a_offset + i).
/// delta == 0 degenerates to a CNOT layer. Otherwise the edges {v, v + delta} split into
/// gcd(delta, m) cycles of length m / gcd(delta, m); edges alternate colors 0/1 around each
/// cycle and the closing edge of an odd cycle takes color 2.
inline void emit_gnb_self_mult(Circuit& c, const GnbParams& params, int r, const Wires& a, const Wires& out,
                               ColoringSchedule* schedule = nullptr) {
    const int m = params.m;
    detail::check_exponent(r, m);
    detail::check_wires(a, static_cast<std::size_t>(m), "a");
    detail::check_wires(out, static_cast<std::size_t>(m), "out");
    for (const auto& term : gnb_terms(params)) {
        const int delta = gnb_self_delta(term, r, m);
        if (delta == 0) {
            detail::StageEmitter stage(c, schedule, term.key, 1);
            for (int i = 0; i < m; ++i) {
                stage.add(0, Gate::cnot(a[(term.a_offset + i) % m], out[i]));
            }
            stage.flush();
            continue;
        }
        detail::StageEmitter stage(c, schedule, term.key, 3);
        const int cycles = std::gcd(delta, m);
        const int length = m / cycles;
        for (int start = 0; start < cycles; ++start) {
            for (int s = 0; s < length; ++s) {
                const int v = (start + s * delta) % m;
                const int i = static_cast<int>(nt::mod(v - term.a_offset, m));
                std::size_t color = static_cast<std::size_t>(s % 2);
                if (s == length - 1) {
                    color = length % 2 == 1 ? 2 : 1;
                }
                stage.add(color, Gate::toffoli(a[v], a[(v + delta) % m], out[i]));
            }
        }
        stage.flush();
    }
}

// ---------------------------------------------------------------------------------------------
// Representation-generic emitters and standalone circuits

inline void emit_mult(Circuit& c, const FieldSpec& spec, const Wires& a, const Wires& b, const Wires& out,
                      ColoringSchedule* schedule = nullptr) {
    if (spec.representation() == Representation::GhostBit) {
        emit_gbb_mult(c, spec.degree(), a, b, out, schedule);
    } else {
        emit_gnb_mult(c, spec.gnb(), a, b, out, schedule);
    }
}

inline void emit_self_mult(Circuit& c, const FieldSpec& spec, int r, const Wires& a, const Wires& out,
                           ColoringSchedule* schedule = nullptr) {
    if (spec.representation() == Representation::GhostBit) {
        emit_gbb_self_mult(c, spec.degree(), r, a, out, schedule);
    } else {
        emit_gnb_self_mult(c, spec.gnb(), r, a, out, schedule);
    }
}

inline Wires register_wires(const Register& reg) { return WirePermutation::identity(reg.length).apply(reg); }

/// |a>|b> -> |a>|a + b> with w CNOTs in one layer.
inline Circuit synth_add(std::size_t w) {
    if (w < 1) {
        throw WidthMismatch("adder width must be at least 1");
    }
    Circuit c(2 * w);
    const Register a = c.add_register("a", 0, w);
    const Register b = c.add_register("b", w, w);
    for (std::size_t i = 0; i < w; ++i) {
        c.cnot(a[i], b[i]);
    }
    return c;
}

/// |a>|b>|xi> -> |a>|b>|xi + a*b>.
inline MultiplierCircuit synth_mult(const FieldSpec& spec) {
    const std::size_t w = spec.width();
    MultiplierCircuit mc{Circuit(3 * w), {}};
    const Register a = mc.circuit.add_register("a", 0, w);
    const Register b = mc.circuit.add_register("b", w, w);
    const Register out = mc.circuit.add_register("out", 2 * w, w);
    emit_mult(mc.circuit, spec, register_wires(a), register_wires(b), register_wires(out), &mc.schedule);
    return mc;
}

/// |a>|xi> -> |a>|xi + a * a^(2^r)>.
inline MultiplierCircuit synth_self_mult(const FieldSpec& spec, int r) {
    detail::check_exponent(r, spec.degree());
    const std::size_t w = spec.width();
    MultiplierCircuit mc{Circuit(2 * w), {}};
    const Register a = mc.circuit.add_register("a", 0, w);
    const Register out = mc.circuit.add_register("out", w, w);
    emit_self_mult(mc.circuit, spec, r, register_wires(a), register_wires(out), &mc.schedule);
    return mc;
}

inline MultiplierCircuit synth_gbb_mult(int m) { return synth_mult(FieldSpec::ghost_bit(m)); }

inline MultiplierCircuit synth_gbb_self_mult(int m, int r) { return synth_self_mult(FieldSpec::ghost_bit(m), r); }

inline MultiplierCircuit synth_gnb_mult(const GnbParams& params) { return synth_mult(FieldSpec::gaussian(params)); }

inline MultiplierCircuit synth_gnb_self_mult(const GnbParams& params, int r) {
    return synth_self_mult(FieldSpec::gaussian(params), r);
}

} // namespace gf2circ
