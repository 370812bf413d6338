#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "gf2circ/errors.hpp"

namespace gf2circ {

using Wire = std::uint32_t;

inline constexpr Wire kNoWire = std::numeric_limits<Wire>::max();

enum class GateKind { Cnot, Toffoli };

/// CNOT or Toffoli. Toffoli controls are stored in ascending wire order.
class Gate {
  public:
    static Gate cnot(Wire control, Wire target) {
        if (control == target) {
            throw InvalidGate("cx: control and target coincide on wire " + std::to_string(control));
        }
        return Gate(control, kNoWire, target);
    }

    static Gate toffoli(Wire control1, Wire control2, Wire target) {
        if (control1 == control2 || control1 == target || control2 == target) {
            throw InvalidGate("ccx: repeated wire in (" + std::to_string(control1) + ", " +
                              std::to_string(control2) + ", " + std::to_string(target) + ")");
        }
        if (control2 < control1) {
            std::swap(control1, control2);
        }
        return Gate(control1, control2, target);
    }

    GateKind kind() const noexcept { return control2_ == kNoWire ? GateKind::Cnot : GateKind::Toffoli; }
    bool is_toffoli() const noexcept { return control2_ != kNoWire; }

    Wire control1() const noexcept { return control1_; }
    /// kNoWire for a CNOT.
    Wire control2() const noexcept { return control2_; }
    Wire target() const noexcept { return target_; }

    Wire max_wire() const noexcept {
        return std::max({control1_, is_toffoli() ? control2_ : 0U, target_});
    }

    bool controls(Wire w) const noexcept { return w == control1_ || (is_toffoli() && w == control2_); }
    bool touches(Wire w) const noexcept { return w == target_ || controls(w); }

    /// Two gates commute when neither target is a control of the other.
    bool commutes_with(const Gate& other) const noexcept {
        return !controls(other.target_) && !other.controls(target_);
    }

    friend bool operator==(const Gate&, const Gate&) = default;

  private:
    Gate(Wire c1, Wire c2, Wire t) : control1_(c1), control2_(c2), target_(t) {}

    Wire control1_;
    Wire control2_;
    Wire target_;
};

/// Named, contiguous range of wires.
struct Register {
    std::string name;
    std::size_t start = 0;
    std::size_t length = 0;

    std::size_t end() const noexcept { return start + length; }
    Wire operator[](std::size_t i) const { return static_cast<Wire>(start + i); }

    friend bool operator==(const Register&, const Register&) = default;
};

/// Ordered CNOT/Toffoli netlist over a fixed number of wires.
class Circuit {
  public:
    Circuit() = default;
    explicit Circuit(std::size_t width) : width_(width) {}

    std::size_t width() const noexcept { return width_; }
    const std::vector<Gate>& gates() const noexcept { return gates_; }
    std::size_t size() const noexcept { return gates_.size(); }
    bool empty() const noexcept { return gates_.empty(); }
    const std::vector<Register>& registers() const noexcept { return registers_; }

    void reserve(std::size_t n) { gates_.reserve(n); }

    void add(const Gate& g) {
        if (g.max_wire() >= width_) {
            throw InvalidGate("gate wire " + std::to_string(g.max_wire()) + " outside circuit of width " +
                              std::to_string(width_));
        }
        gates_.push_back(g);
    }

    void cnot(Wire control, Wire target) { add(Gate::cnot(control, target)); }
    void toffoli(Wire c1, Wire c2, Wire target) { add(Gate::toffoli(c1, c2, target)); }

    /// Appends every gate of `other`, which must not be wider.
    void append(const Circuit& other) {
        if (other.width_ > width_) {
            throw WidthMismatch("cannot append a circuit of width " + std::to_string(other.width_) +
                                " to one of width " + std::to_string(width_));
        }
        gates_.insert(gates_.end(), other.gates_.begin(), other.gates_.end());
    }

    Register add_register(std::string name, std::size_t start, std::size_t length) {
        if (start + length > width_) {
            throw InvalidGate("register '" + name + "' exceeds circuit width");
        }
        for (const auto& r : registers_) {
            if (r.name == name) {
                throw InvalidGate("duplicate register name '" + name + "'");
            }
            if (start < r.end() && r.start < start + length) {
                throw InvalidGate("register '" + name + "' overlaps '" + r.name + "'");
            }
        }
        registers_.push_back({std::move(name), start, length});
        return registers_.back();
    }

    const Register* find_register(const std::string& name) const {
        for (const auto& r : registers_) {
            if (r.name == name) {
                return &r;
            }
        }
        return nullptr;
    }

    const Register& reg(const std::string& name) const {
        if (const auto* r = find_register(name)) {
            return *r;
        }
        throw InvalidGate("no register named '" + name + "'");
    }

    /// Circuit made of gates [first, last).
    Circuit slice(std::size_t first, std::size_t last) const {
        Circuit c(width_);
        c.registers_ = registers_;
        c.gates_.assign(gates_.begin() + static_cast<std::ptrdiff_t>(first),
                        gates_.begin() + static_cast<std::ptrdiff_t>(last));
        return c;
    }

    void set_gates(std::vector<Gate> gates) {
        for (const auto& g : gates) {
            if (g.max_wire() >= width_) {
                throw InvalidGate("gate outside circuit width");
            }
        }
        gates_ = std::move(gates);
    }

    friend bool operator==(const Circuit&, const Circuit&) = default;

  private:
    std::size_t width_ = 0;
    std::vector<Gate> gates_;
    std::vector<Register> registers_;
};

/// Same circuit with the gate list reversed; both gate kinds are self-inverse.
inline Circuit reverse(const Circuit& c) {
    Circuit r = c;
    std::vector<Gate> gates(c.gates().rbegin(), c.gates().rend());
    r.set_gates(std::move(gates));
    return r;
}

} // namespace gf2circ
