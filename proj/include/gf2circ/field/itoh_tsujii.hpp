#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "gf2circ/bits.hpp"
#include "gf2circ/errors.hpp"
#include "gf2circ/field/element.hpp"
#include "gf2circ/field/field_spec.hpp"
#include "gf2circ/number_theory.hpp"

namespace gf2circ {

/// beta_{2^(j+1)} = beta_{2^j} * beta_{2^j}^(2^r) with r = 2^j. Register `source` holds beta_{2^j}
/// (register 0 is the input alpha = beta_1) and the product goes to ladder register source + 1.
struct LadderStep {
    int source;
    int r;
};

/// beta_{s + 2^k} = beta_s * (beta_{2^k})^(2^s): the accumulator holding beta_s is multiplied by
/// ladder register `operand` read through the 2^s-power permutation.
struct CombineStep {
    int accumulator_exponent;
    int operand;
    int read_power;
};

/// Addition-chain schedule for alpha^-1 = (beta_{m-1})^2 with beta_i = alpha^(2^i - 1).
struct InverterPlan {
    int m = 0;
    /// k_1 > k_2 > ... with sum of 2^k_i == m - 1.
    std::vector<int> exponents;
    std::vector<LadderStep> ladder;
    std::vector<CombineStep> combine;
    /// The result is written as (beta_{m-1})^(2^final_power).
    int final_power = 1;

    std::size_t multiplications() const noexcept { return ladder.size() + combine.size(); }
};

inline InverterPlan addition_chain(int m) {
    if (m < 2) {
        throw UnsupportedDegree("extension degree must be at least 2");
    }
    InverterPlan plan;
    plan.m = m;
    const auto e = static_cast<std::uint64_t>(m - 1);
    for (int k = nt::floor_log2(e); k >= 0; --k) {
        if ((e >> k) & 1U) {
            plan.exponents.push_back(k);
        }
    }
    const int top = plan.exponents.front();
    for (int j = 0; j < top; ++j) {
        plan.ladder.push_back({j, 1 << j});
    }
    int s = 1 << top;
    for (std::size_t i = 1; i < plan.exponents.size(); ++i) {
        const int k = plan.exponents[i];
        plan.combine.push_back({s, k, s});
        s += 1 << k;
    }
    return plan;
}

/// Runs `plan` with the given field operations on raw coefficient vectors.
template <class Multiply, class Power>
Bits run_inverter_plan(const InverterPlan& plan, const Bits& a, Multiply&& multiply, Power&& power) {
    std::vector<Bits> beta;
    beta.reserve(plan.ladder.size() + 1);
    beta.push_back(a);
    for (const auto& step : plan.ladder) {
        const Bits& src = beta[static_cast<std::size_t>(step.source)];
        beta.push_back(multiply(src, power(src, step.r)));
    }
    Bits acc = beta.back();
    for (const auto& step : plan.combine) {
        acc = multiply(acc, power(beta[static_cast<std::size_t>(step.operand)], step.read_power));
    }
    return power(acc, plan.final_power);
}

/// Itoh-Tsujii inversion in the spec's representation; zero maps to zero.
inline Bits itoh_tsujii_inverse(const FieldSpec& spec, const Bits& a) {
    const auto plan = addition_chain(spec.degree());
    return run_inverter_plan(
        plan, a, [&](const Bits& x, const Bits& y) { return spec.multiply(x, y); },
        [&](const Bits& x, int r) { return spec.power(x, r); });
}

inline GhostBitElement itoh_tsujii_inverse(const FieldSpec& spec, const GhostBitElement& a) {
    if (spec.representation() != Representation::GhostBit || spec.degree() != a.degree()) {
        throw DegreeMismatch("ghost-bit element does not match field spec " + spec.name());
    }
    return GhostBitElement(a.degree(), itoh_tsujii_inverse(spec, a.coeffs()));
}

inline GnbElement itoh_tsujii_inverse(const FieldSpec& spec, const GnbElement& a) {
    if (spec.representation() != Representation::Gnb || spec.degree() != a.degree()) {
        throw DegreeMismatch("Gaussian element does not match field spec " + spec.name());
    }
    return GnbElement(a.degree(), itoh_tsujii_inverse(spec, a.coeffs()));
}

} // namespace gf2circ
