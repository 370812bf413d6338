#pragma once

#include <cstddef>
#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "gf2circ/errors.hpp"
#include "gf2circ/field/element.hpp"
#include "gf2circ/number_theory.hpp"

namespace gf2circ {

/// Parameters of a type-t Gaussian normal basis of GF(2^m): p = t*m + 1 prime, u of order t
/// mod p, and the table F(2^i * u^j mod p) = i.
struct GnbParams {
    int m = 0;
    int t = 0;
    std::uint64_t p = 0;
    std::uint64_t u = 0;
    /// f_table[k - 1] == F(k) for k = 1..p-1.
    std::vector<int> f_table;

    int F(std::uint64_t k) const { return f_table.at(static_cast<std::size_t>(k - 1)); }

    /// t rounded up to even; multiplier sizes scale with this.
    int effective_type() const noexcept { return t + t % 2; }

    friend bool operator==(const GnbParams&, const GnbParams&) = default;
};

/// Both type-t conditions: p = tm+1 prime and gcd((p-1)/ord_p(2), m) == 1.
inline bool is_gnb_type(int m, int t) {
    if (m < 2 || t < 1) {
        return false;
    }
    const auto p = static_cast<std::uint64_t>(t) * static_cast<std::uint64_t>(m) + 1;
    if (!nt::is_prime(p)) {
        return false;
    }
    const std::uint64_t index = (p - 1) / nt::multiplicative_order(2, p);
    return std::gcd(index, static_cast<std::uint64_t>(m)) == 1;
}

inline std::vector<int> gnb_f_table(int m, int t, std::uint64_t p, std::uint64_t u) {
    std::vector<int> table(static_cast<std::size_t>(p - 1), -1);
    std::uint64_t two_i = 1;
    for (int i = 0; i < m; ++i) {
        std::uint64_t k = two_i;
        for (int j = 0; j < t; ++j) {
            auto& slot = table[static_cast<std::size_t>(k - 1)];
            if (slot != -1) {
                throw InvalidParams("F-table collision at residue " + std::to_string(k));
            }
            slot = i;
            k = nt::mul_mod(k, u, p);
        }
        two_i = nt::mul_mod(two_i, 2, p);
    }
    return table;
}

/// Builds validated parameters for a given (m, t). Without `u`, the smallest residue of order
/// exactly t is used.
inline GnbParams make_gnb_params(int m, int t, std::optional<std::uint64_t> u = std::nullopt) {
    if (!is_gnb_type(m, t)) {
        throw InvalidParams("no Gaussian normal basis of type " + std::to_string(t) + " for m = " +
                            std::to_string(m));
    }
    GnbParams params;
    params.m = m;
    params.t = t;
    params.p = static_cast<std::uint64_t>(t) * static_cast<std::uint64_t>(m) + 1;
    if (u) {
        if (*u == 0 || *u >= params.p ||
            nt::multiplicative_order(*u, params.p) != static_cast<std::uint64_t>(t)) {
            throw InvalidParams("u = " + std::to_string(*u) + " does not have order " + std::to_string(t) +
                                " mod " + std::to_string(params.p));
        }
        params.u = *u;
    } else {
        for (std::uint64_t c = 1; c < params.p; ++c) {
            if (nt::multiplicative_order(c, params.p) == static_cast<std::uint64_t>(t)) {
                params.u = c;
                break;
            }
        }
    }
    params.f_table = gnb_f_table(m, t, params.p, params.u);
    return params;
}

/// Smallest type t <= max_type admitting a Gaussian normal basis of GF(2^m).
inline GnbParams find_gnb_type(int m, int max_type = 30) {
    if (m < 2) {
        throw UnsupportedDegree("extension degree must be at least 2");
    }
    if (m % 8 != 0) {
        for (int t = 1; t <= max_type; ++t) {
            if (is_gnb_type(m, t)) {
                return make_gnb_params(m, t);
            }
        }
    }
    throw NoGnbFound("no Gaussian normal basis of type <= " + std::to_string(max_type) + " for m = " +
                     std::to_string(m));
}

/// Full structural check of `params`; throws InvalidParams.
inline void validate(const GnbParams& params) {
    if (!is_gnb_type(params.m, params.t) ||
        params.p != static_cast<std::uint64_t>(params.t) * static_cast<std::uint64_t>(params.m) + 1) {
        throw InvalidParams("inconsistent (m, t, p)");
    }
    if (params.u == 0 || params.u >= params.p ||
        nt::multiplicative_order(params.u, params.p) != static_cast<std::uint64_t>(params.t)) {
        throw InvalidParams("u does not have order t");
    }
    if (params.f_table != gnb_f_table(params.m, params.t, params.p, params.u)) {
        throw InvalidParams("F-table does not match (m, t, u)");
    }
}

/// One product term of the multiplication formula: gamma_i += a_{a_offset + i} * b_{b_offset + i}.
struct GnbTerm {
    int key;
    int a_offset;
    int b_offset;
};

/// Terms in emission order: k = 1..tm-1, then for odd t the 2 * (m/2) extra terms, keyed
/// tm, tm+1, ...
inline std::vector<GnbTerm> gnb_terms(const GnbParams& params) {
    const int m = params.m;
    const int tm = params.t * m;
    std::vector<GnbTerm> terms;
    terms.reserve(static_cast<std::size_t>(params.effective_type() * m - 1));
    for (int k = 1; k <= tm - 1; ++k) {
        terms.push_back({k, params.F(static_cast<std::uint64_t>(k) + 1), params.F(params.p - static_cast<std::uint64_t>(k))});
    }
    if (params.t % 2 == 1) {
        int key = tm;
        for (int k = 1; k <= m / 2; ++k) {
            terms.push_back({key++, k - 1, k - 1 + m / 2});
            terms.push_back({key++, k - 1 + m / 2, k - 1});
        }
    }
    return terms;
}

inline GnbElement gnb_mult(const GnbParams& params, const GnbElement& a, const GnbElement& b) {
    if (a.degree() != params.m || b.degree() != params.m) {
        throw DegreeMismatch("Gaussian operands must have degree " + std::to_string(params.m));
    }
    const int m = params.m;
    Bits out(static_cast<std::size_t>(m), 0);
    for (const auto& term : gnb_terms(params)) {
        for (int i = 0; i < m; ++i) {
            out[i] ^= a[(term.a_offset + i) % m] & b[(term.b_offset + i) % m];
        }
    }
    return GnbElement(m, std::move(out));
}

/// a^(2^r): cyclic right shift by r.
inline GnbElement gnb_power(const GnbElement& a, int r) {
    const int m = a.degree();
    Bits out(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) {
        out[i] = a[static_cast<std::size_t>(nt::mod(i - r, m))];
    }
    return GnbElement(m, std::move(out));
}

inline GnbElement gnb_square(const GnbElement& a) { return gnb_power(a, 1); }

/// The multiplicative identity is Frobenius-fixed, hence all-ones.
inline GnbElement gnb_one(int m) { return GnbElement(m, ones(static_cast<std::size_t>(m))); }

} // namespace gf2circ
