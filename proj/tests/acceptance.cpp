// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit if any criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "gf2circ/cli/cli.hpp"
#include "gf2circ/gf2circ.hpp"

using namespace gf2circ;

namespace {

struct Outcome {
    bool pass;
    std::string detail;
};

struct Criterion {
    int id;
    std::string title;
    double time_limit_s;  // 0 = no limit
    std::function<Outcome()> check;
};

std::string join(const std::vector<int>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
        s += (i ? "," : "") + std::to_string(v[i]);
    }
    return s;
}

std::string bits_str(const Bits& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        s += (i ? "," : "") + std::to_string(v[i]);
    }
    return s + ")";
}

Outcome c1() {
    const auto r = resources(synth_gbb_mult(4).circuit);
    std::ostringstream d;
    d << "toffoli=" << r.toffoli_count << " depth=" << r.depth << " qubits=" << r.qubits;
    return {r.toffoli_count == 25 && r.depth == 5 && r.qubits == 15, d.str()};
}

Outcome c2() {
    const auto mc = synth_gbb_self_mult(4, 2);
    const auto r = resources(mc.circuit);
    std::set<std::vector<Wire>> sigma0;
    for (const auto& cls : mc.schedule.stage(0)->colors) {
        for (auto g : cls) {
            const Gate& gate = mc.circuit.gates()[g];
            if (gate.is_toffoli()) {
                sigma0.insert({gate.control1(), gate.control2(), gate.target()});
            } else {
                sigma0.insert({gate.control1(), gate.target()});
            }
        }
    }
    // a0a0, a1a4, a2a3, a3a2, a4a1 with a on wires 0..4 and out on 5..9
    const std::set<std::vector<Wire>> want{{0, 5}, {1, 4, 7}, {1, 4, 8}, {2, 3, 9}, {2, 3, 6}};
    std::ostringstream d;
    d << "depth=" << r.depth << " toffoli=" << r.toffoli_count << " cnot=" << r.cnot_count
      << " sigma0_match=" << (sigma0 == want);
    return {r.depth == 10 && r.toffoli_count == 20 && r.cnot_count == 5 && sigma0 == want, d.str()};
}

Outcome c3() {
    const auto r = resources(synth_gnb_mult(make_gnb_params(5, 2)).circuit);
    std::ostringstream d;
    d << "toffoli=" << r.toffoli_count << " depth=" << r.depth;
    return {r.toffoli_count == 45 && r.depth == 9, d.str()};
}

Outcome c4() {
    const auto p = make_gnb_params(5, 2, 10);
    return {p.f_table == std::vector<int>{0, 1, 3, 2, 4, 4, 2, 3, 1, 0}, "F(1..10)=" + join(p.f_table)};
}

Outcome c5() {
    const GhostBitElement a(4, Bits{1, 0, 1, 0, 0});
    const auto sq = gbb_square(a);
    const auto back = phi_retract(sq);
    const bool square_ok = sq.coeffs() == Bits{1, 0, 0, 0, 1};
    const bool retract_ok = back.coeffs() == Bits{1, 1, 1, 0};
    return {square_ok && retract_ok, "square=" + bits_str(sq.coeffs()) + " retract=" + bits_str(back.coeffs()) +
                                         " (expected (1,1,1,0); x^4+1 mod 1+x+x^2+x^3+x^4 is x+x^2+x^3)"};
}

Outcome c6() {
    const GnbParams params = make_gnb_params(5, 2);
    std::vector<int> deltas;
    for (const auto& term : gnb_terms(params)) {
        if (term.key == 2 || term.key == 5 || term.key == 6 || term.key == 7 || term.key == 8) {
            deltas.push_back(gnb_self_delta(term, 1, 5));
        }
    }
    const std::vector<int> want{2, 4, 1, 3, 1};  // (-3,-1,1,-2,1) mod 5
    const auto mc = synth_gnb_self_mult(params, 1);
    const auto* stage = mc.schedule.stage(5);
    std::size_t first = mc.circuit.size();
    std::size_t last = 0;
    for (const auto& cls : stage->colors) {
        for (auto g : cls) {
            first = std::min(first, g);
            last = std::max(last, g + 1);
        }
    }
    const auto colors = stage->colors.size();
    const auto d = depth(mc.circuit.slice(first, last)).depth;
    std::ostringstream os;
    os << "delta=" << join(deltas) << " k5_colors=" << colors << " k5_depth=" << d;
    return {deltas == want && colors == 3 && d == 3, os.str()};
}

Outcome c7() {
    const auto inv = synth_inverter(FieldSpec::gaussian(7));
    const auto self = inv.count(Pass::Forward, BlockKind::SelfPower);
    const auto general = inv.count(Pass::Forward, BlockKind::General);
    std::ostringstream d;
    d << "self=" << self << " general=" << general << " forward=" << inv.count(Pass::Forward);
    return {self == 2 && general == 1 && inv.count(Pass::Forward) == 3, d.str()};
}

Outcome c8() {
    std::ostringstream d;
    bool ok = true;
    std::size_t total = 0;
    auto run = [&](const FieldSpec& spec, CircuitKind kind, int r, const VerifyMode& mode) {
        const auto res = verify_circuit(build_circuit(kind, spec, r), kind, spec, r, mode);
        total += res.inputs;
        if (!res.pass()) {
            ok = false;
            d << "mismatch " << spec.name() << ' ' << to_string(kind) << " r=" << r << "; ";
        }
        if (!mode.exhaustive && res.inputs < 100) {
            ok = false;
        }
    };
    VerifyMode exhaustive;
    exhaustive.exhaustive = true;
    for (const auto& spec : {FieldSpec::ghost_bit(4), FieldSpec::gaussian(5)}) {
        run(spec, CircuitKind::Mult, 0, exhaustive);
        for (int r = 0; r <= spec.degree(); ++r) {
            run(spec, CircuitKind::SelfMult, r, exhaustive);
        }
        run(spec, CircuitKind::Invert, 0, exhaustive);
    }
    VerifyMode random;
    random.samples = 128;
    random.seed = kDefaultSeed;
    const auto t0 = std::chrono::steady_clock::now();
    double seconds163 = 0;
    for (const auto& spec : {FieldSpec::ghost_bit(10), FieldSpec::gaussian(163, 4), FieldSpec::gaussian(233, 2)}) {
        const auto start = std::chrono::steady_clock::now();
        run(spec, CircuitKind::Mult, 0, random);
        run(spec, CircuitKind::SelfMult, 1, random);
        run(spec, CircuitKind::Invert, 0, random);
        if (spec.degree() == 163) {
            seconds163 = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        }
    }
    (void)t0;
    d << "inputs=" << total << " m163_seconds=" << seconds163;
    return {ok && seconds163 < 300.0, d.str()};
}

Outcome c9() {
    std::vector<FieldSpec> specs;
    for (int m = 3; m <= 64; ++m) {
        if (check_ghost_bit_support(m)) {
            specs.push_back(FieldSpec::ghost_bit(m));
        }
        if (m % 8 != 0) {
            specs.push_back(FieldSpec::gaussian(m));
        }
    }
    for (int m : {163, 233, 409}) {
        specs.push_back(FieldSpec::gaussian(m));
    }
    std::size_t violations = 0;
    std::ostringstream d;
    for (const auto& spec : specs) {
        const auto report = check_bounds(spec);
        for (const auto& c : report.checks) {
            if (!c.pass()) {
                ++violations;
                d << spec.name() << ' ' << c.metric << ' ' << c.actual << '>' << c.bound << "; ";
            }
        }
    }
    d << "specs=" << specs.size() << " violations=" << violations;
    return {violations == 0, d.str()};
}

Outcome c10() {
    double lo = 1e300;
    double hi = 0;
    int m_lo = 0;
    int m_hi = 0;
    double norm_lo = 1e300;
    double norm_hi = 0;
    for (int m = 8; m <= 64; ++m) {
        if (m % 8 == 0) {
            continue;
        }
        const auto spec = FieldSpec::gaussian(m);
        const double ratio = static_cast<double>(depth(synth_inverter(spec).circuit).depth) / (m * std::log2(m));
        const double normalized = ratio / spec.gnb().effective_type();
        norm_lo = std::min(norm_lo, normalized);
        norm_hi = std::max(norm_hi, normalized);
        if (ratio < lo) {
            lo = ratio;
            m_lo = m;
        }
        if (ratio > hi) {
            hi = ratio;
            m_hi = m;
        }
    }
    std::ostringstream d;
    d.precision(3);
    d << "min=" << lo << " (m=" << m_lo << ") max=" << hi << " (m=" << m_hi << ") spread=" << hi / lo
      << " band=3; divided by t+(t mod 2): spread=" << norm_hi / norm_lo;
    return {hi / lo <= 3.0, d.str()};
}

Outcome c11() {
    GnbParams params = make_gnb_params(5, 2);
    const bool good = gnb_verify_isomorphism(params);
    std::swap(params.f_table[1], params.f_table[2]);
    const bool corrupted = gnb_verify_isomorphism(params);
    return {good && !corrupted, std::string("valid=") + (good ? "pass" : "fail") +
                                    " corrupted=" + (corrupted ? "pass" : "fail")};
}

Outcome c12() {
    const auto dir = std::filesystem::temp_directory_path();
    const std::string a = (dir / "gf2circ_accept_a.txt").string();
    const std::string b = (dir / "gf2circ_accept_b.txt").string();
    std::ostringstream sink;
    const int ra = cli::run_cli({"synth", "invert", "--rep", "gnb", "-m", "7", "--out", a}, sink, sink);
    const int rb = cli::run_cli({"synth", "invert", "--rep", "gnb", "-m", "7", "--out", b}, sink, sink);
    auto slurp = [](const std::string& p) {
        std::ifstream f(p, std::ios::binary);
        std::ostringstream os;
        os << f.rdbuf();
        return os.str();
    };
    const std::string ta = slurp(a);
    const std::string tb = slurp(b);
    std::remove(a.c_str());
    std::remove(b.c_str());
    return {ra == 0 && rb == 0 && !ta.empty() && ta == tb, "bytes=" + std::to_string(ta.size())};
}

} // namespace

int main() {
    const std::vector<Criterion> criteria{
        {1, "ghost-bit multiplier m=4", 1.0, c1},
        {2, "ghost-bit self-power multiplier m=4 r=2", 1.0, c2},
        {3, "gaussian multiplier m=5 t=2", 1.0, c3},
        {4, "F-table m=5 t=2 u=10", 0, c4},
        {5, "squaring and retraction example m=4", 0, c5},
        {6, "self-power delta table m=5 r=1", 0, c6},
        {7, "inverter structure m=7", 0, c7},
        {8, "functional equivalence", 0, c8},
        {9, "bound dominance", 0, c9},
        {10, "inverter depth / (m log2 m) within 3x band", 0, c10},
        {11, "gaussian normal basis isomorphism", 10.0, c11},
        {12, "deterministic inverter netlist", 0, c12},
    };
    int failures = 0;
    for (const auto& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o{false, ""};
        try {
            o = c.check();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (c.time_limit_s > 0 && secs >= c.time_limit_s) {
            o.pass = false;
            o.detail += " (over time limit)";
        }
        failures += o.pass ? 0 : 1;
        std::printf("[%s] %2d %s: %s (%.2fs)\n", o.pass ? "PASS" : "FAIL", c.id, c.title.c_str(), o.detail.c_str(),
                    secs);
        std::fflush(stdout);
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
    return failures == 0 ? 0 : 1;
}
