#pragma once

#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "gf2circ/circuit/netlist.hpp"
#include "gf2circ/circuit/resources.hpp"
#include "gf2circ/cli/verify.hpp"
#include "gf2circ/errors.hpp"
#include "gf2circ/field/field_spec.hpp"
#include "gf2circ/field/gaussian.hpp"
#include "gf2circ/field/ghost_bit.hpp"
#include "gf2circ/invert/bounds.hpp"
#include "gf2circ/invert/inverter.hpp"
#include "gf2circ/synth/multipliers.hpp"

namespace gf2circ::cli {

enum ExitCode : int { kPass = 0, kVerifyFail = 1, kDomainError = 2, kIoError = 3 };

struct RunConfig {
    std::string command;
    std::string kind;
    int m = 0;
    std::string rep = "gnb";
    std::optional<int> t;
    int r = 1;
    std::string out_path;
    std::string in_path;
    bool exhaustive = false;
    std::size_t samples = kDefaultSamples;
    std::string seed = "0xB10F";
    std::vector<int> table_degrees;
};

inline FieldSpec make_spec(const RunConfig& cfg) {
    if (cfg.rep == "gbb") {
        if (cfg.t) {
            throw InvalidParams("-t only applies to --rep gnb");
        }
        return FieldSpec::ghost_bit(cfg.m);
    }
    if (cfg.rep == "gnb") {
        return FieldSpec::gaussian(cfg.m, cfg.t);
    }
    throw InvalidParams("unknown representation '" + cfg.rep + "'");
}

inline CircuitKind parse_kind(const std::string& kind) {
    if (kind == "add") {
        return CircuitKind::Add;
    }
    if (kind == "mult") {
        return CircuitKind::Mult;
    }
    if (kind == "selfmult") {
        return CircuitKind::SelfMult;
    }
    if (kind == "invert") {
        return CircuitKind::Invert;
    }
    throw InvalidParams("unknown circuit kind '" + kind + "'");
}

inline std::uint64_t parse_seed(const std::string& text) {
    std::size_t used = 0;
    std::uint64_t value = 0;
    try {
        value = std::stoull(text, &used, 16);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used != text.size() || text.empty()) {
        throw InvalidParams("seed must be hexadecimal, got '" + text + "'");
    }
    return value;
}

inline std::string hex(std::uint64_t v) {
    std::ostringstream os;
    os << "0x" << std::uppercase << std::hex << v;
    return os.str();
}

inline int cmd_params(const RunConfig& cfg, std::ostream& out) {
    if (cfg.m < 2) {
        throw UnsupportedDegree("m must be at least 2");
    }
    const int m = cfg.m;
    out << "m=" << m << '\n';
    const auto ghost = check_ghost_bit_support(m);
    out << "ghost_bit=" << (ghost ? "supported" : "unsupported") << '\n';
    if (ghost && m <= 16) {
        out << "ghost_square_perm=";
        const auto perm = ghost_square_permutation(m);
        for (std::size_t i = 0; i < perm.size(); ++i) {
            out << (i ? " " : "") << perm[i];
        }
        out << '\n';
    }

    std::optional<GnbParams> gnb;
    try {
        gnb = cfg.t ? make_gnb_params(m, *cfg.t) : find_gnb_type(m);
    } catch (const NoGnbFound&) {
    } catch (const InvalidParams&) {
        if (!ghost) {
            throw;
        }
    }
    if (!gnb) {
        out << "gnb=none\n";
        if (!ghost) {
            throw NoGnbFound("no ghost-bit basis and no Gaussian normal basis for m = " + std::to_string(m));
        }
        return kPass;
    }
    out << "gnb_type=" << gnb->t << '\n';
    out << "p=" << gnb->p << '\n';
    out << "u=" << gnb->u << '\n';
    if (m <= 16) {
        out << "F=";
        for (std::uint64_t k = 1; k < gnb->p; ++k) {
            out << (k > 1 ? " " : "") << gnb->F(k);
        }
        out << '\n';
    }
    return kPass;
}

inline void write_inverter_header(std::ostream& os, const FieldSpec& spec, const InverterCircuit& inv) {
    os << "# itoh-tsujii inverter " << spec.name() << '\n';
    os << "# forward multipliers: " << inv.count(Pass::Forward) << " (" << inv.count(Pass::Forward, BlockKind::SelfPower)
       << " self-power, " << inv.count(Pass::Forward, BlockKind::General) << " general)\n";
    for (const auto& b : inv.blocks) {
        os << "# block " << (b.pass == Pass::Forward ? "forward" : "uncompute") << ' '
           << (b.kind == BlockKind::SelfPower ? "selfmult" : "mult") << " target=" << b.target
           << " power=" << b.power << " gates=" << b.first_gate << ".." << b.last_gate << '\n';
    }
}

inline void write_file(const std::string& path, const std::string& contents) {
    std::ofstream f(path, std::ios::binary);
    if (!f) {
        throw std::ios_base::failure("cannot open '" + path + "' for writing");
    }
    f << contents;
    f.flush();
    if (!f) {
        throw std::ios_base::failure("write to '" + path + "' failed");
    }
}

inline int cmd_synth(const RunConfig& cfg, std::ostream& out) {
    const FieldSpec spec = make_spec(cfg);
    const CircuitKind kind = parse_kind(cfg.kind);
    std::ostringstream text;
    Circuit circuit;
    if (kind == CircuitKind::Invert) {
        InverterCircuit inv = synth_inverter(spec);
        write_inverter_header(text, spec, inv);
        circuit = std::move(inv.circuit);
    } else {
        circuit = build_circuit(kind, spec, cfg.r);
        text << "# " << to_string(kind) << ' ' << spec.name();
        if (kind == CircuitKind::SelfMult) {
            text << " r=" << cfg.r;
        }
        text << '\n';
    }
    emit(text, circuit);
    if (!cfg.out_path.empty()) {
        write_file(cfg.out_path, text.str());
    }
    out << "field=" << spec.name() << '\n';
    out << "circuit=" << to_string(kind) << '\n';
    write_summary(out, resources(circuit));
    return kPass;
}

inline int cmd_verify(const RunConfig& cfg, std::ostream& out) {
    const FieldSpec spec = make_spec(cfg);
    const CircuitKind kind = parse_kind(cfg.kind);
    VerifyMode mode;
    mode.exhaustive = cfg.exhaustive;
    mode.samples = cfg.samples;
    mode.seed = parse_seed(cfg.seed);

    Circuit circuit = cfg.in_path.empty() ? build_circuit(kind, spec, cfg.r) : read_netlist(cfg.in_path);
    out << "field=" << spec.name() << '\n';
    out << "circuit=" << to_string(kind) << '\n';
    if (mode.exhaustive) {
        out << "mode=exhaustive\n";
    } else {
        out << "mode=random samples=" << mode.samples << " seed=" << hex(mode.seed) << '\n';
    }
    const VerifyResult result = verify_circuit(circuit, kind, spec, cfg.r, mode);
    if (result.pass()) {
        out << "PASS " << result.inputs << " inputs\n";
        return kPass;
    }
    const auto& cx = *result.counterexample;
    out << "FAIL after " << result.inputs << " inputs\n";
    out << "input=" << to_string(cx.input) << '\n';
    out << "expected=" << to_string(cx.expected) << '\n';
    out << "actual=" << to_string(cx.actual) << '\n';
    return kVerifyFail;
}

namespace detail {

struct MultBound {
    std::uint64_t depth;
    std::uint64_t gates;
};

inline MultBound mult_bound(const FieldSpec& spec) {
    const auto m = static_cast<std::uint64_t>(spec.degree());
    if (spec.representation() == Representation::GhostBit) {
        return {m + 1, (m + 1) * (m + 1)};
    }
    const auto t = static_cast<std::uint64_t>(spec.gnb().effective_type());
    return {t * m - 1, t * m * m - m};
}

inline void table_row(std::ostream& out, const FieldSpec& spec) {
    const auto add = resources(synth_add(spec.width()));
    const auto mult = resources(synth_mult(spec).circuit);
    const auto mb = mult_bound(spec);
    const auto inv = resources(synth_inverter(spec).circuit);
    const auto ib = bounds_for(spec);
    const std::uint64_t inv_gate_bound = spec.representation() == Representation::GhostBit
                                             ? ib.toffoli_bound + ib.cnot_bound
                                             : ib.gate_bound;
    const std::string t =
        spec.representation() == Representation::Gnb ? std::to_string(spec.gnb().t) : std::string("-");
    out << std::setw(4) << spec.degree() << std::setw(5) << to_string(spec.representation()) << std::setw(4) << t
        << std::setw(8) << add.depth << std::setw(8) << add.gate_count() << std::setw(8) << mult.depth
        << std::setw(8) << mb.depth << std::setw(9) << mult.gate_count() << std::setw(9) << mb.gates
        << std::setw(9) << inv.depth << std::setw(9) << ib.depth_bound << std::setw(10) << inv.gate_count()
        << std::setw(10) << inv_gate_bound << '\n';
}

} // namespace detail

inline int cmd_table(const RunConfig& cfg, std::ostream& out) {
    out << "# measured depth and gate count (toffoli + cnot) with closed-form bounds\n";
    out << std::setw(4) << "m" << std::setw(5) << "rep" << std::setw(4) << "t" << std::setw(8) << "add_d"
        << std::setw(8) << "add_g" << std::setw(8) << "mul_d" << std::setw(8) << "mul_d<" << std::setw(9) << "mul_g"
        << std::setw(9) << "mul_g<" << std::setw(9) << "inv_d" << std::setw(9) << "inv_d<" << std::setw(10)
        << "inv_g" << std::setw(10) << "inv_g<" << '\n';
    for (const int m : cfg.table_degrees) {
        for (const std::string rep : {"gbb", "gnb"}) {
            try {
                const FieldSpec spec = rep == "gbb" ? FieldSpec::ghost_bit(m) : FieldSpec::gaussian(m, cfg.t);
                detail::table_row(out, spec);
            } catch (const Error& e) {
                out << "# skip m=" << m << " rep=" << rep << ": " << e.what() << '\n';
            }
        }
    }
    out << "# polynomial basis (cited asymptotics, not measured):\n";
    out << "#   depth: add O(1), mult O(m), inversion by extended Euclid O(m^2)\n";
    out << "#   gates: add O(m), mult O(m^2), inversion O(m^3)\n";
    out << "# ghost-bit and gaussian normal basis asymptotics for comparison:\n";
    out << "#   depth: add O(1), mult O(m), itoh-tsujii inversion O(m log m)\n";
    out << "#   gates: add O(m), mult O(m^2), itoh-tsujii inversion O(m^2 log m)\n";
    return kPass;
}

inline void add_field_options(CLI::App* sub, RunConfig& cfg) {
    sub->add_option("-m", cfg.m, "Extension degree")->required();
    sub->add_option("--rep", cfg.rep, "Representation")->check(CLI::IsMember({"gbb", "gnb"}));
    sub->add_option("-t", cfg.t, "Gaussian normal basis type override");
    sub->add_option("-r", cfg.r, "Self-power exponent: the multiplier computes a * a^(2^r)");
}

inline int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    RunConfig cfg;
    CLI::App app{"Reversible circuits for binary finite field arithmetic", "gf2circ"};
    app.require_subcommand(1);
    const std::vector<std::string> kinds{"add", "mult", "selfmult", "invert"};

    auto* params = app.add_subcommand("params", "Report supported representations for a degree");
    params->add_option("-m", cfg.m, "Extension degree")->required();
    params->add_option("-t", cfg.t, "Gaussian normal basis type to check instead of the smallest");

    auto* synth = app.add_subcommand("synth", "Synthesize a circuit and print its resources");
    synth->add_option("kind", cfg.kind, "add | mult | selfmult | invert")->required()->check(CLI::IsMember(kinds));
    add_field_options(synth, cfg);
    synth->add_option("--out", cfg.out_path, "Write the netlist to this path");

    auto* verify = app.add_subcommand("verify", "Check a circuit against the field arithmetic oracle");
    verify->add_option("kind", cfg.kind, "add | mult | selfmult | invert")->required()->check(CLI::IsMember(kinds));
    add_field_options(verify, cfg);
    verify->add_option("--in", cfg.in_path, "Netlist to check instead of a freshly synthesized one");
    auto* exhaustive = verify->add_flag("--exhaustive", cfg.exhaustive, "Enumerate every input");
    auto* random = verify->add_option("--random", cfg.samples, "Number of random inputs");
    exhaustive->excludes(random);
    verify->add_option("--seed", cfg.seed, "Hexadecimal RNG seed");

    auto* table = app.add_subcommand("table", "Measured resources next to their bounds");
    table->add_option("-m", cfg.table_degrees, "Comma-separated degrees")->required()->delimiter(',');
    table->add_option("-t", cfg.t, "Gaussian normal basis type override");

    std::vector<std::string> argv(args.rbegin(), args.rend());
    try {
        app.parse(argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kDomainError;
    }

    try {
        if (params->parsed()) {
            return cmd_params(cfg, out);
        }
        if (synth->parsed()) {
            return cmd_synth(cfg, out);
        }
        if (verify->parsed()) {
            return cmd_verify(cfg, out);
        }
        return cmd_table(cfg, out);
    } catch (const ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kIoError;
    } catch (const std::ios_base::failure& e) {
        err << "error: " << e.what() << '\n';
        return kIoError;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kDomainError;
    }
}

} // namespace gf2circ::cli
