#pragma once

#include <charconv>
#include <cstddef>
#include <fstream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "gf2circ/circuit/circuit.hpp"
#include "gf2circ/errors.hpp"

// Line-oriented netlist text:
//
//   qubits <N>
//   reg <name> <start> <len>
//   cx <c> <t>
//   ccx <c1> <c2> <t>
//
// Blank lines and lines starting with '#' are ignored.

namespace gf2circ {

inline void emit(std::ostream& os, const Circuit& c) {
    os << "qubits " << c.width() << '\n';
    for (const auto& r : c.registers()) {
        os << "reg " << r.name << ' ' << r.start << ' ' << r.length << '\n';
    }
    for (const Gate& g : c.gates()) {
        if (g.is_toffoli()) {
            os << "ccx " << g.control1() << ' ' << g.control2() << ' ' << g.target() << '\n';
        } else {
            os << "cx " << g.control1() << ' ' << g.target() << '\n';
        }
    }
}

inline std::string emit(const Circuit& c) {
    std::ostringstream os;
    emit(os, c);
    return os.str();
}

namespace detail {

inline std::vector<std::string_view> split_fields(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) {
            ++i;
        }
        const std::size_t start = i;
        while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') {
            ++i;
        }
        if (i > start) {
            out.push_back(line.substr(start, i - start));
        }
    }
    return out;
}

inline std::size_t parse_index(std::string_view field, std::size_t line) {
    std::size_t value = 0;
    const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
    if (ec != std::errc{} || ptr != field.data() + field.size()) {
        throw ParseError(line, "expected a non-negative integer, got '" + std::string(field) + "'");
    }
    return value;
}

} // namespace detail

inline Circuit parse(std::istream& is) {
    std::string text;
    std::size_t line_no = 0;
    bool have_header = false;
    Circuit c;
    while (std::getline(is, text)) {
        ++line_no;
        const auto fields = detail::split_fields(text);
        if (fields.empty() || fields[0].front() == '#') {
            continue;
        }
        const std::string_view op = fields[0];
        if (!have_header) {
            if (op != "qubits" || fields.size() != 2) {
                throw ParseError(line_no, "expected 'qubits <N>' header");
            }
            c = Circuit(detail::parse_index(fields[1], line_no));
            have_header = true;
            continue;
        }
        try {
            if (op == "cx") {
                if (fields.size() != 3) {
                    throw ParseError(line_no, "cx takes 2 wire indices");
                }
                c.cnot(static_cast<Wire>(detail::parse_index(fields[1], line_no)),
                       static_cast<Wire>(detail::parse_index(fields[2], line_no)));
            } else if (op == "ccx") {
                if (fields.size() != 4) {
                    throw ParseError(line_no, "ccx takes 3 wire indices");
                }
                c.toffoli(static_cast<Wire>(detail::parse_index(fields[1], line_no)),
                          static_cast<Wire>(detail::parse_index(fields[2], line_no)),
                          static_cast<Wire>(detail::parse_index(fields[3], line_no)));
            } else if (op == "reg") {
                if (fields.size() != 4) {
                    throw ParseError(line_no, "reg takes a name, a start and a length");
                }
                c.add_register(std::string(fields[1]), detail::parse_index(fields[2], line_no),
                               detail::parse_index(fields[3], line_no));
            } else if (op == "qubits") {
                throw ParseError(line_no, "duplicate 'qubits' header");
            } else {
                throw ParseError(line_no, "unknown statement '" + std::string(op) + "'");
            }
        } catch (const InvalidGate& e) {
            throw ParseError(line_no, e.what());
        }
    }
    if (!have_header) {
        throw ParseError(line_no == 0 ? 1 : line_no, "missing 'qubits <N>' header");
    }
    return c;
}

inline Circuit parse(std::string_view text) {
    std::istringstream is{std::string(text)};
    return parse(is);
}

inline Circuit read_netlist(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw std::ios_base::failure("cannot open '" + path + "' for reading");
    }
    return parse(in);
}

} // namespace gf2circ
