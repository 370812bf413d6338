#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "gf2circ/cli/cli.hpp"

using namespace gf2circ;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run invoke(const std::vector<std::string>& args) {
    std::ostringstream out;
    std::ostringstream err;
    const int code = gf2circ::cli::run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

std::map<std::string, std::string> key_values(const std::string& text) {
    std::map<std::string, std::string> kv;
    std::istringstream is(text);
    std::string line;
    while (std::getline(is, line)) {
        const auto eq = line.find('=');
        if (eq != std::string::npos && line.find(' ') == std::string::npos) {
            kv[line.substr(0, eq)] = line.substr(eq + 1);
        }
    }
    return kv;
}

std::string slurp(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    std::ostringstream os;
    os << f.rdbuf();
    return os.str();
}

std::string temp(const std::string& name) { return ::testing::TempDir() + "/" + name; }

} // namespace

TEST(Params, DegreeFive) {
    const auto r = invoke({"params", "-m", "5"});
    EXPECT_EQ(r.code, 0);
    const auto kv = key_values(r.out);
    EXPECT_EQ(kv.at("ghost_bit"), "unsupported");
    EXPECT_EQ(kv.at("gnb_type"), "2");
    EXPECT_EQ(kv.at("p"), "11");
    EXPECT_EQ(kv.at("u"), "10");
    EXPECT_NE(r.out.find("F=0 1 3 2 4 4 2 3 1 0\n"), std::string::npos);
}

TEST(Params, OtherDegrees) {
    EXPECT_EQ(key_values(invoke({"params", "-m", "163"}).out).at("gnb_type"), "4");
    const auto r4 = invoke({"params", "-m", "4"});
    EXPECT_EQ(key_values(r4.out).at("ghost_bit"), "supported");
    const auto r8 = invoke({"params", "-m", "8"});
    EXPECT_EQ(r8.code, 2);
    EXPECT_EQ(invoke({"params", "-m", "1"}).code, 2);
}

TEST(Synth, MultiplierSummaries) {
    auto kv = key_values(invoke({"synth", "mult", "--rep", "gbb", "-m", "4"}).out);
    EXPECT_EQ(kv.at("toffoli"), "25");
    EXPECT_EQ(kv.at("depth"), "5");
    kv = key_values(invoke({"synth", "selfmult", "--rep", "gbb", "-m", "4", "-r", "2"}).out);
    EXPECT_EQ(kv.at("depth"), "10");
    kv = key_values(invoke({"synth", "mult", "--rep", "gnb", "-m", "5"}).out);
    EXPECT_EQ(kv.at("toffoli"), "45");
    EXPECT_EQ(kv.at("depth"), "9");
}

TEST(Synth, InverterFileHasBlockMapAndMatchesSummary) {
    const std::string path = temp("inv7.txt");
    const auto r = invoke({"synth", "invert", "--rep", "gnb", "-m", "7", "--out", path});
    ASSERT_EQ(r.code, 0);
    const std::string text = slurp(path);
    std::size_t forward = 0;
    for (std::size_t pos = 0; (pos = text.find("# block forward", pos)) != std::string::npos; ++pos) {
        ++forward;
    }
    EXPECT_EQ(forward, 3U);
    EXPECT_NE(text.find("reg output"), std::string::npos);

    // summary equals resources of the re-parsed file
    std::ostringstream os;
    write_summary(os, resources(read_netlist(path)));
    const auto from_file = key_values(os.str());
    const auto printed = key_values(r.out);
    for (const auto& [k, v] : from_file) {
        EXPECT_EQ(printed.at(k), v) << k;
    }
    std::remove(path.c_str());
}

TEST(Synth, DeterministicOutput) {
    const std::string a = temp("det_a.txt");
    const std::string b = temp("det_b.txt");
    ASSERT_EQ(invoke({"synth", "invert", "--rep", "gnb", "-m", "7", "--out", a}).code, 0);
    ASSERT_EQ(invoke({"synth", "invert", "--rep", "gnb", "-m", "7", "--out", b}).code, 0);
    EXPECT_EQ(slurp(a), slurp(b));
    EXPECT_FALSE(slurp(a).empty());
    std::remove(a.c_str());
    std::remove(b.c_str());
}

TEST(Synth, ErrorCodes) {
    EXPECT_EQ(invoke({"synth", "mult", "--rep", "gbb", "-m", "5"}).code, 2);
    EXPECT_EQ(invoke({"synth", "selfmult", "--rep", "gbb", "-m", "4", "-r", "9"}).code, 2);
    EXPECT_EQ(invoke({"synth", "invert", "--rep", "gnb", "-m", "7", "-t", "2"}).code, 2);
    EXPECT_EQ(invoke({"synth", "mult", "--rep", "xyz", "-m", "4"}).code, 2);
    EXPECT_EQ(invoke({"synth", "invert", "--rep", "gnb", "-m", "7", "--out", "/nonexistent/dir/x.txt"}).code, 3);
    EXPECT_EQ(invoke({"frobnicate"}).code, 2);
}

TEST(Verify, ExhaustiveAndRandom) {
    auto r = invoke({"verify", "invert", "--rep", "gbb", "-m", "4", "--exhaustive"});
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("PASS 32 inputs"), std::string::npos);
    r = invoke({"verify", "mult", "--rep", "gnb", "-m", "5", "--exhaustive"});
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("PASS 1024 inputs"), std::string::npos);
    r = invoke({"verify", "mult", "--rep", "gnb", "-m", "163", "--random", "20", "--seed", "7"});
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("seed=0x7"), std::string::npos);
    r = invoke({"verify", "selfmult", "--rep", "gnb", "-m", "7", "-r", "3"});
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("samples=100 seed=0xB10F"), std::string::npos);
}

TEST(Verify, ExhaustiveCap) {
    EXPECT_EQ(invoke({"verify", "mult", "--rep", "gnb", "-m", "11", "--exhaustive"}).code, 2);
    EXPECT_EQ(invoke({"verify", "invert", "--rep", "gnb", "-m", "11", "--exhaustive"}).code, 0);
    EXPECT_EQ(invoke({"verify", "mult", "--rep", "gnb", "-m", "5", "--exhaustive", "--random", "3"}).code, 2);
    EXPECT_EQ(invoke({"verify", "mult", "--rep", "gnb", "-m", "5", "--seed", "xyz"}).code, 2);
}

TEST(Verify, TamperedNetlistFails) {
    const std::string path = temp("tampered.txt");
    ASSERT_EQ(invoke({"synth", "invert", "--rep", "gbb", "-m", "4", "--out", path}).code, 0);
    std::string text = slurp(path);
    const auto pos = text.find("\nccx ");
    ASSERT_NE(pos, std::string::npos);
    text.erase(pos, text.find('\n', pos + 1) - pos);
    {
        std::ofstream f(path, std::ios::binary);
        f << text;
    }
    const auto r = invoke({"verify", "invert", "--rep", "gbb", "-m", "4", "--in", path, "--exhaustive"});
    EXPECT_EQ(r.code, 1);
    EXPECT_NE(r.out.find("FAIL"), std::string::npos);
    EXPECT_NE(r.out.find("input="), std::string::npos);
    std::remove(path.c_str());
}

TEST(Verify, IoAndParseFailures) {
    EXPECT_EQ(invoke({"verify", "mult", "--rep", "gnb", "-m", "5", "--in", "/nonexistent.txt"}).code, 3);
    const std::string path = temp("garbage.txt");
    {
        std::ofstream f(path);
        f << "qubits 15\nccx 1 1 2\n";
    }
    EXPECT_EQ(invoke({"verify", "mult", "--rep", "gnb", "-m", "5", "--in", path}).code, 3);
    {
        std::ofstream f(path);
        f << "qubits 4\ncx 0 1\n";
    }
    EXPECT_EQ(invoke({"verify", "mult", "--rep", "gnb", "-m", "5", "--in", path}).code, 2);
    std::remove(path.c_str());
}

TEST(Table, RowsAndCitations) {
    const auto r = invoke({"table", "-m", "4,5,7,10"});
    ASSERT_EQ(r.code, 0);
    std::istringstream is(r.out);
    std::string line;
    std::vector<std::vector<std::string>> rows;
    while (std::getline(is, line)) {
        if (line.empty() || line[0] == '#') {
            continue;
        }
        std::istringstream ls(line);
        std::vector<std::string> f;
        std::string x;
        while (ls >> x) {
            f.push_back(x);
        }
        rows.push_back(f);
    }
    ASSERT_EQ(rows.size(), 7U);  // header + 6 data rows
    for (std::size_t i = 1; i < rows.size(); ++i) {
        EXPECT_EQ(rows[i][3], "1");  // addition depth
        if (rows[i][0] == "4" && rows[i][1] == "gbb") {
            EXPECT_EQ(rows[i][5], "5");
        }
    }
    EXPECT_NE(r.out.find("# skip m=5 rep=gbb"), std::string::npos);
    EXPECT_NE(r.out.find("polynomial basis"), std::string::npos);
    EXPECT_NE(r.out.find("O(m^2)"), std::string::npos);
}
