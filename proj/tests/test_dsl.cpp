#include <doctest.h>

#include <cmath>
#include <cstring>
#include <random>
#include <string>
#include <vector>

#include "cqsim/cqubit.hpp"
#include "cqsim/dsl.hpp"
#include "cqsim/gates.hpp"
#include "cqsim/signal.hpp"

using namespace cqsim;

namespace {

bool waves_bit_equal(const ChannelQuadWave& a, const ChannelQuadWave& b) {
    if (a.size() != b.size()) return false;
    const std::size_t bytes = a.size() * sizeof(double);
    return std::memcmp(a.c0_re.data(), b.c0_re.data(), bytes) == 0 &&
           std::memcmp(a.c0_im.data(), b.c0_im.data(), bytes) == 0 &&
           std::memcmp(a.c1_re.data(), b.c1_re.data(), bytes) == 0 &&
           std::memcmp(a.c1_im.data(), b.c1_im.data(), bytes) == 0;
}

double max_dev(const ChannelQuadWave& a, const ChannelQuadWave& b) {
    REQUIRE(a.size() == b.size());
    double worst = 0.0;
    for (std::size_t k = 0; k < a.size(); ++k) {
        worst = std::max(worst, std::abs(a.c0_re[k] - b.c0_re[k]));
        worst = std::max(worst, std::abs(a.c0_im[k] - b.c0_im[k]));
        worst = std::max(worst, std::abs(a.c1_re[k] - b.c1_re[k]));
        worst = std::max(worst, std::abs(a.c1_im[k] - b.c1_im[k]));
    }
    return worst;
}

Program random_program(std::mt19937_64& rng, int max_gates = 8) {
    std::uniform_real_distribution<double> angle(0.0, two_pi);
    std::uniform_real_distribution<double> freq(0.0, 1e10);
    Program p(CqubitParams(freq(rng), angle(rng), angle(rng), angle(rng)));
    const int len = static_cast<int>(rng() % static_cast<std::uint64_t>(max_gates + 1));
    for (int g = 0; g < len; ++g) {
        switch (rng() % 3) {
            case 0: p.gates.push_back(GateOp::hadamard()); break;
            case 1: p.gates.push_back(GateOp::pauli_x()); break;
            default: p.gates.push_back(GateOp::rphi(angle(rng))); break;
        }
    }
    return p;
}

// All diagnostics in one string, for matching on substrings.
std::string joined_messages(const ParseResult& r) {
    std::string s;
    for (const ParseDiagnostic& d : r.diagnostics) {
        s += d.message;
        s += '\n';
    }
    return s;
}

}  // namespace

TEST_CASE("a minimal program parses cleanly") {
    const ParseResult r =
        parse_program("init omega=6.283185307e9 varphi=0 alpha=0 beta=0\nH\n");
    REQUIRE(r.ok());
    CHECK(r.diagnostics.empty());
    CHECK(r.program->init.omega == 6.283185307e9);
    CHECK(r.program->init.varphi == 0.0);
    REQUIRE(r.program->gates.size() == 1);
    CHECK(r.program->gates[0] == GateOp::hadamard());
    CHECK(r.program->init_line == 1);
    CHECK(r.program->gate_lines == std::vector<int>{2});
}

TEST_CASE("comments, blank lines, tabs and CRLF endings are accepted") {
    const char* text =
        "# full-line comment\r\n"
        "\r\n"
        "init\tomega=1 varphi=0\talpha=0 beta=0  # trailing comment\r\n"
        "\n"
        "  X\n"
        "RPHI 0.7853981634 # quarter-ish turn\n";
    const ParseResult r = parse_program(text);
    REQUIRE(r.ok());
    CHECK(r.program->init_line == 3);
    REQUIRE(r.program->gates.size() == 2);
    CHECK(r.program->gates[0] == GateOp::pauli_x());
    CHECK(r.program->gates[1].kind == GateKind::rphi);
    CHECK(r.program->gates[1].phi == 0.7853981634);
    CHECK(r.program->gate_lines == std::vector<int>{5, 6});
}

TEST_CASE("a missing trailing newline does not add a phantom line") {
    const ParseResult r = parse_program("init omega=1 varphi=0 alpha=0 beta=0\nX");
    REQUIRE(r.ok());
    CHECK(r.program->gate_lines == std::vector<int>{2});
}

TEST_CASE("RPHI stores its argument reduced mod 2*pi") {
    const ParseResult r =
        parse_program("init omega=1 varphi=0 alpha=0 beta=0\nRPHI 7.0\nRPHI -1\n");
    REQUIRE(r.ok());
    CHECK(r.program->gates[0].phi == wrap_angle(7.0));
    CHECK(r.program->gates[1].phi == wrap_angle(-1.0));
}

TEST_CASE("empty input reports a missing init on line 1") {
    const ParseResult r = parse_program("");
    CHECK_FALSE(r.ok());
    CHECK_FALSE(r.program.has_value());
    REQUIRE(r.diagnostics.size() == 1);
    CHECK(r.diagnostics[0].line == 1);
    CHECK(r.diagnostics[0].column == 1);
    CHECK(r.diagnostics[0].message == "missing init statement");
}

TEST_CASE("gates before init are kept but flagged") {
    const ParseResult r = parse_program("H\ninit omega=1 varphi=0 alpha=0 beta=0\n");
    CHECK_FALSE(r.ok());
    REQUIRE(r.program.has_value());
    CHECK(r.program->gates.size() == 1);
    REQUIRE(r.diagnostics.size() == 2);
    CHECK(r.diagnostics[0].line == 1);
    CHECK(r.diagnostics[0].message == "gate before init statement");
    CHECK(r.diagnostics[1].line == 2);
    CHECK(r.diagnostics[1].message == "init must come before any gate");
}

TEST_CASE("field errors carry the column of the offending value") {
    // column 6 is 'omega=...', column 12 the value after the '='
    const ParseResult bad_value =
        parse_program("init omega=abc varphi=0 alpha=0 beta=0\n");
    CHECK_FALSE(bad_value.ok());
    REQUIRE(bad_value.diagnostics.size() == 1);
    CHECK(bad_value.diagnostics[0].line == 1);
    CHECK(bad_value.diagnostics[0].column == 12);
    CHECK(bad_value.diagnostics[0].message == "'abc' is not a finite number");

    const ParseResult empty_value =
        parse_program("init omega= varphi=0 alpha=0 beta=0\n");
    REQUIRE(empty_value.diagnostics.size() == 1);
    CHECK(empty_value.diagnostics[0].column == 12);
    CHECK(empty_value.diagnostics[0].message == "omega is missing a value");

    const ParseResult neg =
        parse_program("init omega=-2 varphi=0 alpha=0 beta=0\n");
    REQUIRE(neg.diagnostics.size() == 1);
    CHECK(neg.diagnostics[0].column == 6);
    CHECK(neg.diagnostics[0].message == "omega must be >= 0");
    REQUIRE(neg.program.has_value());
    CHECK(neg.program->init.omega == 0.0);  // recovered value

    // fields are positional; swapped keys trip both slots
    const ParseResult swapped =
        parse_program("init varphi=0 omega=1 alpha=0 beta=0\n");
    CHECK(swapped.diagnostics.size() == 2);
}

TEST_CASE("the float grammar is strict") {
    // leading '+', trailing junk, hex and non-finite spellings all fail
    for (const char* v : {"+1.5", "1.5x", "0x1p3", "inf", "nan", "1e", "--2"}) {
        const std::string text =
            std::string("init omega=") + v + " varphi=0 alpha=0 beta=0\n";
        const ParseResult r = parse_program(text);
        CHECK_FALSE(r.ok());
        CHECK(joined_messages(r).find("is not a finite number") != std::string::npos);
    }
    // plain, scientific and negative-angle spellings all pass
    const ParseResult ok = parse_program(
        "init omega=1e9 varphi=.5 alpha=-0.25 beta=3.E-2\nRPHI 2e-1\n");
    CHECK(ok.ok());
}

TEST_CASE("parsing collects several diagnostics with recovery") {
    const char* text =
        "X\n"
        "init omega=nope varphi=0 alpha=0\n"
        "RPHI\n"
        "FOO 1\n"
        "init omega=1 varphi=0 alpha=0 beta=0\n";
    const ParseResult r = parse_program(text);
    CHECK_FALSE(r.ok());
    REQUIRE(r.diagnostics.size() == 6);
    CHECK(r.diagnostics[0].line == 1);  // gate before init
    CHECK(r.diagnostics[1].line == 2);  // init after a gate
    CHECK(r.diagnostics[1].message == "init must come before any gate");
    CHECK(r.diagnostics[2].line == 2);  // wrong field count
    CHECK(r.diagnostics[2].message.find("init takes exactly") != std::string::npos);
    CHECK(r.diagnostics[3].line == 3);
    CHECK(r.diagnostics[3].message.find("RPHI requires") != std::string::npos);
    CHECK(r.diagnostics[4].line == 4);
    CHECK(r.diagnostics[4].message.find("unknown statement 'FOO'") != std::string::npos);
    CHECK(r.diagnostics[5].line == 5);
    CHECK(r.diagnostics[5].message.find("duplicate init") != std::string::npos);
    CHECK(r.diagnostics[5].message.find("first on line 2") != std::string::npos);

    // recovery still yields the structural skeleton: X and RPHI(0)
    REQUIRE(r.program.has_value());
    CHECK(r.program->gates.size() == 2);
    CHECK(r.program->gate_lines == std::vector<int>{1, 3});
}

TEST_CASE("trailing tokens after a gate are rejected") {
    CHECK_FALSE(parse_program("init omega=1 varphi=0 alpha=0 beta=0\nH extra\n").ok());
    CHECK_FALSE(parse_program("init omega=1 varphi=0 alpha=0 beta=0\nRPHI 1 2\n").ok());
    const ParseResult r = parse_program("init omega=1 varphi=0 alpha=0 beta=0\nRPHI zz\n");
    CHECK_FALSE(r.ok());
    REQUIRE(r.diagnostics.size() == 1);
    CHECK(r.diagnostics[0].column == 6);
}

TEST_CASE("format_diagnostic renders file:line:col prefixes") {
    const ParseDiagnostic err{3, 7, Severity::error, "boom"};
    CHECK(format_diagnostic("prog.cq", err) == "prog.cq:3:7: error: boom");
    const ParseDiagnostic warn{1, 1, Severity::warning, "odd"};
    CHECK(format_diagnostic("-", warn) == "-:1:1: warning: odd");
}

TEST_CASE("format_program emits the canonical spelling") {
    Program p(CqubitParams(1.0, 0.0, 0.0, 0.0));
    p.gates.push_back(GateOp::pauli_x());
    CHECK(format_program(p) == "init omega=1 varphi=0 alpha=0 beta=0\nX\n");

    Program q(CqubitParams(6283185307.179586, 0.0, 0.0, 0.0));
    q.gates.push_back(GateOp::hadamard());
    q.gates.push_back(GateOp::rphi(std::numbers::pi / 4.0));
    CHECK(format_program(q) ==
          "init omega=6283185307.179586 varphi=0 alpha=0 beta=0\n"
          "H\n"
          "RPHI 0.7853981633974483\n");
}

TEST_CASE("format/parse round-trips reproduce the program exactly") {
    std::mt19937_64 rng(41);
    for (int i = 0; i < 1500; ++i) {
        const Program p = random_program(rng);
        const std::string text = format_program(p);
        const ParseResult r = parse_program(text);
        REQUIRE(r.ok());
        CHECK(*r.program == p);
        // and the canonical form is a fixed point
        CHECK(format_program(*r.program) == text);
    }
}

TEST_CASE("the parser survives arbitrary byte soup") {
    std::mt19937_64 rng(42);
    // printable chars, structural chars, a NUL and a few control bytes
    const char raw[] = "init omega=varphi alpha beta HXRPHI0123456789.eE+-#\t\r\n\0=_";
    const std::string alphabet(raw, sizeof raw - 1);
    std::uniform_int_distribution<std::size_t> pick(0, alphabet.size() - 1);
    std::uniform_int_distribution<int> len(0, 200);
    for (int i = 0; i < 2000; ++i) {
        std::string s;
        const int n = len(rng);
        for (int k = 0; k < n; ++k) s += alphabet[pick(rng)];
        ParseResult r;
        CHECK_NOTHROW(r = parse_program(s));
        if (!r.program.has_value()) {
            CHECK_FALSE(r.diagnostics.empty());  // silence is not an option
        }
    }
}

TEST_CASE("mutated valid programs parse without throwing") {
    std::mt19937_64 rng(43);
    std::uniform_int_distribution<int> byte(0, 255);
    for (int i = 0; i < 500; ++i) {
        std::string text = format_program(random_program(rng));
        const int edits = 1 + static_cast<int>(rng() % 4);
        for (int e = 0; e < edits && !text.empty(); ++e) {
            const std::size_t at = rng() % text.size();
            text[at] = static_cast<char>(byte(rng));
        }
        CHECK_NOTHROW(parse_program(text));
    }
}

TEST_CASE("compiling an empty program yields the identity on both backends") {
    const Program p(CqubitParams(two_pi * 1e9, 0.3, 0.1, 0.9));
    const ChannelQuadWave in = channels_wave(p.init, 0.0, 1e-12, 50);
    CHECK(waves_bit_equal(compile_program(p, Backend::ideal).apply(in), in));
    CHECK(waves_bit_equal(compile_program(p, Backend::netlist).apply(in), in));
}

TEST_CASE("ideal and netlist backends agree on random programs") {
    std::mt19937_64 rng(45);
    for (int i = 0; i < 300; ++i) {
        const Program p = random_program(rng);
        const ChannelQuadWave in = channels_wave(p.init, 0.0, 2e-12, 64);
        const ChannelQuadWave ideal = compile_program(p, Backend::ideal).apply(in);
        const ChannelQuadWave net = compile_program(p, Backend::netlist).apply(in);
        CHECK(max_dev(ideal, net) < 1e-12);
    }
}

TEST_CASE("compile: stage bookkeeping matches the gate list") {
    Program p(CqubitParams(1.0, 0.0, 0.0, 0.0));
    p.gates = {GateOp::hadamard(), GateOp::pauli_x(), GateOp::rphi(1.0)};
    const Pipeline ideal = compile_program(p, Backend::ideal);
    CHECK(ideal.backend() == Backend::ideal);
    CHECK(ideal.gates().size() == 3);
    CHECK(ideal.stages().empty());

    const Pipeline net = compile_program(p, Backend::netlist);
    CHECK(net.backend() == Backend::netlist);
    CHECK(net.stages().size() == 3);
    CHECK(net.stages()[1].blocks.empty());  // the X stage is pure wiring
}

TEST_CASE("double hadamard compiles to the identity on both backends") {
    Program p(CqubitParams(two_pi * 1e9, 0.0, 1.0, 2.0));
    p.gates = {GateOp::hadamard(), GateOp::hadamard()};
    const ChannelQuadWave in = channels_wave(p.init, 0.0, 1e-12, 80);
    CHECK(max_dev(compile_program(p, Backend::ideal).apply(in), in) < 1e-12);
    CHECK(max_dev(compile_program(p, Backend::netlist).apply(in), in) < 1e-12);
}

TEST_CASE("perturbed pipelines: ideal is untouched, netlist is deterministic") {
    Program p(CqubitParams(two_pi * 1e9, 0.0, 0.0, 0.0));
    p.gates = {GateOp::hadamard(), GateOp::hadamard()};
    const ChannelQuadWave in = channels_wave(p.init, 0.0, 1e-12, 60);

    const Pipeline ideal = compile_program(p, Backend::ideal);
    CHECK(waves_bit_equal(ideal.perturbed(1.0, 9).apply(in), ideal.apply(in)));

    const Pipeline net = compile_program(p, Backend::netlist);
    CHECK(waves_bit_equal(net.perturbed(0.0, 9).apply(in), net.apply(in)));
    CHECK(waves_bit_equal(net.perturbed(1.0, 9).apply(in), net.perturbed(1.0, 9).apply(in)));

    // stages draw from consecutive seeds, so equal gates get distinct wiggles
    const Pipeline wig = net.perturbed(1.0, 9);
    const double r1_a = wig.stages()[0].blocks[4].r1;
    const double r1_b = wig.stages()[1].blocks[4].r1;
    CHECK(r1_a != r1_b);
}
