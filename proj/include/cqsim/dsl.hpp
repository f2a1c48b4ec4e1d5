#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cqsim/cqubit.hpp"
#include "cqsim/gates.hpp"
#include "cqsim/netlist.hpp"

namespace cqsim {

// A parsed .cq program: one initial cqubit plus a gate sequence.
//
// Grammar (line oriented, case sensitive, `#` comments, blank lines ignored):
//   init omega=<float> varphi=<float> alpha=<float> beta=<float>
//   H
//   X
//   RPHI <float>
// The init statement must come first and appear exactly once. Floats are
// plain decimal or scientific notation; angles are reduced mod 2*pi when the
// program is built.
struct Program {
    CqubitParams init;
    std::vector<GateOp> gates;

    // 1-based source lines of the statements above, for diagnostics; empty /
    // zero for synthesized programs. Not part of program identity.
    int init_line = 0;
    std::vector<int> gate_lines;

    explicit Program(CqubitParams init) : init(init) {}

    friend bool operator==(const Program& a, const Program& b) {
        return a.init == b.init && a.gates == b.gates;
    }
};

enum class Severity { error, warning };

struct ParseDiagnostic {
    int line = 0;    // 1-based
    int column = 0;  // 1-based byte offset in the line
    Severity severity = Severity::error;
    std::string message;
};

std::string format_diagnostic(std::string_view filename, const ParseDiagnostic& d);

// Outcome of parse_program. `program` is present when the text yielded a
// structurally complete program, but only ok() (complete and error-free)
// should gate further use.
struct ParseResult {
    std::optional<Program> program;
    std::vector<ParseDiagnostic> diagnostics;

    bool ok() const;
};

// Parses .cq source text. Never throws on malformed input: all problems are
// reported as diagnostics (several per run where recovery is possible).
// Accepts LF or CRLF line endings.
ParseResult parse_program(std::string_view text);

// Canonical text form: LF endings, shortest round-tripping float spelling.
// parse_program(format_program(p)) reproduces p exactly.
std::string format_program(const Program& p);

enum class Backend { ideal, netlist };

// A compiled program: either the gate list itself (ideal backend) or one
// analog netlist per gate (netlist backend), applied stage by stage.
class Pipeline {
  public:
    ChannelQuadWave apply(const ChannelQuadWave& input) const;

    // Netlist backend: returns a copy with every stage's resistors
    // perturbed, stage i drawing from seed + i. Ideal backend: unchanged
    // copy (there are no resistors).
    Pipeline perturbed(double tol_pct, std::uint64_t seed) const;

    Backend backend() const { return backend_; }
    const std::vector<GateOp>& gates() const { return gates_; }
    const std::vector<Netlist>& stages() const { return stages_; }

  private:
    friend Pipeline compile_program(const Program&, Backend, double, std::optional<double>);

    Backend backend_ = Backend::ideal;
    std::vector<GateOp> gates_;
    std::vector<Netlist> stages_;  // netlist backend only, one per gate
};

// Lowers a program onto a backend. divider_r1 (and the optional forced
// shunt value r2_override, see the netlist builders) shape the dividers of
// the netlist backend and are ignored by the ideal one.
Pipeline compile_program(const Program& p, Backend backend, double divider_r1 = 10e3,
                         std::optional<double> r2_override = std::nullopt);

}  // namespace cqsim
