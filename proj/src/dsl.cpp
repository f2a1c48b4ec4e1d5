#include "cqsim/dsl.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <utility>

#include "cqsim/signal.hpp"

namespace cqsim {

namespace {

struct Token {
    std::string_view text;
    int column = 0;  // 1-based
};

// Splits a line (comment already stripped) on spaces/tabs, keeping columns.
std::vector<Token> tokenize(std::string_view line) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < line.size()) {
        if (line[i] == ' ' || line[i] == '\t') {
            ++i;
            continue;
        }
        const std::size_t start = i;
        while (i < line.size() && line[i] != ' ' && line[i] != '\t') ++i;
        out.push_back({line.substr(start, i - start), static_cast<int>(start) + 1});
    }
    return out;
}

// Strict float: the whole token must be a finite plain/scientific literal.
bool parse_float(std::string_view s, double& out) {
    const char* first = s.data();
    const char* last = s.data() + s.size();
    const auto [ptr, ec] = std::from_chars(first, last, out);
    return ec == std::errc() && ptr == last && std::isfinite(out);
}

struct ParserState {
    std::vector<ParseDiagnostic> diags;

    void error(int line, int column, std::string msg) {
        diags.push_back({line, column, Severity::error, std::move(msg)});
    }
};

}  // namespace

bool ParseResult::ok() const {
    if (!program.has_value()) return false;
    for (const ParseDiagnostic& d : diagnostics) {
        if (d.severity == Severity::error) return false;
    }
    return true;
}

std::string format_diagnostic(std::string_view filename, const ParseDiagnostic& d) {
    std::string s(filename);
    s += ':';
    s += std::to_string(d.line);
    s += ':';
    s += std::to_string(d.column);
    s += (d.severity == Severity::error) ? ": error: " : ": warning: ";
    s += d.message;
    return s;
}

ParseResult parse_program(std::string_view text) {
    ParserState st;

    bool seen_init = false;
    int init_line = 0;
    // Fields recover to 0 on a bad token so parsing can continue; any error
    // diagnostic already makes the result not ok().
    double omega = 0.0, varphi = 0.0, alpha = 0.0, beta = 0.0;
    std::vector<GateOp> gates;
    std::vector<int> gate_lines;

    // Reads one "key=<float>" token of the init statement.
    auto init_field = [&st](const Token& t, std::string_view key, int line, double& out) {
        out = 0.0;
        const std::string prefix = std::string(key) + "=";
        if (!t.text.starts_with(prefix)) {
            st.error(line, t.column,
                     "expected " + prefix + "<float>, got '" + std::string(t.text) + "'");
            return;
        }
        const std::string_view value = t.text.substr(prefix.size());
        const int vcol = t.column + static_cast<int>(prefix.size());
        if (value.empty()) {
            st.error(line, vcol, std::string(key) + " is missing a value");
        } else if (!parse_float(value, out)) {
            st.error(line, vcol, "'" + std::string(value) + "' is not a finite number");
            out = 0.0;
        }
    };

    int line_no = 0;
    std::size_t pos = 0;
    while (pos < text.size()) {
        const std::size_t eol = text.find('\n', pos);
        std::string_view line;
        if (eol == std::string_view::npos) {
            line = text.substr(pos);
            pos = text.size();
        } else {
            line = text.substr(pos, eol - pos);
            pos = eol + 1;
        }
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        if (const std::size_t hash = line.find('#'); hash != std::string_view::npos) {
            line = line.substr(0, hash);
        }
        const std::vector<Token> toks = tokenize(line);
        if (toks.empty()) continue;

        const Token& head = toks[0];
        if (head.text == "init") {
            if (seen_init) {
                st.error(line_no, head.column, "duplicate init statement (first on line " +
                                                   std::to_string(init_line) + ")");
                continue;
            }
            seen_init = true;
            init_line = line_no;
            if (!gates.empty()) {
                st.error(line_no, head.column, "init must come before any gate");
            }
            if (toks.size() != 5) {
                st.error(line_no, head.column,
                         "init takes exactly: omega=<float> varphi=<float> alpha=<float> "
                         "beta=<float>");
                continue;
            }
            init_field(toks[1], "omega", line_no, omega);
            init_field(toks[2], "varphi", line_no, varphi);
            init_field(toks[3], "alpha", line_no, alpha);
            init_field(toks[4], "beta", line_no, beta);
            if (omega < 0.0) {
                st.error(line_no, toks[1].column, "omega must be >= 0");
                omega = 0.0;
            }
        } else if (head.text == "H" || head.text == "X") {
            if (toks.size() > 1) {
                st.error(line_no, toks[1].column,
                         "unexpected token after " + std::string(head.text));
            }
            gates.push_back(head.text == "H" ? GateOp::hadamard() : GateOp::pauli_x());
            gate_lines.push_back(line_no);
            if (!seen_init) st.error(line_no, head.column, "gate before init statement");
        } else if (head.text == "RPHI") {
            double phi = 0.0;
            if (toks.size() < 2) {
                st.error(line_no, head.column, "RPHI requires a phase argument in radians");
            } else if (!parse_float(toks[1].text, phi)) {
                st.error(line_no, toks[1].column,
                         "'" + std::string(toks[1].text) + "' is not a finite number");
                phi = 0.0;
            } else if (toks.size() > 2) {
                st.error(line_no, toks[2].column, "unexpected token after RPHI phase");
            }
            gates.push_back(GateOp::rphi(phi));
            gate_lines.push_back(line_no);
            if (!seen_init) st.error(line_no, head.column, "gate before init statement");
        } else {
            st.error(line_no, head.column,
                     "unknown statement '" + std::string(head.text) +
                         "' (expected init, H, X or RPHI)");
        }
    }

    ParseResult result;
    result.diagnostics = std::move(st.diags);
    if (!seen_init) {
        result.diagnostics.push_back(
            {std::max(line_no, 1), 1, Severity::error, "missing init statement"});
        return result;
    }
    Program p(CqubitParams(omega, varphi, alpha, beta));
    p.gates = std::move(gates);
    p.init_line = init_line;
    p.gate_lines = std::move(gate_lines);
    result.program = std::move(p);
    return result;
}

std::string format_program(const Program& p) {
    std::string s = "init omega=" + format_double(p.init.omega) +
                    " varphi=" + format_double(p.init.varphi) +
                    " alpha=" + format_double(p.init.alpha) +
                    " beta=" + format_double(p.init.beta) + "\n";
    for (const GateOp& g : p.gates) {
        switch (g.kind) {
            case GateKind::hadamard:
                s += "H\n";
                break;
            case GateKind::pauli_x:
                s += "X\n";
                break;
            case GateKind::rphi:
                s += "RPHI " + format_double(g.phi) + "\n";
                break;
        }
    }
    return s;
}

ChannelQuadWave Pipeline::apply(const ChannelQuadWave& input) const {
    if (backend_ == Backend::ideal) {
        return apply_pipeline(gates_, input);
    }
    ChannelQuadWave cur = input;
    for (const Netlist& stage : stages_) cur = simulate_netlist(stage, cur);
    return cur;
}

Pipeline Pipeline::perturbed(double tol_pct, std::uint64_t seed) const {
    Pipeline out = *this;
    if (backend_ == Backend::netlist) {
        for (std::size_t i = 0; i < out.stages_.size(); ++i) {
            out.stages_[i] = perturb_resistors(out.stages_[i], tol_pct,
                                               seed + static_cast<std::uint64_t>(i));
        }
    }
    return out;
}

Pipeline compile_program(const Program& p, Backend backend, double divider_r1,
                         std::optional<double> r2_override) {
    Pipeline pl;
    pl.backend_ = backend;
    pl.gates_ = p.gates;
    if (backend == Backend::netlist) {
        pl.stages_.reserve(p.gates.size());
        for (const GateOp& g : p.gates) {
            switch (g.kind) {
                case GateKind::hadamard:
                    pl.stages_.push_back(build_hadamard_netlist(divider_r1, r2_override));
                    break;
                case GateKind::pauli_x:
                    pl.stages_.push_back(build_x_netlist());
                    break;
                case GateKind::rphi:
                    pl.stages_.push_back(build_rphi_netlist(g.phi, divider_r1, r2_override));
                    break;
            }
        }
    }
    return pl;
}

}  // namespace cqsim
