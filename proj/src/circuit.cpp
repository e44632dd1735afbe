#include "qws/circuit.hpp"

#include <charconv>
#include <sstream>

namespace qws {

bool Circuit::contains_t() const {
    for (const GateSpec& g : gates) {
        if (g.kind == GateKind::T) return true;
    }
    return false;
}

namespace {

struct Token {
    std::string text;
    int column;  // 1-based
};

std::vector<Token> tokenize(const std::string& line) {
    std::vector<Token> out;
    size_t i = 0;
    while (i < line.size()) {
        if (line[i] == '#') break;
        if (std::isspace(static_cast<unsigned char>(line[i]))) {
            ++i;
            continue;
        }
        size_t start = i;
        while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i])) && line[i] != '#') ++i;
        out.push_back({line.substr(start, i - start), static_cast<int>(start) + 1});
    }
    return out;
}

i64 parse_int(const Token& tok, int line_no) {
    i64 value = 0;
    const char* begin = tok.text.data();
    const char* end = begin + tok.text.size();
    auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc{} || ptr != end) {
        throw ParseError(line_no, tok.column, "expected an integer, got '" + tok.text + "'");
    }
    return value;
}

void expect_count(const std::vector<Token>& toks, size_t count, int line_no) {
    if (toks.size() > count) {
        throw ParseError(line_no, toks[count].column, "unexpected token '" + toks[count].text + "'");
    }
    if (toks.size() < count) {
        const Token& last = toks.back();
        throw ParseError(line_no, last.column + static_cast<int>(last.text.size()),
                         "missing argument(s) for '" + toks[0].text + "'");
    }
}

int parse_target(const Token& tok, int line_no, const Dim& dim) {
    const i64 t = parse_int(tok, line_no);
    if (t < 0 || t >= dim.n) {
        throw BadTargets("line " + std::to_string(line_no) + ": target " + std::to_string(t) +
                         " out of range for n = " + std::to_string(dim.n));
    }
    return static_cast<int>(t);
}

}  // namespace

Circuit parse_circuit(const std::string& text) {
    Circuit circuit;
    bool have_header = false;

    std::istringstream stream(text);
    std::string line;
    int line_no = 0;
    while (std::getline(stream, line)) {
        ++line_no;
        const std::vector<Token> toks = tokenize(line);
        if (toks.empty()) continue;

        if (!have_header) {
            if (toks[0].text != "qudits") {
                throw ParseError(line_no, toks[0].column, "expected header 'qudits <n> dim <d>'");
            }
            expect_count(toks, 4, line_no);
            if (toks[2].text != "dim") {
                throw ParseError(line_no, toks[2].column, "expected 'dim', got '" + toks[2].text + "'");
            }
            const i64 n = parse_int(toks[1], line_no);
            const i64 d = parse_int(toks[3], line_no);
            if (n < 1) throw BadDimension("qudit count must be >= 1, got " + std::to_string(n));
            if (d < 3 || d % 2 == 0) {
                throw BadDimension("qudit dimension must be odd and >= 3, got " + std::to_string(d));
            }
            circuit.dim = Dim(d, static_cast<int>(n));
            have_header = true;
            continue;
        }

        const std::string& op = toks[0].text;
        if (op == "F" || op == "P" || op == "T") {
            expect_count(toks, 2, line_no);
            const GateKind kind = (op == "F") ? GateKind::F : (op == "P") ? GateKind::P : GateKind::T;
            circuit.gates.push_back(GateSpec::single(kind, parse_target(toks[1], line_no, circuit.dim)));
        } else if (op == "C") {
            expect_count(toks, 3, line_no);
            const int control = parse_target(toks[1], line_no, circuit.dim);
            const int target = parse_target(toks[2], line_no, circuit.dim);
            if (control == target) {
                throw BadTargets("line " + std::to_string(line_no) + ": C control and target must differ");
            }
            circuit.gates.push_back(GateSpec::cnot(control, target));
        } else if (op == "Z" || op == "X") {
            expect_count(toks, 3, line_no);
            const int target = parse_target(toks[1], line_no, circuit.dim);
            const i64 power = parse_int(toks[2], line_no);
            circuit.gates.push_back(op == "Z" ? GateSpec::zpow(target, power) : GateSpec::xpow(target, power));
        } else {
            throw ParseError(line_no, toks[0].column, "unknown gate '" + op + "'");
        }
    }
    if (!have_header) throw ParseError(line_no + 1, 1, "missing header 'qudits <n> dim <d>'");
    return circuit;
}

std::string pretty_print(const Circuit& c) {
    std::ostringstream out;
    out << "qudits " << c.dim.n << " dim " << c.dim.d << "\n";
    for (const GateSpec& g : c.gates) {
        out << gate_kind_name(g.kind);
        for (int t : g.targets) out << ' ' << t;
        if (g.kind == GateKind::Zpow || g.kind == GateKind::Xpow) out << ' ' << g.power;
        out << "\n";
    }
    return out.str();
}

}  // namespace qws
