#pragma once

// Circuit text format:
//   qudits <n> dim <d>     header, required first
//   F <t> | P <t> | T <t>  single-qudit gates
//   C <control> <target>   controlled shift
//   Z <t> <power>          boost power
//   X <t> <power>          shift power
// '#' starts a comment; blank lines are ignored.

#include <string>
#include <vector>

#include "qws/dim.hpp"
#include "qws/errors.hpp"
#include "qws/gate_spec.hpp"

namespace qws {

struct Circuit {
    Dim dim;
    std::vector<GateSpec> gates;

    bool contains_t() const;
};

// Total parse: every line is either accepted or rejected with its location.
// Throws ParseError, BadDimension, or BadTargets.
Circuit parse_circuit(const std::string& text);

// Canonical text form; parse(pretty_print(c)) reproduces c.
std::string pretty_print(const Circuit& c);

}  // namespace qws
