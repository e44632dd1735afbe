#pragma once

// Backend dispatch and file emission for the CLI.
//
// Wigner CSV layout: one header row "d,n", then one row per phase-space
// point in table order (x_p coordinates vary slowest):
//   x_p_0,...,x_p_{n-1},x_q_0,...,x_q_{n-1},value
// with all floats printed at 12 significant digits.

#include <iosfwd>
#include <optional>
#include <string>

#include "qws/circuit.hpp"
#include "qws/dim.hpp"
#include "qws/weyl.hpp"

namespace qws {

enum class BackendKind { Stabilizer, Dense, Reflection };
enum class ReportKind { Wigner, Support, Hbar, Gaussian };

std::optional<BackendKind> backend_from_name(const std::string& name);
std::optional<ReportKind> report_from_name(const std::string& name);

struct RunConfig {
    BackendKind backend = BackendKind::Dense;
    ReportKind report = ReportKind::Wigner;
    std::string out_path;  // empty: write to stdout
    bool verify = false;
    i64 cap = 10'000'000;
    double tol = 1e-9;
};

struct RunResult {
    int exit_code = 0;          // 0 ok; 1 verify mismatch
    double verify_max_diff = 0.0;
};

// Executes the circuit on the configured backend and writes the requested
// report (or runs the two-backend Wigner comparison in verify mode, choosing
// reflection-vs-dense when the circuit contains T and stabilizer-vs-dense
// otherwise). Progress and verify lines go to `log`.
RunResult run(const RunConfig& config, const Circuit& circuit, std::ostream& log);

std::string wigner_csv(const WignerTable& tbl);

}  // namespace qws
