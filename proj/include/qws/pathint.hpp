#pragma once

// hbar^1 backend: gates expanded as weighted sums of reflections,
//   U = sum_x w_x R(x)  over the d^{2k} phase-space points of the gate's
// k-qudit support, with w_x the gate's center representation. Applying the
// expansion literally iterates every term; the visit counter is the cost
// model that contrasts with the single classical branch of Clifford gates.

#include <cstdint>
#include <vector>

#include "qws/dense.hpp"
#include "qws/dim.hpp"
#include "qws/gate_spec.hpp"
#include "qws/weyl.hpp"

namespace qws {

struct ReflectionExpansion {
    Dim dim;                   // full system
    std::vector<int> support;  // the gate's qudits; local coordinate order follows this
    std::vector<cx> weights;   // d^{2k} center-representation values, first coordinate slowest

    Dim local_dim() const { return Dim(dim.d, static_cast<int>(support.size())); }
    std::uint64_t term_count() const { return weights.size(); }
};

// Center-representation expansion of the gate restricted to its support
// qudits; reconstructing sum_x w_x R(x) reproduces the dense gate.
ReflectionExpansion reflection_expansion(const GateSpec& g, const Dim& dim);

struct ReflectionApplyResult {
    DenseState state;
    std::uint64_t term_visits = 0;
};

// sum_x w_x R(x) psi with R embedded on the support qudits. Iterates every
// term in flat order (deterministic summation) and records the visit count.
ReflectionApplyResult apply_reflection_sum(const ReflectionExpansion& e, const DenseState& psi);

struct PathCountReport {
    struct GateEntry {
        GateSpec gate;
        int hbar_order;
        std::uint64_t terms;  // d^{2k} for hbar_order 1, else 1
    };
    std::vector<GateEntry> gates;
    std::uint64_t total_terms = 1;  // product over hbar_order-1 gates; 1 iff all-Clifford
};

// Per-gate hbar classification and the naive path count of the circuit.
PathCountReport hbar_report(const std::vector<GateSpec>& circuit, const Dim& dim);

}  // namespace qws
