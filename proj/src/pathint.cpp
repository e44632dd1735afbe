#include "qws/pathint.hpp"

#include <limits>

#include "qws/harmonic.hpp"

namespace qws {

ReflectionExpansion reflection_expansion(const GateSpec& g, const Dim& dim) {
    g.validate(dim);
    ReflectionExpansion e;
    e.dim = dim;
    e.support = g.targets;

    GateSpec local = g;
    local.targets.clear();
    for (int i = 0; i < g.arity(); ++i) local.targets.push_back(i);
    const Dim ldim = e.local_dim();
    e.weights = center_repr(build_gate(local, ldim)).v;
    return e;
}

ReflectionApplyResult apply_reflection_sum(const ReflectionExpansion& e, const DenseState& psi) {
    if (e.dim != psi.dim) throw ShapeMismatch("apply_reflection_sum: dimension mismatch");
    const i64 d = e.dim.d;
    const int k = static_cast<int>(e.support.size());
    const i64 hdim = e.dim.hilbert_dim();
    const Omega w(d);

    ReflectionApplyResult out;
    out.state = DenseState(psi.dim);

    std::vector<i64> x(2 * k), digits;
    std::vector<std::vector<i64>> digit_cache(hdim);
    for (i64 idx = 0; idx < hdim; ++idx) index_to_digits(idx, psi.dim, digit_cache[idx]);

    for (std::uint64_t flat = 0; flat < e.term_count(); ++flat) {
        ++out.term_visits;
        const cx weight = e.weights[flat];
        i64 t = static_cast<i64>(flat);
        for (int i = 2 * k - 1; i >= 0; --i) {
            x[i] = t % d;
            t /= d;
        }
        // R(x_p, x_q)|q> = w^{2 x_p.(x_q - q)} |2 x_q - q> on the support qudits
        for (i64 col = 0; col < hdim; ++col) {
            digits = digit_cache[col];
            i64 exponent = 0;
            for (int i = 0; i < k; ++i) {
                const i64 q = digits[e.support[i]];
                exponent += 2 * x[i] * (x[k + i] - q);
                digits[e.support[i]] = mod_reduce(2 * x[k + i] - q, d);
            }
            out.state.amp[digits_to_index(digits, psi.dim)] += weight * w.pow(exponent) * psi.amp[col];
        }
    }
    return out;
}

PathCountReport hbar_report(const std::vector<GateSpec>& circuit, const Dim& dim) {
    PathCountReport report;
    for (const GateSpec& g : circuit) {
        const GateCatalogEntry entry = catalog(g, dim);
        std::uint64_t terms = 1;
        if (entry.hbar_order == 1) {
            terms = 1;
            for (int i = 0; i < 2 * g.arity(); ++i) terms *= static_cast<std::uint64_t>(dim.d);
            if (report.total_terms > std::numeric_limits<std::uint64_t>::max() / terms) {
                report.total_terms = std::numeric_limits<std::uint64_t>::max();  // saturate
            } else {
                report.total_terms *= terms;
            }
        }
        report.gates.push_back({g, entry.hbar_order, terms});
    }
    return report;
}

}  // namespace qws
