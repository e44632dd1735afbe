#include "qws/stabilizer.hpp"

#include <cmath>

namespace qws {

StabilizerState zero_state(const Dim& dim) {
    ZdMatrix phi(dim.phase_dim(), dim.phase_dim(), dim.d);
    for (int i = 0; i < dim.n; ++i) phi.set(dim.n + i, dim.n + i, 1);
    return {dim, phi, ZdVector(dim.phase_dim(), dim.d)};
}

StabilizerState apply_clifford(const StabilizerState& s, const AffineSymplecticMap& map) {
    if (map.M.rows() != s.dim.phase_dim() || map.modulus() != s.dim.d) {
        throw ShapeMismatch("apply_clifford: map does not match state dimensions");
    }
    const ZdMatrix minv = mat_inv(map.M);
    const ZdMatrix phi = s.phi.mul(minv);
    return {s.dim, phi, s.r.add(phi.mul(map.b))};
}

StabilizerState apply_clifford(const StabilizerState& s, const GateCatalogEntry& entry) {
    if (entry.hbar_order != 0) {
        throw NotClifford("the " + gate_kind_name(entry.gate.kind) +
                          " gate needs the order-hbar^1 reflection-sum backend");
    }
    return apply_clifford(s, entry.map);
}

WignerTable wigner_table(const StabilizerState& s, i64 cap) {
    const std::vector<ZdVector> points = solve_affine(s.phi, s.r, cap);
    const i64 expected = s.dim.hilbert_dim();
    if (static_cast<i64>(points.size()) != expected) {
        throw InvariantViolated("stabilizer delta set has " + std::to_string(points.size()) +
                                " points, expected d^n = " + std::to_string(expected));
    }
    WignerTable tbl(s.dim);
    const double weight = 1.0 / static_cast<double>(expected);
    for (const ZdVector& x : points) tbl.set(x, weight);
    return tbl;
}

DenseState gaussian_state(const GaussianForm& g, const Dim& dim) {
    if (static_cast<int>(g.basis.size()) != dim.n || g.theta.rows() != dim.n || g.eta.size() != dim.n ||
        g.theta.modulus() != dim.d) {
        throw ShapeMismatch("gaussian_state: form does not match dim");
    }
    const Omega w(dim.d);
    DenseState psi(dim);
    const double scale = 1.0 / std::sqrt(static_cast<double>(dim.hilbert_dim()));
    std::vector<i64> x;
    for (i64 idx = 0; idx < dim.hilbert_dim(); ++idx) {
        index_to_digits(idx, dim, x);
        i64 exponent = 0;
        for (int i = 0; i < dim.n; ++i) {
            exponent += g.eta[i] * x[i];
            for (int j = 0; j < dim.n; ++j) exponent += x[i] * g.theta.at(i, j) * x[j];
        }
        psi.amp[idx] = w.pow(exponent) * scale;
    }
    // Momentum-basis digits are amplitudes over |p = m> = F^dag |m>.
    for (int i = 0; i < dim.n; ++i) {
        if (g.basis[i] == QuditBasis::Momentum) {
            psi = apply(build_gate(GateSpec::single(GateKind::F, i), dim).dagger(), psi);
        }
    }
    return psi;
}

namespace {

std::vector<double> qudit_marginal(const DenseState& psi, int qudit) {
    std::vector<double> m(psi.dim.d, 0.0);
    std::vector<i64> digits;
    for (i64 idx = 0; idx < psi.dim.hilbert_dim(); ++idx) {
        index_to_digits(idx, psi.dim, digits);
        m[digits[qudit]] += std::norm(psi.amp[idx]);
    }
    return m;
}

constexpr double kSupportEps = 1e-12;

}  // namespace

const char* support_class_name(SupportClass::Kind k) {
    switch (k) {
        case SupportClass::Kind::QOnly: return "q-only";
        case SupportClass::Kind::POnly: return "p-only";
        case SupportClass::Kind::Both: return "both";
        case SupportClass::Kind::Neither: return "neither";
    }
    return "?";
}

SupportClass support_classification(const DenseState& psi) {
    SupportClass out;
    out.qudits.resize(psi.dim.n);
    bool all_q = true, all_p = true;
    for (int i = 0; i < psi.dim.n; ++i) {
        const std::vector<double> mq = qudit_marginal(psi, i);
        const DenseState rotated = apply(build_gate(GateSpec::single(GateKind::F, i), psi.dim), psi);
        const std::vector<double> mp = qudit_marginal(rotated, i);
        auto& per = out.qudits[i];
        for (double v : mq) per.q_support += (v > kSupportEps) ? 1 : 0;
        for (double v : mp) per.p_support += (v > kSupportEps) ? 1 : 0;
        per.q_maximal = per.q_support == psi.dim.d;
        per.p_maximal = per.p_support == psi.dim.d;
        all_q = all_q && per.q_maximal;
        all_p = all_p && per.p_maximal;
    }
    out.overall = all_q ? (all_p ? SupportClass::Kind::Both : SupportClass::Kind::QOnly)
                        : (all_p ? SupportClass::Kind::POnly : SupportClass::Kind::Neither);
    return out;
}

GaussianForm mixed_representation_search(const DenseState& psi) {
    const Dim dim = psi.dim;
    const i64 d = dim.d;
    const int n = dim.n;
    const i64 i2 = mod_half(d);
    const Omega w(d);
    const double target_mod = 1.0 / std::sqrt(static_cast<double>(dim.hilbert_dim()));
    const double two_pi = 2.0 * std::acos(-1.0);

    std::vector<DenseOperator> fourier(n);
    for (int i = 0; i < n; ++i) fourier[i] = build_gate(GateSpec::single(GateKind::F, i), dim);

    std::vector<i64> digits(n, 0);
    auto index_of = [&](const std::vector<i64>& dg) { return digits_to_index(dg, dim); };

    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        // Mixed-basis amplitudes: rotate momentum-chosen qudits with F.
        DenseState v = psi;
        GaussianForm form;
        form.basis.assign(n, QuditBasis::Position);
        for (int i = 0; i < n; ++i) {
            if (mask >> i & 1) {
                form.basis[i] = QuditBasis::Momentum;
                v = apply(fourier[i], v);
            }
        }
        bool uniform = true;
        for (const cx& c : v.amp) {
            if (std::abs(std::abs(c) - target_mod) > 1e-8) {
                uniform = false;
                break;
            }
        }
        if (!uniform) continue;

        // Phase exponent of v(x)/v(0) as an exact element of Z_d.
        const cx anchor = v.amp[0];
        bool phases_ok = true;
        auto phase_exponent = [&](const std::vector<i64>& dg) {
            const cx ratio = v.amp[index_of(dg)] / anchor;
            i64 k = mod_reduce(std::llround(std::arg(ratio) * static_cast<double>(d) / two_pi), d);
            if (std::abs(ratio - w.pow(k)) > 1e-6) phases_ok = false;
            return k;
        };

        form.theta = ZdMatrix(n, n, d);
        form.eta = ZdVector(n, d);
        std::vector<i64> k1(n), k2(n);
        for (int i = 0; i < n && phases_ok; ++i) {
            std::fill(digits.begin(), digits.end(), 0);
            digits[i] = 1;
            k1[i] = phase_exponent(digits);
            digits[i] = 2;
            k2[i] = phase_exponent(digits);
            // k(q e_i) = theta_ii q^2 + eta_i q
            form.theta.set(i, i, i2 * (k2[i] - 2 * k1[i]));
            form.eta.set(i, k1[i] - form.theta.at(i, i));
        }
        for (int i = 0; i < n && phases_ok; ++i) {
            for (int j = i + 1; j < n && phases_ok; ++j) {
                std::fill(digits.begin(), digits.end(), 0);
                digits[i] = 1;
                digits[j] = 1;
                const i64 kij = phase_exponent(digits);
                const i64 cross = i2 * (kij - k1[i] - k1[j]);
                form.theta.set(i, j, cross);
                form.theta.set(j, i, cross);
            }
        }
        if (!phases_ok) continue;

        if (equal_up_to_global_phase(gaussian_state(form, dim), psi, 1e-9)) return form;
    }
    throw NoGaussianForm("no mixed position/momentum Gaussian form reproduces this state");
}

bool is_stabilizer(const DenseState& psi) { return wigner_pure(psi).min() >= -1e-10; }

}  // namespace qws
