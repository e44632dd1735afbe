#include "qws/dense.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>

namespace qws {

Omega::Omega(i64 d) : d_(d), table_(d) {
    for (i64 k = 0; k < d; ++k) {
        table_[k] = std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(d));
    }
}

DenseState DenseState::basis(const Dim& dm, const std::vector<i64>& digits) {
    if (static_cast<int>(digits.size()) != dm.n) throw ShapeMismatch("basis: digit count != n");
    DenseState s(dm);
    std::vector<i64> reduced(digits);
    for (auto& q : reduced) q = mod_reduce(q, dm.d);
    s.amp[digits_to_index(reduced, dm)] = 1.0;
    return s;
}

double DenseState::norm() const {
    double acc = 0.0;
    for (const cx& c : amp) acc += std::norm(c);
    return std::sqrt(acc);
}

void DenseState::normalize() {
    double nrm = norm();
    if (nrm == 0.0) throw ShapeMismatch("cannot normalize the zero vector");
    for (cx& c : amp) c /= nrm;
}

DenseOperator DenseOperator::identity(const Dim& dm) {
    DenseOperator u(dm);
    for (i64 i = 0; i < u.size(); ++i) u.at(i, i) = 1.0;
    return u;
}

DenseOperator DenseOperator::dagger() const {
    DenseOperator r(dim);
    const i64 m = size();
    for (i64 i = 0; i < m; ++i)
        for (i64 j = 0; j < m; ++j) r.at(j, i) = std::conj(at(i, j));
    return r;
}

DenseOperator DenseOperator::mul(const DenseOperator& o) const {
    if (dim != o.dim) throw ShapeMismatch("operator product: dimension mismatch");
    const i64 m = size();
    DenseOperator r(dim);
    for (i64 i = 0; i < m; ++i) {
        for (i64 k = 0; k < m; ++k) {
            const cx aik = at(i, k);
            if (aik == cx{0.0, 0.0}) continue;
            const cx* orow = &o.a[k * m];
            cx* rrow = &r.a[i * m];
            for (i64 j = 0; j < m; ++j) rrow[j] += aik * orow[j];
        }
    }
    return r;
}

cx DenseOperator::trace() const {
    cx acc{0.0, 0.0};
    for (i64 i = 0; i < size(); ++i) acc += at(i, i);
    return acc;
}

double DenseOperator::unitarity_defect() const {
    DenseOperator udu = dagger().mul(*this);
    double worst = 0.0;
    for (i64 i = 0; i < size(); ++i) {
        for (i64 j = 0; j < size(); ++j) {
            cx expect = (i == j) ? cx{1.0, 0.0} : cx{0.0, 0.0};
            worst = std::max(worst, std::abs(udu.at(i, j) - expect));
        }
    }
    return worst;
}

void index_to_digits(i64 index, const Dim& dim, std::vector<i64>& digits) {
    digits.resize(dim.n);
    for (int i = dim.n - 1; i >= 0; --i) {
        digits[i] = index % dim.d;
        index /= dim.d;
    }
}

i64 digits_to_index(const std::vector<i64>& digits, const Dim& dim) {
    i64 idx = 0;
    for (int i = 0; i < dim.n; ++i) idx = idx * dim.d + digits[i];
    return idx;
}

namespace {

// Local matrix of a gate on its own qudits (dimension d^arity).
std::vector<cx> local_gate_matrix(const GateSpec& g, const Dim& dim) {
    const i64 d = dim.d;
    const Omega w(d);
    const i64 i2 = mod_half(d);
    switch (g.kind) {
        case GateKind::F: {
            std::vector<cx> m(d * d);
            const double scale = 1.0 / std::sqrt(static_cast<double>(d));
            for (i64 r = 0; r < d; ++r)
                for (i64 c = 0; c < d; ++c) m[r * d + c] = w.pow(r * c) * scale;
            return m;
        }
        case GateKind::P: {
            std::vector<cx> m(d * d, cx{0.0, 0.0});
            for (i64 j = 0; j < d; ++j) m[j * d + j] = w.pow((j - 1) * j * i2);
            return m;
        }
        case GateKind::T: {
            const i64 i4 = mod_inv(4, d);
            std::vector<cx> m(d * d, cx{0.0, 0.0});
            for (i64 j = 0; j < d; ++j) m[j * d + j] = w.pow((j - 1) * j * i4);
            return m;
        }
        case GateKind::Zpow: {
            std::vector<cx> m(d * d, cx{0.0, 0.0});
            for (i64 j = 0; j < d; ++j) m[j * d + j] = w.pow(j * g.power);
            return m;
        }
        case GateKind::Xpow: {
            std::vector<cx> m(d * d, cx{0.0, 0.0});
            for (i64 j = 0; j < d; ++j) m[mod_reduce(j + g.power, d) * d + j] = 1.0;
            return m;
        }
        case GateKind::C: {
            // control is digit 0 of the local index, target digit 1
            std::vector<cx> m(d * d * d * d, cx{0.0, 0.0});
            for (i64 j = 0; j < d; ++j)
                for (i64 k = 0; k < d; ++k)
                    m[(j * d + mod_reduce(k + j, d)) * d * d + (j * d + k)] = 1.0;
            return m;
        }
    }
    throw BadTargets("unknown gate kind");
}

}  // namespace

void GateSpec::validate(const Dim& dim) const {
    if (static_cast<int>(targets.size()) != arity()) {
        throw BadTargets(gate_kind_name(kind) + " expects " + std::to_string(arity()) +
                         " target(s), got " + std::to_string(targets.size()));
    }
    std::set<int> distinct(targets.begin(), targets.end());
    if (static_cast<int>(distinct.size()) != arity()) throw BadTargets("gate targets must be distinct");
    for (int t : targets) {
        if (t < 0 || t >= dim.n) {
            throw BadTargets("target " + std::to_string(t) + " out of range for n = " + std::to_string(dim.n));
        }
    }
}

std::string gate_kind_name(GateKind k) {
    switch (k) {
        case GateKind::F: return "F";
        case GateKind::P: return "P";
        case GateKind::C: return "C";
        case GateKind::T: return "T";
        case GateKind::Zpow: return "Z";
        case GateKind::Xpow: return "X";
    }
    return "?";
}

DenseOperator build_gate(const GateSpec& g, const Dim& dim) {
    g.validate(dim);
    const i64 d = dim.d;
    const std::vector<cx> local = local_gate_matrix(g, dim);
    const int k = g.arity();
    const i64 local_dim = (k == 1) ? d : d * d;

    DenseOperator u(dim);
    std::vector<i64> digits;
    for (i64 col = 0; col < u.size(); ++col) {
        index_to_digits(col, dim, digits);
        i64 local_col = 0;
        for (int t = 0; t < k; ++t) local_col = local_col * d + digits[g.targets[t]];
        std::vector<i64> row_digits = digits;
        for (i64 local_row = 0; local_row < local_dim; ++local_row) {
            const cx v = local[local_row * local_dim + local_col];
            if (v == cx{0.0, 0.0}) continue;
            i64 rem = local_row;
            for (int t = k - 1; t >= 0; --t) {
                row_digits[g.targets[t]] = rem % d;
                rem /= d;
            }
            u.at(digits_to_index(row_digits, dim), col) = v;
        }
    }
    return u;
}

DenseState apply(const DenseOperator& u, const DenseState& psi) {
    if (u.dim != psi.dim) throw ShapeMismatch("apply: dimension mismatch");
    const i64 m = u.size();
    DenseState out(psi.dim);
    for (i64 i = 0; i < m; ++i) {
        cx acc{0.0, 0.0};
        const cx* row = &u.a[i * m];
        for (i64 j = 0; j < m; ++j) acc += row[j] * psi.amp[j];
        out.amp[i] = acc;
    }
    return out;
}

DenseOperator compose(const std::vector<GateSpec>& circuit, const Dim& dim) {
    DenseOperator u = DenseOperator::identity(dim);
    for (const GateSpec& g : circuit) u = build_gate(g, dim).mul(u);
    return u;
}

DenseState apply_circuit(const std::vector<GateSpec>& circuit, const DenseState& psi) {
    DenseState s = psi;
    for (const GateSpec& g : circuit) s = apply(build_gate(g, psi.dim), s);
    return s;
}

namespace {

bool equal_up_to_phase_impl(const cx* a, const cx* b, i64 count, double tol) {
    i64 anchor = -1;
    double best = 0.0;
    for (i64 i = 0; i < count; ++i) {
        double m = std::abs(b[i]);
        if (m > best) {
            best = m;
            anchor = i;
        }
    }
    if (anchor < 0 || best == 0.0) throw DegenerateB("comparison anchor is the zero operator");
    cx phi = a[anchor] / b[anchor];
    const double mag = std::abs(phi);
    phi = (mag == 0.0) ? cx{1.0, 0.0} : phi / mag;
    for (i64 i = 0; i < count; ++i) {
        if (std::abs(a[i] - phi * b[i]) > tol) return false;
    }
    return true;
}

}  // namespace

bool equal_up_to_global_phase(const DenseOperator& a, const DenseOperator& b, double tol) {
    if (a.dim != b.dim) throw ShapeMismatch("equal_up_to_global_phase: dimension mismatch");
    return equal_up_to_phase_impl(a.a.data(), b.a.data(), static_cast<i64>(a.a.size()), tol);
}

bool equal_up_to_global_phase(const DenseState& a, const DenseState& b, double tol) {
    if (a.dim != b.dim) throw ShapeMismatch("equal_up_to_global_phase: dimension mismatch");
    return equal_up_to_phase_impl(a.amp.data(), b.amp.data(), static_cast<i64>(a.amp.size()), tol);
}

double max_abs_diff(const DenseOperator& a, const DenseOperator& b) {
    if (a.dim != b.dim) throw ShapeMismatch("max_abs_diff: dimension mismatch");
    double worst = 0.0;
    for (size_t i = 0; i < a.a.size(); ++i) worst = std::max(worst, std::abs(a.a[i] - b.a[i]));
    return worst;
}

double max_abs_diff(const DenseState& a, const DenseState& b) {
    if (a.dim != b.dim) throw ShapeMismatch("max_abs_diff: dimension mismatch");
    double worst = 0.0;
    for (size_t i = 0; i < a.amp.size(); ++i) worst = std::max(worst, std::abs(a.amp[i] - b.amp[i]));
    return worst;
}

}  // namespace qws
