#include "qws/harmonic.hpp"

#include <cmath>

#include "qws/parallel.hpp"

namespace qws {

AffineSymplecticMap AffineSymplecticMap::identity(const Dim& dim) {
    return {ZdMatrix::identity(dim.phase_dim(), dim.d), ZdVector(dim.phase_dim(), dim.d)};
}

ZdVector AffineSymplecticMap::alpha() const {
    const ZdMatrix m_plus_i = M.add(ZdMatrix::identity(M.rows(), M.modulus()));
    try {
        return mat_inv(m_plus_i).mul(b).scale(2);
    } catch (const NotInvertible&) {
        throw CayleySingular("(M + I) is not invertible mod d; alpha is undefined");
    }
}

AffineSymplecticMap AffineSymplecticMap::inverse() const {
    ZdMatrix minv = mat_inv(M);
    return {minv, minv.mul(b).neg()};
}

AffineSymplecticMap compose_maps(const AffineSymplecticMap& f, const AffineSymplecticMap& g) {
    return {f.M.mul(g.M), f.M.mul(g.b).add(f.b)};
}

i64 action_eval(const QuadraticAction& a, const ZdVector& x) {
    const int two_n = a.B.rows();
    if (x.size() != two_n || a.alpha.size() != two_n) throw ShapeMismatch("action_eval: shape mismatch");
    const ZdMatrix j = symplectic_form(two_n / 2, a.B.modulus());
    i64 s = x.dot(j.mul(a.alpha)) + x.dot(a.B.mul(x));
    return mod_reduce(s, a.B.modulus());
}

ZdMatrix cayley_B_from_M(const ZdMatrix& m) {
    if (m.rows() != m.cols() || m.rows() % 2 != 0) throw ShapeMismatch("cayley_B_from_M: M must be 2n x 2n");
    const i64 d = m.modulus();
    const ZdMatrix eye = ZdMatrix::identity(m.rows(), d);
    ZdMatrix ip_inv;
    try {
        ip_inv = mat_inv(eye.add(m));
    } catch (const NotInvertible&) {
        throw CayleySingular("(I + M) is not invertible mod d");
    }
    const ZdMatrix jb = ip_inv.mul(eye.sub(m));
    const ZdMatrix b = symplectic_form(m.rows() / 2, d).neg().mul(jb);
    if (!b.is_symmetric()) {
        throw Error("Cayley image is not symmetric; M is not symplectic");
    }
    return b;
}

GateCatalogEntry catalog(const GateSpec& g, const Dim& dim) {
    g.validate(dim);
    const i64 d = dim.d;
    const int n = dim.n;
    const i64 i2 = mod_half(d);

    ZdMatrix m = ZdMatrix::identity(2 * n, d);
    ZdVector b(2 * n, d);
    int hbar_order = 0;

    // Coordinates: p_t at index t, q_t at index n + t.
    switch (g.kind) {
        case GateKind::F: {
            const int t = g.targets[0];
            m.set(t, t, 0);
            m.set(t, n + t, 1);
            m.set(n + t, t, -1);
            m.set(n + t, n + t, 0);
            break;
        }
        case GateKind::P: {
            const int t = g.targets[0];
            m.set(t, n + t, 1);      // p' = p + q
            b.set(t, -i2);           // alpha = (-1/2, 0)
            break;
        }
        case GateKind::T: {
            const int t = g.targets[0];
            const i64 i4 = mod_inv(4, d);
            m.set(t, n + t, i2);     // p' = p + q/2
            b.set(t, -i4);           // alpha = (-1/4, 0)
            hbar_order = 1;          // the Z-lifted map leaves the Weyl grid
            break;
        }
        case GateKind::C: {
            const int c = g.targets[0], t = g.targets[1];
            m.set(c, t, -1);         // p_c' = p_c - p_t
            m.set(n + t, n + c, 1);  // q_t' = q_t + q_c
            break;
        }
        case GateKind::Zpow: {
            b.set(g.targets[0], g.power);  // boost: chord (a, 0)
            break;
        }
        case GateKind::Xpow: {
            b.set(n + g.targets[0], g.power);  // shift: chord (0, a)
            break;
        }
    }

    AffineSymplecticMap map{m, b};
    QuadraticAction action{cayley_B_from_M(m), map.alpha()};
    return {g, map, action, hbar_order};
}

CenterTable center_function_from_action(const QuadraticAction& a, const Dim& dim) {
    const Omega w(dim.d);
    CenterTable tbl(dim);
    parallel_for(static_cast<std::size_t>(tbl.size()), [&](std::size_t begin, std::size_t end) {
        for (std::size_t flat = begin; flat < end; ++flat) {
            tbl.v[flat] = w.pow(action_eval(a, flat_to_phase_point(static_cast<i64>(flat), dim)));
        }
    });
    return tbl;
}

AffineSymplecticMap discrete_eom(const QuadraticHamiltonian& h, const Dim& dim) {
    const i64 d = dim.d;
    const int two_n = dim.phase_dim();
    if (h.h2.rows() != two_n || h.h1.size() != two_n) throw ShapeMismatch("discrete_eom: Hamiltonian shape mismatch");
    if (!h.h2.is_symmetric()) throw ShapeMismatch("discrete_eom: H2 must be symmetric");
    const ZdMatrix j = symplectic_form(dim.n, d);
    // z' = z + J grad H = (I + 2 J H2) z + J h1
    const ZdMatrix m = ZdMatrix::identity(two_n, d).add(j.mul(h.h2).scale(2));
    if (!is_symplectic(m, j)) {
        throw NonSymplecticResult("the unit Euler step of this Hamiltonian is not symplectic mod d");
    }
    return {m, j.mul(h.h1)};
}

namespace {

// Determinant over Z (entries stay far below overflow at desk scale).
i64 int_det(const std::vector<i64>& a, int k) {
    std::vector<i64> f(size_t(1) << k, 0);
    f[0] = 1;
    for (size_t s = 1; s < f.size(); ++s) {
        int row = __builtin_popcountll(s) - 1;
        i64 acc = 0;
        int idx = 0;  // expansion along the last row: cofactor sign (-1)^{row + idx}
        for (int c = 0; c < k; ++c) {
            if (!(s >> c & 1)) continue;
            i64 term = a[row * k + c] * f[s ^ (size_t(1) << c)];
            acc += ((row + idx) % 2 == 0) ? term : -term;
            ++idx;
        }
        f[s] = acc;
    }
    return f[f.size() - 1];
}

}  // namespace

double propagator_prefactor(const ZdMatrix& m, const Dim& dim) {
    if (m.rows() != m.cols()) throw ShapeMismatch("propagator_prefactor: M must be square");
    const i64 d = dim.d;
    const ZdMatrix eye = ZdMatrix::identity(m.rows(), d);
    try {
        (void)mat_inv(eye.add(m));
    } catch (const NotInvertible&) {
        throw CayleySingular("(I + M) is not invertible mod d");
    }
    const int k = m.rows();
    std::vector<i64> lifted(k * k);
    for (int i = 0; i < k; ++i) {
        for (int j = 0; j < k; ++j) {
            i64 e = m.at(i, j);
            if (e > d / 2) e -= d;  // symmetric representative in (-d/2, d/2]
            lifted[i * k + j] = e + (i == j ? 1 : 0);
        }
    }
    const double det = static_cast<double>(int_det(lifted, k));
    return std::sqrt(std::abs(std::ldexp(det, static_cast<int>(d))));  // |2^d det|^{1/2}
}

namespace {

// Quadratic form over v accumulated from terms with affine arguments.
struct FormBuilder {
    ZdMatrix quad;
    ZdVector linear;
    i64 constant = 0;
    i64 d;

    explicit FormBuilder(int vars, i64 d_) : quad(vars, vars, d_), linear(vars, d_), d(d_) {}

    // += (Xa v + xc)^T A (Ya v + yc)
    void add_bilinear(const ZdMatrix& xa, const ZdVector& xc, const ZdMatrix& a, const ZdMatrix& ya,
                      const ZdVector& yc) {
        quad = quad.add(xa.transpose().mul(a).mul(ya));
        linear = linear.add(xa.transpose().mul(a.mul(yc))).add(ya.transpose().mul(a.transpose().mul(xc)));
        constant = mod_reduce(constant + xc.dot(a.mul(yc)), d);
    }

    // += c . (Xa v + xc)
    void add_linear(const ZdVector& c, const ZdMatrix& xa, const ZdVector& xc) {
        linear = linear.add(xa.transpose().mul(c));
        constant = mod_reduce(constant + c.dot(xc), d);
    }

    void symmetrize() { quad = quad.add(quad.transpose()).scale(mod_half(d)); }
};

}  // namespace

i64 PositionAction::eval(const ZdVector& qprime, const ZdVector& q) const {
    const i64 d = quad.modulus();
    const int n = qprime.size();
    ZdVector v(2 * n, d);
    for (int i = 0; i < n; ++i) {
        v.set(i, qprime[i]);
        v.set(n + i, q[i]);
    }
    return mod_reduce(v.dot(quad.mul(v)) + v.dot(linear) + constant, d);
}

ZdVector PositionAction::supported_qprime(const ZdVector& q) const {
    if (!constrained) throw Error("supported_qprime: form is unconstrained");
    return support_map.mul(q).add(support_offset);
}

PositionAction position_action(const QuadraticAction& a, const Dim& dim) {
    const i64 d = dim.d;
    const int n = dim.n;
    const i64 i2 = mod_half(d);
    if (a.B.rows() != 2 * n || a.alpha.size() != 2 * n) throw ShapeMismatch("position_action: shape mismatch");

    // Blocks of S(x) = L . x + x^T B x with L = J alpha.
    const ZdVector ell = symplectic_form(n, d).mul(a.alpha);
    ZdMatrix b_pp(n, n, d), b_pq(n, n, d), b_qq(n, n, d);
    ZdVector ell_p(n, d), ell_q(n, d);
    for (int i = 0; i < n; ++i) {
        ell_p.set(i, ell[i]);
        ell_q.set(i, ell[n + i]);
        for (int j = 0; j < n; ++j) {
            b_pp.set(i, j, a.B.at(i, j));
            b_pq.set(i, j, a.B.at(i, n + j));
            b_qq.set(i, j, a.B.at(n + i, n + j));
        }
    }

    // Variables v = (q', q). x_q = inv2 (q' + q) = XQ v; q' - q = DV v.
    ZdMatrix xq_map(n, 2 * n, d), dv(n, 2 * n, d);
    for (int i = 0; i < n; ++i) {
        xq_map.set(i, i, i2);
        xq_map.set(i, n + i, i2);
        dv.set(i, i, 1);
        dv.set(i, n + i, -1);
    }
    const ZdVector zero_n(n, d);

    // Coefficient of p in F(p, v): W v + ell_p, with W = 2 B_pq XQ + DV.
    const ZdMatrix w_map = b_pq.mul(xq_map).scale(2).add(dv);

    PositionAction out;
    FormBuilder form(2 * n, d);
    // q-only part: x_q^T B_qq x_q + ell_q . x_q
    form.add_bilinear(xq_map, zero_n, b_qq, xq_map, zero_n);
    form.add_linear(ell_q, xq_map, zero_n);

    if (b_pp.is_zero()) {
        // Stationarity is a support constraint: (I + B_pq) q' = (I - B_pq) q - ell_p.
        const ZdMatrix eye = ZdMatrix::identity(n, d);
        ZdMatrix ip_inv;
        try {
            ip_inv = mat_inv(eye.add(b_pq));
        } catch (const NotInvertible&) {
            throw LegendreSingular("stationary condition has no unique solution");
        }
        out.constrained = true;
        out.support_map = ip_inv.mul(eye.sub(b_pq));
        out.support_offset = ip_inv.mul(ell_p).neg();
    } else {
        ZdMatrix b_pp_inv;
        try {
            b_pp_inv = mat_inv(b_pp);
        } catch (const NotInvertible&) {
            throw LegendreSingular("stationary condition has no unique solution");
        }
        // p* = -inv2 B_pp^{-1} (W v + ell_p); F at p* adds -p*^T B_pp p*.
        const ZdMatrix p_map = b_pp_inv.mul(w_map).scale(-i2);
        const ZdVector p_const = b_pp_inv.mul(ell_p).scale(-i2);
        form.add_bilinear(p_map, p_const, b_pp.neg(), p_map, p_const);
    }

    form.symmetrize();
    out.quad = form.quad;
    out.linear = form.linear;
    out.constant = form.constant;
    return out;
}

}  // namespace qws
