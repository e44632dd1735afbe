#pragma once

// Discrete translation and reflection operators, chord/center transforms, and
// Wigner functions of pure states.
//
// Phase-space points are vectors x = (x_p, x_q) in (Z_d)^{2n}, stored in the
// coordinate order (p_0..p_{n-1}, q_0..q_{n-1}). Tables over phase space are
// flat arrays in mixed-radix order with the FIRST coordinate varying slowest
// (so x_p varies slowest, matching the CLI's CSV row order).
//
// Conventions, fixed project-wide:
//   T(xi) = w^{-inv(2) xi_p.xi_q} Z^{xi_p} X^{xi_q}      (exact d-th roots)
//   R(x)  = d^{-n} sum_xi w^{xi^T J x} T(xi)
//         which closes to R(x)|q> = w^{2 x_p.(x_q - q)} |2 x_q - q>.
//   A_x   = d^{-n} Tr(R(x)^dag A),  A = sum_x A_x R(x)
//   A_xi  = d^{-n} Tr(T(xi)^dag A), A = sum_xi A_xi T(xi)
// The reconstruction sums carry no d^{-n} prefactor; with the trace
// normalization above that is what makes reconstruct(repr(A)) = A exactly.
// Unitary gates consequently have center tables of constant modulus d^{-n}.

#include <complex>
#include <vector>

#include "qws/dense.hpp"
#include "qws/dim.hpp"
#include "qws/zmod.hpp"

namespace qws {

i64 phase_point_to_flat(const ZdVector& x);
ZdVector flat_to_phase_point(i64 flat, const Dim& dim);

namespace detail {
template <class T, class Tag>
struct PhaseTable {
    Dim dim;
    std::vector<T> v;  // d^{2n} entries, first coordinate slowest

    PhaseTable() = default;
    explicit PhaseTable(const Dim& dm) : dim(dm), v(dm.phase_points(), T{}) {}

    T at(const ZdVector& x) const { return v[phase_point_to_flat(x)]; }
    void set(const ZdVector& x, T value) { v[phase_point_to_flat(x)] = value; }
    i64 size() const { return static_cast<i64>(v.size()); }
};
}  // namespace detail

using ChordTable = detail::PhaseTable<cx, struct ChordTag>;
using CenterTable = detail::PhaseTable<cx, struct CenterTag>;

struct WignerTable : detail::PhaseTable<double, struct WignerTag> {
    using PhaseTable::PhaseTable;
    double max_imag = 0.0;  // largest |Im| discarded when the table was formed

    double sum() const;
    double min() const;
};

// The translation (Weyl) operator T(xi). xi has length 2n.
DenseOperator translation_op(const ZdVector& xi, const Dim& dim);

// The reflection operator R(x); Hermitian, unitary, an involution up to phase.
DenseOperator reflection_op(const ZdVector& x, const Dim& dim);

// Chord representation A_xi = d^{-n} Tr(T(xi)^dag A).
ChordTable chord_repr(const DenseOperator& a);

// Center representation A_x = d^{-n} Tr(R(x)^dag A).
CenterTable center_repr(const DenseOperator& a);

// Exact inverses of the representations (see normalization note above).
DenseOperator reconstruct_from_center(const CenterTable& tbl);
DenseOperator reconstruct_from_chord(const ChordTable& tbl);

// Center table from a chord table: rho_x = d^{-n} sum_xi w^{x^T J xi} rho_xi.
// Equals center_repr of the same operator. The transform is an involution
// (the antisymmetry of J absorbs the sign flip of the inverse kernel), so the
// chord-direction inverse below applies the same kernel.
CenterTable symplectic_fourier(const ChordTable& tbl);
ChordTable symplectic_fourier_inverse(const CenterTable& tbl);

// Wigner function of a pure state:
//   W(x) = d^{-n} sum_{xi_q} w^{-xi_q.x_p}
//          Psi(x_q + (d+1)/2 xi_q) Psi*(x_q - (d+1)/2 xi_q)
// Real; sums to 1 for a normalized state; equals center_repr(|psi><psi|).
WignerTable wigner_pure(const DenseState& psi);

}  // namespace qws
