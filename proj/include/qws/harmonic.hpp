#pragma once

// Phase-space description of gates: affine symplectic maps x' = Mx + b over
// (Z_d)^{2n}, quadratic center generating functions, the M/alpha/B catalog
// for F, P, C, T and the Z/X translations, discrete equations of motion, and
// the symmetrized Legendre transform to position-representation actions.
//
// The center generating function of a map with translation alpha and Cayley
// matrix B is
//     S(x) = x^T J alpha + x^T B x   (mod d),
// with J B = (1 + M)^{-1} (1 - M). This sign reading of the alpha term is the
// one that reproduces the center functions of the dense gates; see the tests.

#include <vector>

#include "qws/dim.hpp"
#include "qws/errors.hpp"
#include "qws/gate_spec.hpp"
#include "qws/weyl.hpp"
#include "qws/zmod.hpp"

namespace qws {

struct AffineSymplecticMap {
    ZdMatrix M;  // 2n x 2n, symplectic
    ZdVector b;  // length 2n; b = (M + I) alpha / 2

    static AffineSymplecticMap identity(const Dim& dim);

    int n() const { return M.rows() / 2; }
    i64 modulus() const { return M.modulus(); }

    ZdVector apply(const ZdVector& x) const { return M.mul(x).add(b); }

    // alpha = 2 (M + I)^{-1} b. Throws CayleySingular when (M + I) is not
    // invertible mod d (never the case for catalog gates).
    ZdVector alpha() const;

    AffineSymplecticMap inverse() const;
};

// (f o g)(x) = f(g(x)): M = M_f M_g, b = M_f b_g + b_f.
AffineSymplecticMap compose_maps(const AffineSymplecticMap& f, const AffineSymplecticMap& g);

struct QuadraticAction {
    ZdMatrix B;      // symmetric 2n x 2n
    ZdVector alpha;  // length 2n
};

// S(x) = x^T J alpha + x^T B x mod d.
i64 action_eval(const QuadraticAction& a, const ZdVector& x);

// H(z) = z^T H2 z + h1 . z over z = (p, q).
struct QuadraticHamiltonian {
    ZdMatrix h2;  // symmetric 2n x 2n
    ZdVector h1;  // length 2n
};

struct GateCatalogEntry {
    GateSpec gate;
    AffineSymplecticMap map;
    QuadraticAction action;
    int hbar_order;  // 0: single classical branch; 1: needs the reflection sum
};

// The M/alpha/B catalog entry for a gate, embedded at its target qudits.
// hbar_order is 1 for T (its map does not preserve the integer Weyl grid
// under Z-lifts) and 0 for all other kinds.
GateCatalogEntry catalog(const GateSpec& g, const Dim& dim);

// B = -J (I + M)^{-1} (I - M), the Cayley parameterization of M.
// Throws CayleySingular when (I + M) is not invertible.
ZdMatrix cayley_B_from_M(const ZdMatrix& m);

// The table w^{S(x)} over all phase-space points. Matches weyl::center_repr
// of the dense gate up to a global phase and the fixed d^{-n} trace scale.
CenterTable center_function_from_action(const QuadraticAction& a, const Dim& dim);

// One unit Euler step z' = z + J grad H. Throws NonSymplecticResult when the
// step map is not symplectic mod d (e.g. the harmonic-oscillator H of F).
AffineSymplecticMap discrete_eom(const QuadraticHamiltonian& h, const Dim& dim);

// |2^d det(1 + M)|^{1/2} with the determinant taken over Z after lifting the
// entries of M to symmetric representatives in (-d/2, d/2]. Diagnostic only.
double propagator_prefactor(const ZdMatrix& m, const Dim& dim);

// G(q', q) from the symmetrized Legendre transform of S, as a quadratic form
// over the 2n variables v = (q'_0..q'_{n-1}, q_0..q_{n-1}).
//
// When the stationary-momentum system has a unique solution (B_pp invertible)
// the form is unconstrained. When S has no quadratic p-dependence at all
// (B_pp = 0: diagonal gates, C) the propagator is supported on the affine set
// q' = support_map q + support_offset and G is valid there.
struct PositionAction {
    ZdMatrix quad;    // symmetric 2n x 2n over v
    ZdVector linear;  // length 2n
    i64 constant = 0;
    bool constrained = false;
    ZdMatrix support_map;     // n x n, set when constrained
    ZdVector support_offset;  // length n, set when constrained

    i64 eval(const ZdVector& qprime, const ZdVector& q) const;
    // For constrained forms: the q' the propagator maps q to.
    ZdVector supported_qprime(const ZdVector& q) const;
};

PositionAction position_action(const QuadraticAction& a, const Dim& dim);

}  // namespace qws
