#pragma once

// hbar^0 backend: stabilizer states stored as the Wigner-delta data (Phi, r),
// so that W(x) = d^{-n} on {x : Phi x = r} and 0 elsewhere. Clifford gates
// update (Phi, r) by substituting the inverse classical map into the delta
// condition:
//     Phi' = Phi M^{-1},   r' = r + Phi M^{-1} b,
// the direction being fixed once against the dense oracle (see the
// PropagationDirectionCalibration test).

#include <vector>

#include "qws/dense.hpp"
#include "qws/dim.hpp"
#include "qws/errors.hpp"
#include "qws/harmonic.hpp"
#include "qws/weyl.hpp"
#include "qws/zmod.hpp"

namespace qws {

struct StabilizerState {
    Dim dim;
    ZdMatrix phi;  // 2n x 2n
    ZdVector r;    // length 2n
};

// |0...0>: condition x_q = 0, i.e. Phi = [[0,0],[0,I_n]], r = 0.
StabilizerState zero_state(const Dim& dim);

// Raw delta-set update under an affine symplectic map.
StabilizerState apply_clifford(const StabilizerState& s, const AffineSymplecticMap& map);

// Catalog-entry overload; throws NotClifford for hbar_order-1 entries (the
// T gate must go through the reflection-sum backend).
StabilizerState apply_clifford(const StabilizerState& s, const GateCatalogEntry& entry);

// d^{-n} on the delta set, 0 elsewhere. Throws InvariantViolated when the
// delta set does not have exactly d^n points, SizeLimitExceeded when the
// enumeration cap is hit.
WignerTable wigner_table(const StabilizerState& s, i64 cap = 10'000'000);

enum class QuditBasis { Position, Momentum };

// Gross Gaussian in a mixed per-qudit basis:
//   Psi(x) = d^{-n/2} w^{x^T theta x + eta . x},
// where x_i is a position digit when basis[i] == Position and a momentum
// digit otherwise.
struct GaussianForm {
    std::vector<QuditBasis> basis;  // length n
    ZdMatrix theta;                 // symmetric n x n
    ZdVector eta;                   // length n
};

// The dense position-basis state of a Gaussian form (momentum-basis qudits
// are rotated back with per-qudit inverse Fourier transforms).
DenseState gaussian_state(const GaussianForm& g, const Dim& dim);

struct SupportClass {
    enum class Kind { QOnly, POnly, Both, Neither };
    struct PerQudit {
        int q_support = 0;  // number of nonzero points of |Psi(q_i)|^2
        int p_support = 0;
        bool q_maximal = false;  // all d points above 1e-12
        bool p_maximal = false;
    };
    std::vector<PerQudit> qudits;
    Kind overall = Kind::Neither;
};

const char* support_class_name(SupportClass::Kind k);

// Per-qudit marginal support in the position and momentum bases.
SupportClass support_classification(const DenseState& psi);

// Finds a basis choice and (theta, eta) reproducing psi up to global phase
// (tolerance 1e-9), fitting phases exactly from amplitude ratios. Throws
// NoGaussianForm when no choice of per-qudit bases works; for odd prime d
// that never happens on stabilizer states.
GaussianForm mixed_representation_search(const DenseState& psi);

// True iff min_x W(x) >= -1e-10, which characterizes stabilizer states.
bool is_stabilizer(const DenseState& psi);

}  // namespace qws
