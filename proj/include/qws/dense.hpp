#pragma once

// Dense complex-matrix backend: exact construction of Z, X, F, P, C, T and
// arbitrary circuit unitaries over d^n-dimensional Hilbert space. This is the
// oracle every other backend is verified against.
//
// Tensor convention: qudit 0 is the most significant digit of the
// computational index, i.e. |q_0 q_1 ... q_{n-1}> has index
// sum_i q_i * d^{n-1-i}. All modules share this convention.

#include <complex>
#include <vector>

#include "qws/dim.hpp"
#include "qws/errors.hpp"
#include "qws/gate_spec.hpp"
#include "qws/zmod.hpp"

namespace qws {

using cx = std::complex<double>;

// Precomputed d-th roots of unity; phase exponents are reduced mod d before
// lookup so repeated arithmetic cannot drift.
class Omega {
  public:
    explicit Omega(i64 d);
    cx pow(i64 exponent) const { return table_[mod_reduce(exponent, d_)]; }
    i64 modulus() const { return d_; }

  private:
    i64 d_;
    std::vector<cx> table_;
};

struct DenseState {
    Dim dim;
    std::vector<cx> amp;  // length d^n

    DenseState() = default;
    explicit DenseState(const Dim& dm) : dim(dm), amp(dm.hilbert_dim(), cx{0.0, 0.0}) {}

    // |q_0 ... q_{n-1}> with the given digit string; digits reduced mod d.
    static DenseState basis(const Dim& dm, const std::vector<i64>& digits);
    // |0...0>
    static DenseState zero(const Dim& dm) { return basis(dm, std::vector<i64>(dm.n, 0)); }

    double norm() const;
    void normalize();
};

struct DenseOperator {
    Dim dim;
    std::vector<cx> a;  // row-major, d^n x d^n

    DenseOperator() = default;
    explicit DenseOperator(const Dim& dm) : dim(dm), a(dm.hilbert_dim() * dm.hilbert_dim(), cx{0.0, 0.0}) {}

    static DenseOperator identity(const Dim& dm);

    i64 size() const { return dim.hilbert_dim(); }
    cx at(i64 r, i64 c) const { return a[r * size() + c]; }
    cx& at(i64 r, i64 c) { return a[r * size() + c]; }

    DenseOperator dagger() const;
    DenseOperator mul(const DenseOperator& o) const;
    cx trace() const;

    // max |U^dag U - I|; unitarity holds when this is <= 1e-10.
    double unitarity_defect() const;
};

// Mixed-radix helpers for computational indices (qudit 0 most significant).
void index_to_digits(i64 index, const Dim& dim, std::vector<i64>& digits);
i64 digits_to_index(const std::vector<i64>& digits, const Dim& dim);

// The d^n x d^n unitary with the gate embedded on its target qudits and
// identity elsewhere. Throws BadTargets for out-of-range or repeated targets.
DenseOperator build_gate(const GateSpec& g, const Dim& dim);

// U psi. Throws ShapeMismatch when dims differ.
DenseState apply(const DenseOperator& u, const DenseState& psi);

// Product of gate matrices in application order: compose({g1, g2}) = U2 U1.
DenseOperator compose(const std::vector<GateSpec>& circuit, const Dim& dim);

// Applies a circuit gate by gate; cheaper than composing when only the final
// state is needed.
DenseState apply_circuit(const std::vector<GateSpec>& circuit, const DenseState& psi);

// True iff A = phi * B for some unit-modulus phi chosen from B's
// largest-magnitude entry, to entrywise tolerance tol. Throws DegenerateB
// when B = 0.
bool equal_up_to_global_phase(const DenseOperator& a, const DenseOperator& b, double tol);
bool equal_up_to_global_phase(const DenseState& a, const DenseState& b, double tol);

double max_abs_diff(const DenseOperator& a, const DenseOperator& b);
double max_abs_diff(const DenseState& a, const DenseState& b);

}  // namespace qws
