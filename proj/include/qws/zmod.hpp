#pragma once

// Exact arithmetic and small-matrix linear algebra over Z_d, d odd.
//
// All values are stored reduced to [0, d). Negative constants from the
// harmonic catalog (e.g. -1/2) are realized as (d-1)*inv(2) mod d.
// Matrix inversion uses the adjugate, so it is valid for non-prime d as
// long as det(M) is a unit mod d.

#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "qws/dim.hpp"
#include "qws/errors.hpp"

namespace qws {

using i64 = std::int64_t;

// a mod d, reduced to [0, d).
inline i64 mod_reduce(i64 a, i64 d) {
    i64 r = a % d;
    return r < 0 ? r + d : r;
}

// Multiplicative inverse of a mod d. Throws NotInvertible when gcd(a, d) != 1.
i64 mod_inv(i64 a, i64 d);

// inv(2) mod d; equals (d+1)/2 for odd d.
inline i64 mod_half(i64 d) { return (d + 1) / 2; }

class ZdMatrix;

// Vector over Z_d. Phase-space vectors use the coordinate order
// (p_0, ..., p_{n-1}, q_0, ..., q_{n-1}).
class ZdVector {
  public:
    ZdVector() = default;
    ZdVector(int size, i64 d) : d_(d), v_(size, 0) {}
    ZdVector(std::vector<i64> entries, i64 d);

    int size() const { return static_cast<int>(v_.size()); }
    i64 modulus() const { return d_; }

    i64 operator[](int i) const { return v_[i]; }
    void set(int i, i64 value) { v_[i] = mod_reduce(value, d_); }

    ZdVector add(const ZdVector& o) const;
    ZdVector sub(const ZdVector& o) const;
    ZdVector neg() const;
    ZdVector scale(i64 c) const;
    i64 dot(const ZdVector& o) const;

    bool operator==(const ZdVector&) const = default;

    const std::vector<i64>& entries() const { return v_; }

  private:
    i64 d_ = 0;
    std::vector<i64> v_;
};

class ZdMatrix {
  public:
    ZdMatrix() = default;
    ZdMatrix(int rows, int cols, i64 d) : rows_(rows), cols_(cols), d_(d), v_(rows * cols, 0) {}
    // Row-major initializer.
    ZdMatrix(int rows, int cols, std::vector<i64> entries, i64 d);

    static ZdMatrix identity(int size, i64 d);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    i64 modulus() const { return d_; }

    i64 at(int r, int c) const { return v_[r * cols_ + c]; }
    void set(int r, int c, i64 value) { v_[r * cols_ + c] = mod_reduce(value, d_); }

    ZdMatrix mul(const ZdMatrix& o) const;
    ZdVector mul(const ZdVector& x) const;
    ZdMatrix add(const ZdMatrix& o) const;
    ZdMatrix sub(const ZdMatrix& o) const;
    ZdMatrix scale(i64 c) const;
    ZdMatrix neg() const;
    ZdMatrix transpose() const;
    bool is_symmetric() const;
    bool is_zero() const;

    i64 det() const;

    bool operator==(const ZdMatrix&) const = default;

  private:
    int rows_ = 0, cols_ = 0;
    i64 d_ = 0;
    std::vector<i64> v_;
};

// M^{-1} over Z_d via the adjugate; valid for non-prime d when det(M) is a
// unit. Throws NotInvertible otherwise.
ZdMatrix mat_inv(const ZdMatrix& m);

// The symplectic form J = [[0, -I_n], [I_n, 0]] on 2n phase-space coordinates.
ZdMatrix symplectic_form(int n, i64 d);

// True iff M^T J M = J mod d. Throws ShapeMismatch unless M is 2n x 2n.
bool is_symplectic(const ZdMatrix& m, const ZdMatrix& j);

// All x in (Z_d)^k with Phi x = r, by enumeration. Throws SizeLimitExceeded
// when d^k exceeds `cap`.
std::vector<ZdVector> solve_affine(const ZdMatrix& phi, const ZdVector& r,
                                   i64 cap = 10'000'000);

}  // namespace qws
