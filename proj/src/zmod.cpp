#include "qws/zmod.hpp"

#include <numeric>

namespace qws {

i64 mod_inv(i64 a, i64 d) {
    a = mod_reduce(a, d);
    // extended Euclid
    i64 old_r = a, r = d;
    i64 old_s = 1, s = 0;
    while (r != 0) {
        i64 q = old_r / r;
        i64 tmp = old_r - q * r;
        old_r = r;
        r = tmp;
        tmp = old_s - q * s;
        old_s = s;
        s = tmp;
    }
    if (old_r != 1) {
        throw NotInvertible(std::to_string(a) + " is not invertible mod " + std::to_string(d) +
                            " (gcd = " + std::to_string(old_r) + ")");
    }
    return mod_reduce(old_s, d);
}

ZdVector::ZdVector(std::vector<i64> entries, i64 d) : d_(d), v_(std::move(entries)) {
    for (auto& e : v_) e = mod_reduce(e, d_);
}

ZdVector ZdVector::add(const ZdVector& o) const {
    if (o.size() != size() || o.d_ != d_) throw ShapeMismatch("vector add: shape or modulus mismatch");
    ZdVector r(size(), d_);
    for (int i = 0; i < size(); ++i) r.v_[i] = mod_reduce(v_[i] + o.v_[i], d_);
    return r;
}

ZdVector ZdVector::sub(const ZdVector& o) const { return add(o.neg()); }

ZdVector ZdVector::neg() const {
    ZdVector r(size(), d_);
    for (int i = 0; i < size(); ++i) r.v_[i] = mod_reduce(-v_[i], d_);
    return r;
}

ZdVector ZdVector::scale(i64 c) const {
    ZdVector r(size(), d_);
    for (int i = 0; i < size(); ++i) r.v_[i] = mod_reduce(v_[i] * mod_reduce(c, d_), d_);
    return r;
}

i64 ZdVector::dot(const ZdVector& o) const {
    if (o.size() != size() || o.d_ != d_) throw ShapeMismatch("vector dot: shape or modulus mismatch");
    i64 acc = 0;
    for (int i = 0; i < size(); ++i) acc = mod_reduce(acc + v_[i] * o.v_[i], d_);
    return acc;
}

ZdMatrix::ZdMatrix(int rows, int cols, std::vector<i64> entries, i64 d)
    : rows_(rows), cols_(cols), d_(d), v_(std::move(entries)) {
    if (static_cast<int>(v_.size()) != rows * cols) {
        throw ShapeMismatch("matrix initializer has wrong entry count");
    }
    for (auto& e : v_) e = mod_reduce(e, d_);
}

ZdMatrix ZdMatrix::identity(int size, i64 d) {
    ZdMatrix m(size, size, d);
    for (int i = 0; i < size; ++i) m.set(i, i, 1);
    return m;
}

ZdMatrix ZdMatrix::mul(const ZdMatrix& o) const {
    if (cols_ != o.rows_ || d_ != o.d_) throw ShapeMismatch("matrix mul: shape or modulus mismatch");
    ZdMatrix r(rows_, o.cols_, d_);
    for (int i = 0; i < rows_; ++i) {
        for (int k = 0; k < cols_; ++k) {
            i64 a = at(i, k);
            if (a == 0) continue;
            for (int j = 0; j < o.cols_; ++j) {
                r.v_[i * o.cols_ + j] = mod_reduce(r.v_[i * o.cols_ + j] + a * o.at(k, j), d_);
            }
        }
    }
    return r;
}

ZdVector ZdMatrix::mul(const ZdVector& x) const {
    if (cols_ != x.size() || d_ != x.modulus()) throw ShapeMismatch("matrix-vector mul: shape or modulus mismatch");
    ZdVector r(rows_, d_);
    for (int i = 0; i < rows_; ++i) {
        i64 acc = 0;
        for (int j = 0; j < cols_; ++j) acc = mod_reduce(acc + at(i, j) * x[j], d_);
        r.set(i, acc);
    }
    return r;
}

ZdMatrix ZdMatrix::add(const ZdMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_ || d_ != o.d_) throw ShapeMismatch("matrix add: shape or modulus mismatch");
    ZdMatrix r(rows_, cols_, d_);
    for (size_t i = 0; i < v_.size(); ++i) r.v_[i] = mod_reduce(v_[i] + o.v_[i], d_);
    return r;
}

ZdMatrix ZdMatrix::sub(const ZdMatrix& o) const { return add(o.neg()); }

ZdMatrix ZdMatrix::scale(i64 c) const {
    ZdMatrix r(rows_, cols_, d_);
    c = mod_reduce(c, d_);
    for (size_t i = 0; i < v_.size(); ++i) r.v_[i] = mod_reduce(v_[i] * c, d_);
    return r;
}

ZdMatrix ZdMatrix::neg() const {
    ZdMatrix r(rows_, cols_, d_);
    for (size_t i = 0; i < v_.size(); ++i) r.v_[i] = mod_reduce(-v_[i], d_);
    return r;
}

ZdMatrix ZdMatrix::transpose() const {
    ZdMatrix r(cols_, rows_, d_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) r.set(j, i, at(i, j));
    return r;
}

bool ZdMatrix::is_symmetric() const {
    if (rows_ != cols_) return false;
    for (int i = 0; i < rows_; ++i)
        for (int j = i + 1; j < cols_; ++j)
            if (at(i, j) != at(j, i)) return false;
    return true;
}

bool ZdMatrix::is_zero() const {
    for (i64 e : v_) {
        if (e != 0) return false;
    }
    return true;
}

i64 ZdMatrix::det() const {
    if (rows_ != cols_) throw ShapeMismatch("determinant of non-square matrix");
    const int k = rows_;
    if (k == 0) return mod_reduce(1, d_);
    // Subset DP over column sets: f[S] accumulates terms of the Leibniz sum
    // for the first popcount(S) rows restricted to columns S.
    std::vector<i64> f(size_t(1) << k, 0);
    f[0] = 1;
    for (size_t s = 1; s < f.size(); ++s) {
        int row = __builtin_popcountll(s) - 1;
        i64 acc = 0;
        int idx = 0;  // expansion along the last row: cofactor sign (-1)^{row + idx}
        for (int c = 0; c < k; ++c) {
            if (!(s >> c & 1)) continue;
            i64 term = mod_reduce(at(row, c) * f[s ^ (size_t(1) << c)], d_);
            acc = mod_reduce(acc + ((row + idx) % 2 == 0 ? term : -term), d_);
            ++idx;
        }
        f[s] = acc;
    }
    return f[f.size() - 1];
}

ZdMatrix mat_inv(const ZdMatrix& m) {
    if (m.rows() != m.cols()) throw ShapeMismatch("inverse of non-square matrix");
    const int k = m.rows();
    const i64 d = m.modulus();
    const i64 det_inv = mod_inv(m.det(), d);  // throws NotInvertible when det is not a unit
    ZdMatrix inv(k, k, d);
    if (k == 1) {
        inv.set(0, 0, det_inv);
        return inv;
    }
    // adjugate: inv[j][i] = (-1)^{i+j} * minor(i, j) * det^{-1}
    ZdMatrix minor(k - 1, k - 1, d);
    for (int i = 0; i < k; ++i) {
        for (int j = 0; j < k; ++j) {
            for (int r = 0, mr = 0; r < k; ++r) {
                if (r == i) continue;
                for (int c = 0, mc = 0; c < k; ++c) {
                    if (c == j) continue;
                    minor.set(mr, mc, m.at(r, c));
                    ++mc;
                }
                ++mr;
            }
            i64 cof = minor.det();
            if ((i + j) % 2 == 1) cof = mod_reduce(-cof, d);
            inv.set(j, i, mod_reduce(cof * det_inv, d));
        }
    }
    return inv;
}

ZdMatrix symplectic_form(int n, i64 d) {
    ZdMatrix j(2 * n, 2 * n, d);
    for (int i = 0; i < n; ++i) {
        j.set(i, n + i, -1);
        j.set(n + i, i, 1);
    }
    return j;
}

bool is_symplectic(const ZdMatrix& m, const ZdMatrix& j) {
    if (m.rows() != m.cols() || m.rows() != j.rows() || m.rows() % 2 != 0) {
        throw ShapeMismatch("is_symplectic: M must be 2n x 2n matching J");
    }
    return m.transpose().mul(j).mul(m) == j;
}

std::vector<ZdVector> solve_affine(const ZdMatrix& phi, const ZdVector& r, i64 cap) {
    if (phi.cols() != r.size() || phi.rows() != r.size() || phi.modulus() != r.modulus()) {
        throw ShapeMismatch("solve_affine: Phi must be square matching r");
    }
    const int k = phi.cols();
    const i64 d = phi.modulus();
    i64 total = 1;
    for (int i = 0; i < k; ++i) {
        if (total > cap / d + 1) throw SizeLimitExceeded("solve_affine: d^k exceeds enumeration cap");
        total *= d;
    }
    if (total > cap) throw SizeLimitExceeded("solve_affine: d^k exceeds enumeration cap");

    std::vector<ZdVector> out;
    ZdVector x(k, d);
    std::vector<i64> digits(k, 0);
    for (i64 flat = 0; flat < total; ++flat) {
        i64 t = flat;
        for (int i = k - 1; i >= 0; --i) {  // first coordinate varies slowest
            digits[i] = t % d;
            t /= d;
        }
        bool ok = true;
        for (int row = 0; row < k && ok; ++row) {
            i64 acc = 0;
            for (int c = 0; c < k; ++c) acc += phi.at(row, c) * digits[c];
            ok = mod_reduce(acc, d) == r[row];
        }
        if (ok) {
            for (int i = 0; i < k; ++i) x.set(i, digits[i]);
            out.push_back(x);
        }
    }
    return out;
}

}  // namespace qws
