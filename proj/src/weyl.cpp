#include "qws/weyl.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>

#include "qws/parallel.hpp"

namespace qws {

i64 phase_point_to_flat(const ZdVector& x) {
    i64 flat = 0;
    for (int i = 0; i < x.size(); ++i) flat = flat * x.modulus() + x[i];
    return flat;
}

ZdVector flat_to_phase_point(i64 flat, const Dim& dim) {
    ZdVector x(dim.phase_dim(), dim.d);
    for (int i = dim.phase_dim() - 1; i >= 0; --i) {
        x.set(i, flat % dim.d);
        flat /= dim.d;
    }
    return x;
}

double WignerTable::sum() const {
    double acc = 0.0;
    for (double w : v) acc += w;
    return acc;
}

double WignerTable::min() const {
    double m = v.empty() ? 0.0 : v[0];
    for (double w : v) m = std::min(m, w);
    return m;
}

namespace {

void check_point(const ZdVector& x, const Dim& dim, const char* what) {
    if (x.size() != dim.phase_dim() || x.modulus() != dim.d) {
        throw ShapeMismatch(std::string(what) + ": phase-space vector must have length 2n over Z_d");
    }
}

// Digit tables for all computational indices; digits[i*n + k] is digit k of i.
struct DigitCache {
    i64 d;
    int n;
    i64 hdim;
    std::vector<i64> digits;

    explicit DigitCache(const Dim& dim) : d(dim.d), n(dim.n), hdim(dim.hilbert_dim()), digits(hdim * dim.n) {
        std::vector<i64> buf;
        Dim dm = dim;
        for (i64 i = 0; i < hdim; ++i) {
            index_to_digits(i, dm, buf);
            std::copy(buf.begin(), buf.end(), digits.begin() + i * n);
        }
    }
    const i64* of(i64 index) const { return &digits[index * n]; }
};

}  // namespace

DenseOperator translation_op(const ZdVector& xi, const Dim& dim) {
    check_point(xi, dim, "translation_op");
    const i64 d = dim.d;
    const int n = dim.n;
    const i64 i2 = mod_half(d);
    const Omega w(d);
    const DigitCache dc(dim);

    i64 dot_pq = 0;
    for (int k = 0; k < n; ++k) dot_pq += xi[k] * xi[n + k];

    DenseOperator u(dim);
    std::vector<i64> row_digits(n);
    for (i64 col = 0; col < u.size(); ++col) {
        const i64* q = dc.of(col);
        i64 exponent = -i2 * dot_pq;
        for (int k = 0; k < n; ++k) {
            row_digits[k] = mod_reduce(q[k] + xi[n + k], d);
            exponent += xi[k] * row_digits[k];  // xi_p . (q + xi_q)
        }
        u.at(digits_to_index(row_digits, dim), col) = w.pow(exponent);
    }
    return u;
}

DenseOperator reflection_op(const ZdVector& x, const Dim& dim) {
    check_point(x, dim, "reflection_op");
    const i64 d = dim.d;
    const int n = dim.n;
    const Omega w(d);
    const DigitCache dc(dim);

    DenseOperator u(dim);
    std::vector<i64> row_digits(n);
    for (i64 col = 0; col < u.size(); ++col) {
        const i64* q = dc.of(col);
        i64 exponent = 0;
        for (int k = 0; k < n; ++k) {
            row_digits[k] = mod_reduce(2 * x[n + k] - q[k], d);
            exponent += 2 * x[k] * (x[n + k] - q[k]);  // 2 x_p . (x_q - q)
        }
        u.at(digits_to_index(row_digits, dim), col) = w.pow(exponent);
    }
    return u;
}

ChordTable chord_repr(const DenseOperator& a) {
    const Dim dim = a.dim;
    const i64 d = dim.d;
    const int n = dim.n;
    const i64 hdim = dim.hilbert_dim();
    const Omega w(d);
    const DigitCache dc(dim);
    const i64 i2 = mod_half(d);

    ChordTable tbl(dim);
    const double scale = 1.0 / static_cast<double>(hdim);
    parallel_for(static_cast<std::size_t>(tbl.size()), [&](std::size_t begin, std::size_t end) {
        std::vector<i64> xi(2 * n), row_digits(n);
        for (std::size_t flat = begin; flat < end; ++flat) {
            i64 t = static_cast<i64>(flat);
            for (int i = 2 * n - 1; i >= 0; --i) {
                xi[i] = t % d;
                t /= d;
            }
            i64 dot_pq = 0;
            for (int k = 0; k < n; ++k) dot_pq += xi[k] * xi[n + k];
            // Tr(T^dag A) = sum_q w^{inv2 xi_p.xi_q - xi_p.(q+xi_q)} A[q+xi_q, q]
            cx acc{0.0, 0.0};
            for (i64 col = 0; col < hdim; ++col) {
                const i64* q = dc.of(col);
                i64 exponent = i2 * dot_pq;
                for (int k = 0; k < n; ++k) {
                    row_digits[k] = mod_reduce(q[k] + xi[n + k], d);
                    exponent -= xi[k] * row_digits[k];
                }
                i64 row = 0;
                for (int k = 0; k < n; ++k) row = row * d + row_digits[k];
                acc += w.pow(exponent) * a.a[row * hdim + col];
            }
            tbl.v[flat] = acc * scale;
        }
    });
    return tbl;
}

CenterTable center_repr(const DenseOperator& a) {
    const Dim dim = a.dim;
    const i64 d = dim.d;
    const int n = dim.n;
    const i64 hdim = dim.hilbert_dim();
    const Omega w(d);
    const DigitCache dc(dim);

    CenterTable tbl(dim);
    const double scale = 1.0 / static_cast<double>(hdim);
    parallel_for(static_cast<std::size_t>(tbl.size()), [&](std::size_t begin, std::size_t end) {
        std::vector<i64> x(2 * n), row_digits(n);
        for (std::size_t flat = begin; flat < end; ++flat) {
            i64 t = static_cast<i64>(flat);
            for (int i = 2 * n - 1; i >= 0; --i) {
                x[i] = t % d;
                t /= d;
            }
            // Tr(R^dag A) = sum_q w^{-2 x_p.(x_q - q)} A[2 x_q - q, q]
            cx acc{0.0, 0.0};
            for (i64 col = 0; col < hdim; ++col) {
                const i64* q = dc.of(col);
                i64 exponent = 0;
                for (int k = 0; k < n; ++k) {
                    row_digits[k] = mod_reduce(2 * x[n + k] - q[k], d);
                    exponent -= 2 * x[k] * (x[n + k] - q[k]);
                }
                i64 row = 0;
                for (int k = 0; k < n; ++k) row = row * d + row_digits[k];
                acc += w.pow(exponent) * a.a[row * hdim + col];
            }
            tbl.v[flat] = acc * scale;
        }
    });
    return tbl;
}

DenseOperator reconstruct_from_center(const CenterTable& tbl) {
    const Dim dim = tbl.dim;
    const i64 d = dim.d;
    const int n = dim.n;
    const i64 hdim = dim.hilbert_dim();
    const Omega w(d);
    const DigitCache dc(dim);

    DenseOperator a(dim);
    // A = sum_x A_x R(x); each worker owns a block of columns.
    parallel_for(static_cast<std::size_t>(hdim), [&](std::size_t begin, std::size_t end) {
        std::vector<i64> x(2 * n), row_digits(n);
        for (std::size_t col = begin; col < end; ++col) {
            const i64* q = dc.of(static_cast<i64>(col));
            for (i64 flat = 0; flat < tbl.size(); ++flat) {
                const cx weight = tbl.v[flat];
                if (weight == cx{0.0, 0.0}) continue;
                i64 t = flat;
                for (int i = 2 * n - 1; i >= 0; --i) {
                    x[i] = t % d;
                    t /= d;
                }
                i64 exponent = 0;
                for (int k = 0; k < n; ++k) {
                    row_digits[k] = mod_reduce(2 * x[n + k] - q[k], d);
                    exponent += 2 * x[k] * (x[n + k] - q[k]);
                }
                i64 row = 0;
                for (int k = 0; k < n; ++k) row = row * d + row_digits[k];
                a.a[row * hdim + col] += weight * w.pow(exponent);
            }
        }
    });
    return a;
}

DenseOperator reconstruct_from_chord(const ChordTable& tbl) {
    const Dim dim = tbl.dim;
    const i64 d = dim.d;
    const int n = dim.n;
    const i64 hdim = dim.hilbert_dim();
    const Omega w(d);
    const DigitCache dc(dim);
    const i64 i2 = mod_half(d);

    DenseOperator a(dim);
    parallel_for(static_cast<std::size_t>(hdim), [&](std::size_t begin, std::size_t end) {
        std::vector<i64> xi(2 * n), row_digits(n);
        for (std::size_t col = begin; col < end; ++col) {
            const i64* q = dc.of(static_cast<i64>(col));
            for (i64 flat = 0; flat < tbl.size(); ++flat) {
                const cx weight = tbl.v[flat];
                if (weight == cx{0.0, 0.0}) continue;
                i64 t = flat;
                for (int i = 2 * n - 1; i >= 0; --i) {
                    xi[i] = t % d;
                    t /= d;
                }
                i64 dot_pq = 0;
                for (int k = 0; k < n; ++k) dot_pq += xi[k] * xi[n + k];
                i64 exponent = -i2 * dot_pq;
                for (int k = 0; k < n; ++k) {
                    row_digits[k] = mod_reduce(q[k] + xi[n + k], d);
                    exponent += xi[k] * row_digits[k];
                }
                i64 row = 0;
                for (int k = 0; k < n; ++k) row = row * d + row_digits[k];
                a.a[row * hdim + col] += weight * w.pow(exponent);
            }
        }
    });
    return a;
}

namespace {

// Shared kernel for both symplectic Fourier directions.
template <class In, class Out>
Out sf_transform(const In& tbl, int sign) {
    const Dim dim = tbl.dim;
    const i64 d = dim.d;
    const int n = dim.n;
    const double scale = 1.0 / static_cast<double>(dim.hilbert_dim());
    const Omega w(d);

    Out out(dim);
    parallel_for(static_cast<std::size_t>(out.size()), [&](std::size_t begin, std::size_t end) {
        std::vector<i64> x(2 * n), xi(2 * n);
        for (std::size_t xflat = begin; xflat < end; ++xflat) {
            i64 t = static_cast<i64>(xflat);
            for (int i = 2 * n - 1; i >= 0; --i) {
                x[i] = t % d;
                t /= d;
            }
            cx acc{0.0, 0.0};
            for (i64 xiflat = 0; xiflat < tbl.size(); ++xiflat) {
                i64 u = xiflat;
                for (int i = 2 * n - 1; i >= 0; --i) {
                    xi[i] = u % d;
                    u /= d;
                }
                // x^T J xi = -x_p.xi_q + x_q.xi_p
                i64 exponent = 0;
                for (int k = 0; k < n; ++k) exponent += -x[k] * xi[n + k] + x[n + k] * xi[k];
                acc += w.pow(sign * exponent) * tbl.v[xiflat];
            }
            out.v[xflat] = acc * scale;
        }
    });
    return out;
}

}  // namespace

CenterTable symplectic_fourier(const ChordTable& tbl) { return sf_transform<ChordTable, CenterTable>(tbl, +1); }

ChordTable symplectic_fourier_inverse(const CenterTable& tbl) {
    return sf_transform<CenterTable, ChordTable>(tbl, -1);
}

WignerTable wigner_pure(const DenseState& psi) {
    const Dim dim = psi.dim;
    const i64 d = dim.d;
    const int n = dim.n;
    const i64 hdim = dim.hilbert_dim();
    const i64 i2 = mod_half(d);
    const Omega w(d);
    const DigitCache dc(dim);
    const double scale = 1.0 / static_cast<double>(hdim);

    WignerTable tbl(dim);
    std::atomic<double> worst_imag{0.0};
    parallel_for(static_cast<std::size_t>(tbl.size()), [&](std::size_t begin, std::size_t end) {
        std::vector<i64> x(2 * n), qp(n), qm(n);
        double local_imag = 0.0;
        for (std::size_t flat = begin; flat < end; ++flat) {
            i64 t = static_cast<i64>(flat);
            for (int i = 2 * n - 1; i >= 0; --i) {
                x[i] = t % d;
                t /= d;
            }
            cx acc{0.0, 0.0};
            for (i64 xiq = 0; xiq < hdim; ++xiq) {
                const i64* xi = dc.of(xiq);
                i64 exponent = 0;
                for (int k = 0; k < n; ++k) {
                    exponent -= xi[k] * x[k];
                    qp[k] = mod_reduce(x[n + k] + i2 * xi[k], d);
                    qm[k] = mod_reduce(x[n + k] - i2 * xi[k], d);
                }
                i64 ip = 0, im = 0;
                for (int k = 0; k < n; ++k) {
                    ip = ip * d + qp[k];
                    im = im * d + qm[k];
                }
                acc += w.pow(exponent) * psi.amp[ip] * std::conj(psi.amp[im]);
            }
            acc *= scale;
            tbl.v[flat] = acc.real();
            local_imag = std::max(local_imag, std::abs(acc.imag()));
        }
        double cur = worst_imag.load();
        while (local_imag > cur && !worst_imag.compare_exchange_weak(cur, local_imag)) {
        }
    });
    tbl.max_imag = worst_imag.load();
    return tbl;
}

}  // namespace qws
