#pragma once

#include <cstdint>

#include "qws/errors.hpp"

namespace qws {

// System shape: n qudits, each of odd dimension d >= 3.
struct Dim {
    std::int64_t d = 3;
    int n = 1;

    Dim() = default;
    Dim(std::int64_t d_, int n_) : d(d_), n(n_) { validate(); }

    void validate() const {
        if (d < 3 || d % 2 == 0) {
            throw BadDimension("qudit dimension must be odd and >= 3, got " + std::to_string(d));
        }
        if (n < 1) {
            throw BadDimension("qudit count must be >= 1, got " + std::to_string(n));
        }
    }

    // d^n, the Hilbert space dimension.
    std::int64_t hilbert_dim() const {
        std::int64_t h = 1;
        for (int i = 0; i < n; ++i) h *= d;
        return h;
    }

    // 2n, the phase space dimension.
    int phase_dim() const { return 2 * n; }

    // d^{2n}, the number of phase space points.
    std::int64_t phase_points() const {
        std::int64_t h = hilbert_dim();
        return h * h;
    }

    bool operator==(const Dim&) const = default;
};

}  // namespace qws
