#pragma once

#include <cstdint>
#include <vector>

#include "cpmap/matrix.hpp"
#include "cpmap/random.hpp"

namespace cpmap::testing {

inline bool approx_equal(const ComplexMatrix& a, const ComplexMatrix& b, double tol) {
    return a.rows() == b.rows() && a.cols() == b.cols() && max_abs_diff(a, b) <= tol;
}

// Whether a = c * b for a single complex scalar c (b nonzero), entrywise to
// tol. The scalar is read off at b's largest entry.
inline bool proportional_to(const ComplexMatrix& a, const ComplexMatrix& b, double tol) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        return false;
    }
    std::size_t rmax = 0;
    std::size_t cmax = 0;
    double best = 0.0;
    for (std::size_t r = 0; r < b.rows(); ++r) {
        for (std::size_t c = 0; c < b.cols(); ++c) {
            if (std::abs(b(r, c)) > best) {
                best = std::abs(b(r, c));
                rmax = r;
                cmax = c;
            }
        }
    }
    if (best == 0.0) {
        return a.max_abs() <= tol;
    }
    const Complex scale = a(rmax, cmax) / b(rmax, cmax);
    ComplexMatrix scaled = b;
    scaled *= scale;
    return max_abs_diff(a, scaled) <= tol;
}

inline ComplexMatrix random_matrix(std::size_t rows, std::size_t cols, Rng& rng) {
    return random_ginibre(rows, cols, rng);
}

inline ComplexMatrix random_hermitian(std::size_t n, Rng& rng) {
    const ComplexMatrix g = random_ginibre(n, n, rng);
    ComplexMatrix h(n, n);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) {
            h(r, c) = 0.5 * (g(r, c) + std::conj(g(c, r)));
        }
    }
    return h;
}

inline ComplexMatrix random_psd(std::size_t n, Rng& rng) {
    const ComplexMatrix g = random_ginibre(n, n, rng);
    return g * g.adjoint();
}

}  // namespace cpmap::testing
