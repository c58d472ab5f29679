#include "cpmap/random.hpp"

#include <cmath>
#include <numbers>
#include <span>
#include <vector>

#include "cpmap/eigen.hpp"
#include "cpmap/errors.hpp"

namespace cpmap {

double Rng::uniform() {
    // Top 53 bits of the generator output, scaled into [0, 1).
    return static_cast<double>(gen_() >> 11) * 0x1.0p-53;
}

double Rng::normal() {
    if (has_spare_) {
        has_spare_ = false;
        return spare_;
    }
    double u1 = uniform();
    while (u1 == 0.0) {
        u1 = uniform();
    }
    const double u2 = uniform();
    const double radius = std::sqrt(-2.0 * std::log(u1));
    const double angle = 2.0 * std::numbers::pi * u2;
    spare_ = radius * std::sin(angle);
    has_spare_ = true;
    return radius * std::cos(angle);
}

Complex Rng::complex_normal() {
    const double re = normal();
    const double im = normal();
    return Complex(re, im);
}

ComplexMatrix random_ginibre(std::size_t rows, std::size_t cols, Rng& rng) {
    ComplexMatrix out(rows, cols);
    for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t c = 0; c < cols; ++c) {
            out(r, c) = rng.complex_normal();
        }
    }
    return out;
}

ComplexMatrix random_unitary(std::size_t n, std::uint64_t seed) {
    if (n == 0) {
        throw ParameterOutOfRange("random_unitary: dimension must be positive");
    }
    Rng rng(seed);
    // A Ginibre matrix is almost surely full rank; retry on the measure-zero
    // event that orthonormalization drops a column.
    for (int attempt = 0; attempt < 8; ++attempt) {
        const ComplexMatrix g = random_ginibre(n, n, rng);
        std::vector<ComplexMatrix> columns;
        columns.reserve(n);
        for (std::size_t c = 0; c < n; ++c) {
            columns.push_back(g.column(c));
        }
        const std::vector<ComplexMatrix> basis =
            gram_schmidt(std::span<const ComplexMatrix>(columns), 1e-12);
        if (basis.size() != n) {
            continue;
        }
        ComplexMatrix u(n, n);
        for (std::size_t c = 0; c < n; ++c) {
            for (std::size_t r = 0; r < n; ++r) {
                u(r, c) = basis[c](r, 0);
            }
        }
        return u;
    }
    throw NumericalFailure("random_unitary: Ginibre sample kept losing rank");
}

}  // namespace cpmap
