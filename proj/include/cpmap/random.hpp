#pragma once

#include <cstdint>
#include <random>

#include "cpmap/matrix.hpp"

namespace cpmap {

// Deterministic random source. All draws go through hand-rolled transforms
// of the raw mt19937_64 stream so that a given seed produces the same
// sequence on every platform; the stdlib distributions make no such
// guarantee.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    // Uniform double in [0, 1) with 53-bit resolution.
    double uniform();

    // Standard normal via the Box-Muller transform; draws are cached in
    // pairs.
    double normal();

    // Complex with independent N(0, 1) real and imaginary parts.
    Complex complex_normal();

private:
    std::mt19937_64 gen_;
    double spare_ = 0.0;
    bool has_spare_ = false;
};

// Matrix with i.i.d. standard complex Gaussian entries.
ComplexMatrix random_ginibre(std::size_t rows, std::size_t cols, Rng& rng);

// Haar-distributed n x n unitary: orthonormalize the columns of a Ginibre
// sample. The same seed always yields the same unitary.
ComplexMatrix random_unitary(std::size_t n, std::uint64_t seed);

}  // namespace cpmap
