#pragma once

#include <span>
#include <vector>

#include "cpmap/matrix.hpp"

namespace cpmap {

// Result of a Hermitian eigendecomposition M = P D P^dagger. Column k of
// `eigenvectors` pairs with `eigenvalues[k]`; eigenvalues are sorted
// descending (stable: equal values keep the Jacobi output order), and each
// eigenvector is scaled so its largest-magnitude entry is real positive
// (ties broken by lowest index).
struct EigenDecomposition {
    std::vector<double> eigenvalues;
    ComplexMatrix eigenvectors;
};

// Cyclic-by-row complex Jacobi eigensolver for Hermitian matrices.
// Requires ||m - m^dagger||_max <= tol * max(1, ||m||_max); converges when
// the off-diagonal Frobenius norm drops below 1e-13 * ||m||_F, at most 100
// sweeps. Deterministic: identical input yields identical output.
// Throws NotHermitian or NoConvergence.
EigenDecomposition hermitian_eigen(const ComplexMatrix& m, double tol = 1e-9);

// Factor a Hermitian PSD matrix as m = Q Q^dagger with Q = P D^{1/2}.
// Eigenvalues in [-tol * max(1, lambda_max), 0) are clipped to zero before
// the square root; anything below that window throws NotPsd. Columns of Q
// are ordered by descending eigenvalue.
ComplexMatrix psd_sqrt_factor(const ComplexMatrix& m, double tol = 1e-9);

// Modified Gram-Schmidt (with one re-orthogonalization pass) over column
// vectors. Vectors whose residual norm falls below tol are dropped, so rank
// deficiency shows up as a shorter output.
std::vector<ComplexMatrix> gram_schmidt(std::span<const ComplexMatrix> vectors, double tol);

}  // namespace cpmap
