#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "cpmap/channel.hpp"
#include "cpmap/matrix.hpp"

namespace cpmap {

// Relative thresholds used by the verdict pipeline. Each comparison is
// scaled by max(1, lambda_max) or max(1, ||J||_max), so normalized channels
// get an absolute floor while scaled-up inputs are judged relatively.
struct Tolerances {
    double herm_tol = 1e-9;
    double psd_tol = 1e-9;
    double rank_tol = 1e-9;
};

// Everything the complete-positivity decision produces. When the input is
// not Hermitian the eigendecomposition is skipped, so the spectral fields
// stay empty and rank is 0.
struct CpReport {
    double hermiticity_defect = 0.0;
    bool is_hermitian = false;
    bool zero_diag_consistent = false;
    bool is_psd = false;
    bool is_cp = false;
    std::size_t rank = 0;
    std::optional<double> min_eigenvalue;
    std::optional<double> max_eigenvalue;
    std::vector<double> eigenvalues;  // descending; empty when not Hermitian
    std::optional<bool> trace_preserving;
};

// Hermiticity test: returns (pass, defect) with defect = ||J - J^dagger||_max
// and pass iff defect <= herm_tol * max(1, ||J||_max).
std::pair<bool, double> check_hermitian(const ChoiMatrix& j, const Tolerances& t);

// Cheap necessary condition: whenever a diagonal entry is zero (within
// psd_tol * max(1, ||J||_max)), its whole row and column must be zero at the
// same threshold. A PSD matrix always satisfies this; the converse fails.
bool zero_diagonal_consistent(const ChoiMatrix& j, const Tolerances& t);

// Full decision: the map is completely positive iff its Choi matrix is
// Hermitian and positive semidefinite. rank counts eigenvalues above
// rank_tol * max(1, lambda_max). trace_preserving is filled only when a
// KrausSet is supplied. NoConvergence surfaces as NumericalFailure.
CpReport cp_verdict(const ChoiMatrix& j, const Tolerances& t, const KrausSet* k = nullptr);

// Minimal Kraus representation from the Choi matrix: factor J = Q Q^dagger
// and un-vectorize the columns of Q, keeping only those whose eigenvalue
// clears the rank threshold (the zero map yields one zero matrix). Satisfies
// apply_kraus(result, X) = apply_superop(superop_from_choi(j), X).
// Throws NotCp when the verdict fails.
KrausSet kraus_from_choi(const ChoiMatrix& j, const Tolerances& t);

// Unitary freedom: new operators M~_j = sum_p u[p, j] * M_p, with k padded
// by zero matrices up to u's size. Preserves the Choi matrix. Throws
// NotUnitary (defect above 1e-9) or DimensionMismatch (u smaller than K).
KrausSet remix_kraus(const KrausSet& k, const ComplexMatrix& u);

// Number of matrices in a minimal Kraus representation: the count of
// eigenvalues above rank_tol * max(1, lambda_max). Throws NotCp.
std::size_t minimal_kraus_count(const ChoiMatrix& j, const Tolerances& t);

// Vectors f_1..f_N whose Gram matrix of inner products (f_i, f_j) equals S:
// with Q from psd_sqrt_factor, f_i[k] = conj(Q(i, k)). Accepts PSD input
// (eigenvalue clipping); throws NotHermitian or NotPsd.
std::vector<ComplexMatrix> gram_vectors(const ComplexMatrix& s, double tol);

// The block matrix [[S, S C^dagger], [C S, C S C^dagger]], positive
// semidefinite whenever S is Hermitian positive definite; C may have zero
// rows. Throws NotPositiveDefinite or DimensionMismatch.
ComplexMatrix psd_from_blocks(const ComplexMatrix& s, const ComplexMatrix& c);

}  // namespace cpmap
