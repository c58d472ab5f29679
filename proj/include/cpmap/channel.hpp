#pragma once

#include <vector>

#include "cpmap/matrix.hpp"

namespace cpmap {

// Throughout, an N x N matrix X is flattened row-major:
// vec(X)[i*N + j] = X(i, j).

// A linear map on N x N matrices, stored as the N^2 x N^2 matrix that acts
// on vec(X). Column i*N + j holds vec of the image of the matrix unit E_ij.
struct SuperOperator {
    std::size_t dim = 0;
    ComplexMatrix action;

    SuperOperator(std::size_t n, ComplexMatrix m);
};

// The N^2 x N^2 block matrix whose (a, b) block of size N x N is the image
// of E_ab: entry (m*N + a, n*N + b) equals that image's (m, n) entry. The
// map is completely positive exactly when this matrix is positive
// semidefinite.
struct ChoiMatrix {
    std::size_t dim = 0;
    ComplexMatrix matrix;

    ChoiMatrix(std::size_t n, ComplexMatrix m);
};

// Operators M_p of a Kraus representation X -> sum_p M_p X M_p^dagger.
struct KrausSet {
    std::size_t dim = 0;
    std::vector<ComplexMatrix> operators;

    KrausSet(std::size_t n, std::vector<ComplexMatrix> ops);
};

ComplexMatrix vec(const ComplexMatrix& x);
ComplexMatrix unvec(const ComplexMatrix& v, std::size_t n);

// Evaluate the map on one input matrix.
ComplexMatrix apply_kraus(const KrausSet& kraus, const ComplexMatrix& x);
ComplexMatrix apply_superop(const SuperOperator& superop, const ComplexMatrix& x);

// Reshuffle between the action matrix and the Choi matrix. The index
// permutation is an involution, so the two directions use the same shuffle.
ChoiMatrix choi_from_superop(const SuperOperator& superop);
SuperOperator superop_from_choi(const ChoiMatrix& choi);

// J = sum_p vec(M_p) vec(M_p)^dagger.
ChoiMatrix choi_from_kraus(const KrausSet& kraus);

// Whether ||sum_p M_p^dagger M_p - I||_max <= tol.
bool is_trace_preserving(const KrausSet& kraus, double tol = 1e-9);

}  // namespace cpmap
