#include "cpmap/channel.hpp"

#include <algorithm>
#include <string>

#include "cpmap/errors.hpp"

namespace cpmap {

namespace {

void require_dim(std::size_t n, const char* what) {
    if (n == 0) {
        throw DimensionMismatch(std::string(what) + ": dimension must be positive");
    }
}

}  // namespace

SuperOperator::SuperOperator(std::size_t n, ComplexMatrix m) : dim(n), action(std::move(m)) {
    require_dim(n, "SuperOperator");
    if (action.rows() != n * n || action.cols() != n * n) {
        throw DimensionMismatch("SuperOperator: action must be " + std::to_string(n * n) +
                                " x " + std::to_string(n * n));
    }
}

ChoiMatrix::ChoiMatrix(std::size_t n, ComplexMatrix m) : dim(n), matrix(std::move(m)) {
    require_dim(n, "ChoiMatrix");
    if (matrix.rows() != n * n || matrix.cols() != n * n) {
        throw DimensionMismatch("ChoiMatrix: matrix must be " + std::to_string(n * n) + " x " +
                                std::to_string(n * n));
    }
}

KrausSet::KrausSet(std::size_t n, std::vector<ComplexMatrix> ops)
    : dim(n), operators(std::move(ops)) {
    require_dim(n, "KrausSet");
    if (operators.empty()) {
        throw DimensionMismatch("KrausSet: need at least one operator");
    }
    for (const ComplexMatrix& op : operators) {
        if (op.rows() != n || op.cols() != n) {
            throw DimensionMismatch("KrausSet: every operator must be " + std::to_string(n) +
                                    " x " + std::to_string(n));
        }
    }
}

ComplexMatrix vec(const ComplexMatrix& x) {
    if (!x.is_square()) {
        throw DimensionMismatch("vec: matrix must be square");
    }
    const std::size_t n = x.rows();
    ComplexMatrix out(n * n, 1);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            out(i * n + j, 0) = x(i, j);
        }
    }
    return out;
}

ComplexMatrix unvec(const ComplexMatrix& v, std::size_t n) {
    if (v.cols() != 1 || v.rows() != n * n) {
        throw DimensionMismatch("unvec: need an n^2 x 1 column");
    }
    ComplexMatrix out(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            out(i, j) = v(i * n + j, 0);
        }
    }
    return out;
}

ComplexMatrix apply_kraus(const KrausSet& kraus, const ComplexMatrix& x) {
    if (x.rows() != kraus.dim || x.cols() != kraus.dim) {
        throw DimensionMismatch("apply_kraus: input must match the channel dimension");
    }
    ComplexMatrix out(kraus.dim, kraus.dim);
    for (const ComplexMatrix& op : kraus.operators) {
        out += op * x * op.adjoint();
    }
    return out;
}

ComplexMatrix apply_superop(const SuperOperator& superop, const ComplexMatrix& x) {
    if (x.rows() != superop.dim || x.cols() != superop.dim) {
        throw DimensionMismatch("apply_superop: input must match the channel dimension");
    }
    return unvec(superop.action * vec(x), superop.dim);
}

ChoiMatrix choi_from_superop(const SuperOperator& superop) {
    const std::size_t n = superop.dim;
    ComplexMatrix j(n * n, n * n);
    for (std::size_t m = 0; m < n; ++m) {
        for (std::size_t a = 0; a < n; ++a) {
            for (std::size_t p = 0; p < n; ++p) {
                for (std::size_t b = 0; b < n; ++b) {
                    j(m * n + a, p * n + b) = superop.action(m * n + p, a * n + b);
                }
            }
        }
    }
    return ChoiMatrix(n, std::move(j));
}

SuperOperator superop_from_choi(const ChoiMatrix& choi) {
    const std::size_t n = choi.dim;
    ComplexMatrix s(n * n, n * n);
    for (std::size_t m = 0; m < n; ++m) {
        for (std::size_t p = 0; p < n; ++p) {
            for (std::size_t a = 0; a < n; ++a) {
                for (std::size_t b = 0; b < n; ++b) {
                    s(m * n + p, a * n + b) = choi.matrix(m * n + a, p * n + b);
                }
            }
        }
    }
    return SuperOperator(n, std::move(s));
}

ChoiMatrix choi_from_kraus(const KrausSet& kraus) {
    const std::size_t n = kraus.dim;
    ComplexMatrix j(n * n, n * n);
    for (const ComplexMatrix& op : kraus.operators) {
        const ComplexMatrix v = vec(op);
        for (std::size_t r = 0; r < n * n; ++r) {
            for (std::size_t c = 0; c < n * n; ++c) {
                j(r, c) += v(r, 0) * std::conj(v(c, 0));
            }
        }
    }
    return ChoiMatrix(n, std::move(j));
}

bool is_trace_preserving(const KrausSet& kraus, double tol) {
    ComplexMatrix sum(kraus.dim, kraus.dim);
    for (const ComplexMatrix& op : kraus.operators) {
        sum += op.adjoint() * op;
    }
    return max_abs_diff(sum, ComplexMatrix::identity(kraus.dim)) <= tol;
}

}  // namespace cpmap
