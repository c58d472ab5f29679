#include "cpmap/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "cpmap/eigen.hpp"
#include "cpmap/errors.hpp"

namespace cpmap {

namespace {

void require_tolerances(const Tolerances& t) {
    if (t.herm_tol <= 0.0 || t.psd_tol <= 0.0 || t.rank_tol <= 0.0) {
        throw ParameterOutOfRange("Tolerances: all thresholds must be strictly positive");
    }
}

struct Analysis {
    CpReport report;
    EigenDecomposition eig;  // meaningful only when report.is_hermitian
};

Analysis analyze(const ChoiMatrix& j, const Tolerances& t) {
    require_tolerances(t);
    Analysis out;
    const auto [hermitian, defect] = check_hermitian(j, t);
    out.report.hermiticity_defect = defect;
    out.report.is_hermitian = hermitian;
    out.report.zero_diag_consistent = zero_diagonal_consistent(j, t);
    if (!hermitian) {
        return out;  // is_psd / is_cp stay false, rank stays 0
    }
    try {
        out.eig = hermitian_eigen(j.matrix, t.herm_tol);
    } catch (const NoConvergence& e) {
        throw NumericalFailure(e.what());
    }
    const double lambda_max = out.eig.eigenvalues.front();
    const double lambda_min = out.eig.eigenvalues.back();
    out.report.max_eigenvalue = lambda_max;
    out.report.min_eigenvalue = lambda_min;
    out.report.eigenvalues = out.eig.eigenvalues;
    out.report.is_psd = lambda_min >= -t.psd_tol * std::max(1.0, lambda_max);
    out.report.is_cp = out.report.is_hermitian && out.report.is_psd;
    const double rank_threshold = t.rank_tol * std::max(1.0, lambda_max);
    out.report.rank = static_cast<std::size_t>(
        std::count_if(out.eig.eigenvalues.begin(), out.eig.eigenvalues.end(),
                      [rank_threshold](double v) { return v > rank_threshold; }));
    return out;
}

}  // namespace

std::pair<bool, double> check_hermitian(const ChoiMatrix& j, const Tolerances& t) {
    require_tolerances(t);
    const double defect = hermiticity_defect(j.matrix);
    const bool pass = defect <= t.herm_tol * std::max(1.0, j.matrix.max_abs());
    return {pass, defect};
}

bool zero_diagonal_consistent(const ChoiMatrix& j, const Tolerances& t) {
    require_tolerances(t);
    const ComplexMatrix& m = j.matrix;
    const double threshold = t.psd_tol * std::max(1.0, m.max_abs());
    for (std::size_t d = 0; d < m.rows(); ++d) {
        if (std::abs(m(d, d)) > threshold) {
            continue;
        }
        for (std::size_t i = 0; i < m.cols(); ++i) {
            if (std::abs(m(d, i)) > threshold || std::abs(m(i, d)) > threshold) {
                return false;
            }
        }
    }
    return true;
}

CpReport cp_verdict(const ChoiMatrix& j, const Tolerances& t, const KrausSet* k) {
    Analysis a = analyze(j, t);
    if (k != nullptr) {
        a.report.trace_preserving = is_trace_preserving(*k, t.herm_tol);
    }
    return a.report;
}

KrausSet kraus_from_choi(const ChoiMatrix& j, const Tolerances& t) {
    const Analysis a = analyze(j, t);
    if (!a.report.is_cp) {
        throw NotCp("kraus_from_choi: the Choi matrix is not positive semidefinite");
    }
    const std::size_t n = j.dim;
    const double lambda_max = a.eig.eigenvalues.front();
    const double threshold = t.rank_tol * std::max(1.0, lambda_max);
    std::vector<ComplexMatrix> ops;
    ops.reserve(a.report.rank);
    for (std::size_t k_col = 0; k_col < a.eig.eigenvalues.size(); ++k_col) {
        const double lambda = a.eig.eigenvalues[k_col];
        if (lambda <= threshold) {
            break;  // eigenvalues are sorted descending
        }
        const double root = std::sqrt(lambda);
        ComplexMatrix m(n, n);
        for (std::size_t a_idx = 0; a_idx < n; ++a_idx) {
            for (std::size_t b_idx = 0; b_idx < n; ++b_idx) {
                m(a_idx, b_idx) = root * a.eig.eigenvectors(a_idx * n + b_idx, k_col);
            }
        }
        ops.push_back(std::move(m));
    }
    if (ops.empty()) {
        ops.emplace_back(n, n);  // the zero map still needs one operator
    }
    return KrausSet(n, std::move(ops));
}

KrausSet remix_kraus(const KrausSet& k, const ComplexMatrix& u) {
    if (!u.is_square() || u.rows() == 0) {
        throw DimensionMismatch("remix_kraus: remix matrix must be square and non-empty");
    }
    const std::size_t size = u.rows();
    if (size < k.operators.size()) {
        throw DimensionMismatch("remix_kraus: remix matrix is smaller than the Kraus set");
    }
    const double defect = max_abs_diff(u.adjoint() * u, ComplexMatrix::identity(size));
    if (defect > 1e-9) {
        throw NotUnitary("remix_kraus: unitarity defect " + std::to_string(defect));
    }
    // Operators beyond the original K are zero pads and contribute nothing.
    std::vector<ComplexMatrix> out;
    out.reserve(size);
    for (std::size_t j = 0; j < size; ++j) {
        ComplexMatrix m(k.dim, k.dim);
        for (std::size_t p = 0; p < k.operators.size(); ++p) {
            m += u(p, j) * k.operators[p];
        }
        out.push_back(std::move(m));
    }
    return KrausSet(k.dim, std::move(out));
}

std::size_t minimal_kraus_count(const ChoiMatrix& j, const Tolerances& t) {
    const Analysis a = analyze(j, t);
    if (!a.report.is_cp) {
        throw NotCp("minimal_kraus_count: the map is not completely positive");
    }
    return a.report.rank;
}

std::vector<ComplexMatrix> gram_vectors(const ComplexMatrix& s, double tol) {
    const ComplexMatrix q = psd_sqrt_factor(s, tol);
    const std::size_t n = s.rows();
    std::vector<ComplexMatrix> out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        ComplexMatrix f(n, 1);
        for (std::size_t k = 0; k < n; ++k) {
            f(k, 0) = std::conj(q(i, k));
        }
        out.push_back(std::move(f));
    }
    return out;
}

ComplexMatrix psd_from_blocks(const ComplexMatrix& s, const ComplexMatrix& c) {
    if (!s.is_square() || s.rows() == 0) {
        throw DimensionMismatch("psd_from_blocks: S must be square and non-empty");
    }
    if (c.rows() != 0 && c.cols() != s.rows()) {
        throw DimensionMismatch("psd_from_blocks: C must have as many columns as S");
    }
    EigenDecomposition eig;
    try {
        eig = hermitian_eigen(s, 1e-9);
    } catch (const NotHermitian& e) {
        throw NotPositiveDefinite(e.what());
    }
    if (eig.eigenvalues.back() <= 0.0) {
        throw NotPositiveDefinite("psd_from_blocks: S has an eigenvalue at or below zero");
    }
    if (c.rows() == 0) {
        return s;
    }
    const std::size_t n1 = s.rows();
    const std::size_t n2 = c.rows();
    const ComplexMatrix cs = c * s;                    // n2 x n1
    const ComplexMatrix sct = cs.adjoint();            // n1 x n2, exactly (CS)^dagger
    const ComplexMatrix csct = cs * c.adjoint();       // n2 x n2
    ComplexMatrix out(n1 + n2, n1 + n2);
    for (std::size_t r = 0; r < n1; ++r) {
        for (std::size_t col = 0; col < n1; ++col) {
            out(r, col) = s(r, col);
        }
        for (std::size_t col = 0; col < n2; ++col) {
            out(r, n1 + col) = sct(r, col);
        }
    }
    for (std::size_t r = 0; r < n2; ++r) {
        for (std::size_t col = 0; col < n1; ++col) {
            out(n1 + r, col) = cs(r, col);
        }
        for (std::size_t col = 0; col < n2; ++col) {
            out(n1 + r, n1 + col) = csct(r, col);
        }
    }
    return out;
}

}  // namespace cpmap
