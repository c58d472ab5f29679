#include "cpmap/eigen.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "cpmap/errors.hpp"

namespace cpmap {

namespace {

constexpr int kMaxSweeps = 100;
constexpr double kOffdiagFactor = 1e-13;

double offdiag_frobenius(const ComplexMatrix& a) {
    double sum = 0.0;
    for (std::size_t r = 0; r < a.rows(); ++r) {
        for (std::size_t c = 0; c < a.cols(); ++c) {
            if (r != c) {
                sum += std::norm(a(r, c));
            }
        }
    }
    return std::sqrt(sum);
}

// One complex Jacobi rotation annihilating a(p, q). The pivot phase is
// factored out so the remaining 2x2 problem is real symmetric; the rotation
// root is chosen so that the larger combined eigenvalue lands on index p,
// which keeps the later stable sort from reshuffling untouched basis
// directions.
void rotate(ComplexMatrix& a, ComplexMatrix& v, std::size_t p, std::size_t q) {
    const std::size_t n = a.rows();
    const Complex z = a(p, q);
    const double r = std::abs(z);
    const Complex f = z / r;  // e^{i phi}

    const double app = a(p, p).real();
    const double aqq = a(q, q).real();
    const double tau = (aqq - app) / (2.0 * r);
    const double t = (tau > 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
    const double c = 1.0 / std::sqrt(1.0 + t * t);
    const double s = t * c;

    // A <- A R, columns p and q; R_pp = c, R_pq = s, R_qp = -s conj(f),
    // R_qq = c conj(f).
    for (std::size_t i = 0; i < n; ++i) {
        const Complex aip = a(i, p);
        const Complex aiq = a(i, q);
        a(i, p) = c * aip - s * std::conj(f) * aiq;
        a(i, q) = s * aip + c * std::conj(f) * aiq;
    }
    // A <- R^dagger A, rows p and q.
    for (std::size_t j = 0; j < n; ++j) {
        const Complex apj = a(p, j);
        const Complex aqj = a(q, j);
        a(p, j) = c * apj - s * f * aqj;
        a(q, j) = s * apj + c * f * aqj;
    }
    // The pivot is exactly annihilated and the diagonal stays real.
    a(p, q) = Complex(0.0, 0.0);
    a(q, p) = Complex(0.0, 0.0);
    a(p, p) = Complex(a(p, p).real(), 0.0);
    a(q, q) = Complex(a(q, q).real(), 0.0);

    // Accumulate V <- V R.
    for (std::size_t i = 0; i < n; ++i) {
        const Complex vip = v(i, p);
        const Complex viq = v(i, q);
        v(i, p) = c * vip - s * std::conj(f) * viq;
        v(i, q) = s * vip + c * std::conj(f) * viq;
    }
}

// Scale each column so its largest-magnitude entry (lowest index on ties)
// is real positive.
void fix_phases(ComplexMatrix& v) {
    for (std::size_t k = 0; k < v.cols(); ++k) {
        std::size_t imax = 0;
        double best = 0.0;
        for (std::size_t i = 0; i < v.rows(); ++i) {
            const double mag = std::abs(v(i, k));
            if (mag > best) {
                best = mag;
                imax = i;
            }
        }
        if (best == 0.0) {
            continue;
        }
        const Complex phase = v(imax, k) / best;
        const Complex mult = std::conj(phase);
        for (std::size_t i = 0; i < v.rows(); ++i) {
            v(i, k) *= mult;
        }
        v(imax, k) = Complex(best, 0.0);
    }
}

}  // namespace

EigenDecomposition hermitian_eigen(const ComplexMatrix& m, double tol) {
    if (!m.is_square() || m.rows() == 0) {
        throw DimensionMismatch("hermitian_eigen: matrix must be square and non-empty");
    }
    const double defect = hermiticity_defect(m);
    if (defect > tol * std::max(1.0, m.max_abs())) {
        throw NotHermitian("hermitian_eigen: hermiticity defect " + std::to_string(defect) +
                           " exceeds tolerance");
    }

    const std::size_t n = m.rows();

    // Work on the Hermitian average, removing the admitted defect.
    ComplexMatrix a(n, n);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) {
            a(r, c) = 0.5 * (m(r, c) + std::conj(m(c, r)));
        }
    }
    ComplexMatrix v = ComplexMatrix::identity(n);

    const double target = kOffdiagFactor * m.frobenius_norm();
    // A pivot this small cannot keep the off-diagonal norm above target even
    // if every entry sat at the bound, so skipping it is safe.
    const double skip = target / static_cast<double>(n);

    int sweep = 0;
    while (offdiag_frobenius(a) > target) {
        if (sweep++ >= kMaxSweeps) {
            throw NoConvergence("hermitian_eigen: off-diagonal norm above threshold after " +
                                std::to_string(kMaxSweeps) + " sweeps");
        }
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                if (std::abs(a(p, q)) > skip) {
                    rotate(a, v, p, q);
                }
            }
        }
    }

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&a](std::size_t i, std::size_t j) {
        return a(i, i).real() > a(j, j).real();
    });

    EigenDecomposition out;
    out.eigenvalues.resize(n);
    out.eigenvectors = ComplexMatrix(n, n);
    for (std::size_t k = 0; k < n; ++k) {
        out.eigenvalues[k] = a(order[k], order[k]).real();
        for (std::size_t i = 0; i < n; ++i) {
            out.eigenvectors(i, k) = v(i, order[k]);
        }
    }
    fix_phases(out.eigenvectors);
    return out;
}

ComplexMatrix psd_sqrt_factor(const ComplexMatrix& m, double tol) {
    const EigenDecomposition eig = hermitian_eigen(m, tol);
    const double lambda_max = eig.eigenvalues.front();
    const double clip = tol * std::max(1.0, lambda_max);

    ComplexMatrix q = eig.eigenvectors;
    for (std::size_t k = 0; k < eig.eigenvalues.size(); ++k) {
        const double lambda = eig.eigenvalues[k];
        if (lambda < -clip) {
            throw NotPsd("psd_sqrt_factor: eigenvalue " + std::to_string(lambda) +
                         " below clip threshold " + std::to_string(-clip));
        }
        const double root = lambda > 0.0 ? std::sqrt(lambda) : 0.0;
        for (std::size_t i = 0; i < q.rows(); ++i) {
            q(i, k) *= root;
        }
    }
    return q;
}

std::vector<ComplexMatrix> gram_schmidt(std::span<const ComplexMatrix> vectors, double tol) {
    if (tol <= 0.0) {
        throw ParameterOutOfRange("gram_schmidt: tol must be positive");
    }
    std::vector<ComplexMatrix> basis;
    for (const ComplexMatrix& input : vectors) {
        if (input.cols() != 1) {
            throw DimensionMismatch("gram_schmidt: inputs must be column vectors");
        }
        if (!basis.empty() && input.rows() != basis.front().rows()) {
            throw DimensionMismatch("gram_schmidt: vectors differ in length");
        }
        ComplexMatrix v = input;
        for (int pass = 0; pass < 2; ++pass) {
            for (const ComplexMatrix& b : basis) {
                Complex overlap(0.0, 0.0);
                for (std::size_t i = 0; i < v.rows(); ++i) {
                    overlap += std::conj(b(i, 0)) * v(i, 0);
                }
                for (std::size_t i = 0; i < v.rows(); ++i) {
                    v(i, 0) -= overlap * b(i, 0);
                }
            }
        }
        const double norm = v.frobenius_norm();
        if (norm < tol) {
            continue;  // dependent direction, dropped
        }
        v *= Complex(1.0 / norm, 0.0);
        basis.push_back(std::move(v));
    }
    return basis;
}

}  // namespace cpmap
