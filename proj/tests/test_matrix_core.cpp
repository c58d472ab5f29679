#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <limits>
#include <span>
#include <vector>

#include "cpmap/eigen.hpp"
#include "cpmap/errors.hpp"
#include "cpmap/matrix.hpp"
#include "cpmap/random.hpp"
#include "test_helpers.hpp"

using namespace cpmap;
using cpmap::testing::approx_equal;

namespace {

const Complex kOne(1.0, 0.0);

ComplexMatrix diag(const std::vector<double>& values) {
    ComplexMatrix m(values.size(), values.size());
    for (std::size_t i = 0; i < values.size(); ++i) {
        m(i, i) = Complex(values[i], 0.0);
    }
    return m;
}

ComplexMatrix column(const std::vector<Complex>& entries) {
    ComplexMatrix v(entries.size(), 1);
    for (std::size_t i = 0; i < entries.size(); ++i) {
        v(i, 0) = entries[i];
    }
    return v;
}

}  // namespace

TEST_CASE("matrix arithmetic basics") {
    const ComplexMatrix a{{Complex(1, 2), Complex(3, 0)}, {Complex(0, -1), Complex(2, 2)}};
    CHECK(approx_equal(a + a, Complex(2, 0) * a, 1e-15));
    CHECK(approx_equal(a - a, ComplexMatrix(2, 2), 1e-15));
    CHECK(approx_equal(a * ComplexMatrix::identity(2), a, 1e-15));
    CHECK(a.adjoint().rows() == 2);
    CHECK(a.adjoint()(0, 1) == Complex(0, 1));
    CHECK(a.trace() == Complex(3, 4));
    CHECK(a.max_abs() == doctest::Approx(3.0));
    CHECK(hermiticity_defect(ComplexMatrix::identity(3)) == 0.0);
    CHECK(matrix_unit(2, 0, 1)(0, 1) == kOne);
    CHECK(matrix_unit(2, 0, 1)(1, 0) == Complex(0, 0));
}

TEST_CASE("matrix constructors reject bad input") {
    CHECK_THROWS_AS(ComplexMatrix(2, 2, {kOne}), DimensionMismatch);
    const double inf = std::numeric_limits<double>::infinity();
    CHECK_THROWS_AS(ComplexMatrix(1, 1, {Complex(inf, 0)}), ParameterOutOfRange);
    CHECK_THROWS_AS(ComplexMatrix(2, 3) * ComplexMatrix(2, 2), DimensionMismatch);
    CHECK_THROWS_AS(ComplexMatrix(2, 2) + ComplexMatrix(3, 3), DimensionMismatch);
}

TEST_CASE("kron identity case") {
    CHECK(approx_equal(kron(ComplexMatrix::identity(2), ComplexMatrix::identity(2)),
                       ComplexMatrix::identity(4), 0.0));
}

TEST_CASE("kron basis case") {
    const ComplexMatrix k = kron(matrix_unit(2, 0, 0), matrix_unit(2, 0, 0));
    ComplexMatrix expected(4, 4);
    expected(0, 0) = kOne;
    CHECK(approx_equal(k, expected, 0.0));
}

TEST_CASE("kron hand-expanded example") {
    const ComplexMatrix a{{Complex(0, 0), Complex(1, 0)}, {Complex(1, 0), Complex(0, 0)}};
    const ComplexMatrix b{{Complex(2, 0), Complex(0, 0)}, {Complex(0, 0), Complex(3, 0)}};
    const ComplexMatrix expected{
        {Complex(0, 0), Complex(0, 0), Complex(2, 0), Complex(0, 0)},
        {Complex(0, 0), Complex(0, 0), Complex(0, 0), Complex(3, 0)},
        {Complex(2, 0), Complex(0, 0), Complex(0, 0), Complex(0, 0)},
        {Complex(0, 0), Complex(3, 0), Complex(0, 0), Complex(0, 0)}};
    CHECK(approx_equal(kron(a, b), expected, 0.0));
}

TEST_CASE("kron mixed-product and bilinearity properties") {
    Rng rng(11);
    for (int trial = 0; trial < 10; ++trial) {
        const ComplexMatrix a = random_ginibre(2, 3, rng);
        const ComplexMatrix b = random_ginibre(3, 2, rng);
        const ComplexMatrix c = random_ginibre(3, 2, rng);
        const ComplexMatrix d = random_ginibre(2, 3, rng);
        CHECK(approx_equal(kron(a, b) * kron(c, d), kron(a * c, b * d), 1e-10));
        const Complex alpha(0.3, -0.7);
        CHECK(approx_equal(kron(alpha * a, b), alpha * kron(a, b), 1e-12));
        CHECK(approx_equal(kron(a + a, b), kron(a, b) + kron(a, b), 1e-12));
    }
}

TEST_CASE("hermitian_eigen on a diagonal matrix sorts and permutes") {
    const EigenDecomposition eig = hermitian_eigen(diag({3, 1, 2}), 1e-9);
    REQUIRE(eig.eigenvalues.size() == 3);
    CHECK(eig.eigenvalues[0] == doctest::Approx(3.0));
    CHECK(eig.eigenvalues[1] == doctest::Approx(2.0));
    CHECK(eig.eigenvalues[2] == doctest::Approx(1.0));
    // Eigenvectors are the identity columns permuted to match the sort.
    CHECK(eig.eigenvectors(0, 0) == kOne);
    CHECK(eig.eigenvectors(2, 1) == kOne);
    CHECK(eig.eigenvectors(1, 2) == kOne);
}

TEST_CASE("hermitian_eigen on the N=2 transposition Choi matrix") {
    const ComplexMatrix j{{kOne, Complex(0, 0), Complex(0, 0), Complex(0, 0)},
                          {Complex(0, 0), Complex(0, 0), kOne, Complex(0, 0)},
                          {Complex(0, 0), kOne, Complex(0, 0), Complex(0, 0)},
                          {Complex(0, 0), Complex(0, 0), Complex(0, 0), kOne}};
    const EigenDecomposition eig = hermitian_eigen(j, 1e-9);
    CHECK(eig.eigenvalues[0] == doctest::Approx(1.0));
    CHECK(eig.eigenvalues[1] == doctest::Approx(1.0));
    CHECK(eig.eigenvalues[2] == doctest::Approx(1.0));
    CHECK(eig.eigenvalues[3] == doctest::Approx(-1.0));
}

TEST_CASE("hermitian_eigen depolarizing spectrum") {
    const double lambda = 0.5;
    const double mu = 0.25;
    ComplexMatrix j(4, 4);
    j(0, 0) = j(3, 3) = Complex(lambda / 2 + mu, 0);
    j(1, 1) = j(2, 2) = Complex(lambda / 2, 0);
    j(0, 3) = j(3, 0) = Complex(mu, 0);
    const EigenDecomposition eig = hermitian_eigen(j, 1e-9);
    CHECK(eig.eigenvalues[0] == doctest::Approx(lambda / 2 + 2 * mu).epsilon(1e-12));
    CHECK(eig.eigenvalues[1] == doctest::Approx(lambda / 2).epsilon(1e-12));
    CHECK(eig.eigenvalues[2] == doctest::Approx(lambda / 2).epsilon(1e-12));
    CHECK(eig.eigenvalues[3] == doctest::Approx(lambda / 2).epsilon(1e-12));
}

TEST_CASE("hermitian_eigen rejects non-Hermitian input") {
    const ComplexMatrix m{{kOne, kOne}, {Complex(2, 0), kOne}};
    CHECK_THROWS_AS(hermitian_eigen(m, 1e-9), NotHermitian);
}

TEST_CASE("hermitian_eigen reconstruction and trace properties") {
    Rng rng(23);
    for (std::size_t n : {2, 3, 5, 8, 12}) {
        const ComplexMatrix h = cpmap::testing::random_hermitian(n, rng);
        const EigenDecomposition eig = hermitian_eigen(h, 1e-9);
        const ComplexMatrix p = eig.eigenvectors;
        CHECK(max_abs_diff(p.adjoint() * p, ComplexMatrix::identity(n)) <= 1e-10);
        ComplexMatrix reconstructed = p * diag(eig.eigenvalues) * p.adjoint();
        CHECK(max_abs_diff(reconstructed, h) <= 1e-9 * std::max(1.0, h.max_abs()));
        double eig_sum = 0.0;
        for (double v : eig.eigenvalues) {
            eig_sum += v;
        }
        CHECK(std::abs(eig_sum - h.trace().real()) <=
              1e-9 * static_cast<double>(n) * std::max(1.0, h.max_abs()));
        for (std::size_t k = 0; k + 1 < n; ++k) {
            CHECK(eig.eigenvalues[k] >= eig.eigenvalues[k + 1]);
        }
    }
}

TEST_CASE("hermitian_eigen is deterministic") {
    Rng rng(5);
    const ComplexMatrix h = cpmap::testing::random_hermitian(6, rng);
    const EigenDecomposition first = hermitian_eigen(h, 1e-9);
    const EigenDecomposition second = hermitian_eigen(h, 1e-9);
    CHECK(first.eigenvalues == second.eigenvalues);
    CHECK(first.eigenvectors == second.eigenvectors);
}

TEST_CASE("psd_sqrt_factor identity") {
    const ComplexMatrix q = psd_sqrt_factor(ComplexMatrix::identity(4), 1e-9);
    CHECK(approx_equal(q, ComplexMatrix::identity(4), 1e-12));
}

TEST_CASE("psd_sqrt_factor diagonal with a zero eigenvalue") {
    const ComplexMatrix q = psd_sqrt_factor(diag({4, 0}), 1e-9);
    const ComplexMatrix expected{{Complex(2, 0), Complex(0, 0)}, {Complex(0, 0), Complex(0, 0)}};
    CHECK(approx_equal(q, expected, 1e-12));
}

TEST_CASE("psd_sqrt_factor scaled identity") {
    const ComplexMatrix half = Complex(0.5, 0) * ComplexMatrix::identity(4);
    const ComplexMatrix q = psd_sqrt_factor(half, 1e-9);
    CHECK(approx_equal(q * q.adjoint(), half, 1e-12));
}

TEST_CASE("psd_sqrt_factor roundtrip on random PSD input") {
    Rng rng(31);
    for (int trial = 0; trial < 10; ++trial) {
        const ComplexMatrix s = cpmap::testing::random_psd(5, rng);
        const ComplexMatrix q = psd_sqrt_factor(s, 1e-9);
        CHECK(max_abs_diff(q * q.adjoint(), s) <= 1e-9 * std::max(1.0, s.max_abs()));
    }
}

TEST_CASE("psd_sqrt_factor rejects indefinite input") {
    CHECK_THROWS_AS(psd_sqrt_factor(diag({1, -1}), 1e-9), NotPsd);
}

TEST_CASE("psd_sqrt_factor clips tiny negatives") {
    const ComplexMatrix q = psd_sqrt_factor(diag({1, -1e-12}), 1e-9);
    CHECK(max_abs_diff(q * q.adjoint(), diag({1, 0})) <= 1e-9);
}

TEST_CASE("gram_schmidt keeps an orthonormal pair") {
    const std::vector<ComplexMatrix> in = {column({kOne, Complex(0, 0)}),
                                           column({Complex(0, 0), kOne})};
    const auto out = gram_schmidt(std::span<const ComplexMatrix>(in), 1e-9);
    REQUIRE(out.size() == 2);
    CHECK(approx_equal(out[0], in[0], 1e-12));
    CHECK(approx_equal(out[1], in[1], 1e-12));
}

TEST_CASE("gram_schmidt orthonormalizes a slanted pair") {
    const std::vector<ComplexMatrix> in = {column({kOne, kOne}), column({kOne, Complex(0, 0)})};
    const auto out = gram_schmidt(std::span<const ComplexMatrix>(in), 1e-9);
    REQUIRE(out.size() == 2);
    const double r = 1.0 / std::sqrt(2.0);
    CHECK(cpmap::testing::proportional_to(out[0], column({Complex(r, 0), Complex(r, 0)}), 1e-12));
    CHECK(cpmap::testing::proportional_to(out[1], column({Complex(r, 0), Complex(-r, 0)}), 1e-12));
}

TEST_CASE("gram_schmidt drops a dependent vector") {
    const std::vector<ComplexMatrix> in = {column({kOne, Complex(0, 0)}),
                                           column({Complex(2, 0), Complex(0, 0)})};
    const auto out = gram_schmidt(std::span<const ComplexMatrix>(in), 1e-9);
    REQUIRE(out.size() == 1);
    CHECK(approx_equal(out[0], in[0], 1e-12));
}

TEST_CASE("gram_schmidt output Gram matrix is the identity") {
    Rng rng(47);
    std::vector<ComplexMatrix> in;
    for (int i = 0; i < 6; ++i) {
        in.push_back(random_ginibre(6, 1, rng));
    }
    const auto out = gram_schmidt(std::span<const ComplexMatrix>(in), 1e-9);
    REQUIRE(out.size() == 6);
    for (std::size_t i = 0; i < out.size(); ++i) {
        for (std::size_t j = 0; j < out.size(); ++j) {
            const ComplexMatrix prod = out[i].adjoint() * out[j];
            const Complex expected = i == j ? kOne : Complex(0, 0);
            CHECK(std::abs(prod(0, 0) - expected) <= 1e-10);
        }
    }
}

TEST_CASE("random_unitary is unitary and deterministic") {
    const ComplexMatrix u1 = random_unitary(1, 3);
    CHECK(std::abs(std::abs(u1(0, 0)) - 1.0) <= 1e-10);

    const ComplexMatrix u = random_unitary(4, 7);
    CHECK(max_abs_diff(u.adjoint() * u, ComplexMatrix::identity(4)) <= 1e-10);

    CHECK(random_unitary(3, 99) == random_unitary(3, 99));
    CHECK(random_unitary(3, 99) != random_unitary(3, 100));
}
