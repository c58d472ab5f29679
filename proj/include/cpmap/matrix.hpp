#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <vector>

namespace cpmap {

using Complex = std::complex<double>;

// Dense row-major complex matrix; the single numeric carrier of the library.
// Entry (r, c) lives at entries()[r * cols() + c]. Constructors that accept
// caller data reject NaN/Inf entries; shapes with zero rows or columns are
// permitted (needed for empty blocks).
class ComplexMatrix {
public:
    ComplexMatrix() = default;
    ComplexMatrix(std::size_t rows, std::size_t cols);
    ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries);
    ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows);

    static ComplexMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }
    bool empty() const { return data_.empty(); }

    Complex& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Complex& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    const std::vector<Complex>& entries() const { return data_; }

    ComplexMatrix transpose() const;
    ComplexMatrix conjugate() const;
    ComplexMatrix adjoint() const;

    Complex trace() const;
    double max_abs() const;         // max entry modulus
    double frobenius_norm() const;
    bool is_finite() const;

    // Column c as an n-by-1 matrix.
    ComplexMatrix column(std::size_t c) const;

    ComplexMatrix& operator+=(const ComplexMatrix& other);
    ComplexMatrix& operator-=(const ComplexMatrix& other);
    ComplexMatrix& operator*=(Complex scalar);

    friend bool operator==(const ComplexMatrix& a, const ComplexMatrix& b) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Complex> data_;
};

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator*(Complex scalar, ComplexMatrix m);
ComplexMatrix operator*(ComplexMatrix m, Complex scalar);

// Matrix unit E_ij: single 1 at row i, column j.
ComplexMatrix matrix_unit(std::size_t n, std::size_t i, std::size_t j);

// Kronecker product. Entry at composite row (p, q), column (r, s) equals
// a(p, r) * b(q, s), with composite index (p, q) = p * b.rows() + q.
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

// Max entry modulus of a - b.
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);

// ||m - m^dagger||_max.
double hermiticity_defect(const ComplexMatrix& m);

}  // namespace cpmap
