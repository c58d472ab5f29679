#include "cpmap/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "cpmap/errors.hpp"

namespace cpmap {

namespace {

void require_same_shape(const ComplexMatrix& a, const ComplexMatrix& b, const char* op) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw DimensionMismatch(std::string(op) + ": shapes " + std::to_string(a.rows()) + "x" +
                                std::to_string(a.cols()) + " and " + std::to_string(b.rows()) +
                                "x" + std::to_string(b.cols()) + " do not match");
    }
}

bool finite(Complex z) {
    return std::isfinite(z.real()) && std::isfinite(z.imag());
}

}  // namespace

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, Complex(0.0, 0.0)) {}

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
    if (data_.size() != rows_ * cols_) {
        throw DimensionMismatch("ComplexMatrix: entry count " + std::to_string(data_.size()) +
                                " does not equal rows*cols = " + std::to_string(rows_ * cols_));
    }
    if (!is_finite()) {
        throw ParameterOutOfRange("ComplexMatrix: non-finite entry");
    }
}

ComplexMatrix::ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto& row : rows) {
        if (row.size() != cols_) {
            throw DimensionMismatch("ComplexMatrix: ragged initializer");
        }
        data_.insert(data_.end(), row.begin(), row.end());
    }
    if (!is_finite()) {
        throw ParameterOutOfRange("ComplexMatrix: non-finite entry");
    }
}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
    ComplexMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        m(i, i) = Complex(1.0, 0.0);
    }
    return m;
}

ComplexMatrix ComplexMatrix::transpose() const {
    ComplexMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) {
            t(c, r) = (*this)(r, c);
        }
    }
    return t;
}

ComplexMatrix ComplexMatrix::conjugate() const {
    ComplexMatrix t(*this);
    for (auto& z : t.data_) {
        z = std::conj(z);
    }
    return t;
}

ComplexMatrix ComplexMatrix::adjoint() const {
    ComplexMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) {
            t(c, r) = std::conj((*this)(r, c));
        }
    }
    return t;
}

Complex ComplexMatrix::trace() const {
    if (!is_square()) {
        throw DimensionMismatch("trace: matrix is not square");
    }
    Complex sum(0.0, 0.0);
    for (std::size_t i = 0; i < rows_; ++i) {
        sum += (*this)(i, i);
    }
    return sum;
}

double ComplexMatrix::max_abs() const {
    double m = 0.0;
    for (const auto& z : data_) {
        m = std::max(m, std::abs(z));
    }
    return m;
}

double ComplexMatrix::frobenius_norm() const {
    double sum = 0.0;
    for (const auto& z : data_) {
        sum += std::norm(z);
    }
    return std::sqrt(sum);
}

bool ComplexMatrix::is_finite() const {
    return std::all_of(data_.begin(), data_.end(), finite);
}

ComplexMatrix ComplexMatrix::column(std::size_t c) const {
    ComplexMatrix v(rows_, 1);
    for (std::size_t r = 0; r < rows_; ++r) {
        v(r, 0) = (*this)(r, c);
    }
    return v;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& other) {
    require_same_shape(*this, other, "operator+");
    for (std::size_t i = 0; i < data_.size(); ++i) {
        data_[i] += other.data_[i];
    }
    return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& other) {
    require_same_shape(*this, other, "operator-");
    for (std::size_t i = 0; i < data_.size(); ++i) {
        data_[i] -= other.data_[i];
    }
    return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(Complex scalar) {
    for (auto& z : data_) {
        z *= scalar;
    }
    return *this;
}

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) {
    a += b;
    return a;
}

ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) {
    a -= b;
    return a;
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.cols() != b.rows()) {
        throw DimensionMismatch("operator*: inner dimensions " + std::to_string(a.cols()) +
                                " and " + std::to_string(b.rows()) + " do not match");
    }
    ComplexMatrix out(a.rows(), b.cols());
    for (std::size_t r = 0; r < a.rows(); ++r) {
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const Complex ark = a(r, k);
            if (ark == Complex(0.0, 0.0)) {
                continue;
            }
            for (std::size_t c = 0; c < b.cols(); ++c) {
                out(r, c) += ark * b(k, c);
            }
        }
    }
    return out;
}

ComplexMatrix operator*(Complex scalar, ComplexMatrix m) {
    m *= scalar;
    return m;
}

ComplexMatrix operator*(ComplexMatrix m, Complex scalar) {
    m *= scalar;
    return m;
}

ComplexMatrix matrix_unit(std::size_t n, std::size_t i, std::size_t j) {
    if (i >= n || j >= n) {
        throw DimensionMismatch("matrix_unit: index out of range");
    }
    ComplexMatrix m(n, n);
    m(i, j) = Complex(1.0, 0.0);
    return m;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
    ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t p = 0; p < a.rows(); ++p) {
        for (std::size_t r = 0; r < a.cols(); ++r) {
            const Complex apr = a(p, r);
            if (apr == Complex(0.0, 0.0)) {
                continue;
            }
            for (std::size_t q = 0; q < b.rows(); ++q) {
                for (std::size_t s = 0; s < b.cols(); ++s) {
                    out(p * b.rows() + q, r * b.cols() + s) = apr * b(q, s);
                }
            }
        }
    }
    return out;
}

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
    require_same_shape(a, b, "max_abs_diff");
    double m = 0.0;
    for (std::size_t r = 0; r < a.rows(); ++r) {
        for (std::size_t c = 0; c < a.cols(); ++c) {
            m = std::max(m, std::abs(a(r, c) - b(r, c)));
        }
    }
    return m;
}

double hermiticity_defect(const ComplexMatrix& m) {
    if (!m.is_square()) {
        throw DimensionMismatch("hermiticity_defect: matrix is not square");
    }
    double d = 0.0;
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) {
            d = std::max(d, std::abs(m(r, c) - std::conj(m(c, r))));
        }
    }
    return d;
}

}  // namespace cpmap
