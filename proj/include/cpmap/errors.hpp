#pragma once

#include <stdexcept>
#include <string>

namespace cpmap {

// Base class for all library errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Operand shapes do not conform (or a structural invariant like K >= 1 fails).
class DimensionMismatch : public Error {
public:
    using Error::Error;
};

// Input matrix is not Hermitian within the requested tolerance.
class NotHermitian : public Error {
public:
    using Error::Error;
};

// Jacobi sweeps exhausted before the off-diagonal norm reached threshold.
class NoConvergence : public Error {
public:
    using Error::Error;
};

// Eigenvalue below the negative clip threshold; matrix is not PSD.
class NotPsd : public Error {
public:
    using Error::Error;
};

// Matrix is not positive definite (some eigenvalue <= 0).
class NotPositiveDefinite : public Error {
public:
    using Error::Error;
};

// Choi matrix failed the complete-positivity verdict.
class NotCp : public Error {
public:
    using Error::Error;
};

// Matrix expected to be unitary is not, within tolerance.
class NotUnitary : public Error {
public:
    using Error::Error;
};

// A constructor parameter is outside its admissible range.
class ParameterOutOfRange : public Error {
public:
    using Error::Error;
};

// Kraus whitening failed: the normalization sum stayed numerically singular.
class SingularNormalization : public Error {
public:
    using Error::Error;
};

// An internal numerical routine failed (e.g. eigensolver did not converge).
class NumericalFailure : public Error {
public:
    using Error::Error;
};

// A channel spec or matrix file could not be parsed or failed schema checks.
class SpecParseError : public Error {
public:
    using Error::Error;
};

}  // namespace cpmap
