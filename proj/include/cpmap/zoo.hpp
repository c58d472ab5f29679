#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "cpmap/channel.hpp"
#include "cpmap/matrix.hpp"

namespace cpmap {

// Pauli matrices in the standard convention (sigma_y = [[0, -i], [i, 0]]).
const ComplexMatrix& pauli_x();
const ComplexMatrix& pauli_y();
const ComplexMatrix& pauli_z();

// Named channel constructors. Each builds the superoperator form directly;
// Choi and Kraus forms are derived on demand by the callers.

// X -> X^T on n x n matrices (n >= 2). Positive but never completely
// positive; its Choi matrix has eigenvalue -1.
SuperOperator transpose_map(std::size_t n);

// X -> (lambda/2) tr(X) I + mu X on 2 x 2 matrices. Parameters outside the
// CP region are accepted on purpose: the verdict must be able to say no.
SuperOperator depolarizing(double lambda, double mu);

// X -> X on n x n matrices (n >= 1).
SuperOperator identity_channel(std::size_t n);

// Qubit channel with Kraus set {sqrt(1-p) I, sqrt(p) sigma_z}, 0 <= p <= 1.
SuperOperator dephasing(double p);

// k Ginibre matrices whitened so that sum M_p^dagger M_p = I (n >= 2,
// k >= 1); deterministic per seed. Throws SingularNormalization if eight
// resamples in a row stay numerically singular.
KrausSet random_cptp(std::size_t n, std::size_t k, std::uint64_t seed);

// A zoo channel as the CLI sees it: the resolved name, the parameter values
// used, and the superoperator.
struct ZooEntry {
    std::string name;
    std::map<std::string, double> parameters;
    SuperOperator channel;
};

// Look up a constructor by name and build it from named parameters:
// transpose{n}, depolarizing{lambda,mu}, identity{n}, dephasing{p},
// random_cptp{n,k,seed}. Unknown names, missing, surplus, or non-integral
// integer parameters throw ParameterOutOfRange.
ZooEntry make_zoo_entry(const std::string& name,
                        const std::map<std::string, double>& parameters);

// One line per zoo channel, for usage text.
std::string zoo_usage();

}  // namespace cpmap
