#include "cpmap/zoo.hpp"

#include <cmath>
#include <limits>
#include <set>
#include <string>
#include <vector>

#include "cpmap/eigen.hpp"
#include "cpmap/errors.hpp"
#include "cpmap/random.hpp"

namespace cpmap {

namespace {

// Assemble a superoperator column by column from the images of the matrix
// units E_ij.
template <typename ImageFn>
SuperOperator superop_from_images(std::size_t n, ImageFn&& image) {
    ComplexMatrix action(n * n, n * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            const ComplexMatrix y = image(i, j);
            for (std::size_t m = 0; m < n; ++m) {
                for (std::size_t p = 0; p < n; ++p) {
                    action(m * n + p, i * n + j) = y(m, p);
                }
            }
        }
    }
    return SuperOperator(n, std::move(action));
}

double require_param(const std::map<std::string, double>& params, const std::string& name,
                     const std::string& channel) {
    const auto it = params.find(name);
    if (it == params.end()) {
        throw ParameterOutOfRange("zoo " + channel + ": missing parameter '" + name + "'");
    }
    return it->second;
}

std::uint64_t require_integer(const std::map<std::string, double>& params,
                              const std::string& name, const std::string& channel,
                              std::uint64_t minimum) {
    const double value = require_param(params, name, channel);
    if (!(value >= 0.0) || value != std::floor(value) ||
        value > static_cast<double>(std::numeric_limits<std::uint64_t>::max())) {
        throw ParameterOutOfRange("zoo " + channel + ": parameter '" + name +
                                  "' must be a non-negative integer");
    }
    const auto integral = static_cast<std::uint64_t>(value);
    if (integral < minimum) {
        throw ParameterOutOfRange("zoo " + channel + ": parameter '" + name + "' must be at least " +
                                  std::to_string(minimum));
    }
    return integral;
}

void reject_surplus(const std::map<std::string, double>& params,
                    const std::set<std::string>& expected, const std::string& channel) {
    for (const auto& [key, value] : params) {
        if (!expected.contains(key)) {
            throw ParameterOutOfRange("zoo " + channel + ": unknown parameter '" + key + "'");
        }
    }
}

}  // namespace

const ComplexMatrix& pauli_x() {
    static const ComplexMatrix m{{Complex(0, 0), Complex(1, 0)}, {Complex(1, 0), Complex(0, 0)}};
    return m;
}

const ComplexMatrix& pauli_y() {
    static const ComplexMatrix m{{Complex(0, 0), Complex(0, -1)}, {Complex(0, 1), Complex(0, 0)}};
    return m;
}

const ComplexMatrix& pauli_z() {
    static const ComplexMatrix m{{Complex(1, 0), Complex(0, 0)}, {Complex(0, 0), Complex(-1, 0)}};
    return m;
}

SuperOperator transpose_map(std::size_t n) {
    if (n < 2) {
        throw ParameterOutOfRange("transpose_map: dimension must be at least 2");
    }
    // E_ij maps to E_ji.
    return superop_from_images(n, [n](std::size_t i, std::size_t j) {
        return matrix_unit(n, j, i);
    });
}

SuperOperator depolarizing(double lambda, double mu) {
    const ComplexMatrix eye = ComplexMatrix::identity(2);
    return superop_from_images(2, [&](std::size_t i, std::size_t j) {
        ComplexMatrix y = matrix_unit(2, i, j);
        y *= Complex(mu, 0.0);
        if (i == j) {
            y += Complex(lambda / 2.0, 0.0) * eye;
        }
        return y;
    });
}

SuperOperator identity_channel(std::size_t n) {
    if (n < 1) {
        throw ParameterOutOfRange("identity_channel: dimension must be at least 1");
    }
    return SuperOperator(n, ComplexMatrix::identity(n * n));
}

SuperOperator dephasing(double p) {
    if (!(p >= 0.0 && p <= 1.0)) {
        throw ParameterOutOfRange("dephasing: p must lie in [0, 1]");
    }
    const ComplexMatrix keep = Complex(std::sqrt(1.0 - p), 0.0) * ComplexMatrix::identity(2);
    const ComplexMatrix flip = Complex(std::sqrt(p), 0.0) * pauli_z();
    const KrausSet kraus(2, {keep, flip});
    return superop_from_images(2, [&kraus](std::size_t i, std::size_t j) {
        return apply_kraus(kraus, matrix_unit(2, i, j));
    });
}

KrausSet random_cptp(std::size_t n, std::size_t k, std::uint64_t seed) {
    if (n < 2) {
        throw ParameterOutOfRange("random_cptp: dimension must be at least 2");
    }
    if (k < 1) {
        throw ParameterOutOfRange("random_cptp: need at least one operator");
    }
    Rng rng(seed);
    for (int attempt = 0; attempt < 8; ++attempt) {
        std::vector<ComplexMatrix> ops;
        ops.reserve(k);
        for (std::size_t p = 0; p < k; ++p) {
            ops.push_back(random_ginibre(n, n, rng));
        }
        ComplexMatrix total(n, n);
        for (const ComplexMatrix& op : ops) {
            total += op.adjoint() * op;
        }
        const EigenDecomposition eig = hermitian_eigen(total, 1e-9);
        if (eig.eigenvalues.back() <= 1e-12 * std::max(1.0, eig.eigenvalues.front())) {
            continue;  // numerically singular; resample
        }
        // Whiten by T^{-1/2} = P D^{-1/2} P^dagger so the sum becomes I.
        ComplexMatrix white(n, n);
        for (std::size_t r = 0; r < n; ++r) {
            for (std::size_t c = 0; c < n; ++c) {
                Complex sum(0.0, 0.0);
                for (std::size_t m = 0; m < n; ++m) {
                    sum += eig.eigenvectors(r, m) * std::conj(eig.eigenvectors(c, m)) /
                           std::sqrt(eig.eigenvalues[m]);
                }
                white(r, c) = sum;
            }
        }
        for (ComplexMatrix& op : ops) {
            op = op * white;
        }
        return KrausSet(n, std::move(ops));
    }
    throw SingularNormalization("random_cptp: normalization sum stayed singular after 8 samples");
}

ZooEntry make_zoo_entry(const std::string& name,
                        const std::map<std::string, double>& parameters) {
    if (name == "transpose") {
        reject_surplus(parameters, {"n"}, name);
        const auto n = static_cast<std::size_t>(require_integer(parameters, "n", name, 2));
        return ZooEntry{name, parameters, transpose_map(n)};
    }
    if (name == "depolarizing") {
        reject_surplus(parameters, {"lambda", "mu"}, name);
        const double lambda = require_param(parameters, "lambda", name);
        const double mu = require_param(parameters, "mu", name);
        return ZooEntry{name, parameters, depolarizing(lambda, mu)};
    }
    if (name == "identity") {
        reject_surplus(parameters, {"n"}, name);
        const auto n = static_cast<std::size_t>(require_integer(parameters, "n", name, 1));
        return ZooEntry{name, parameters, identity_channel(n)};
    }
    if (name == "dephasing") {
        reject_surplus(parameters, {"p"}, name);
        const double p = require_param(parameters, "p", name);
        return ZooEntry{name, parameters, dephasing(p)};
    }
    if (name == "random_cptp") {
        reject_surplus(parameters, {"n", "k", "seed"}, name);
        const auto n = static_cast<std::size_t>(require_integer(parameters, "n", name, 2));
        const auto k = static_cast<std::size_t>(require_integer(parameters, "k", name, 1));
        const std::uint64_t seed = require_integer(parameters, "seed", name, 0);
        const KrausSet kraus = random_cptp(n, k, seed);
        return ZooEntry{name, parameters,
                        superop_from_images(n, [&kraus, n](std::size_t i, std::size_t j) {
                            return apply_kraus(kraus, matrix_unit(n, i, j));
                        })};
    }
    throw ParameterOutOfRange("zoo: unknown channel '" + name + "'");
}

std::string zoo_usage() {
    return "known zoo channels:\n"
           "  transpose n=<int >= 2>\n"
           "  depolarizing lambda=<real> mu=<real>\n"
           "  identity n=<int >= 1>\n"
           "  dephasing p=<real in [0, 1]>\n"
           "  random_cptp n=<int >= 2> k=<int >= 1> seed=<int >= 0>\n";
}

}  // namespace cpmap
