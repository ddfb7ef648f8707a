#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace gabor {

/// Coarse failure class, used by the CLI to pick an exit code.
enum class ErrorKind {
    Config,     ///< bad input / violated precondition
    Numerical,  ///< an algorithm failed to deliver the requested accuracy
    Guard       ///< a resource guard tripped (problem too large)
};

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

struct NotHermitianError : Error {
    explicit NotHermitianError(double defect)
        : Error(ErrorKind::Config,
                "matrix is not Hermitian (max |A - A*| entry = " + std::to_string(defect) + ")") {}
};

struct NoConvergenceError : Error {
    NoConvergenceError(double residual, int sweeps)
        : Error(ErrorKind::Numerical, "eigensolver did not converge within " + std::to_string(sweeps) +
                                          " sweeps (residual " + std::to_string(residual) + ")") {}
};

struct AlltopRequiresPrimeError : Error {
    explicit AlltopRequiresPrimeError(std::size_t m)
        : Error(ErrorKind::Config,
                "Alltop window requires a prime dimension M >= 5, got M = " + std::to_string(m)) {}
};

struct EmptyFrameSetError : Error {
    EmptyFrameSetError() : Error(ErrorKind::Config, "frame set is empty") {}
};

struct DimensionMismatchError : Error {
    DimensionMismatchError(std::size_t a, std::size_t b)
        : Error(ErrorKind::Config,
                "dimension mismatch: " + std::to_string(a) + " vs " + std::to_string(b)) {}
};

struct NotUnitNormError : Error {
    explicit NotUnitNormError(double deviation)
        : Error(ErrorKind::Config,
                "columns are not unit-norm (max deviation " + std::to_string(deviation) + ")") {}
};

struct MTooLargeError : Error {
    explicit MTooLargeError(std::size_t m)
        : Error(ErrorKind::Guard,
                "moment order m = " + std::to_string(m) + " exceeds the factorial-search guard (m <= 8)") {}
};

struct TooManyTermsError : Error {
    explicit TooManyTermsError(double terms)
        : Error(ErrorKind::Guard, "combinatorial sum would need about " + std::to_string(terms) +
                                      " terms (guard: 1e8)") {}
};

struct SubsetTooLargeError : Error {
    SubsetTooLargeError(std::size_t n, std::size_t j)
        : Error(ErrorKind::Guard, "exhaustive enumeration of C(" + std::to_string(n) + "," +
                                      std::to_string(j) + ") subsets exceeds the 2e7 guard") {}
};

struct NotOrthonormalBasisError : Error {
    explicit NotOrthonormalBasisError(std::size_t basis)
        : Error(ErrorKind::Config, "block " + std::to_string(basis) + " is not an orthonormal basis"),
          basis_index(basis) {}
    std::size_t basis_index;
};

struct CoherenceExceededError : Error {
    CoherenceExceededError(std::size_t i, std::size_t j, double value)
        : Error(ErrorKind::Config, "cross-basis coherence between columns " + std::to_string(i) + " and " +
                                       std::to_string(j) + " is " + std::to_string(value)),
          col_i(i), col_j(j), coherence_value(value) {}
    std::size_t col_i;
    std::size_t col_j;
    double coherence_value;
};

struct InvalidArgumentError : Error {
    explicit InvalidArgumentError(const std::string& what) : Error(ErrorKind::Config, what) {}
};

}  // namespace gabor
