#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <numbers>
#include <vector>

#include "gabor/errors.hpp"

namespace gabor {

using cplx = std::complex<double>;

/// Dense row-major complex matrix. Everything in this library is small
/// (M <= a few hundred), so the representation is deliberately plain.
struct ComplexMatrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<cplx> entries;  // row-major, entries.size() == rows * cols

    ComplexMatrix() = default;
    ComplexMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), entries(r * c) {}

    cplx& operator()(std::size_t i, std::size_t j) { return entries[i * cols + j]; }
    const cplx& operator()(std::size_t i, std::size_t j) const { return entries[i * cols + j]; }

    static ComplexMatrix identity(std::size_t n) {
        ComplexMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
        return m;
    }

    bool all_finite() const {
        for (const cplx& z : entries)
            if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
        return true;
    }
};

inline ComplexMatrix multiply(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.cols != b.rows) throw DimensionMismatchError(a.cols, b.rows);
    ComplexMatrix out(a.rows, b.cols);
    for (std::size_t i = 0; i < a.rows; ++i) {
        for (std::size_t k = 0; k < a.cols; ++k) {
            const cplx aik = a(i, k);
            if (aik == cplx{}) continue;
            const cplx* brow = &b.entries[k * b.cols];
            cplx* orow = &out.entries[i * out.cols];
            for (std::size_t j = 0; j < b.cols; ++j) orow[j] += aik * brow[j];
        }
    }
    return out;
}

inline ComplexMatrix adjoint(const ComplexMatrix& a) {
    ComplexMatrix out(a.cols, a.rows);
    for (std::size_t i = 0; i < a.rows; ++i)
        for (std::size_t j = 0; j < a.cols; ++j) out(j, i) = std::conj(a(i, j));
    return out;
}

inline cplx trace(const ComplexMatrix& a) {
    if (a.rows != a.cols) throw DimensionMismatchError(a.rows, a.cols);
    cplx t{};
    for (std::size_t i = 0; i < a.rows; ++i) t += a(i, i);
    return t;
}

inline double frobenius_norm(const ComplexMatrix& a) {
    double s = 0.0;
    for (const cplx& z : a.entries) s += std::norm(z);
    return std::sqrt(s);
}

/// Largest magnitude of A[i][j] - conj(A[j][i]); 0 for an exactly Hermitian matrix.
inline double hermitian_defect(const ComplexMatrix& a) {
    if (a.rows != a.cols) throw DimensionMismatchError(a.rows, a.cols);
    double defect = 0.0;
    for (std::size_t i = 0; i < a.rows; ++i)
        for (std::size_t j = i; j < a.cols; ++j)
            defect = std::max(defect, std::abs(a(i, j) - std::conj(a(j, i))));
    return defect;
}

inline void require_hermitian(const ComplexMatrix& a, double tol = 1e-10) {
    const double defect = hermitian_defect(a);
    if (defect > tol) throw NotHermitianError(defect);
}

/// Normalized DFT matrix, entry (k, l) = exp(-2*pi*i*k*l/M) / sqrt(M).
/// Applied as an explicit matrix product throughout; no FFT.
inline ComplexMatrix dft_matrix(std::size_t m) {
    if (m == 0) throw InvalidArgumentError("dft_matrix: M must be >= 1");
    ComplexMatrix f(m, m);
    const double scale = 1.0 / std::sqrt(static_cast<double>(m));
    for (std::size_t k = 0; k < m; ++k) {
        for (std::size_t l = 0; l < m; ++l) {
            // reduce k*l mod M first so the angle stays small
            const std::size_t e = (k * l) % m;
            const double angle = -2.0 * std::numbers::pi * static_cast<double>(e) / static_cast<double>(m);
            f(k, l) = scale * cplx(std::cos(angle), std::sin(angle));
        }
    }
    return f;
}

/// Tr(A^m) for Hermitian A, by repeated multiplication (m-1 products).
/// Kept independent of the eigensolver so the two can cross-check each other.
inline double trace_power(const ComplexMatrix& a, std::size_t m) {
    if (m == 0) throw InvalidArgumentError("trace_power: m must be >= 1");
    require_hermitian(a);
    if (m == 1) return trace(a).real();
    ComplexMatrix p = a;
    for (std::size_t e = 2; e <= m; ++e) p = multiply(p, a);
    return trace(p).real();  // imaginary part is rounding noise for Hermitian A
}

}  // namespace gabor
