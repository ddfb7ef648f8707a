#pragma once

#include <algorithm>
#include <cmath>
#include <vector>

#include "gabor/complex_matrix.hpp"
#include "gabor/errors.hpp"

namespace gabor {

struct HermitianEigenResult {
    std::vector<double> eigenvalues;  // sorted ascending
    double residual = 0.0;            // max off-diagonal magnitude at convergence,
                                      // relative to the Frobenius norm of the input
};

/// All eigenvalues of a Hermitian matrix by cyclic Jacobi rotations.
///
/// Convergence: the off-diagonal Frobenius mass drops below tol relative to
/// the Frobenius norm of the input. Budget: 100 sweeps. Deterministic and
/// dependency-free; more than adequate for the dimensions used here.
inline HermitianEigenResult hermitian_eigenvalues(const ComplexMatrix& input, double tol = 1e-12) {
    require_hermitian(input);
    const std::size_t n = input.rows;
    HermitianEigenResult result;
    if (n == 0) return result;
    if (n == 1) {
        result.eigenvalues = {input(0, 0).real()};
        return result;
    }

    ComplexMatrix a = input;
    const double scale = std::max(frobenius_norm(a), 1e-300);
    const double off_target = tol * scale;
    constexpr int kMaxSweeps = 100;

    auto off_mass = [&]() {
        double s = 0.0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) s += std::norm(a(i, j));
        return std::sqrt(2.0 * s);
    };

    int sweep = 0;
    for (; sweep < kMaxSweeps; ++sweep) {
        if (off_mass() <= off_target) break;
        for (std::size_t p = 0; p < n - 1; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const cplx apq = a(p, q);
                const double g = std::abs(apq);
                if (g == 0.0) continue;
                const double app = a(p, p).real();
                const double aqq = a(q, q).real();
                // Factor out the pivot's phase (apq = g*u), which reduces the
                // 2x2 block to a real symmetric one, then rotate. The combined
                // transform is W = diag(1, conj(u)) * R(c, s), applied two-sided
                // as A <- W^H * A * W; it annihilates the (p, q) entry.
                const cplx u = apq / g;
                const double theta = (aqq - app) / (2.0 * g);
                const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                                 (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                const cplx cu = std::conj(u);

                for (std::size_t i = 0; i < n; ++i) {  // columns: A <- A * W
                    const cplx aip = a(i, p);
                    const cplx aiq = a(i, q);
                    a(i, p) = c * aip - s * cu * aiq;
                    a(i, q) = s * aip + c * cu * aiq;
                }
                for (std::size_t j = 0; j < n; ++j) {  // rows: A <- W^H * A
                    const cplx apj = a(p, j);
                    const cplx aqj = a(q, j);
                    a(p, j) = c * apj - s * u * aqj;
                    a(q, j) = s * apj + c * u * aqj;
                }
                a(p, p) = cplx(a(p, p).real(), 0.0);
                a(q, q) = cplx(a(q, q).real(), 0.0);
                a(p, q) = cplx(0.0, 0.0);
                a(q, p) = cplx(0.0, 0.0);
            }
        }
    }

    double max_off = 0.0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) max_off = std::max(max_off, std::abs(a(i, j)));
    result.residual = max_off / scale;
    if (off_mass() > off_target) throw NoConvergenceError(result.residual, kMaxSweeps);

    result.eigenvalues.resize(n);
    for (std::size_t i = 0; i < n; ++i) result.eigenvalues[i] = a(i, i).real();
    std::sort(result.eigenvalues.begin(), result.eigenvalues.end());
    return result;
}

}  // namespace gabor
