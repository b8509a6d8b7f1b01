// eigensolver.hpp — Hermitian eigendecomposition via cyclic complex Jacobi rotations.
#pragma once

#include "spincorr/errors.hpp"
#include "spincorr/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <utility>
#include <vector>

namespace spincorr {

/// Result of a Hermitian eigendecomposition: ascending eigenvalues and a
/// unitary matrix whose k-th column is the eigenvector of eigenvalues[k].
struct Spectrum {
    std::vector<double> eigenvalues;
    ComplexMatrix eigenvectors;
};

namespace detail {

constexpr double kHermitianTol = 1e-12;
constexpr double kJacobiRelTol = 1e-12;
constexpr int kJacobiMaxSweeps = 100;

inline void require_hermitian(const ComplexMatrix& h, const char* where) {
    if (!h.is_square())
        throw NonHermitianInput(std::string(where) + ": matrix is not square");
    if (!h.is_hermitian(kHermitianTol))
        throw NonHermitianInput(std::string(where) +
                                ": matrix fails the Hermiticity check (1e-12 per entry)");
}

inline double off_diagonal_norm(const ComplexMatrix& a) {
    double s = 0.0;
    const std::size_t n = a.rows();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) s += std::norm(a(i, j));
    return std::sqrt(2.0 * s);
}

// One cyclic Jacobi pass over all (p,q) pivots, annihilating A(p,q) with the
// unitary plane rotation J = [[c, -conj(s)], [s, c]].  V accumulates V*J when
// not null.
inline void jacobi_sweep(ComplexMatrix& a, ComplexMatrix* v) {
    const std::size_t n = a.rows();
    for (std::size_t p = 0; p + 1 < n; ++p) {
        for (std::size_t q = p + 1; q < n; ++q) {
            const Complex b = a(p, q);
            const double babs = std::abs(b);
            if (babs == 0.0) continue;

            const double app = a(p, p).real();
            const double aqq = a(q, q).real();
            const double zeta = (app - aqq) / (2.0 * babs);
            const double tsign = (zeta >= 0.0) ? 1.0 : -1.0;
            const double t = tsign / (std::abs(zeta) + std::sqrt(1.0 + zeta * zeta));
            const double c = 1.0 / std::sqrt(1.0 + t * t);
            const Complex sigma = (t * c / babs) * std::conj(b);

            // rows p,q: J^dagger from the left
            for (std::size_t k = 0; k < n; ++k) {
                const Complex apk = a(p, k);
                const Complex aqk = a(q, k);
                a(p, k) = c * apk + std::conj(sigma) * aqk;
                a(q, k) = -sigma * apk + c * aqk;
            }
            // columns p,q: J from the right
            for (std::size_t k = 0; k < n; ++k) {
                const Complex akp = a(k, p);
                const Complex akq = a(k, q);
                a(k, p) = c * akp + sigma * akq;
                a(k, q) = -std::conj(sigma) * akp + c * akq;
            }
            // the 2x2 block is known in closed form
            a(p, p) = app + t * babs;
            a(q, q) = aqq - t * babs;
            a(p, q) = 0.0;
            a(q, p) = 0.0;

            if (v != nullptr) {
                for (std::size_t k = 0; k < n; ++k) {
                    const Complex vkp = (*v)(k, p);
                    const Complex vkq = (*v)(k, q);
                    (*v)(k, p) = c * vkp + sigma * vkq;
                    (*v)(k, q) = -std::conj(sigma) * vkp + c * vkq;
                }
            }
        }
    }
}

inline std::vector<double> diagonal_real(const ComplexMatrix& a) {
    std::vector<double> d(a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i) d[i] = a(i, i).real();
    return d;
}

// Diagonalize in place; returns unsorted eigenvalues, accumulates V if given.
inline std::vector<double> jacobi_diagonalize(ComplexMatrix a, ComplexMatrix* v,
                                              const char* where) {
    const std::size_t n = a.rows();
    if (v != nullptr) *v = ComplexMatrix::identity(n);
    if (n <= 1) return diagonal_real(a);

    const double scale = a.frobenius_norm();
    if (scale == 0.0) return diagonal_real(a);

    for (int sweep = 0; sweep < kJacobiMaxSweeps; ++sweep) {
        if (off_diagonal_norm(a) <= kJacobiRelTol * scale) return diagonal_real(a);
        jacobi_sweep(a, v);
    }
    if (off_diagonal_norm(a) <= kJacobiRelTol * scale) return diagonal_real(a);
    throw ConvergenceError(std::string(where) + ": Jacobi iteration did not converge in " +
                           std::to_string(kJacobiMaxSweeps) + " sweeps");
}

} // namespace detail

/// Full eigendecomposition of a Hermitian matrix.  Deterministic: fixed cyclic
/// pivot order, ascending eigenvalues with stable tie order.
inline Spectrum eig_hermitian(const ComplexMatrix& h) {
    detail::require_hermitian(h, "eig_hermitian");
    ComplexMatrix v;
    std::vector<double> raw = detail::jacobi_diagonalize(h, &v, "eig_hermitian");

    const std::size_t n = raw.size();
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&raw](std::size_t i, std::size_t j) { return raw[i] < raw[j]; });

    Spectrum s;
    s.eigenvalues.resize(n);
    s.eigenvectors = ComplexMatrix(n, n);
    for (std::size_t k = 0; k < n; ++k) {
        s.eigenvalues[k] = raw[order[k]];
        for (std::size_t i = 0; i < n; ++i) s.eigenvectors(i, k) = v(i, order[k]);
    }
    return s;
}

/// Ascending eigenvalues only; cheaper than eig_hermitian when the
/// eigenvectors are not needed.
inline std::vector<double> eig_hermitian_values(const ComplexMatrix& h) {
    detail::require_hermitian(h, "eig_hermitian_values");
    std::vector<double> raw = detail::jacobi_diagonalize(h, nullptr, "eig_hermitian_values");
    std::sort(raw.begin(), raw.end());
    return raw;
}

/// Apply a real function to a Hermitian matrix through its spectrum:
/// V diag(f(lambda)) V^dagger.
inline ComplexMatrix matrix_function(const ComplexMatrix& h,
                                     const std::function<double(double)>& f) {
    const Spectrum s = eig_hermitian(h);
    const std::size_t n = s.eigenvalues.size();
    const ComplexMatrix& v = s.eigenvectors;
    ComplexMatrix out(n, n);
    for (std::size_t k = 0; k < n; ++k) {
        const double fk = f(s.eigenvalues[k]);
        if (fk == 0.0) continue;
        for (std::size_t i = 0; i < n; ++i) {
            const Complex vik = fk * v(i, k);
            for (std::size_t j = 0; j < n; ++j) out(i, j) += vik * std::conj(v(j, k));
        }
    }
    return out;
}

} // namespace spincorr
