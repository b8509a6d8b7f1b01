// thermal.hpp — Gibbs states and partition functions, k_B = 1.
#pragma once

#include "spincorr/eigensolver.hpp"
#include "spincorr/errors.hpp"
#include "spincorr/matrix.hpp"
#include "spincorr/model.hpp"

#include <cmath>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace spincorr {

/// Temperature in units of t, strictly positive.
struct Temperature {
    double value;

    explicit Temperature(double v) : value(v) {
        if (!(v > 0.0) || !std::isfinite(v))
            throw NonpositiveTemperature("Temperature: value must be finite and > 0, got " +
                                         std::to_string(v));
    }

    double beta() const { return 1.0 / value; }
};

/// Hermitian, unit-trace, positive-semidefinite state carrying its
/// bipartition (dim_a, dim_b).  Validated on construction.
struct DensityMatrix {
    ComplexMatrix matrix;
    std::size_t dim_a = 0;
    std::size_t dim_b = 0;

    DensityMatrix(ComplexMatrix m, std::size_t da, std::size_t db)
        : matrix(std::move(m)), dim_a(da), dim_b(db) {
        if (dim_a * dim_b != matrix.rows() || !matrix.is_square())
            throw DimensionMismatch("DensityMatrix: bipartition " + std::to_string(dim_a) +
                                    "x" + std::to_string(dim_b) +
                                    " does not match matrix dimension");
        if (!matrix.all_finite())
            throw InvalidState("DensityMatrix: entries must be finite");
        if (!matrix.is_hermitian(1e-12))
            throw InvalidState("DensityMatrix: matrix is not Hermitian");
        if (std::abs(matrix.trace() - Complex{1.0, 0.0}) > 1e-12)
            throw InvalidState("DensityMatrix: trace differs from 1");
        const std::vector<double> evals = eig_hermitian_values(matrix);
        if (!evals.empty() && evals.front() < -1e-12)
            throw InvalidState("DensityMatrix: negative eigenvalue " +
                               std::to_string(evals.front()));
    }

    std::size_t dim() const { return matrix.rows(); }
};

namespace detail {

inline void require_bipartition(std::size_t da, std::size_t db, std::size_t dim,
                                const char* where) {
    if (da * db != dim)
        throw DimensionMismatch(std::string(where) + ": bipartition does not match dimension");
}

// rho = V diag(w) V^dagger with w already normalized.
inline ComplexMatrix state_from_weights(const Spectrum& s, const std::vector<double>& w) {
    const std::size_t n = s.eigenvalues.size();
    const ComplexMatrix& v = s.eigenvectors;
    ComplexMatrix rho(n, n);
    for (std::size_t k = 0; k < n; ++k) {
        if (w[k] == 0.0) continue;
        for (std::size_t i = 0; i < n; ++i) {
            const Complex vik = w[k] * v(i, k);
            for (std::size_t j = 0; j < n; ++j) rho(i, j) += vik * std::conj(v(j, k));
        }
    }
    return rho;
}

} // namespace detail

/// Thermal state e^{-H/T} / Z from a precomputed spectrum.  Boltzmann factors
/// are shifted by the ground energy so the largest one is exactly 1.
inline DensityMatrix gibbs_state_from_spectrum(const Spectrum& s, Temperature t,
                                               std::size_t dim_a, std::size_t dim_b) {
    detail::require_bipartition(dim_a, dim_b, s.eigenvalues.size(), "gibbs_state");
    const double beta = t.beta();
    const double e0 = s.eigenvalues.front();
    std::vector<double> w(s.eigenvalues.size());
    double z = 0.0;
    for (std::size_t k = 0; k < w.size(); ++k) {
        w[k] = std::exp(-beta * (s.eigenvalues[k] - e0));
        z += w[k];
    }
    for (auto& wk : w) wk /= z;
    return {detail::state_from_weights(s, w), dim_a, dim_b};
}

inline DensityMatrix gibbs_state(const ComplexMatrix& h, Temperature t, std::size_t dim_a,
                                 std::size_t dim_b) {
    detail::require_bipartition(dim_a, dim_b, h.rows(), "gibbs_state");
    return gibbs_state_from_spectrum(eig_hermitian(h), t, dim_a, dim_b);
}

/// Z = tr e^{-H/T}, summed without shift.
inline double partition_function(const ComplexMatrix& h, Temperature t) {
    const std::vector<double> evals = eig_hermitian_values(h);
    const double beta = t.beta();
    double z = 0.0;
    for (double e : evals) z += std::exp(-beta * e);
    return z;
}

/// log Z via a ground-energy shift; safe where the plain sum would overflow.
inline double log_partition_function(const ComplexMatrix& h, Temperature t) {
    const std::vector<double> evals = eig_hermitian_values(h);
    const double beta = t.beta();
    const double e0 = evals.front();
    double acc = 0.0;
    for (double e : evals) acc += std::exp(-beta * (e - e0));
    return -beta * e0 + std::log(acc);
}

/// Closed-form two-site partition function, the Boltzmann sum over the nine
/// levels E_{jM} with r = tau - gamma:
///   Z = e^{-beta tau} [ 2 cosh(beta tau)(1 + 2 cosh(beta omega))
///       + e^{-beta(3 gamma - 2 tau)} + 2 e^{-beta tau} cosh(2 beta omega) ].
/// The last factor is cosh(2 beta omega) — the m = +-2 rungs of the j = 2
/// multiplet — not cosh(2 beta tau).
inline double closed_form_partition_function_2(const ModelParams& p, Temperature t) {
    if (std::abs(p.r - (p.tau - p.gamma)) > 1e-12)
        throw InconsistentShift("closed_form_partition_function_2: requires r = tau - gamma");
    const double beta = t.beta();
    return std::exp(-beta * p.tau) *
           (2.0 * std::cosh(beta * p.tau) * (1.0 + 2.0 * std::cosh(beta * p.omega)) +
            std::exp(-beta * (3.0 * p.gamma - 2.0 * p.tau)) +
            2.0 * std::exp(-beta * p.tau) * std::cosh(2.0 * beta * p.omega));
}

/// T -> 0+ limit: equal-weight mixture over the eigenspace of all eigenvalues
/// within degeneracy_tol of the minimum.
inline DensityMatrix zero_t_limit_state(const ComplexMatrix& h, std::size_t dim_a,
                                        std::size_t dim_b, double degeneracy_tol = 1e-9) {
    detail::require_bipartition(dim_a, dim_b, h.rows(), "zero_t_limit_state");
    const Spectrum s = eig_hermitian(h);
    const double e0 = s.eigenvalues.front();
    std::size_t count = 0;
    while (count < s.eigenvalues.size() && s.eigenvalues[count] <= e0 + degeneracy_tol) ++count;

    std::vector<double> w(s.eigenvalues.size(), 0.0);
    for (std::size_t k = 0; k < count; ++k) w[k] = 1.0 / static_cast<double>(count);
    return {detail::state_from_weights(s, w), dim_a, dim_b};
}

} // namespace spincorr
