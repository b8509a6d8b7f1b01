// correlations.hpp — entanglement negativity via partial transpose and the
// zero-discord criterion measure Q, both for arbitrary m x n bipartitions.
#pragma once

#include "spincorr/eigensolver.hpp"
#include "spincorr/errors.hpp"
#include "spincorr/matrix.hpp"
#include "spincorr/operators.hpp"
#include "spincorr/thermal.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <vector>

namespace spincorr {

enum class Subsystem { A, B };

/// Transpose the chosen subsystem's indices of an m x n bipartite operator;
/// Hermiticity and trace are preserved.  The output of a partial transpose is
/// generally not positive semidefinite, so this form works on plain matrices.
inline ComplexMatrix partial_transpose(const ComplexMatrix& in, std::size_t m, std::size_t n,
                                       Subsystem subsystem) {
    if (!in.is_square() || m * n != in.rows())
        throw DimensionMismatch("partial_transpose: bipartition does not match dimension");
    ComplexMatrix out(m * n, m * n);
    for (std::size_t p = 0; p < m; ++p)
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t k = 0; k < m; ++k)
                for (std::size_t b = 0; b < n; ++b) {
                    const Complex v = in(p * n + a, k * n + b);
                    if (subsystem == Subsystem::A)
                        out(k * n + a, p * n + b) = v;
                    else
                        out(p * n + b, k * n + a) = v;
                }
    return out;
}

inline ComplexMatrix partial_transpose(const DensityMatrix& rho, Subsystem subsystem) {
    return partial_transpose(rho.matrix, rho.dim_a, rho.dim_b, subsystem);
}

/// Negativity: eta holds the eigenvalues of the partial transpose
/// (ascending), value = 1/2 sum_i (|eta_i| - eta_i).
struct NegativityResult {
    std::vector<double> eta;
    double value = 0.0;
};

/// Partial transpose is taken with respect to the smaller-dimensional
/// subsystem (A when equal).
inline NegativityResult negativity(const DensityMatrix& rho) {
    const Subsystem side = (rho.dim_a <= rho.dim_b) ? Subsystem::A : Subsystem::B;
    NegativityResult result;
    result.eta = eig_hermitian_values(partial_transpose(rho, side));
    for (double e : result.eta) result.value += 0.5 * (std::abs(e) - e);
    return result;
}

/// Coherence-vector data of a bipartite state: local Bloch vectors x, y and
/// the correlation matrix t_ij = tr rho (X_i x Y_j), stored row-major with
/// shape (m^2-1) x (n^2-1).
struct BlochDecomposition {
    std::size_t m = 0;
    std::size_t n = 0;
    std::vector<double> x;
    std::vector<double> y;
    std::vector<double> tcorr;

    double t(std::size_t i, std::size_t j) const { return tcorr[i * (n * n - 1) + j]; }
};

/// Decompose against explicit operator bases (must be gell_mann_basis-style:
/// traceless, tr(X_k X_l) = 2 delta_kl).
inline BlochDecomposition bloch_decompose(const DensityMatrix& rho, const OperatorBasis& basis_a,
                                          const OperatorBasis& basis_b) {
    const std::size_t m = rho.dim_a;
    const std::size_t n = rho.dim_b;
    if (basis_a.dim != m || basis_b.dim != n)
        throw DimensionMismatch("bloch_decompose: basis dimensions do not match bipartition");
    const ComplexMatrix& p_mat = rho.matrix;

    // reduced states
    ComplexMatrix rho_a(m, m);
    ComplexMatrix rho_b(n, n);
    for (std::size_t p = 0; p < m; ++p)
        for (std::size_t k = 0; k < m; ++k)
            for (std::size_t a = 0; a < n; ++a) rho_a(p, k) += p_mat(p * n + a, k * n + a);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            for (std::size_t p = 0; p < m; ++p) rho_b(a, b) += p_mat(p * n + a, p * n + b);

    BlochDecomposition d;
    d.m = m;
    d.n = n;
    d.x.resize(m * m - 1);
    d.y.resize(n * n - 1);
    d.tcorr.assign((m * m - 1) * (n * n - 1), 0.0);

    for (std::size_t i = 0; i < d.x.size(); ++i)
        d.x[i] = (rho_a * basis_a.elements[i]).trace().real();
    for (std::size_t j = 0; j < d.y.size(); ++j)
        d.y[j] = (rho_b * basis_b.elements[j]).trace().real();

    // t_ij = sum_{p,q,a,b} rho[(p,a),(q,b)] X_i[q,p] Y_j[b,a], contracted in
    // two stages through the n x n intermediate D_i[b,a].
    for (std::size_t i = 0; i < d.x.size(); ++i) {
        const ComplexMatrix& xi = basis_a.elements[i];
        ComplexMatrix di(n, n);
        for (std::size_t q = 0; q < m; ++q)
            for (std::size_t p = 0; p < m; ++p) {
                const Complex xqp = xi(q, p);
                if (xqp == Complex{0.0, 0.0}) continue;
                for (std::size_t a = 0; a < n; ++a)
                    for (std::size_t b = 0; b < n; ++b)
                        di(b, a) += p_mat(p * n + a, q * n + b) * xqp;
            }
        for (std::size_t j = 0; j < d.y.size(); ++j) {
            const ComplexMatrix& yj = basis_b.elements[j];
            Complex acc{0.0, 0.0};
            for (std::size_t b = 0; b < n; ++b)
                for (std::size_t a = 0; a < n; ++a) {
                    const Complex yba = yj(b, a);
                    if (yba != Complex{0.0, 0.0}) acc += di(b, a) * yba;
                }
            d.tcorr[i * d.y.size() + j] = acc.real();
        }
    }
    return d;
}

/// Decompose against the canonical generalized Gell-Mann bases.
inline BlochDecomposition bloch_decompose(const DensityMatrix& rho) {
    return bloch_decompose(rho, gell_mann_basis(rho.dim_a), gell_mann_basis(rho.dim_b));
}

namespace detail {

inline void add_scaled_kron(ComplexMatrix& out, double coeff, const ComplexMatrix& a,
                            const ComplexMatrix& b) {
    const std::size_t bn = b.rows();
    for (std::size_t ia = 0; ia < a.rows(); ++ia)
        for (std::size_t ja = 0; ja < a.cols(); ++ja) {
            const Complex v = coeff * a(ia, ja);
            if (v == Complex{0.0, 0.0}) continue;
            for (std::size_t ib = 0; ib < bn; ++ib)
                for (std::size_t jb = 0; jb < bn; ++jb)
                    out(ia * bn + ib, ja * bn + jb) += v * b(ib, jb);
        }
}

} // namespace detail

/// Rebuild the state from its coherence-vector data:
///   rho = I/(mn) + sum_i x_i X_i x I/(2n) + I/(2m) x sum_j y_j Y_j
///         + 1/4 sum_ij t_ij X_i x Y_j.
inline DensityMatrix reconstruct(const BlochDecomposition& d, const OperatorBasis& basis_a,
                                 const OperatorBasis& basis_b) {
    const std::size_t m = d.m;
    const std::size_t n = d.n;
    if (basis_a.dim != m || basis_b.dim != n)
        throw DimensionMismatch("reconstruct: basis dimensions do not match decomposition");

    ComplexMatrix rho = (1.0 / static_cast<double>(m * n)) * ComplexMatrix::identity(m * n);
    const ComplexMatrix id_a = ComplexMatrix::identity(m);
    const ComplexMatrix id_b = ComplexMatrix::identity(n);
    for (std::size_t i = 0; i < d.x.size(); ++i)
        detail::add_scaled_kron(rho, d.x[i] / (2.0 * n), basis_a.elements[i], id_b);
    for (std::size_t j = 0; j < d.y.size(); ++j)
        detail::add_scaled_kron(rho, d.y[j] / (2.0 * m), id_a, basis_b.elements[j]);
    for (std::size_t i = 0; i < d.x.size(); ++i)
        for (std::size_t j = 0; j < d.y.size(); ++j) {
            const double tij = d.t(i, j);
            if (tij != 0.0)
                detail::add_scaled_kron(rho, 0.25 * tij, basis_a.elements[i],
                                        basis_b.elements[j]);
        }
    return {std::move(rho), m, n};
}

inline DensityMatrix reconstruct(const BlochDecomposition& d) {
    return reconstruct(d, gell_mann_basis(d.m), gell_mann_basis(d.n));
}

/// Criterion matrix Lambda = T T^t - |y|^2 x x^t and its spectrum, eigenvalues
/// in decreasing algebraic order.  q = 1/4 sum of |Lambda_i| over all but the
/// m-1 largest.
struct CriterionResult {
    ComplexMatrix lambda;
    std::vector<double> eigenvalues;
    double q = 0.0;
};

inline CriterionResult criterion_matrix(const BlochDecomposition& d) {
    const std::size_t na = d.x.size();
    const std::size_t nb = d.y.size();
    double y2 = 0.0;
    for (double yj : d.y) y2 += yj * yj;

    CriterionResult result;
    result.lambda = ComplexMatrix(na, na);
    for (std::size_t i = 0; i < na; ++i)
        for (std::size_t k = 0; k < na; ++k) {
            double acc = 0.0;
            for (std::size_t j = 0; j < nb; ++j) acc += d.tcorr[i * nb + j] * d.tcorr[k * nb + j];
            result.lambda(i, k) = acc - y2 * d.x[i] * d.x[k];
        }

    result.eigenvalues = eig_hermitian_values(result.lambda);
    std::reverse(result.eigenvalues.begin(), result.eigenvalues.end());

    for (std::size_t i = d.m - 1; i < result.eigenvalues.size(); ++i)
        result.q += 0.25 * std::abs(result.eigenvalues[i]);
    return result;
}

/// The zero-discord criterion measure of the state, Q >= 0, Q = 0 for every
/// product state.
inline double q_measure(const DensityMatrix& rho) {
    return criterion_matrix(bloch_decompose(rho)).q;
}

inline double q_measure(const DensityMatrix& rho, const OperatorBasis& basis_a,
                        const OperatorBasis& basis_b) {
    return criterion_matrix(bloch_decompose(rho, basis_a, basis_b)).q;
}

} // namespace spincorr
