// operators.hpp — spin-1 operators, generalized Gell-Mann bases, and
// multi-site operator embedding.
#pragma once

#include "spincorr/errors.hpp"
#include "spincorr/matrix.hpp"

#include <cmath>
#include <cstddef>
#include <string>
#include <vector>

namespace spincorr {

/// The three spin-1 matrices in the basis |+1>, |0>, |-1> (descending m).
struct SpinOperators {
    ComplexMatrix sx;
    ComplexMatrix sy;
    ComplexMatrix sz;
};

inline SpinOperators spin1_operators() {
    const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    SpinOperators s{ComplexMatrix(3, 3), ComplexMatrix(3, 3), ComplexMatrix(3, 3)};

    s.sx(0, 1) = inv_sqrt2;
    s.sx(1, 0) = inv_sqrt2;
    s.sx(1, 2) = inv_sqrt2;
    s.sx(2, 1) = inv_sqrt2;

    s.sy(0, 1) = Complex{0.0, -inv_sqrt2};
    s.sy(1, 0) = Complex{0.0, inv_sqrt2};
    s.sy(1, 2) = Complex{0.0, -inv_sqrt2};
    s.sy(2, 1) = Complex{0.0, inv_sqrt2};

    s.sz(0, 0) = 1.0;
    s.sz(2, 2) = -1.0;
    return s;
}

/// Orthonormal traceless Hermitian basis of d x d matrices, normalized so that
/// tr(X_k X_l) = 2 delta_kl.  Element order is fixed: all symmetric
/// off-diagonal elements (lexicographic (row, col)), then all antisymmetric
/// off-diagonal elements (same order), then the d-1 diagonal elements.
struct OperatorBasis {
    std::size_t dim = 0;
    std::vector<ComplexMatrix> elements;
};

inline OperatorBasis gell_mann_basis(std::size_t d) {
    if (d < 2) throw InvalidDimension("gell_mann_basis: dimension must be at least 2");

    OperatorBasis basis;
    basis.dim = d;
    basis.elements.reserve(d * d - 1);

    // symmetric block: |j><k| + |k><j|
    for (std::size_t j = 0; j < d; ++j) {
        for (std::size_t k = j + 1; k < d; ++k) {
            ComplexMatrix m(d, d);
            m(j, k) = 1.0;
            m(k, j) = 1.0;
            basis.elements.push_back(std::move(m));
        }
    }
    // antisymmetric block: -i|j><k| + i|k><j|
    for (std::size_t j = 0; j < d; ++j) {
        for (std::size_t k = j + 1; k < d; ++k) {
            ComplexMatrix m(d, d);
            m(j, k) = Complex{0.0, -1.0};
            m(k, j) = Complex{0.0, 1.0};
            basis.elements.push_back(std::move(m));
        }
    }
    // diagonal block: sqrt(2/(l(l+1))) (sum_{j<l} |j><j| - l|l><l|)
    for (std::size_t l = 1; l < d; ++l) {
        ComplexMatrix m(d, d);
        const double norm = std::sqrt(2.0 / (static_cast<double>(l) * (l + 1)));
        for (std::size_t j = 0; j < l; ++j) m(j, j) = norm;
        m(l, l) = -static_cast<double>(l) * norm;
        basis.elements.push_back(std::move(m));
    }
    return basis;
}

/// Lift a single-site operator to the full product space: identity on every
/// other site, op on the given one, factors combined in site order.
inline ComplexMatrix embed(const ComplexMatrix& op, std::size_t site,
                           const std::vector<std::size_t>& site_dims) {
    if (site >= site_dims.size())
        throw IndexOutOfRange("embed: site " + std::to_string(site) + " out of range");
    if (!op.is_square() || op.rows() != site_dims[site])
        throw DimensionMismatch("embed: operator dimension does not match the site");

    ComplexMatrix out = ComplexMatrix::identity(1);
    for (std::size_t s = 0; s < site_dims.size(); ++s) {
        if (s == site)
            out = kron(out, op);
        else
            out = kron(out, ComplexMatrix::identity(site_dims[s]));
    }
    return out;
}

/// S_i . S_j acting on a chain of spin-1 sites.
inline ComplexMatrix heisenberg_term(std::size_t i, std::size_t j,
                                     const std::vector<std::size_t>& site_dims) {
    if (i >= site_dims.size() || j >= site_dims.size() || i == j)
        throw IndexOutOfRange("heisenberg_term: invalid site pair (" + std::to_string(i) +
                              ", " + std::to_string(j) + ")");
    if (site_dims[i] != 3 || site_dims[j] != 3)
        throw DimensionMismatch("heisenberg_term: sites must be spin-1 (dimension 3)");

    const SpinOperators s = spin1_operators();
    ComplexMatrix out = embed(s.sx, i, site_dims) * embed(s.sx, j, site_dims);
    out += embed(s.sy, i, site_dims) * embed(s.sy, j, site_dims);
    out += embed(s.sz, i, site_dims) * embed(s.sz, j, site_dims);
    return out;
}

/// Unitary that reorders tensor factors: new factor k carries what old site
/// perm[k] carried, i.e. P (v_0 x v_1 x ...) = v_{perm[0]} x v_{perm[1]} x ...
inline ComplexMatrix site_permutation(const std::vector<std::size_t>& perm,
                                      const std::vector<std::size_t>& site_dims) {
    const std::size_t nsites = site_dims.size();
    if (perm.size() != nsites)
        throw DimensionMismatch("site_permutation: permutation length mismatch");
    std::vector<bool> seen(nsites, false);
    for (std::size_t p : perm) {
        if (p >= nsites || seen[p])
            throw IndexOutOfRange("site_permutation: not a permutation of the sites");
        seen[p] = true;
    }

    std::size_t dim = 1;
    for (std::size_t d : site_dims) dim *= d;

    ComplexMatrix p_mat(dim, dim);
    std::vector<std::size_t> idx(nsites, 0);
    for (std::size_t col = 0; col < dim; ++col) {
        // decode col as the old multi-index (row-major over site_dims)
        std::size_t rest = col;
        for (std::size_t s = nsites; s-- > 0;) {
            idx[s] = rest % site_dims[s];
            rest /= site_dims[s];
        }
        std::size_t row = 0;
        for (std::size_t k = 0; k < nsites; ++k) row = row * site_dims[perm[k]] + idx[perm[k]];
        p_mat(row, col) = 1.0;
    }
    return p_mat;
}

} // namespace spincorr
