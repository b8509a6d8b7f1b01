// model.hpp — effective bilinear-biquadratic spin-1 Hamiltonians for two and
// three sites, the coupling map from the microscopic parameters, and the
// closed-form two-site spectrum.
#pragma once

#include "spincorr/errors.hpp"
#include "spincorr/matrix.hpp"
#include "spincorr/operators.hpp"

#include <cmath>
#include <string>
#include <utility>
#include <vector>

namespace spincorr {

/// Effective couplings: H = omega J_z + r I + tau sum S_i.S_j
///                          + gamma sum (S_i.S_j)^2, energies in units of t.
struct ModelParams {
    double omega = 0.0;
    double tau = 0.0;
    double gamma = 0.0;
    double r = 0.0;

    /// Default construction fixes the identity shift at r = tau - gamma.
    ModelParams(double omega_, double tau_, double gamma_)
        : omega(omega_), tau(tau_), gamma(gamma_), r(tau_ - gamma_) {
        validate();
    }

    ModelParams(double omega_, double tau_, double gamma_, double r_)
        : omega(omega_), tau(tau_), gamma(gamma_), r(r_) {
        validate();
    }

private:
    void validate() const {
        if (!(std::isfinite(omega) && std::isfinite(tau) && std::isfinite(gamma) &&
              std::isfinite(r)))
            throw InvalidState("ModelParams: couplings must be finite");
    }
};

/// Microscopic Bose-Hubbard parameters: tunneling t, on-site repulsion u0,
/// spin-dependent interaction u2.
struct MicroscopicParams {
    double t = 0.0;
    double u0 = 0.0;
    double u2 = 0.0;
};

/// Second-order coupling map.  tau and r follow the perturbative expressions;
/// gamma is fixed by the identity gamma = tau - r, so the returned parameters
/// satisfy r = tau - gamma exactly.  omega is an external field, left at 0.
inline ModelParams effective_couplings(const MicroscopicParams& p) {
    const double den1 = p.u0 + p.u2;
    const double den2 = p.u0 - 2.0 * p.u2;
    if (den1 == 0.0)
        throw SingularDenominator("effective_couplings: u0 + u2 = 0");
    if (den2 == 0.0)
        throw SingularDenominator("effective_couplings: u0 - 2 u2 = 0");

    const double tau = 2.0 * p.t / den1;
    const double r0 = 4.0 * p.t / (3.0 * den1) - 4.0 * p.t / (3.0 * den2);
    const double gamma = tau - r0;
    const double r = tau - gamma; // re-derive so the identity holds bitwise
    return {0.0, tau, gamma, r};
}

inline const std::vector<std::size_t>& two_site_dims() {
    static const std::vector<std::size_t> dims{3, 3};
    return dims;
}

inline const std::vector<std::size_t>& three_site_dims() {
    static const std::vector<std::size_t> dims{3, 3, 3};
    return dims;
}

/// H_2 = omega J_z + r I + tau S_1.S_2 + gamma (S_1.S_2)^2 on the 9-dim space.
inline ComplexMatrix build_hamiltonian_2(const ModelParams& p) {
    const auto& dims = two_site_dims();
    const SpinOperators s = spin1_operators();
    const ComplexMatrix jz = embed(s.sz, 0, dims) + embed(s.sz, 1, dims);
    const ComplexMatrix h12 = heisenberg_term(0, 1, dims);

    ComplexMatrix h = p.omega * jz;
    h += p.r * ComplexMatrix::identity(9);
    h += p.tau * h12;
    h += p.gamma * (h12 * h12);
    return h;
}

/// H_3 with periodic boundary conditions: all three bonds, biquadratic terms
/// squared per bond before summing.  27-dim space.
inline ComplexMatrix build_hamiltonian_3(const ModelParams& p) {
    const auto& dims = three_site_dims();
    const SpinOperators s = spin1_operators();
    ComplexMatrix jz = embed(s.sz, 0, dims);
    jz += embed(s.sz, 1, dims);
    jz += embed(s.sz, 2, dims);

    ComplexMatrix h = p.omega * jz;
    h += p.r * ComplexMatrix::identity(27);
    const std::pair<std::size_t, std::size_t> bonds[] = {{0, 1}, {1, 2}, {2, 0}};
    for (const auto& [i, j] : bonds) {
        const ComplexMatrix hb = heisenberg_term(i, j, dims);
        h += p.tau * hb;
        h += p.gamma * (hb * hb);
    }
    return h;
}

/// One two-site level labelled by total spin j and magnetic quantum number m.
struct ClosedFormLevel {
    int j = 0;
    int m = 0;
    double energy = 0.0;
};

/// The nine closed-form two-site levels
///   E_{jM} = omega M + tau (j(j+1)-2)/2 + gamma ((j(j+1)-4)^2 - 4)/4,
/// valid when the identity shift is r = tau - gamma.
inline std::vector<ClosedFormLevel> closed_form_levels_2(const ModelParams& p) {
    if (std::abs(p.r - (p.tau - p.gamma)) > 1e-12)
        throw InconsistentShift(
            "closed_form_levels_2: requires r = tau - gamma (got r = " + std::to_string(p.r) +
            ", tau - gamma = " + std::to_string(p.tau - p.gamma) + ")");

    std::vector<ClosedFormLevel> levels;
    levels.reserve(9);
    for (int j = 0; j <= 2; ++j) {
        const double jj = static_cast<double>(j * (j + 1));
        const double spin_part =
            p.tau * (jj - 2.0) / 2.0 + p.gamma * ((jj - 4.0) * (jj - 4.0) - 4.0) / 4.0;
        for (int m = -j; m <= j; ++m)
            levels.push_back({j, m, p.omega * static_cast<double>(m) + spin_part});
    }
    return levels;
}

/// The two ground-state crossing points of H_2 in closed form: tau = omega/2
/// and tau = omega + 3 gamma.
inline std::pair<double, double> ground_crossings_2_closed_form(double omega, double gamma) {
    if (!(omega > 0.0))
        throw InvalidState("ground_crossings_2_closed_form: requires omega > 0");
    const double first = omega / 2.0;
    const double second = omega + 3.0 * gamma;
    const double scale = std::max({1.0, std::abs(first), std::abs(second)});
    if (std::abs(second - first) <= 1e-12 * scale)
        throw DegenerateCrossings("ground_crossings_2_closed_form: the two crossings coincide");
    if (second < first)
        throw InvalidState(
            "ground_crossings_2_closed_form: requires omega + 3 gamma > omega / 2");
    return {first, second};
}

} // namespace spincorr
