// sweep.hpp — tau sweeps at fixed (omega, gamma, T) and ground-state
// level-crossing detection.
#pragma once

#include "spincorr/correlations.hpp"
#include "spincorr/eigensolver.hpp"
#include "spincorr/errors.hpp"
#include "spincorr/matrix.hpp"
#include "spincorr/model.hpp"
#include "spincorr/operators.hpp"
#include "spincorr/thermal.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <string>
#include <vector>

namespace spincorr {

struct SweepConfig {
    int sites = 2; // 2 or 3
    double omega = 1.0;
    double gamma = 1.0;
    double tau_min = 0.0;
    double tau_max = 1.0;
    std::size_t steps = 2; // grid points, endpoints included
    std::vector<double> temperatures;
    std::size_t levels_to_emit = 4;

    void validate() const {
        if (sites != 2 && sites != 3)
            throw InvalidState("SweepConfig: sites must be 2 or 3");
        if (!(tau_min < tau_max))
            throw InvalidState("SweepConfig: requires tau_min < tau_max");
        if (steps < 2) throw InvalidState("SweepConfig: requires steps >= 2");
        if (temperatures.empty())
            throw InvalidState("SweepConfig: at least one temperature required");
        for (double t : temperatures)
            if (!(t > 0.0) || !std::isfinite(t))
                throw NonpositiveTemperature("SweepConfig: temperatures must be > 0");
        const std::size_t dim = (sites == 2) ? 9 : 27;
        if (levels_to_emit < 1 || levels_to_emit > dim)
            throw InvalidState("SweepConfig: levels_to_emit out of range");
    }
};

/// One grid point: measures of the thermal state plus the lowest energies.
struct SweepRecord {
    double tau = 0.0;
    double temperature = 0.0;
    double negativity = 0.0;
    double q = 0.0;
    std::vector<double> energies;
};

/// A refined ground-state crossing.  The ranks report where each competing
/// level sits in the ascending spectrum on the side of the crossing where it
/// is not the ground state.
struct GroundCrossing {
    double tau_star = 0.0;
    int old_ground_rank_after = 0;
    int new_ground_rank_before = 0;
};

struct CrossingReport {
    std::vector<GroundCrossing> crossings;
};

namespace detail {

// H(tau) = h0 + tau h1 with the identity shift pinned at r = tau - gamma:
// h0 = omega J_z - gamma I + gamma B2, h1 = I + B1, where B1 sums the bond
// bilinears and B2 the per-bond biquadratics.
struct TauFamily {
    int sites;
    std::size_t dim_a;
    std::size_t dim_b;
    ComplexMatrix h0;
    ComplexMatrix h1;

    TauFamily(int sites_, double omega, double gamma) : sites(sites_) {
        const auto& dims = (sites == 2) ? two_site_dims() : three_site_dims();
        const std::size_t dim = (sites == 2) ? 9 : 27;
        dim_a = 3;
        dim_b = dim / 3;

        const SpinOperators s = spin1_operators();
        ComplexMatrix jz(dim, dim);
        for (std::size_t k = 0; k < dims.size(); ++k) jz += embed(s.sz, k, dims);

        ComplexMatrix b1(dim, dim);
        ComplexMatrix b2(dim, dim);
        if (sites == 2) {
            const ComplexMatrix hb = heisenberg_term(0, 1, dims);
            b1 += hb;
            b2 += hb * hb;
        } else {
            const std::pair<std::size_t, std::size_t> bonds[] = {{0, 1}, {1, 2}, {2, 0}};
            for (const auto& [i, j] : bonds) {
                const ComplexMatrix hb = heisenberg_term(i, j, dims);
                b1 += hb;
                b2 += hb * hb;
            }
        }

        h0 = omega * jz;
        h0 -= gamma * ComplexMatrix::identity(dim);
        h0 += gamma * b2;
        h1 = ComplexMatrix::identity(dim);
        h1 += b1;
    }

    ComplexMatrix at(double tau) const {
        ComplexMatrix h = h0;
        h += tau * h1;
        return h;
    }
};

inline double ground_slope(const TauFamily& family, const Spectrum& s) {
    const std::size_t n = s.eigenvalues.size();
    Complex acc{0.0, 0.0};
    for (std::size_t i = 0; i < n; ++i) {
        const Complex vi = std::conj(s.eigenvectors(i, 0));
        for (std::size_t j = 0; j < n; ++j) acc += vi * family.h1(i, j) * s.eigenvectors(j, 0);
    }
    return acc.real();
}

inline std::size_t nearest_index(const std::vector<double>& sorted_values, double target) {
    const auto it = std::lower_bound(sorted_values.begin(), sorted_values.end(), target);
    if (it == sorted_values.begin()) return 0;
    if (it == sorted_values.end()) return sorted_values.size() - 1;
    const std::size_t hi = static_cast<std::size_t>(it - sorted_values.begin());
    return (target - sorted_values[hi - 1] <= sorted_values[hi] - target) ? hi - 1 : hi;
}

} // namespace detail

/// Uniform tau grid, one record per (temperature, tau), ordered by ascending
/// temperature then ascending tau.  Deterministic.
inline std::vector<SweepRecord> run_sweep(const SweepConfig& cfg) {
    cfg.validate();
    const detail::TauFamily family(cfg.sites, cfg.omega, cfg.gamma);
    const OperatorBasis basis_a = gell_mann_basis(family.dim_a);
    const OperatorBasis basis_b = gell_mann_basis(family.dim_b);

    std::vector<double> temps = cfg.temperatures;
    std::sort(temps.begin(), temps.end());

    const double span = cfg.tau_max - cfg.tau_min;
    std::vector<SweepRecord> records(temps.size() * cfg.steps);

    for (std::size_t k = 0; k < cfg.steps; ++k) {
        const double tau =
            cfg.tau_min + span * static_cast<double>(k) / static_cast<double>(cfg.steps - 1);
        try {
            const Spectrum spectrum = eig_hermitian(family.at(tau));
            std::vector<double> low(spectrum.eigenvalues.begin(),
                                    spectrum.eigenvalues.begin() +
                                        static_cast<std::ptrdiff_t>(cfg.levels_to_emit));
            for (std::size_t it = 0; it < temps.size(); ++it) {
                const DensityMatrix rho = gibbs_state_from_spectrum(
                    spectrum, Temperature(temps[it]), family.dim_a, family.dim_b);
                SweepRecord& rec = records[it * cfg.steps + k];
                rec.tau = tau;
                rec.temperature = temps[it];
                rec.negativity = negativity(rho).value;
                rec.q = criterion_matrix(bloch_decompose(rho, basis_a, basis_b)).q;
                rec.energies = low;
            }
        } catch (const Error& e) {
            throw SweepError("run_sweep: at tau = " + std::to_string(tau) + ": " + e.what());
        }
    }
    return records;
}

/// Scan the ground level over a coarse grid and refine every change of its
/// identity by bisection on the signed gap between the two competing levels.
/// Levels are continued across the grid by nearest-value matching of their
/// affine-in-tau predictions (slope from the ground eigenvector).  Returns an
/// empty report when no crossing occurs in the range.
inline CrossingReport detect_ground_crossings(int sites, double omega, double gamma,
                                              double tau_min, double tau_max,
                                              double refine_tol = 1e-9,
                                              std::size_t coarse_points = 512) {
    if (sites != 2 && sites != 3)
        throw InvalidState("detect_ground_crossings: sites must be 2 or 3");
    if (!(tau_min < tau_max))
        throw InvalidState("detect_ground_crossings: requires tau_min < tau_max");
    if (!(refine_tol > 0.0))
        throw InvalidState("detect_ground_crossings: requires refine_tol > 0");
    if (coarse_points < 2)
        throw InvalidState("detect_ground_crossings: requires coarse_points >= 2");

    const detail::TauFamily family(sites, omega, gamma);
    const double span = tau_max - tau_min;

    std::vector<double> grid(coarse_points);
    std::vector<std::vector<double>> levels(coarse_points);
    std::vector<double> ground(coarse_points);
    std::vector<double> slope(coarse_points);
    for (std::size_t g = 0; g < coarse_points; ++g) {
        grid[g] = tau_min + span * static_cast<double>(g) / static_cast<double>(coarse_points - 1);
        const Spectrum s = eig_hermitian(family.at(grid[g]));
        levels[g] = s.eigenvalues;
        ground[g] = s.eigenvalues.front();
        slope[g] = detail::ground_slope(family, s);
    }

    CrossingReport report;
    for (std::size_t g = 0; g + 1 < coarse_points; ++g) {
        const double h = grid[g + 1] - grid[g];
        const double predicted = ground[g] + slope[g] * h;
        const double value_scale = std::max({1.0, std::abs(ground[g]), std::abs(ground[g + 1])});
        const double slope_scale = std::max({1.0, std::abs(slope[g]), std::abs(slope[g + 1])});
        const bool value_flag = predicted - ground[g + 1] > 1e-7 * value_scale;
        const bool slope_flag = std::abs(slope[g + 1] - slope[g]) > 1e-6 * slope_scale;
        if (!value_flag && !slope_flag) continue;

        // lines of the two competing levels, anchored at the bracket ends
        double a_tau = grid[g], a_val = ground[g];
        const double a_slope = slope[g];
        double b_tau = grid[g + 1], b_val = ground[g + 1];
        const double b_slope = slope[g + 1];

        const auto line_a = [&](double tau) { return a_val + a_slope * (tau - a_tau); };
        const auto line_b = [&](double tau) { return b_val + b_slope * (tau - b_tau); };

        double lo = grid[g], hi = grid[g + 1];
        const double f_lo = line_a(lo) - line_b(lo);
        const double f_hi = line_a(hi) - line_b(hi);
        if (!(f_lo <= 0.0 && f_hi >= 0.0 && f_hi - f_lo > 0.0))
            continue; // flagged but not bracketed

        while (hi - lo > refine_tol) {
            const double mid = 0.5 * (lo + hi);
            const std::vector<double> ev = eig_hermitian_values(family.at(mid));
            const double ea = ev[detail::nearest_index(ev, line_a(mid))];
            const double eb = ev[detail::nearest_index(ev, line_b(mid))];
            const double f_mid = ea - eb;
            if (f_mid < 0.0) {
                lo = mid;
                a_tau = mid;
                a_val = ea;
            } else if (f_mid > 0.0) {
                hi = mid;
                b_tau = mid;
                b_val = eb;
            } else {
                lo = hi = mid;
                break;
            }
        }

        GroundCrossing crossing;
        crossing.tau_star = 0.5 * (lo + hi);
        crossing.old_ground_rank_after =
            static_cast<int>(detail::nearest_index(levels[g + 1], line_a(grid[g + 1])));
        crossing.new_ground_rank_before =
            static_cast<int>(detail::nearest_index(levels[g], line_b(grid[g])));

        // a grid point sitting on a crossing can flag both adjacent intervals
        if (!report.crossings.empty() &&
            crossing.tau_star - report.crossings.back().tau_star <= 10.0 * refine_tol)
            continue;
        report.crossings.push_back(crossing);
    }
    return report;
}

} // namespace spincorr
