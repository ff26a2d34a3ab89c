#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <span>
#include <vector>

#include "mtt/core/errors.hpp"
#include "mtt/core/matrix.hpp"
#include "mtt/core/rng.hpp"

namespace mtt::mfg {

// Discretization of one slot: Y time points by Z energy levels over [0, e0].
// Level z covers energy band [z*de, (z+1)*de); level 0 is the empty-battery level.
struct MfgGrid {
    int n_time = 20;   // Y
    int n_energy = 50; // Z
    double dt = 0.1;   // [s]
    double e0 = 1.0;   // [J]
    double nu = 0.01;  // diffusion coefficient

    double de() const { return e0 / n_energy; }

    void validate(double p_max) const {
        if (n_time < 1 || n_energy < 2) throw InvalidConfig("mfg grid: need Y >= 1, Z >= 2");
        if (!(dt > 0) || !(e0 > 0)) throw InvalidConfig("mfg grid: dt and e0 must be > 0");
        if (nu < 0) throw InvalidConfig("mfg grid: nu must be >= 0");
        if (stability_number(p_max) > 1.0)
            throw UnstableGrid("mfg grid: dt*p_max/de + nu^2*dt/de^2 > 1");
    }
    double stability_number(double p_max) const {
        return dt * p_max / de() + nu * nu * dt / (de() * de());
    }

    int level_of(double e) const {
        const int z = static_cast<int>(std::floor(e / de()));
        return std::clamp(z, 0, n_energy - 1);
    }
};

struct CostParams {
    double omega1 = 1e4;
    double omega2 = 1e6;
    double gamma_th = 1.9952623149688795;  // linear
    double sigma2 = 1e-8;                  // [W]
    double g_direct = 1e-3;                // gain to the nearest UAV
    double i_bar_u = 0.0;                  // interference mean field [W]
    double i_bar_j = 0.0;                  // jamming mean field [W]
    double p_max = 0.1;                    // [W]

    void validate() const {
        if (!(omega1 > 0) || !(omega2 > 0)) throw InvalidConfig("omega1/omega2: need > 0");
    }
};

// w1*[p*g - gamma*(Iu+Ij+sigma2)]^2 + w2*(Iu+Ij)^2; the second term is constant in p.
inline double cost(double p, const CostParams& c) {
    const double miss = p * c.g_direct - c.gamma_th * (c.i_bar_u + c.i_bar_j + c.sigma2);
    const double itot = c.i_bar_u + c.i_bar_j;
    return c.omega1 * miss * miss + c.omega2 * itot * itot;
}

// Closed-form Hamiltonian minimizer, clipped to [0, p_max].
inline double optimal_power(double du_de, const CostParams& c) {
    if (!(c.g_direct > 0.0)) throw ZeroGain("optimal_power: need g > 0");
    const double p = c.gamma_th * (c.i_bar_u + c.i_bar_j + c.sigma2) / c.g_direct +
                     du_de / (2.0 * c.omega1 * c.g_direct * c.g_direct);
    return std::clamp(p, 0.0, c.p_max);
}

struct MfgSolution {
    Matrix m;  // (Y+1) x Z mean field (density over energy)
    Matrix u;  // (Y+1) x Z value function, u(Y, .) = 0
    Matrix p;  // Y x Z policy [W]
    int iterations = 0;
    bool converged = false;
    double max_clipped_mass = 0.0;          // worst positivity repair in one step
    std::vector<double> policy_changes;     // max-abs policy change per iteration
};

// One explicit forward step of the energy-transport equation. Energy drains at
// rate p (mass moves one level down per de/p seconds); diffusion acts through
// conservative face fluxes with zero-flux ends. Level 0 is absorbing, matching
// the SDE floor: nothing drifts or diffuses back out of the empty level.
// Returns the clipped mass (positivity repair magnitude).
inline double fpk_step(std::span<const double> m_row, std::span<const double> p_row,
                       const MfgGrid& grid, std::span<double> out) {
    const int z_n = grid.n_energy;
    const double de = grid.de();
    double p_max_row = 0.0;
    for (double p : p_row) p_max_row = std::max(p_max_row, p);
    if (grid.dt * p_max_row / de + grid.nu * grid.nu * grid.dt / (de * de) > 1.0 + 1e-12)
        throw UnstableGrid("fpk_step: stability bound violated");

    for (int z = 0; z < z_n; ++z) out[z] = m_row[z];
    // drift: donor-cell flux from level z to z-1; level 0 never drains
    for (int z = 1; z < z_n; ++z) {
        const double flux = grid.dt / de * m_row[z] * p_row[z];
        out[z] -= flux;
        out[z - 1] += flux;
    }
    // diffusion: face flux between z and z+1; the 0|1 face only admits downward flow
    const double coef = grid.nu * grid.nu * grid.dt / (2.0 * de * de);
    for (int z = 0; z + 1 < z_n; ++z) {
        double f = coef * (m_row[z + 1] - m_row[z]);  // positive: into level z
        if (z == 0) f = std::max(f, 0.0);
        out[z] += f;
        out[z + 1] -= f;
    }
    // positivity repair: clip and renormalize
    double clipped = 0.0, total = 0.0;
    for (int z = 0; z < z_n; ++z) {
        if (out[z] < 0.0) {
            clipped += -out[z] * de;
            out[z] = 0.0;
        }
        total += out[z] * de;
    }
    if (total > 0.0)
        for (int z = 0; z < z_n; ++z) out[z] /= total;
    return clipped;
}

// One backward step of the value recursion: u(t-1) from u(t) with the policy and
// running cost of the interval, one-sided differences at the energy boundaries.
inline void hjb_step_backward(std::span<const double> u_next, std::span<const double> p_row,
                              std::span<const double> m_row,
                              const std::function<double(double, double)>& cost_fn,
                              const MfgGrid& grid, std::span<double> out) {
    const int z_n = grid.n_energy;
    const double de = grid.de();
    const double coef = grid.nu * grid.nu * grid.dt / (2.0 * de * de);
    for (int z = 0; z < z_n; ++z) {
        const double du_de = z > 0 ? (u_next[z] - u_next[z - 1]) / de
                                   : (u_next[1] - u_next[0]) / de;
        double lap;
        if (z == 0)
            lap = u_next[1] - u_next[0];
        else if (z == z_n - 1)
            lap = u_next[z_n - 2] - u_next[z_n - 1];
        else
            lap = u_next[z + 1] - 2.0 * u_next[z] + u_next[z - 1];
        out[z] = u_next[z] + grid.dt * (cost_fn(p_row[z], m_row[z]) - p_row[z] * du_de) +
                 coef * lap;
    }
}

// Fixed-point iteration to mean field equilibrium: forward density sweep,
// backward value sweep, policy refresh, until the policy stops moving.
// The empty level transmits nothing: p(t, 0) = 0.
inline MfgSolution solve_mfg(std::span<const double> initial_m, const MfgGrid& grid,
                             const CostParams& cp, int max_iter = 200, double tol = 1e-6) {
    grid.validate(cp.p_max);
    cp.validate();
    const int y_n = grid.n_time, z_n = grid.n_energy;
    if (static_cast<int>(initial_m.size()) != z_n)
        throw InvalidConfig("solve_mfg: initial_m has wrong length");
    double mass = 0.0;
    for (double v : initial_m) {
        if (v < 0.0) throw InvalidConfig("solve_mfg: initial_m has negative entries");
        mass += v * grid.de();
    }
    if (std::abs(mass - 1.0) > 1e-6) throw InvalidConfig("solve_mfg: initial_m is not a density");

    MfgSolution sol;
    sol.m = Matrix(static_cast<std::size_t>(y_n + 1), static_cast<std::size_t>(z_n));
    sol.u = Matrix(static_cast<std::size_t>(y_n + 1), static_cast<std::size_t>(z_n));
    sol.p = Matrix(static_cast<std::size_t>(y_n), static_cast<std::size_t>(z_n));
    for (int z = 0; z < z_n; ++z) sol.m(0, static_cast<std::size_t>(z)) = initial_m[z];

    const double p_init = optimal_power(0.0, cp);
    for (int t = 0; t < y_n; ++t) {
        for (int z = 1; z < z_n; ++z) sol.p(t, static_cast<std::size_t>(z)) = p_init;
        sol.p(t, 0) = 0.0;
    }
    auto cost_fn = [&cp](double p, double /*m*/) { return cost(p, cp); };

    std::vector<double> prev_policy;
    for (int it = 1; it <= max_iter; ++it) {
        sol.iterations = it;
        // forward FPK
        for (int t = 0; t < y_n; ++t) {
            const double clipped =
                fpk_step(std::span<const double>(sol.m.row(static_cast<std::size_t>(t)),
                                                 static_cast<std::size_t>(z_n)),
                         std::span<const double>(sol.p.row(static_cast<std::size_t>(t)),
                                                 static_cast<std::size_t>(z_n)),
                         grid,
                         std::span<double>(sol.m.row(static_cast<std::size_t>(t + 1)),
                                           static_cast<std::size_t>(z_n)));
            sol.max_clipped_mass = std::max(sol.max_clipped_mass, clipped);
        }
        // backward HJB from u(Y, .) = 0
        for (int z = 0; z < z_n; ++z) sol.u(static_cast<std::size_t>(y_n), static_cast<std::size_t>(z)) = 0.0;
        for (int t = y_n; t >= 1; --t) {
            hjb_step_backward(std::span<const double>(sol.u.row(static_cast<std::size_t>(t)),
                                                      static_cast<std::size_t>(z_n)),
                              std::span<const double>(sol.p.row(static_cast<std::size_t>(t - 1)),
                                                      static_cast<std::size_t>(z_n)),
                              std::span<const double>(sol.m.row(static_cast<std::size_t>(t - 1)),
                                                      static_cast<std::size_t>(z_n)),
                              cost_fn, grid,
                              std::span<double>(sol.u.row(static_cast<std::size_t>(t - 1)),
                                                static_cast<std::size_t>(z_n)));
        }
        // policy refresh from the value gradient
        prev_policy = sol.p.data();
        for (int t = 0; t < y_n; ++t) {
            for (int z = 1; z < z_n; ++z) {
                const double du = (sol.u(static_cast<std::size_t>(t), static_cast<std::size_t>(z)) -
                                   sol.u(static_cast<std::size_t>(t), static_cast<std::size_t>(z - 1))) /
                                  grid.de();
                sol.p(static_cast<std::size_t>(t), static_cast<std::size_t>(z)) = optimal_power(du, cp);
            }
            sol.p(static_cast<std::size_t>(t), 0) = 0.0;
        }
        double change = 0.0;
        for (std::size_t k = 0; k < prev_policy.size(); ++k)
            change = std::max(change, std::abs(sol.p.data()[k] - prev_policy[k]));
        sol.policy_changes.push_back(change);
        if (change < tol) {
            sol.converged = true;
            break;
        }
    }
    return sol;
}

// Euler-Maruyama step of de = -p dt + nu dW, clamped to [0, e0].
// The empty state is absorbing: a drained UAV stays drained.
inline double energy_sde_step(double e, double p, double dt, double nu, double e0,
                              RngStream& rng) {
    if (e <= 0.0) return 0.0;
    const double next = e - p * dt + nu * std::sqrt(dt) * rng.normal();
    return std::clamp(next, 0.0, e0);
}

// p = min(p_max, p0 * g^-tau): fractional channel inversion.
inline double fractional_power(double g_direct, double tau, double p0, double p_max) {
    if (!(g_direct > 0.0)) throw ZeroGain("fractional_power: need g > 0");
    return std::min(p_max, p0 * std::pow(g_direct, -tau));
}

// p = e(0)/T, clipped to p_max.
inline double uniform_power(double e0, double slot_duration, double p_max) {
    return std::min(p_max, e0 / slot_duration);
}

}  // namespace mtt::mfg
