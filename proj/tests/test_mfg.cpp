#include <catch2/catch_amalgamated.hpp>
#include <cmath>
#include <numeric>
#include <vector>

#include "mtt/core/rng.hpp"
#include "mtt/mfg/mfg.hpp"

using namespace mtt;
using namespace mtt::mfg;
using Catch::Approx;

namespace {

CostParams table_params() {
    CostParams c;
    c.omega1 = 1e4;
    c.omega2 = 1e6;
    c.gamma_th = std::pow(10.0, 0.3);
    c.sigma2 = 1e-8;
    c.g_direct = 1e-3;
    c.i_bar_u = 5e-6;
    c.i_bar_j = 1e-5;
    c.p_max = 0.1;
    return c;
}

MfgGrid default_grid() {
    MfgGrid g;
    g.n_time = 20;
    g.n_energy = 50;
    g.dt = 0.1;
    g.e0 = 1.0;
    g.nu = 0.01;
    return g;
}

double row_mass(std::span<const double> row, double de) {
    double s = 0.0;
    for (double v : row) s += v * de;
    return s;
}

}  // namespace

TEST_CASE("cost hits its floor exactly at the SINR-inversion power") {
    const CostParams c = table_params();
    const double itot = c.i_bar_u + c.i_bar_j;
    const double p_star = c.gamma_th * (itot + c.sigma2) / c.g_direct;
    CHECK(cost(p_star, c) == Approx(c.omega2 * itot * itot).epsilon(1e-12));

    CostParams zero = c;
    zero.i_bar_u = zero.i_bar_j = 0.0;
    CHECK(cost(0.0, zero) ==
          Approx(zero.omega1 * zero.gamma_th * zero.gamma_th * zero.sigma2 * zero.sigma2));

    // random draws vs the direct formula
    RngStream rng(51, Stream::Bench);
    for (int t = 0; t < 50; ++t) {
        CostParams r = c;
        r.i_bar_u = rng.uniform(0, 1e-4);
        r.i_bar_j = rng.uniform(0, 1e-4);
        const double p = rng.uniform(0, 0.1);
        const double miss = p * r.g_direct - r.gamma_th * (r.i_bar_u + r.i_bar_j + r.sigma2);
        const double expect =
            r.omega1 * miss * miss + r.omega2 * (r.i_bar_u + r.i_bar_j) * (r.i_bar_u + r.i_bar_j);
        CHECK(cost(p, r) == Approx(expect).epsilon(1e-12));
    }
}

TEST_CASE("optimal_power matches the brute-force Hamiltonian argmin") {
    const CostParams base = table_params();
    CHECK(optimal_power(0.0, base) ==
          Approx(base.gamma_th * (base.i_bar_u + base.i_bar_j + base.sigma2) / base.g_direct));
    CHECK(optimal_power(-1.0, base) == 0.0);
    CHECK(optimal_power(1.0, base) == base.p_max);
    CostParams zg = base;
    zg.g_direct = 0.0;
    CHECK_THROWS_AS(optimal_power(0.0, zg), ZeroGain);

    RngStream rng(53, Stream::Bench);
    const int grid_n = 100000;
    const double cell = base.p_max / grid_n;
    for (int t = 0; t < 1000; ++t) {
        CostParams c = base;
        c.g_direct = rng.uniform(1e-4, 1e-2);
        c.i_bar_u = rng.uniform(0, 5e-5);
        c.i_bar_j = rng.uniform(0, 5e-5);
        const double du = rng.uniform(-2e-4, 2e-4);
        const double p = optimal_power(du, c);
        // oracle: argmin over a uniform power grid of H(p) = cost(p) - p*du
        double best_p = 0.0, best_h = std::numeric_limits<double>::infinity();
        for (int k = 0; k <= grid_n; ++k) {
            const double pk = k * cell;
            const double h = cost(pk, c) - pk * du;
            if (h < best_h) {
                best_h = h;
                best_p = pk;
            }
        }
        CHECK(std::abs(p - best_p) <= cell * (1.0 + 1e-9));
    }
}

TEST_CASE("fpk_step: no drift and no diffusion leaves the density unchanged") {
    MfgGrid g = default_grid();
    g.nu = 0.0;
    std::vector<double> m(static_cast<std::size_t>(g.n_energy));
    RngStream rng(57, Stream::Bench);
    for (auto& v : m) v = rng.uniform(0.0, 2.0);
    double s = row_mass(m, g.de());
    for (auto& v : m) v /= s;
    const std::vector<double> p(static_cast<std::size_t>(g.n_energy), 0.0);
    std::vector<double> out(m.size());
    fpk_step(m, p, g, out);
    for (std::size_t i = 0; i < m.size(); ++i) CHECK(out[i] == Approx(m[i]).epsilon(1e-12));
}

TEST_CASE("fpk_step conserves mass and moves a point mass one level down") {
    MfgGrid g = default_grid();
    const int z = 30;
    std::vector<double> m(static_cast<std::size_t>(g.n_energy), 0.0);
    m[z] = 1.0 / g.de();  // unit point mass
    std::vector<double> p(static_cast<std::size_t>(g.n_energy), 0.05);
    std::vector<double> out(m.size());
    const double clipped = fpk_step(m, p, g, out);
    CHECK(clipped == 0.0);
    CHECK(row_mass(out, g.de()) == Approx(1.0).epsilon(1e-12));
    // hand evaluation: (dt/de) * p of the mass moves from level z to z-1 (drift)
    // and nu^2 dt / (2 de^2) of it diffuses to each neighbor
    const double drift = g.dt / g.de() * 0.05;
    const double diff = g.nu * g.nu * g.dt / (2.0 * g.de() * g.de());
    CHECK(out[z] == Approx((1.0 - drift - 2.0 * diff) / g.de()).epsilon(1e-9));
    CHECK(out[z - 1] == Approx((drift + diff) / g.de()).epsilon(1e-9));
    CHECK(out[z + 1] == Approx(diff / g.de()).epsilon(1e-9));

    // random rows: mass conserved to 1e-12 before clipping can bite
    RngStream rng(59, Stream::Bench);
    for (int t = 0; t < 20; ++t) {
        std::vector<double> mr(static_cast<std::size_t>(g.n_energy));
        for (auto& v : mr) v = rng.uniform(0.0, 3.0);
        double s = row_mass(mr, g.de());
        for (auto& v : mr) v /= s;
        std::vector<double> pr(static_cast<std::size_t>(g.n_energy));
        for (auto& v : pr) v = rng.uniform(0.0, 0.1);
        pr[0] = 0.0;
        fpk_step(mr, pr, g, out);
        CHECK(row_mass(out, g.de()) == Approx(1.0).epsilon(1e-9));
    }
}

TEST_CASE("fpk_step rejects an unstable grid") {
    MfgGrid g = default_grid();
    g.dt = 1.0;  // dt*p/de = 1.0*0.1/0.02 = 5 > 1
    const std::vector<double> m(static_cast<std::size_t>(g.n_energy), 1.0);
    const std::vector<double> p(static_cast<std::size_t>(g.n_energy), 0.1);
    std::vector<double> out(m.size());
    CHECK_THROWS_AS(fpk_step(m, p, g, out), UnstableGrid);
}

TEST_CASE("hjb_step_backward: zero cost, zero policy, zero diffusion is identity") {
    MfgGrid g = default_grid();
    g.nu = 0.0;
    std::vector<double> u(static_cast<std::size_t>(g.n_energy));
    RngStream rng(61, Stream::Bench);
    for (auto& v : u) v = rng.uniform(-1.0, 1.0);
    const std::vector<double> p(static_cast<std::size_t>(g.n_energy), 0.0);
    const std::vector<double> m(static_cast<std::size_t>(g.n_energy), 1.0);
    std::vector<double> out(u.size());
    hjb_step_backward(u, p, m, [](double, double) { return 0.0; }, g, out);
    for (std::size_t i = 0; i < u.size(); ++i) CHECK(out[i] == Approx(u[i]).margin(1e-15));
}

TEST_CASE("hjb_step_backward matches a hand-evaluated 3-level step") {
    MfgGrid g = default_grid();
    g.n_energy = 3;
    g.e0 = 0.06;      // de = 0.02
    g.nu = 0.01;
    g.dt = 0.01;      // stability: 0.01*0.1/0.02 + 1e-4*0.01/4e-4 = 0.0525
    const std::vector<double> u{1.0, 2.0, 4.0};
    const std::vector<double> p{0.0, 0.05, 0.1};
    const std::vector<double> m{1.0, 1.0, 1.0};
    auto cost_fn = [](double pp, double) { return 3.0 * pp; };
    std::vector<double> out(3);
    hjb_step_backward(u, p, m, cost_fn, g, out);
    const double de = 0.02, coef = 1e-4 * 0.01 / (2 * de * de);
    // z=0: one-sided du = (u1-u0)/de = 50 ; lap = u1 - u0 = 1
    CHECK(out[0] == Approx(u[0] + 0.01 * (0.0 - 0.0 * 50.0) + coef * 1.0).epsilon(1e-12));
    // z=1: du = (u1-u0)/de = 50 ; lap = u2 - 2u1 + u0 = 1
    CHECK(out[1] == Approx(u[1] + 0.01 * (3.0 * 0.05 - 0.05 * 50.0) + coef * 1.0).epsilon(1e-12));
    // z=2: du = (u2-u1)/de = 100 ; lap = u1 - u2 = -2
    CHECK(out[2] ==
          Approx(u[2] + 0.01 * (3.0 * 0.1 - 0.1 * 100.0) + coef * (-2.0)).epsilon(1e-12));
}

TEST_CASE("hjb backward sweep stays finite for 100 steps at table parameters") {
    MfgGrid g = default_grid();
    g.n_time = 100;
    const CostParams c = table_params();
    std::vector<double> u(static_cast<std::size_t>(g.n_energy), 0.0);
    std::vector<double> p(static_cast<std::size_t>(g.n_energy),
                          optimal_power(0.0, c));
    p[0] = 0.0;
    const std::vector<double> m(static_cast<std::size_t>(g.n_energy), 1.0);
    std::vector<double> out(u.size());
    for (int t = 0; t < 100; ++t) {
        hjb_step_backward(u, p, m, [&c](double pp, double) { return cost(pp, c); }, g, out);
        u = out;
    }
    for (double v : u) CHECK(std::isfinite(v));
}

TEST_CASE("solve_mfg with dominant SINR cost pins the policy to inversion") {
    MfgGrid g = default_grid();
    CostParams c = table_params();
    c.i_bar_u = c.i_bar_j = 0.0;
    c.omega1 = 1e8;
    const double p_inv = c.gamma_th * c.sigma2 / c.g_direct;  // ~2e-5 W
    std::vector<double> m0(static_cast<std::size_t>(g.n_energy), 1.0 / g.e0);
    const auto sol = solve_mfg(m0, g, c);
    CHECK(sol.converged);
    // away from the drained boundary the policy equals the inversion power
    for (int t = 0; t < g.n_time; ++t)
        for (int z = 5; z < g.n_energy; ++z)
            CHECK(sol.p(static_cast<std::size_t>(t), static_cast<std::size_t>(z)) ==
                  Approx(p_inv).epsilon(1e-3));
}

TEST_CASE("solve_mfg keeps the density invariants at every step") {
    MfgGrid g = default_grid();
    const CostParams c = table_params();
    std::vector<double> m0(static_cast<std::size_t>(g.n_energy), 1.0 / g.e0);
    const auto sol = solve_mfg(m0, g, c);
    CHECK(sol.converged);
    CHECK(sol.max_clipped_mass <= 1e-3);
    for (int t = 0; t <= g.n_time; ++t) {
        double mass = 0.0;
        for (int z = 0; z < g.n_energy; ++z) {
            const double v = sol.m(static_cast<std::size_t>(t), static_cast<std::size_t>(z));
            CHECK(v >= 0.0);
            mass += v * g.de();
        }
        CHECK(mass == Approx(1.0).margin(1e-6));
    }
    for (const double v : sol.u.data()) CHECK(std::isfinite(v));
    for (const double v : sol.p.data()) {
        CHECK(v >= 0.0);
        CHECK(v <= c.p_max);
    }
}

TEST_CASE("solve_mfg reproduces the qualitative equilibrium shape") {
    MfgGrid g = default_grid();
    const CostParams c = table_params();
    std::vector<double> m0(static_cast<std::size_t>(g.n_energy), 1.0 / g.e0);
    const auto sol = solve_mfg(m0, g, c);
    REQUIRE(sol.converged);

    // mass at the lowest level is monotone non-decreasing in time
    for (int t = 1; t <= g.n_time; ++t)
        CHECK(sol.m(static_cast<std::size_t>(t), 0) >=
              sol.m(static_cast<std::size_t>(t - 1), 0) - 1e-12);

    // mass at the full-energy level drops within the first step
    CHECK(sol.m(1, static_cast<std::size_t>(g.n_energy - 1)) <
          sol.m(0, static_cast<std::size_t>(g.n_energy - 1)));

    // policy is non-decreasing in energy on at least 95% of adjacent pairs
    int ok = 0, total = 0;
    for (int t = 0; t < g.n_time; ++t)
        for (int z = 0; z + 1 < g.n_energy; ++z) {
            ++total;
            if (sol.p(static_cast<std::size_t>(t), static_cast<std::size_t>(z + 1)) >=
                sol.p(static_cast<std::size_t>(t), static_cast<std::size_t>(z)) - 1e-12)
                ++ok;
        }
    CHECK(double(ok) / total >= 0.95);

    // contraction diagnostic: policy change non-increasing over the last three iterations
    const auto& ch = sol.policy_changes;
    REQUIRE(ch.size() >= 3);
    CHECK(ch[ch.size() - 1] <= ch[ch.size() - 2]);
    CHECK(ch[ch.size() - 2] <= ch[ch.size() - 3]);
}

TEST_CASE("solve_mfg rejects a non-density initial condition") {
    MfgGrid g = default_grid();
    const CostParams c = table_params();
    std::vector<double> bad(static_cast<std::size_t>(g.n_energy), 2.0 / g.e0);
    CHECK_THROWS_AS(solve_mfg(bad, g, c), InvalidConfig);
    std::vector<double> neg(static_cast<std::size_t>(g.n_energy), 1.0 / g.e0);
    neg[3] = -neg[3];
    CHECK_THROWS_AS(solve_mfg(neg, g, c), InvalidConfig);
}

TEST_CASE("energy SDE: deterministic drain, absorbing floor, unbiased noise") {
    RngStream rng(63, Stream::Wiener);
    CHECK(energy_sde_step(0.5, 0.01, 0.1, 0.0, 1.0, rng) == Approx(0.499));
    CHECK(energy_sde_step(0.0, 0.1, 0.1, 0.05, 1.0, rng) == 0.0);

    double sum = 0.0;
    const int n = 1'000'000;
    for (int i = 0; i < n; ++i) sum += energy_sde_step(0.5, 0.01, 0.1, 0.01, 1.0, rng);
    CHECK(sum / n == Approx(0.499).margin(1e-4));

    // clamped to [0, e0]
    for (int i = 0; i < 1000; ++i) {
        const double e = energy_sde_step(0.999999, 0.0, 0.1, 0.5, 1.0, rng);
        CHECK(e <= 1.0);
        CHECK(e >= 0.0);
    }
}

TEST_CASE("fractional and uniform power baselines") {
    CHECK(fractional_power(1e-3, 0.0, 0.02, 0.1) == Approx(0.02));
    // tau = 1: halving the gain doubles the power until the cap
    const double p1 = fractional_power(2e-3, 1.0, 1e-5, 0.1);
    const double p2 = fractional_power(1e-3, 1.0, 1e-5, 0.1);
    CHECK(p2 == Approx(2.0 * p1));
    CHECK(fractional_power(1e-9, 1.0, 1e-5, 0.1) == Approx(0.1));
    CHECK_THROWS_AS(fractional_power(0.0, 1.0, 1e-5, 0.1), ZeroGain);

    CHECK(uniform_power(1.0, 1.0, 0.1) == Approx(0.1));  // 1 W clipped to p_max
    CHECK(uniform_power(0.05, 2.0, 0.1) == Approx(0.025));
}
