#include <catch2/catch_amalgamated.hpp>

#include "mtt/channel/channel.hpp"

using namespace mtt;
using namespace mtt::channel;
using Catch::Approx;

TEST_CASE("channel_gain is fading times d^-alpha") {
    CHECK(channel_gain({0, 0, 0}, {1, 0, 0}, 1.0, 4.0) == Approx(1.0));
    CHECK(channel_gain({0, 0, 0}, {2, 0, 0}, 1.0, 4.0) == Approx(0.0625));
    CHECK_THROWS_AS(channel_gain({1, 1, 1}, {1, 1, 1}, 1.0, 4.0), CoincidentPositions);
}

TEST_CASE("nakagami fading has unit mean") {
    RngStream rng(3, Stream::Fading);
    double sum = 0.0;
    const int n = 1'000'000;
    for (int i = 0; i < n; ++i) sum += draw_fading(rng, 3.0);
    CHECK(sum / n == Approx(1.0).margin(0.01));
}

namespace {

ChannelRealization hand_set(std::size_t n, std::size_t m, double guav, double gjam) {
    ChannelRealization cr{Matrix(n, n, guav), Matrix(m, n, gjam)};
    for (std::size_t i = 0; i < n; ++i) cr.g_uav(i, i) = 0.0;
    return cr;
}

}  // namespace

TEST_CASE("sinr reduces to signal over noise without interferers") {
    ChannelParams prm;
    prm.noise_power = 1e-8;
    auto cr = hand_set(2, 0, 0.0, 0.0);
    cr.g_uav(0, 1) = 1e-4;
    const std::vector<double> p{0.1, 0.1};
    CHECK(sinr(0, 1, p, {}, cr, prm) == Approx(1000.0));
    const std::vector<double> p0{0.0, 0.1};
    CHECK(sinr(0, 1, p0, {}, cr, prm) == Approx(0.0));
}

TEST_CASE("aggregate_interference matches term-by-term enumeration") {
    // empty sums
    auto cr0 = hand_set(2, 0, 0.0, 0.0);
    const auto [iu0, ij0] = aggregate_interference(1, 0, {0.1, 0.1}, {}, cr0);
    CHECK(iu0 == 0.0);
    CHECK(ij0 == 0.0);

    // one-term jamming sum
    auto cr1 = hand_set(2, 1, 0.0, 1e-3);
    const auto [iu1, ij1] = aggregate_interference(1, 0, {0.1, 0.1}, {0.4}, cr1);
    CHECK(ij1 == Approx(4e-4));

    // random instances vs a brute-force oracle
    RngStream rng(17, Stream::Fading);
    ChannelParams prm;
    for (int trial = 0; trial < 50; ++trial) {
        const int n = 4 + static_cast<int>(rng.below(7));  // 4..10
        const int m = 1 + static_cast<int>(rng.below(3));  // 1..3
        ChannelRealization cr{Matrix(static_cast<std::size_t>(n), static_cast<std::size_t>(n)),
                              Matrix(static_cast<std::size_t>(m), static_cast<std::size_t>(n))};
        std::vector<double> pu(static_cast<std::size_t>(n)), pj(static_cast<std::size_t>(m));
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                if (a != b)
                    cr.g_uav(static_cast<std::size_t>(a), static_cast<std::size_t>(b)) =
                        rng.uniform(1e-6, 1e-2);
        for (int a = 0; a < m; ++a)
            for (int b = 0; b < n; ++b)
                cr.g_jam(static_cast<std::size_t>(a), static_cast<std::size_t>(b)) =
                    rng.uniform(1e-6, 1e-2);
        for (auto& v : pu) v = rng.uniform(0.0, 0.1);
        for (auto& v : pj) v = rng.uniform(0.0, 0.4);
        const int i = static_cast<int>(rng.below(static_cast<std::uint64_t>(n)));
        int r = static_cast<int>(rng.below(static_cast<std::uint64_t>(n)));
        if (r == i) r = (r + 1) % n;

        double oracle_iu = 0.0, oracle_ij = 0.0;
        for (int a = 0; a < n; ++a)
            if (a != i && a != r)
                oracle_iu += pu[static_cast<std::size_t>(a)] *
                             cr.g_uav(static_cast<std::size_t>(a), static_cast<std::size_t>(r));
        for (int a = 0; a < m; ++a)
            oracle_ij += pj[static_cast<std::size_t>(a)] *
                         cr.g_jam(static_cast<std::size_t>(a), static_cast<std::size_t>(r));

        const auto [iu, ij] = aggregate_interference(r, i, pu, pj, cr);
        CHECK(iu == Approx(oracle_iu).epsilon(1e-12));
        CHECK(ij == Approx(oracle_ij).epsilon(1e-12));

        const double s = sinr(i, r, pu, pj, cr, prm);
        const double oracle_s =
            pu[static_cast<std::size_t>(i)] *
            cr.g_uav(static_cast<std::size_t>(i), static_cast<std::size_t>(r)) /
            (oracle_iu + oracle_ij + prm.noise_power);
        CHECK(s == Approx(oracle_s).epsilon(1e-12));
    }
}

TEST_CASE("sinr is invariant to a common power and noise rescale") {
    RngStream rng(23, Stream::Fading);
    ChannelParams prm;
    ChannelParams prm_scaled = prm;
    const double c = 7.25;
    prm_scaled.noise_power = prm.noise_power * c;
    auto cr = hand_set(5, 2, 0.0, 0.0);
    for (std::size_t a = 0; a < 5; ++a)
        for (std::size_t b = 0; b < 5; ++b)
            if (a != b) cr.g_uav(a, b) = rng.uniform(1e-6, 1e-2);
    for (std::size_t a = 0; a < 2; ++a)
        for (std::size_t b = 0; b < 5; ++b) cr.g_jam(a, b) = rng.uniform(1e-6, 1e-2);
    std::vector<double> pu{0.01, 0.02, 0.03, 0.04, 0.05}, pj{0.4, 0.2};
    auto pu2 = pu;
    auto pj2 = pj;
    for (auto& v : pu2) v *= c;
    for (auto& v : pj2) v *= c;
    CHECK(sinr(0, 1, pu, pj, cr, prm) == Approx(sinr(0, 1, pu2, pj2, cr, prm_scaled)));
}

TEST_CASE("estimate_mean_gains recovers homogeneous gains exactly") {
    const int n = 10, m = 3;
    const double g0 = 2e-4, gj = 7e-4, g_direct = 5e-3;
    const ProbePowers pp;
    const double p1r = pp.p1_u * g_direct + (n - 2) * pp.p1_u * g0 + m * pp.p1_j * gj;
    const double p2r = pp.p2_u * g_direct + (n - 2) * pp.p2_u * g0 + m * pp.p2_j * gj;
    const auto est =
        estimate_mean_gains(pp.p1_u, pp.p1_j, pp.p2_u, pp.p2_j, p1r, p2r, g_direct, n, m);
    CHECK(est.g_bar_uav == Approx(g0).epsilon(1e-9));
    CHECK(est.g_bar_jam == Approx(gj).epsilon(1e-9));
    CHECK_FALSE(est.clamped);
}

TEST_CASE("proportional probe powers are a singular system") {
    CHECK_THROWS_AS(estimate_mean_gains(0.05, 0.2, 0.10, 0.4, 1.0, 2.0, 1e-3, 10, 2),
                    SingularProbe);
}

TEST_CASE("estimate_mean_gains equals the symbolic 2x2 solution on heterogeneous gains") {
    RngStream rng(29, Stream::Fading);
    const int n = 12, m = 2;
    const ProbePowers pp;
    for (int trial = 0; trial < 30; ++trial) {
        const double g_direct = rng.uniform(1e-4, 1e-2);
        std::vector<double> gu(static_cast<std::size_t>(n - 2)), gj(static_cast<std::size_t>(m));
        for (auto& v : gu) v = rng.uniform(1e-5, 1e-3);
        for (auto& v : gj) v = rng.uniform(1e-5, 1e-3);
        double p1r = pp.p1_u * g_direct, p2r = pp.p2_u * g_direct;
        for (double v : gu) {
            p1r += pp.p1_u * v;
            p2r += pp.p2_u * v;
        }
        for (double v : gj) {
            p1r += pp.p1_j * v;
            p2r += pp.p2_j * v;
        }
        // oracle: solve the 2x2 probe system directly by Cramer's rule
        const double det = pp.p1_u * pp.p2_j - pp.p2_u * pp.p1_j;
        const double big_g = (p1r * pp.p2_j - p2r * pp.p1_j) / det;  // g_direct + (N-2) g_bar_u
        const double big_j = (pp.p1_u * p2r - pp.p2_u * p1r) / det;  // M g_bar_j
        const auto est =
            estimate_mean_gains(pp.p1_u, pp.p1_j, pp.p2_u, pp.p2_j, p1r, p2r, g_direct, n, m);
        CHECK(est.g_bar_uav == Approx((big_g - g_direct) / (n - 2)).epsilon(1e-9));
        CHECK(est.g_bar_jam == Approx(big_j / m).epsilon(1e-9));
    }
}

TEST_CASE("mean fields scale the average gains by the population") {
    const auto [iu2, ij2] = mean_fields(1e-3, 1e-3, 0.05, 0.4, 2, 5);
    CHECK(iu2 == 0.0);  // N=2: no third UAV
    const auto [iu, ij] = mean_fields(0.0, 1e-3, 0.05, 0.4, 2, 5);
    CHECK(ij == Approx(2e-3));

    // homogeneous synthetic network: mean field equals the enumerated sum exactly
    const int n = 9, m = 2;
    const double g0 = 3e-4, p_ref = 0.07;
    auto cr = hand_set(static_cast<std::size_t>(n), static_cast<std::size_t>(m), g0, 5e-4);
    const std::vector<double> pu(static_cast<std::size_t>(n), p_ref);
    const std::vector<double> pj(static_cast<std::size_t>(m), 0.4);
    const auto [iu_e, ij_e] = aggregate_interference(1, 0, pu, pj, cr);
    const auto [iu_f, ij_f] = mean_fields(g0, 5e-4, p_ref, 0.4, n, m);
    CHECK(iu_f == Approx(iu_e).epsilon(1e-12));
    CHECK(ij_f == Approx(ij_e).epsilon(1e-12));
}

TEST_CASE("mean fields are monotone in the reference powers") {
    double last_u = -1.0, last_j = -1.0;
    for (double p = 0.0; p <= 0.1; p += 0.01) {
        const auto [iu, ij] = mean_fields(2e-4, 3e-4, p, 4.0 * p, 10, 3);
        CHECK(iu >= last_u);
        CHECK(ij >= last_j);
        last_u = iu;
        last_j = ij;
    }
}

TEST_CASE("negative gain estimates clamp to zero") {
    // received powers chosen so the jammer estimate would come out negative
    const auto est = estimate_mean_gains(0.05, 0.2, 0.1, 0.1, 1e-9, 1e-2, 1e-6, 5, 2);
    CHECK(est.g_bar_jam >= 0.0);
    CHECK(est.clamped);
}
