#pragma once

#include <cmath>
#include <cstddef>
#include <utility>
#include <vector>

#include "mtt/core/errors.hpp"
#include "mtt/core/matrix.hpp"
#include "mtt/core/rng.hpp"
#include "mtt/core/vec3.hpp"

namespace mtt::channel {

struct ChannelParams {
    double alpha = 4.0;          // path-loss exponent
    double nakagami_m = 3.0;     // fading shape
    double noise_power = 1e-8;   // sigma^2 [W]
    double p_max_uav = 0.1;      // [W]
    double p_max_jam = 0.4;      // [W]
    double gamma_th = 1.9952623149688795;  // 3 dB, linear

    void validate() const {
        if (!(alpha > 0.0)) throw InvalidConfig("alpha: need > 0");
        if (!(nakagami_m >= 0.5)) throw InvalidConfig("nakagami_m: need >= 0.5");
        if (!(noise_power > 0.0)) throw InvalidConfig("noise_power: need > 0");
        if (!(gamma_th > 0.0)) throw InvalidConfig("gamma_th: need > 0");
        if (!(p_max_uav > 0.0)) throw InvalidConfig("p_max_uav: need > 0");
        if (!(p_max_jam > 0.0)) throw InvalidConfig("p_max_jam: need > 0");
    }
};

struct MeanFieldGains {
    double g_bar_uav = 0.0;  // average interferer gain
    double g_bar_jam = 0.0;  // average jammer gain
    double i_bar_uav = 0.0;  // interference mean field [W]
    double i_bar_jam = 0.0;  // jamming mean field [W]
    bool clamped = false;    // a negative estimate was clipped to 0
};

// Nakagami-m power fading, unit spread: Gamma(m, 1/m), mean 1.
inline double draw_fading(RngStream& rng, double nakagami_m) {
    return rng.gamma(nakagami_m, 1.0 / nakagami_m);
}

// g = h * d^-alpha
inline double channel_gain(const Vec3& tx, const Vec3& rx, double fading_sample, double alpha) {
    const double d = distance(tx, rx);
    if (d == 0.0) throw CoincidentPositions("channel_gain: tx == rx");
    return fading_sample * std::pow(d, -alpha);
}

// Per-subslot fading realization of every directed link into each UAV receiver.
// g_uav(n, r) is the gain from UAV n to UAV r; the diagonal is unused (0).
// g_jam(m, r) is the gain from jammer m to UAV r.
struct ChannelRealization {
    Matrix g_uav;
    Matrix g_jam;
};

inline ChannelRealization realize_channel(const std::vector<Vec3>& uavs,
                                          const std::vector<Vec3>& jammers,
                                          const ChannelParams& params, RngStream& rng) {
    const std::size_t n = uavs.size(), m = jammers.size();
    ChannelRealization cr{Matrix(n, n, 0.0), Matrix(m, n, 0.0)};
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t r = 0; r < n; ++r) {
            if (a == r) continue;
            cr.g_uav(a, r) = channel_gain(uavs[a], uavs[r], draw_fading(rng, params.nakagami_m),
                                          params.alpha);
        }
    for (std::size_t j = 0; j < m; ++j)
        for (std::size_t r = 0; r < n; ++r)
            cr.g_jam(j, r) = channel_gain(jammers[j], uavs[r], draw_fading(rng, params.nakagami_m),
                                          params.alpha);
    return cr;
}

// The two denominator sums of the SINR: inter-UAV interference at receiver r
// (excluding transmitter i and r itself) and total jamming at r.
inline std::pair<double, double> aggregate_interference(int r, int i,
                                                        const std::vector<double>& uav_powers,
                                                        const std::vector<double>& jam_powers,
                                                        const ChannelRealization& cr) {
    double iu = 0.0, ij = 0.0;
    const int n = static_cast<int>(uav_powers.size());
    for (int a = 0; a < n; ++a) {
        if (a == i || a == r) continue;
        iu += uav_powers[static_cast<std::size_t>(a)] *
              cr.g_uav(static_cast<std::size_t>(a), static_cast<std::size_t>(r));
    }
    for (std::size_t j = 0; j < jam_powers.size(); ++j)
        ij += jam_powers[j] * cr.g_jam(j, static_cast<std::size_t>(r));
    return {iu, ij};
}

// SINR of the i -> r link measured at receiver r.
inline double sinr(int i, int r, const std::vector<double>& uav_powers,
                   const std::vector<double>& jam_powers, const ChannelRealization& cr,
                   const ChannelParams& params) {
    const auto [iu, ij] = aggregate_interference(r, i, uav_powers, jam_powers, cr);
    const double num = uav_powers[static_cast<std::size_t>(i)] *
                       cr.g_uav(static_cast<std::size_t>(i), static_cast<std::size_t>(r));
    return num / (iu + ij + params.noise_power);
}

struct ProbePowers {
    double p1_u = 0.05, p1_j = 0.2;  // first probe [W]
    double p2_u = 0.1, p2_j = 0.1;   // second probe [W]
};

// Two-probe estimator of the average interferer and jammer gains seen by one
// receiver. Solves the 2x2 probe system; negative estimates are clipped to 0.
inline MeanFieldGains estimate_mean_gains(double p1_u, double p1_j, double p2_u, double p2_j,
                                          double p1_r, double p2_r, double g_direct, int n,
                                          int m) {
    const double det = p1_u * p2_j - p2_u * p1_j;
    if (det == 0.0) throw SingularProbe("estimate_mean_gains: probe powers are proportional");
    MeanFieldGains out;
    if (n > 2) {
        double gu = ((p1_r * p2_j - p2_r * p1_j) / det - g_direct) / (n - 2);
        if (gu < 0.0) { gu = 0.0; out.clamped = true; }
        out.g_bar_uav = gu;
    }
    const double det_j = p1_j * p2_u - p2_j * p1_u;  // = -det
    double gj = (p1_r * p2_u - p2_r * p1_u) / (m * det_j);
    if (gj < 0.0) { gj = 0.0; out.clamped = true; }
    out.g_bar_jam = gj;
    return out;
}

// Interference and jamming mean fields from the average gains.
inline std::pair<double, double> mean_fields(double g_bar_u, double g_bar_j, double p_u_ref,
                                             double p_j_ref, int n, int m) {
    const double iu = n > 2 ? (n - 2) * p_u_ref * g_bar_u : 0.0;
    const double ij = m * p_j_ref * g_bar_j;
    return {iu, ij};
}

// Noiseless probe received power at receiver r for probe powers (pu, pj),
// by direct enumeration over the realized gains.
inline double probe_received_power(int r, int i, double pu, double pj,
                                   const ChannelRealization& cr) {
    const std::size_t n = cr.g_uav.rows(), m = cr.g_jam.rows();
    double p = pu * cr.g_uav(static_cast<std::size_t>(i), static_cast<std::size_t>(r));
    for (std::size_t a = 0; a < n; ++a) {
        if (static_cast<int>(a) == i || static_cast<int>(a) == r) continue;
        p += pu * cr.g_uav(a, static_cast<std::size_t>(r));
    }
    for (std::size_t j = 0; j < m; ++j) p += pj * cr.g_jam(j, static_cast<std::size_t>(r));
    return p;
}

}  // namespace mtt::channel
