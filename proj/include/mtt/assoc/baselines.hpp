#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "mtt/assoc/partition.hpp"
#include "mtt/core/errors.hpp"
#include "mtt/core/rng.hpp"
#include "mtt/core/vec3.hpp"

namespace mtt::assoc {

namespace detail {

inline std::vector<Vec3> kmeanspp_seed(const std::vector<Vec3>& pts, int k, RngStream& rng) {
    std::vector<Vec3> centers;
    centers.reserve(static_cast<std::size_t>(k));
    centers.push_back(pts[rng.below(pts.size())]);
    std::vector<double> d2(pts.size());
    while (static_cast<int>(centers.size()) < k) {
        double total = 0.0;
        for (std::size_t i = 0; i < pts.size(); ++i) {
            double best = std::numeric_limits<double>::infinity();
            for (const auto& c : centers) best = std::min(best, (pts[i] - c).squared_norm());
            d2[i] = best;
            total += best;
        }
        if (total <= 0.0) {
            centers.push_back(pts[rng.below(pts.size())]);
            continue;
        }
        double u = rng.uniform(0.0, total);
        std::size_t pick = pts.size() - 1;
        for (std::size_t i = 0; i < pts.size(); ++i) {
            u -= d2[i];
            if (u <= 0.0) {
                pick = i;
                break;
            }
        }
        centers.push_back(pts[pick]);
    }
    return centers;
}

inline Partition finalize_partition(const std::vector<Vec3>& pts, std::vector<int> labels, int m) {
    Partition p;
    p.labels = std::move(labels);
    p.centers.assign(static_cast<std::size_t>(m), -1);
    p.sizes.assign(static_cast<std::size_t>(m), 0);
    for (int l : p.labels) ++p.sizes[static_cast<std::size_t>(l)];
    // repair empty clusters by stealing the farthest point of the largest cluster
    for (int k = 0; k < m; ++k) {
        while (p.sizes[static_cast<std::size_t>(k)] == 0) {
            int big = static_cast<int>(std::max_element(p.sizes.begin(), p.sizes.end()) -
                                       p.sizes.begin());
            const Vec3 c = centroids(pts, p.labels, m == 1 ? 1 : m)[static_cast<std::size_t>(big)];
            // farthest member of 'big'
            double best = -1.0;
            std::size_t pick = 0;
            for (std::size_t i = 0; i < pts.size(); ++i) {
                if (p.labels[i] != big) continue;
                const double d = (pts[i] - c).squared_norm();
                if (d > best) {
                    best = d;
                    pick = i;
                }
            }
            p.labels[pick] = k;
            --p.sizes[static_cast<std::size_t>(big)];
            ++p.sizes[static_cast<std::size_t>(k)];
        }
    }
    p.centroids = centroids(pts, p.labels, m);
    p.target_of.clear();
    return p;
}

}  // namespace detail

// Lloyd iterations from k-means++ seeding; stops when labels stabilize.
// The returned count includes the final (stable) assignment pass.
inline std::pair<Partition, int> kmeans_partition(const std::vector<Vec3>& positions,
                                                  int m_clusters, std::uint64_t seed,
                                                  int max_iter = 100) {
    const int n = static_cast<int>(positions.size());
    if (n < 2 || m_clusters > n) throw TooFewUavs("kmeans_partition: need M <= N and N >= 2");
    RngStream rng(seed, Stream::Bench);
    std::vector<Vec3> centers = detail::kmeanspp_seed(positions, m_clusters, rng);
    std::vector<int> labels(positions.size(), -1);
    int iters = 0;
    for (int it = 1; it <= max_iter; ++it) {
        iters = it;
        bool changed = false;
        for (std::size_t i = 0; i < positions.size(); ++i) {
            double best = std::numeric_limits<double>::infinity();
            int bk = 0;
            for (int k = 0; k < m_clusters; ++k) {
                const double d = (positions[i] - centers[static_cast<std::size_t>(k)]).squared_norm();
                if (d < best) {
                    best = d;
                    bk = k;
                }
            }
            if (labels[i] != bk) {
                labels[i] = bk;
                changed = true;
            }
        }
        if (!changed) break;
        std::vector<Vec3> sum(static_cast<std::size_t>(m_clusters));
        std::vector<int> cnt(static_cast<std::size_t>(m_clusters), 0);
        for (std::size_t i = 0; i < positions.size(); ++i) {
            sum[static_cast<std::size_t>(labels[i])] += positions[i];
            ++cnt[static_cast<std::size_t>(labels[i])];
        }
        for (int k = 0; k < m_clusters; ++k)
            if (cnt[static_cast<std::size_t>(k)] > 0)
                centers[static_cast<std::size_t>(k)] =
                    sum[static_cast<std::size_t>(k)] / cnt[static_cast<std::size_t>(k)];
    }
    return {detail::finalize_partition(positions, std::move(labels), m_clusters), iters};
}

// Standard fuzzy c-means from random memberships; hard labels by max membership.
inline std::pair<Partition, int> fcm_partition(const std::vector<Vec3>& positions, int m_clusters,
                                               double fuzziness = 2.0, double tol = 1e-5,
                                               int max_iter = 100, std::uint64_t seed = 0) {
    const int n = static_cast<int>(positions.size());
    if (n < 2 || m_clusters > n) throw TooFewUavs("fcm_partition: need M <= N and N >= 2");
    if (!(fuzziness > 1.0)) throw InvalidConfig("fcm fuzziness: need > 1");
    RngStream rng(seed, Stream::Bench);
    const std::size_t nn = positions.size(), mm = static_cast<std::size_t>(m_clusters);
    std::vector<double> u(nn * mm);
    for (std::size_t i = 0; i < nn; ++i) {
        double s = 0.0;
        for (std::size_t k = 0; k < mm; ++k) {
            u[i * mm + k] = rng.uniform(1e-6, 1.0);
            s += u[i * mm + k];
        }
        for (std::size_t k = 0; k < mm; ++k) u[i * mm + k] /= s;
    }
    std::vector<Vec3> centers(mm);
    int iters = 0;
    const double expo = 2.0 / (fuzziness - 1.0);
    for (int it = 1; it <= max_iter; ++it) {
        iters = it;
        for (std::size_t k = 0; k < mm; ++k) {
            Vec3 num{};
            double den = 0.0;
            for (std::size_t i = 0; i < nn; ++i) {
                const double w = std::pow(u[i * mm + k], fuzziness);
                num += positions[i] * w;
                den += w;
            }
            centers[k] = num / den;
        }
        double max_change = 0.0;
        for (std::size_t i = 0; i < nn; ++i) {
            double inv_sum = 0.0;
            std::vector<double> inv(mm);
            for (std::size_t k = 0; k < mm; ++k) {
                const double d = std::max(distance(positions[i], centers[k]), 1e-12);
                inv[k] = std::pow(1.0 / d, expo);
                inv_sum += inv[k];
            }
            for (std::size_t k = 0; k < mm; ++k) {
                const double nu = inv[k] / inv_sum;
                max_change = std::max(max_change, std::abs(nu - u[i * mm + k]));
                u[i * mm + k] = nu;
            }
        }
        if (max_change < tol) break;
    }
    std::vector<int> labels(nn);
    for (std::size_t i = 0; i < nn; ++i) {
        labels[i] = static_cast<int>(std::max_element(u.begin() + static_cast<std::ptrdiff_t>(i * mm),
                                                      u.begin() + static_cast<std::ptrdiff_t>((i + 1) * mm)) -
                                     (u.begin() + static_cast<std::ptrdiff_t>(i * mm)));
    }
    return {detail::finalize_partition(positions, std::move(labels), m_clusters), iters};
}

}  // namespace mtt::assoc
