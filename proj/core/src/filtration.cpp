#include "reachkit/filtration.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <unordered_map>

#include "reachkit/meb.hpp"

namespace reachkit {

namespace {

// Bucket grid with cell size 2*max_value: all pairs within 2*max_value of
// each other live in adjacent cells.
struct PairGrid {
    double cell;
    double ox, oy, oz;
    int nx, ny, nz;
    std::vector<std::vector<std::int32_t>> buckets;

    PairGrid(const std::vector<Vec3>& pts, double reach_dist) {
        Vec3 lo = pts[0], hi = pts[0];
        for (const Vec3& p : pts) {
            lo.x = std::min(lo.x, p.x); hi.x = std::max(hi.x, p.x);
            lo.y = std::min(lo.y, p.y); hi.y = std::max(hi.y, p.y);
            lo.z = std::min(lo.z, p.z); hi.z = std::max(hi.z, p.z);
        }
        cell = std::max(reach_dist, 1e-12);
        ox = lo.x; oy = lo.y; oz = lo.z;
        nx = static_cast<int>((hi.x - lo.x) / cell) + 1;
        ny = static_cast<int>((hi.y - lo.y) / cell) + 1;
        nz = static_cast<int>((hi.z - lo.z) / cell) + 1;
        buckets.resize(static_cast<std::size_t>(nx) * ny * nz);
        for (std::int32_t i = 0; i < static_cast<std::int32_t>(pts.size()); ++i) {
            const Vec3& p = pts[static_cast<std::size_t>(i)];
            const int ix = std::clamp(static_cast<int>((p.x - ox) / cell), 0, nx - 1);
            const int iy = std::clamp(static_cast<int>((p.y - oy) / cell), 0, ny - 1);
            const int iz = std::clamp(static_cast<int>((p.z - oz) / cell), 0, nz - 1);
            buckets[(static_cast<std::size_t>(iz) * ny + iy) * nx + ix].push_back(i);
        }
    }

    template <typename F>
    void for_neighbors(const Vec3& p, F&& f) const {
        const int ix = std::clamp(static_cast<int>((p.x - ox) / cell), 0, nx - 1);
        const int iy = std::clamp(static_cast<int>((p.y - oy) / cell), 0, ny - 1);
        const int iz = std::clamp(static_cast<int>((p.z - oz) / cell), 0, nz - 1);
        for (int dz = -1; dz <= 1; ++dz)
            for (int dy = -1; dy <= 1; ++dy)
                for (int dx = -1; dx <= 1; ++dx) {
                    const int jx = ix + dx, jy = iy + dy, jz = iz + dz;
                    if (jx < 0 || jy < 0 || jz < 0 || jx >= nx || jy >= ny || jz >= nz)
                        continue;
                    for (std::int32_t q :
                         buckets[(static_cast<std::size_t>(jz) * ny + jy) * nx + jx])
                        f(q);
                }
    }
};

double cech_value(const std::vector<Vec3>& pts, std::span<const std::int32_t> idx) {
    std::array<Vec3, 4> buf;
    for (std::size_t i = 0; i < idx.size(); ++i)
        buf[i] = pts[static_cast<std::size_t>(idx[i])];
    return min_enclosing_ball(std::span<const Vec3>(buf.data(), idx.size())).radius;
}

double rips_value(const std::vector<Vec3>& pts, std::span<const std::int32_t> idx) {
    double worst2 = 0.0;
    for (std::size_t i = 0; i < idx.size(); ++i)
        for (std::size_t j = i + 1; j < idx.size(); ++j)
            worst2 = std::max(worst2, dist2(pts[static_cast<std::size_t>(idx[i])],
                                            pts[static_cast<std::size_t>(idx[j])]));
    return 0.5 * std::sqrt(worst2);
}

Filtration build(const PointCloud& cloud, int max_dim, double max_value,
                 std::size_t max_simplices, ComplexKind kind) {
    cloud.check();
    if (cloud.points.empty())
        throw InvalidArgument("filtration requires a non-empty cloud");
    if (max_dim < 0 || max_dim > 3)
        throw InvalidArgument("max_dim must be in [0, 3]");
    if (!(max_value > 0.0) || !std::isfinite(max_value))
        throw InvalidArgument("max_value must be positive and finite");

    const auto& pts = cloud.points;
    const auto n = static_cast<std::int32_t>(pts.size());

    Filtration f;
    f.kind = kind;
    f.max_dim = max_dim;
    f.max_value = max_value;
    f.n_points = pts.size();

    auto push = [&](Simplex s, double value) {
        if (f.entries.size() >= max_simplices)
            throw ResourceLimit("filtration exceeds max_simplices = " +
                                std::to_string(max_simplices));
        f.entries.push_back({s, value});
    };

    for (std::int32_t i = 0; i < n; ++i)
        push(Simplex{{i, -1, -1, -1}, 0}, 0.0);

    if (max_dim >= 1) {
        const PairGrid grid(pts, 2.0 * max_value);
        const double lim2 = 4.0 * max_value * max_value;

        // Neighbor lists, ascending, only j > i kept for enumeration.
        std::vector<std::vector<std::int32_t>> nbr(pts.size());
        for (std::int32_t i = 0; i < n; ++i) {
            grid.for_neighbors(pts[static_cast<std::size_t>(i)], [&](std::int32_t j) {
                if (j > i &&
                    dist2(pts[static_cast<std::size_t>(i)], pts[static_cast<std::size_t>(j)]) <=
                        lim2)
                    nbr[static_cast<std::size_t>(i)].push_back(j);
            });
            std::sort(nbr[static_cast<std::size_t>(i)].begin(),
                      nbr[static_cast<std::size_t>(i)].end());
        }

        auto value_of = [&](std::span<const std::int32_t> idx) {
            return kind == ComplexKind::cech ? cech_value(pts, idx) : rips_value(pts, idx);
        };

        for (std::int32_t i = 0; i < n; ++i)
            for (std::int32_t j : nbr[static_cast<std::size_t>(i)]) {
                const std::int32_t e[2] = {i, j};
                const double ve = value_of(e);
                if (ve > max_value) continue;
                push(Simplex{{i, j, -1, -1}, 1}, ve);
                if (max_dim < 2) continue;
                // Common neighbors k > j of both i and j.
                const auto& ni = nbr[static_cast<std::size_t>(i)];
                const auto& nj = nbr[static_cast<std::size_t>(j)];
                auto it1 = std::lower_bound(ni.begin(), ni.end(), j + 1);
                auto it2 = nj.begin();
                for (; it1 != ni.end(); ++it1) {
                    while (it2 != nj.end() && *it2 < *it1) ++it2;
                    if (it2 == nj.end()) break;
                    if (*it2 != *it1) continue;
                    const std::int32_t k = *it1;
                    const std::int32_t tri[3] = {i, j, k};
                    const double vt = value_of(tri);
                    if (vt > max_value) continue;
                    push(Simplex{{i, j, k, -1}, 2}, vt);
                    if (max_dim < 3) continue;
                    // Common neighbors l > k of i, j, k.
                    const auto& nk = nbr[static_cast<std::size_t>(k)];
                    auto a = std::lower_bound(ni.begin(), ni.end(), k + 1);
                    auto b = std::lower_bound(nj.begin(), nj.end(), k + 1);
                    auto c = nk.begin();
                    for (; a != ni.end(); ++a) {
                        while (b != nj.end() && *b < *a) ++b;
                        if (b == nj.end()) break;
                        if (*b != *a) continue;
                        while (c != nk.end() && *c < *a) ++c;
                        if (c == nk.end()) break;
                        if (*c != *a) continue;
                        const std::int32_t l = *a;
                        const std::int32_t tet[4] = {i, j, k, l};
                        const double vq = value_of(tet);
                        if (vq > max_value) continue;
                        push(Simplex{{i, j, k, l}, 3}, vq);
                    }
                }
            }
    }

    std::sort(f.entries.begin(), f.entries.end(),
              [](const FiltrationEntry& a, const FiltrationEntry& b) {
                  if (a.value != b.value) return a.value < b.value;
                  if (a.simplex.dim != b.simplex.dim) return a.simplex.dim < b.simplex.dim;
                  return a.simplex.v < b.simplex.v;
              });
    return f;
}

}

Filtration cech_filtration(const PointCloud& cloud, int max_dim, double max_value,
                           std::size_t max_simplices) {
    return build(cloud, max_dim, max_value, max_simplices, ComplexKind::cech);
}

Filtration rips_filtration(const PointCloud& cloud, int max_dim, double max_value,
                           std::size_t max_simplices) {
    return build(cloud, max_dim, max_value, max_simplices, ComplexKind::rips);
}

}
