#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "reachkit/vec.hpp"

namespace reachkit::detail {

// Uniform bucket grid for exact nearest-point queries.
struct BucketGrid {
    double cell;
    double ox, oy, oz;
    int nx, ny, nz;
    std::vector<std::vector<int>> buckets;
    const std::vector<Vec3>* pts;

    explicit BucketGrid(const std::vector<Vec3>& points) : pts(&points) {
        Vec3 lo = points[0], hi = points[0];
        for (const Vec3& p : points) {
            lo.x = std::min(lo.x, p.x); hi.x = std::max(hi.x, p.x);
            lo.y = std::min(lo.y, p.y); hi.y = std::max(hi.y, p.y);
            lo.z = std::min(lo.z, p.z); hi.z = std::max(hi.z, p.z);
        }
        const double dx = hi.x - lo.x, dy = hi.y - lo.y, dz = hi.z - lo.z;
        const double diag = std::sqrt(dx * dx + dy * dy + dz * dz);
        const double target = std::cbrt(static_cast<double>(points.size()));
        cell = std::max(diag / std::max(8.0, 2.0 * target), 1e-12);
        ox = lo.x; oy = lo.y; oz = lo.z;
        nx = static_cast<int>(dx / cell) + 1;
        ny = static_cast<int>(dy / cell) + 1;
        nz = static_cast<int>(dz / cell) + 1;
        buckets.resize(static_cast<std::size_t>(nx) * ny * nz);
        for (int i = 0; i < static_cast<int>(points.size()); ++i)
            buckets[index_of(points[static_cast<std::size_t>(i)])].push_back(i);
    }

    std::size_t index_of(const Vec3& p) const {
        const int ix = std::clamp(static_cast<int>((p.x - ox) / cell), 0, nx - 1);
        const int iy = std::clamp(static_cast<int>((p.y - oy) / cell), 0, ny - 1);
        const int iz = std::clamp(static_cast<int>((p.z - oz) / cell), 0, nz - 1);
        return (static_cast<std::size_t>(iz) * ny + iy) * nx + ix;
    }

    // Exact nearest distance by expanding shells of cells.
    double nearest(const Vec3& q) const {
        const int qx = std::clamp(static_cast<int>((q.x - ox) / cell), 0, nx - 1);
        const int qy = std::clamp(static_cast<int>((q.y - oy) / cell), 0, ny - 1);
        const int qz = std::clamp(static_cast<int>((q.z - oz) / cell), 0, nz - 1);
        // The query may sit far outside the grid; account for the distance
        // from the query to its clamped cell when deciding shell safety.
        double best2 = std::numeric_limits<double>::infinity();
        const int ring_max = std::max({nx, ny, nz});
        for (int ring = 0; ring <= ring_max; ++ring) {
            if (best2 < std::numeric_limits<double>::infinity()) {
                const double safe = (static_cast<double>(ring) - 1.0) * cell;
                if (safe > 0.0 && safe * safe >= best2) break;
            }
            const int x0 = qx - ring, x1 = qx + ring;
            const int y0 = qy - ring, y1 = qy + ring;
            const int z0 = qz - ring, z1 = qz + ring;
            for (int iz = std::max(z0, 0); iz <= std::min(z1, nz - 1); ++iz)
                for (int iy = std::max(y0, 0); iy <= std::min(y1, ny - 1); ++iy)
                    for (int ix = std::max(x0, 0); ix <= std::min(x1, nx - 1); ++ix) {
                        const bool shell = ix == x0 || ix == x1 || iy == y0 || iy == y1 ||
                                           iz == z0 || iz == z1;
                        if (!shell) continue;
                        const auto& b =
                            buckets[(static_cast<std::size_t>(iz) * ny + iy) * nx + ix];
                        for (int pi : b)
                            best2 = std::min(best2,
                                             dist2(q, (*pts)[static_cast<std::size_t>(pi)]));
                    }
        }
        return std::sqrt(best2);
    }
};

}
