#pragma once

#include <functional>
#include <memory>

#include "reachkit/vec.hpp"

namespace reachkit {

struct Box2 {
    double xlo, xhi, ylo, yhi;
};

struct Box3 {
    double xlo, xhi, ylo, yhi, zlo, zhi;
};

// Betti numbers of the voxelization of {x : dist(x) <= r} on a grid of
// cell size `voxel` over the box. Cell centers are sampled; the result is
// exact for the sampled set under the dual connectivity model (foreground
// 4/6-connected, background 8/26-connected) and approximates the continuum
// set to within eta = voxel * sqrt(dim) / 2 in Hausdorff distance.
struct RasterBetti {
    long b0 = 0;
    long b1 = 0;
    long b2 = 0;
    long chi = 0;          // Euler characteristic of the dual cell complex
    long long filled = 0;  // foreground voxel count
    double eta = 0.0;
};

// dist must be 1-Lipschitz (any distance-to-a-set function qualifies).
// 2D: b1 is computed twice, from the Euler characteristic and from the
// bounded components of the 8-connected background, and the two must
// agree; a mismatch throws. Throws ResourceLimit past max_cells.
RasterBetti raster_betti_2d(const std::function<double(double, double)>& dist,
                            const Box2& box, double voxel, double r,
                            std::size_t max_cells = 4000000000ull);

RasterBetti raster_betti_3d(const std::function<double(double, double, double)>& dist,
                            const Box3& box, double voxel, double r,
                            std::size_t max_cells = 4000000000ull);

// Exact distance to the nearest point of a cloud, backed by a bucket
// grid. Usable as the dist argument above.
class CloudDistance {
  public:
    explicit CloudDistance(const PointCloud& cloud);
    ~CloudDistance();
    CloudDistance(CloudDistance&&) noexcept;
    CloudDistance& operator=(CloudDistance&&) noexcept;
    CloudDistance(const CloudDistance&) = delete;

    double operator()(Vec3 q) const;

  private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

}
