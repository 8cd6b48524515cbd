#include <cmath>
#include <random>

#include "doctest.h"
#include "reachkit/errors.hpp"
#include "reachkit/raster.hpp"
#include "reachkit/shapes.hpp"

using namespace reachkit;

namespace {

double disk_dist(double x, double y) {
    return std::max(0.0, std::hypot(x, y) - 1.0);
}

double two_disk_dist(double x, double y) {
    const double d1 = std::max(0.0, std::hypot(x - 1.2, y) - 0.5);
    const double d2 = std::max(0.0, std::hypot(x + 1.2, y) - 0.5);
    return std::min(d1, d2);
}

double ring_dist(double x, double y) {
    const double rho = std::hypot(x, y);
    if (rho < 0.6) return 0.6 - rho;
    if (rho > 1.0) return rho - 1.0;
    return 0.0;
}

double ball_dist(double x, double y, double z) {
    return std::max(0.0, std::sqrt(x * x + y * y + z * z) - 1.0);
}

double sphere_dist(double x, double y, double z) {
    return std::abs(std::sqrt(x * x + y * y + z * z) - 1.0);
}

double circle3_dist(double x, double y, double z, double major) {
    return std::hypot(std::hypot(x, y) - major, z);
}

double solid_torus_dist(double x, double y, double z) {
    return std::max(0.0, circle3_dist(x, y, z, 1.5) - 0.4);
}

double torus_shell_dist(double x, double y, double z) {
    return std::abs(circle3_dist(x, y, z, 1.5) - 0.4);
}

double two_ball_dist(double x, double y, double z) {
    const double d1 = std::max(0.0, std::sqrt((x - 2) * (x - 2) + y * y + z * z) - 1.0);
    const double d2 = std::max(0.0, std::sqrt((x + 2) * (x + 2) + y * y + z * z) - 1.0);
    return std::min(d1, d2);
}

}

TEST_CASE("planar shapes at two resolutions") {
    for (double voxel : {0.05, 0.032}) {
        const Box2 box{-2.5, 2.5, -2.5, 2.5};

        RasterBetti disk = raster_betti_2d(disk_dist, box, voxel, 0.3);
        CHECK(disk.b0 == 1);
        CHECK(disk.b1 == 0);
        CHECK(disk.b2 == 0);
        CHECK(disk.chi == 1);
        CHECK(disk.filled > 0);
        CHECK(disk.eta == doctest::Approx(voxel * std::sqrt(2.0) / 2));

        RasterBetti ring = raster_betti_2d(ring_dist, box, voxel, 0.1);
        CHECK(ring.b0 == 1);
        CHECK(ring.b1 == 1);
        CHECK(ring.chi == 0);

        RasterBetti two = raster_betti_2d(two_disk_dist, box, voxel, 0.2);
        CHECK(two.b0 == 2);
        CHECK(two.b1 == 0);
        CHECK(two.chi == 2);

        RasterBetti merged = raster_betti_2d(two_disk_dist, box, voxel, 0.8);
        CHECK(merged.b0 == 1);
        CHECK(merged.b1 == 0);
    }
}

TEST_CASE("planar edge cases") {
    const Box2 box{-1, 1, -1, 1};
    RasterBetti none = raster_betti_2d([](double, double) { return 10.0; }, box, 0.1, 1.0);
    CHECK(none.b0 == 0);
    CHECK(none.b1 == 0);
    CHECK(none.chi == 0);
    CHECK(none.filled == 0);

    RasterBetti full = raster_betti_2d([](double, double) { return 0.0; }, box, 0.1, 1.0);
    CHECK(full.b0 == 1);
    CHECK(full.b1 == 0);
    CHECK(full.filled == 400);
}

TEST_CASE("row skipping never misses cells of an exactly lipschitz field") {
    // Distance to the y axis: a slab whose fill count is known exactly.
    const Box2 box{-1, 1, -1, 1};
    RasterBetti slab =
        raster_betti_2d([](double x, double) { return std::abs(x); }, box, 0.1, 0.5);
    CHECK(slab.b0 == 1);
    CHECK(slab.b1 == 0);
    CHECK(slab.filled == 10 * 20);
}

TEST_CASE("spatial shapes at two resolutions") {
    for (double voxel : {0.1, 0.073}) {
        const Box3 box{-2.6, 2.6, -2.6, 2.6, -2.6, 2.6};

        RasterBetti ball = raster_betti_3d(ball_dist, box, voxel, 0.3);
        CHECK(ball.b0 == 1);
        CHECK(ball.b1 == 0);
        CHECK(ball.b2 == 0);
        CHECK(ball.chi == 1);
        CHECK(ball.eta == doctest::Approx(voxel * std::sqrt(3.0) / 2));

        RasterBetti shell = raster_betti_3d(sphere_dist, box, voxel, 0.3);
        CHECK(shell.b0 == 1);
        CHECK(shell.b1 == 0);
        CHECK(shell.b2 == 1);
        CHECK(shell.chi == 2);

        RasterBetti solid = raster_betti_3d(solid_torus_dist, box, voxel, 0.15);
        CHECK(solid.b0 == 1);
        CHECK(solid.b1 == 1);
        CHECK(solid.b2 == 0);
        CHECK(solid.chi == 0);

        RasterBetti surface = raster_betti_3d(torus_shell_dist, box, voxel, 0.15);
        CHECK(surface.b0 == 1);
        CHECK(surface.b1 == 2);
        CHECK(surface.b2 == 1);
        CHECK(surface.chi == 0);
    }

    const Box3 wide{-3.5, 3.5, -1.5, 1.5, -1.5, 1.5};
    RasterBetti two = raster_betti_3d(two_ball_dist, wide, 0.05, 0.3);
    CHECK(two.b0 == 2);
    CHECK(two.b1 == 0);
    CHECK(two.b2 == 0);
    CHECK(two.chi == 2);
}

TEST_CASE("raster argument checks and limits") {
    const Box2 box{-1, 1, -1, 1};
    auto zero = [](double, double) { return 0.0; };
    CHECK_THROWS_AS(raster_betti_2d(zero, box, 0.0, 1.0), InvalidArgument);
    CHECK_THROWS_AS(raster_betti_2d(zero, box, -0.1, 1.0), InvalidArgument);
    CHECK_THROWS_AS(raster_betti_2d(zero, Box2{1, -1, -1, 1}, 0.1, 1.0), InvalidArgument);
    CHECK_THROWS_AS(raster_betti_2d(zero, box, 0.1, 1.0, 100), ResourceLimit);

    const Box3 box3{-1, 1, -1, 1, -1, 1};
    auto zero3 = [](double, double, double) { return 0.0; };
    CHECK_THROWS_AS(raster_betti_3d(zero3, box3, 0.0, 1.0), InvalidArgument);
    CHECK_THROWS_AS(raster_betti_3d(zero3, box3, 0.1, 1.0, 100), ResourceLimit);
}

TEST_CASE("cloud distance is exact") {
    std::mt19937_64 rng(5150);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (int dim : {2, 3}) {
        PointCloud cloud;
        cloud.dim = dim;
        for (int i = 0; i < 200; ++i)
            cloud.points.push_back({u(rng), u(rng), dim == 3 ? u(rng) : 0.0});
        CloudDistance cd(cloud);
        for (int q = 0; q < 500; ++q) {
            const Vec3 x{3 * u(rng), 3 * u(rng), dim == 3 ? 3 * u(rng) : 0.0};
            double brute = 1e300;
            for (const auto& p : cloud.points) brute = std::min(brute, dist(x, p));
            CHECK(cd(x) == doctest::Approx(brute).epsilon(1e-12));
        }
    }
}

TEST_CASE("union of balls around a circle sample") {
    ShapeSpec circle = ShapeSpec::make_circle({0, 0, 0}, 1.0);
    PointCloud cloud = sample_shape(circle, 0.3);
    CloudDistance cd(cloud);
    const Box2 box{-1.6, 1.6, -1.6, 1.6};
    RasterBetti out = raster_betti_2d([&](double x, double y) { return cd({x, y, 0.0}); }, box,
                                      0.02, 0.35);
    CHECK(out.b0 == 1);
    CHECK(out.b1 == 1);
    CHECK(out.b2 == 0);
}
