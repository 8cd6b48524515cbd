#include <algorithm>
#include <cmath>
#include <numbers>

#include "doctest.h"
#include "reachkit/errors.hpp"
#include "reachkit/shapes.hpp"

using namespace reachkit;

namespace {

double ring_distance(Vec3 p, Vec3 c, double radius) {
    return std::abs(dist(p, c) - radius);
}

}

TEST_CASE("shape factories validate their parameters") {
    CHECK_THROWS_AS(ShapeSpec::make_circle({0, 0, 0}, 0.0), InvalidArgument);
    CHECK_THROWS_AS(ShapeSpec::make_circle({0, 0, 0}, -1.0), InvalidArgument);
    CHECK_THROWS_AS(ShapeSpec::make_annulus({0, 0, 0}, 1.0, 1.0), InvalidArgument);
    CHECK_THROWS_AS(ShapeSpec::make_annulus({0, 0, 0}, 1.5, 1.0), InvalidArgument);
    CHECK_THROWS_AS(ShapeSpec::make_torus({0, 0, 0}, 1.0, 1.0), InvalidArgument);
    CHECK_NOTHROW(ShapeSpec::make_torus({0, 0, 0}, 2.0, 1.0));
}

TEST_CASE("circle sampling") {
    ShapeSpec circle = ShapeSpec::make_circle({0, 0, 0}, 1.0);
    PointCloud eight = sample_shape(circle, std::numbers::pi / 2);
    CHECK(eight.dim == 2);
    CHECK(eight.size() == 8);
    for (const auto& p : eight.points) {
        CHECK(ring_distance(p, {0, 0, 0}, 1.0) <= 1e-12);
        CHECK(p.z == 0.0);
    }

    ShapeSpec shifted = ShapeSpec::make_circle({2, 3, 0}, 0.5);
    PointCloud cloud = sample_shape(shifted, 0.1);
    for (const auto& p : cloud.points) CHECK(ring_distance(p, {2, 3, 0}, 0.5) <= 1e-12);

    CHECK_THROWS_AS(sample_shape(circle, 0.0), InvalidArgument);
    CHECK_THROWS_AS(sample_shape(circle, -0.5), InvalidArgument);
    CHECK_THROWS_AS(sample_shape(circle, 1e-6), ResourceLimit);
}

TEST_CASE("samples are dense at step h and lie on the shape") {
    // The coarse sample must cover the shape within h/2. A much denser
    // sample stands in for the shape: every dense point must be within
    // h/2 of the coarse sample, and every coarse point within the dense
    // sample's own coverage radius.
    const double h = 0.3;
    const double hd = 0.03;
    for (ShapeSpec shape : {ShapeSpec::make_circle({0, 0, 0}, 1.0),
                            ShapeSpec::make_annulus({0, 0, 0}, 1.0, 1.5),
                            ShapeSpec::make_torus({0, 0, 0}, 2.0, 1.0)}) {
        PointCloud coarse = sample_shape(shape, h);
        PointCloud dense = sample_shape(shape, hd, 2000000);
        CHECK(one_sided_hausdorff(dense, coarse) <= h / 2 + 1e-9);
        CHECK(one_sided_hausdorff(coarse, dense) <= hd / 2 + 1e-9);
    }
}

TEST_CASE("annulus sampling stays in the band") {
    ShapeSpec ann = ShapeSpec::make_annulus({0, 0, 0}, 1.0, 1.5);
    PointCloud cloud = sample_shape(ann, 0.1);
    CHECK(cloud.dim == 2);
    double lo = 1e300, hi = 0.0;
    for (const auto& p : cloud.points) {
        const double rho = dist(p, {0, 0, 0});
        CHECK(rho >= 1.0 - 1e-9);
        CHECK(rho <= 1.5 + 1e-9);
        lo = std::min(lo, rho);
        hi = std::max(hi, rho);
    }
    // Coverage forces samples near both boundary circles.
    CHECK(lo <= 1.0 + 0.05 + 1e-9);
    CHECK(hi >= 1.5 - 0.05 - 1e-9);
}

TEST_CASE("torus sampling lies on the surface") {
    ShapeSpec torus = ShapeSpec::make_torus({0, 0, 0}, 2.0, 1.0);
    PointCloud cloud = sample_shape(torus, 0.25);
    CHECK(cloud.dim == 3);
    CHECK(cloud.size() > 100);
    for (const auto& p : cloud.points) {
        const double rho = std::hypot(p.x, p.y);
        const double f = (rho - 2.0) * (rho - 2.0) + p.z * p.z;
        CHECK(std::abs(f - 1.0) <= 1e-9);
    }
}

TEST_CASE("counterexample shapes sample all components") {
    ShapeSpec chain = ShapeSpec::make_annuli_counterexample(0.25, 0.25);
    PointCloud cloud = sample_shape(chain, 0.05);
    CHECK(cloud.dim == 2);
    REQUIRE(cloud.labels.size() == cloud.size());
    CHECK(*std::max_element(cloud.labels.begin(), cloud.labels.end()) == 15);
    CHECK(*std::min_element(cloud.labels.begin(), cloud.labels.end()) == 0);

    // The tori chain at these parameters has 1865 components; any usable
    // density overflows the default point budget.
    ShapeSpec tori = ShapeSpec::make_tori_counterexample(0.4, 0.1);
    CHECK_THROWS_AS(sample_shape(tori, 0.05), ResourceLimit);
}

TEST_CASE("one sided hausdorff basics") {
    PointCloud a{2, {{0, 0, 0}, {1, 0, 0}}, {}};
    PointCloud b{2, {{0, 0, 0}}, {}};
    CHECK(one_sided_hausdorff(a, b) == doctest::Approx(1.0));
    CHECK(one_sided_hausdorff(b, a) == doctest::Approx(0.0));
    PointCloud empty{2, {}, {}};
    CHECK_THROWS_AS(one_sided_hausdorff(empty, a), InvalidArgument);
    CHECK_THROWS_AS(one_sided_hausdorff(a, empty), InvalidArgument);
}
