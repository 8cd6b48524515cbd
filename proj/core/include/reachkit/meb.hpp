#pragma once

#include <span>
#include <vector>

#include "reachkit/vec.hpp"

namespace reachkit {

struct Ball {
    Vec3 center;
    double radius = 0.0;
};

// Circumcenter of 1 to 4 affinely independent points; the center lies in
// their affine hull and is equidistant from all of them. Throws Degenerate
// when the points are affinely dependent (relative Gram determinant below
// 1e-12).
Ball circumsphere(std::span<const Vec3> pts);

// Barycentric coordinates of the circumcenter with respect to the input
// points (same order). Sums to 1. Throws Degenerate as above.
std::vector<double> circumcenter_barycentric(std::span<const Vec3> pts);

// Exact minimum enclosing ball of 1 to 4 points, by enumeration of support
// subsets. Deterministic.
Ball min_enclosing_ball(std::span<const Vec3> pts);

}
