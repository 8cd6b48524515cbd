#pragma once

#include "reachkit/vec.hpp"

namespace reachkit {

// Description of a reference shape. circle and annulus are planar, torus
// lives in R^3 with its axis along z. The two counterexample kinds are the
// chained constructions; sampling them yields all components.
struct ShapeSpec {
    enum class Kind { circle, annulus, torus, annuli_counterexample, tori_counterexample };

    Kind kind = Kind::circle;
    Vec3 center{};
    double radius = 1.0;       // circle
    double inner = 0.0;        // annulus
    double outer = 0.0;        // annulus
    double major = 2.0;        // torus
    double minor = 1.0;        // torus
    double eps = 0.0;          // counterexamples
    double delta = 0.0;        // counterexamples

    static ShapeSpec make_circle(Vec3 c, double r);
    static ShapeSpec make_annulus(Vec3 c, double inner, double outer);
    static ShapeSpec make_torus(Vec3 c, double major = 2.0, double minor = 1.0);
    static ShapeSpec make_annuli_counterexample(double eps, double delta);
    static ShapeSpec make_tori_counterexample(double eps, double delta);
};

// Deterministic sample with one-sided Hausdorff distance at most h/2 in
// both directions: every sample point lies on the shape and every shape
// point has a sample point within h/2. Throws ResourceLimit when the
// sample would exceed max_points.
PointCloud sample_shape(const ShapeSpec& shape, double h,
                        std::size_t max_points = kDefaultMaxPoints);

// max over `from` of the distance to the nearest point of `to`.
double one_sided_hausdorff(const PointCloud& from, const PointCloud& to);

}
