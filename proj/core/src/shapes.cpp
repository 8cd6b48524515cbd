#include "reachkit/shapes.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "bucket_grid.hpp"
#include "reachkit/counterexample.hpp"

namespace reachkit {

namespace {
constexpr double kPi = std::numbers::pi;

// Step for area-like sampling on a grid: a square cell of side s has
// covering radius s/sqrt(2), so s <= h/sqrt(2) keeps it within h/2. The
// 0.995 absorbs rounding.
double grid_step(double h) { return h / std::numbers::sqrt2 * 0.995; }

void require_positive(double v, const char* what) {
    if (!(v > 0.0) || !std::isfinite(v))
        throw InvalidArgument(std::string(what) + " must be positive and finite");
}
}

ShapeSpec ShapeSpec::make_circle(Vec3 c, double r) {
    require_positive(r, "circle radius");
    ShapeSpec s;
    s.kind = Kind::circle;
    s.center = c;
    s.radius = r;
    return s;
}

ShapeSpec ShapeSpec::make_annulus(Vec3 c, double inner, double outer) {
    require_positive(inner, "annulus inner radius");
    if (!(outer > inner))
        throw InvalidArgument("annulus outer radius must exceed inner");
    ShapeSpec s;
    s.kind = Kind::annulus;
    s.center = c;
    s.inner = inner;
    s.outer = outer;
    return s;
}

ShapeSpec ShapeSpec::make_torus(Vec3 c, double major, double minor) {
    require_positive(minor, "torus minor radius");
    if (!(major > minor))
        throw InvalidArgument("torus major radius must exceed minor");
    ShapeSpec s;
    s.kind = Kind::torus;
    s.center = c;
    s.major = major;
    s.minor = minor;
    return s;
}

ShapeSpec ShapeSpec::make_annuli_counterexample(double eps, double delta) {
    ShapeSpec s;
    s.kind = Kind::annuli_counterexample;
    s.eps = eps;
    s.delta = delta;
    return s;
}

ShapeSpec ShapeSpec::make_tori_counterexample(double eps, double delta) {
    ShapeSpec s;
    s.kind = Kind::tori_counterexample;
    s.eps = eps;
    s.delta = delta;
    return s;
}

namespace {

void cap(std::size_t have, std::size_t add, std::size_t max_points) {
    if (have + add > max_points)
        throw ResourceLimit("sample would exceed max_points = " + std::to_string(max_points));
}

PointCloud sample_circle(Vec3 c, double rho, double h, std::size_t max_points) {
    // Arc step h/2: chord <= arc, so every circle point is within h/4 of a
    // sample along the arc, comfortably below h/2.
    const auto n = static_cast<std::size_t>(std::ceil(4.0 * kPi * rho / h));
    cap(0, n, max_points);
    PointCloud cloud;
    cloud.dim = 2;
    cloud.points.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double a = 2.0 * kPi * static_cast<double>(i) / static_cast<double>(n);
        cloud.points.push_back({c.x + rho * std::cos(a), c.y + rho * std::sin(a), 0.0});
    }
    return cloud;
}

PointCloud sample_annulus(Vec3 c, double inner, double outer, double h,
                          std::size_t max_points) {
    const double s = grid_step(h);
    const auto nr = static_cast<std::size_t>(std::ceil((outer - inner) / s)) + 1;
    PointCloud cloud;
    cloud.dim = 2;
    for (std::size_t i = 0; i < nr; ++i) {
        const double rho = (nr == 1) ? inner
                                     : inner + (outer - inner) * static_cast<double>(i) /
                                                   static_cast<double>(nr - 1);
        const auto na = std::max<std::size_t>(
            1, static_cast<std::size_t>(std::ceil(2.0 * kPi * rho / s)));
        cap(cloud.points.size(), na, max_points);
        for (std::size_t j = 0; j < na; ++j) {
            const double a = 2.0 * kPi * static_cast<double>(j) / static_cast<double>(na);
            cloud.points.push_back({c.x + rho * std::cos(a), c.y + rho * std::sin(a), 0.0});
        }
    }
    return cloud;
}

PointCloud sample_torus(Vec3 c, double major, double minor, double h,
                        std::size_t max_points) {
    // Parameter grid: tube angle rows, azimuth columns. Arc lengths are
    // bounded by minor (rows) and major+minor (columns), so a step of
    // grid_step(h) in each keeps surface covering radius below h/2.
    const double s = grid_step(h);
    const auto nv = std::max<std::size_t>(
        3, static_cast<std::size_t>(std::ceil(2.0 * kPi * minor / s)));
    const auto nu = std::max<std::size_t>(
        3, static_cast<std::size_t>(std::ceil(2.0 * kPi * (major + minor) / s)));
    cap(0, nu * nv, max_points);
    PointCloud cloud;
    cloud.dim = 3;
    cloud.points.reserve(nu * nv);
    for (std::size_t i = 0; i < nu; ++i) {
        const double u = 2.0 * kPi * static_cast<double>(i) / static_cast<double>(nu);
        for (std::size_t j = 0; j < nv; ++j) {
            const double v = 2.0 * kPi * static_cast<double>(j) / static_cast<double>(nv);
            const double rho = major + minor * std::cos(v);
            cloud.points.push_back({c.x + rho * std::cos(u), c.y + rho * std::sin(u),
                                    c.z + minor * std::sin(v)});
        }
    }
    return cloud;
}

}

PointCloud sample_shape(const ShapeSpec& shape, double h, std::size_t max_points) {
    require_positive(h, "density h");
    switch (shape.kind) {
        case ShapeSpec::Kind::circle:
            return sample_circle(shape.center, shape.radius, h, max_points);
        case ShapeSpec::Kind::annulus:
            return sample_annulus(shape.center, shape.inner, shape.outer, h, max_points);
        case ShapeSpec::Kind::torus:
            return sample_torus(shape.center, shape.major, shape.minor, h, max_points);
        case ShapeSpec::Kind::annuli_counterexample: {
            const auto meta = annuli_radius_sequence(shape.eps, shape.delta);
            std::vector<int> all(static_cast<std::size_t>(meta.k) + 1);
            for (int i = 0; i <= meta.k; ++i) all[static_cast<std::size_t>(i)] = i;
            return build_counterexample_cloud(meta, h, all, max_points);
        }
        case ShapeSpec::Kind::tori_counterexample: {
            const auto meta = tori_radius_sequence(shape.eps, shape.delta);
            std::vector<int> all(static_cast<std::size_t>(meta.k) + 1);
            for (int i = 0; i <= meta.k; ++i) all[static_cast<std::size_t>(i)] = i;
            return build_counterexample_cloud(meta, h, all, max_points);
        }
    }
    throw InvalidArgument("unknown shape kind");
}

double one_sided_hausdorff(const PointCloud& from, const PointCloud& to) {
    from.check();
    to.check();
    if (from.points.empty() || to.points.empty())
        throw InvalidArgument("one_sided_hausdorff requires non-empty clouds");
    const detail::BucketGrid grid(to.points);
    double worst = 0.0;
    for (const Vec3& q : from.points) worst = std::max(worst, grid.nearest(q));
    return worst;
}

}
