#include "reachkit/counterexample.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "reachkit/meb.hpp"

namespace reachkit {

namespace {
constexpr double kPi = std::numbers::pi;

double grid_step(double h) { return h / std::numbers::sqrt2 * 0.995; }

void validate_params(double eps, double delta, bool tori) {
    if (!(eps > 0.0) || !std::isfinite(eps))
        throw InvalidArgument("eps must be positive");
    if (!(delta >= 0.0) || !std::isfinite(delta))
        throw InvalidArgument("delta must be non-negative");
    if (!(delta < 1.0))
        throw InvalidArgument("delta must be below the reach 1");
    if (tori && !(delta < eps))
        throw InvalidArgument("tori chain requires delta < eps");
}

void record_certificate(CounterexampleMetadata& meta, std::span<const Vec3> simplex) {
    const auto lam = circumcenter_barycentric(simplex);
    double mn = lam[0];
    for (double l : lam) mn = std::min(mn, l);
    meta.min_barycentric = std::min(meta.min_barycentric, mn);
    if (!(mn > 0.0)) meta.self_centred_ok = false;
}

void finish_criticals(CounterexampleMetadata& meta) {
    meta.critical_radii = meta.r_seq;
    meta.critical_radii.push_back(meta.circum_seq.back());
    for (std::size_t i = 1; i < meta.critical_radii.size(); ++i)
        if (!(meta.critical_radii[i] > meta.critical_radii[i - 1]))
            throw Error("counterexample critical radii not strictly increasing");
    // Consecutive shapes sit in a row along x with gap exactly 2 between
    // their bounding disks: radius 1+2*eps for an annulus, 3 for a torus.
    const double spacing = meta.tori ? 8.0 : 2.0 * (1.0 + 2.0 * meta.eps) + 2.0;
    meta.component_offsets.resize(static_cast<std::size_t>(meta.k) + 1);
    for (int i = 0; i <= meta.k; ++i)
        meta.component_offsets[static_cast<std::size_t>(i)] =
            Vec3{spacing * static_cast<double>(i), 0.0, 0.0};
}

}

double CounterexampleMetadata::t_of(int i) const {
    if (i < 0 || i > k)
        throw InvalidArgument("component index out of range");
    const double rd = 1.0 - delta;
    const double r = r_seq[static_cast<std::size_t>(i)];
    const double t2 = rd * rd - r * r;
    return t2 > 0.0 ? std::sqrt(t2) : 0.0;
}

CounterexampleMetadata annuli_radius_sequence(double eps, double delta, int max_steps) {
    validate_params(eps, delta, false);
    const double rd = 1.0 - delta;
    const double re = 1.0 + eps;
    double r = 0.5 * (delta + eps);
    if (!(r > 0.0) || !(r < rd))
        throw InvalidArgument("annuli chain requires 0 < (eps+delta)/2 < 1-delta");

    CounterexampleMetadata meta;
    meta.tori = false;
    meta.eps = eps;
    meta.delta = delta;
    meta.ell = std::numeric_limits<double>::quiet_NaN();
    meta.h = std::numeric_limits<double>::quiet_NaN();
    meta.self_centred_ok = true;
    meta.min_barycentric = std::numeric_limits<double>::infinity();
    meta.growth_margin = std::numeric_limits<double>::infinity();
    meta.r_seq.push_back(r);

    // The pair of every step lies on the circle of radius 1-delta, so
    // t^2 + r^2 = (1-delta)^2 and the circumcenter numerator is constant.
    const double num_const = re * re - rd * rd;

    for (int step = 0; step < max_steps; ++step) {
        const double t = std::sqrt(std::max(0.0, rd * rd - r * r));
        // Circumcenter of {p, ~p, q} with p = (t, r), q = (1+eps, 0) lies on
        // the x axis at u; the circumradius is R = 1+eps-u.
        const double u = num_const / (2.0 * (re - t));
        const double R = re - u;
        meta.growth_margin = std::min(meta.growth_margin, u - t);
        const Vec3 tri[3] = {{t, r, 0.0}, {t, -r, 0.0}, {re, 0.0, 0.0}};
        record_certificate(meta, tri);
        meta.circum_seq.push_back(R);
        if (R >= rd) {
            meta.r_seq.push_back(rd);
            meta.k = static_cast<int>(meta.r_seq.size()) - 1;
            // Final collapse radius: circumradius of the diametral pair
            // step, from the same formula at t = 0.
            const double Rk = (re * re + rd * rd) / (2.0 * re);
            const Vec3 last[3] = {{0.0, rd, 0.0}, {0.0, -rd, 0.0}, {re, 0.0, 0.0}};
            record_certificate(meta, last);
            meta.circum_seq.push_back(Rk);
            finish_criticals(meta);
            return meta;
        }
        meta.r_seq.push_back(R);
        r = R;
    }
    throw Error("annuli_radius_sequence did not terminate");
}

CounterexampleMetadata tori_radius_sequence(double eps, double delta, int max_steps) {
    validate_params(eps, delta, true);
    const double rd = 1.0 - delta;
    const double ell = 0.5 * (eps * eps - delta * delta) + delta;
    const double h2 = eps * eps - ell * ell;
    if (!(h2 > 0.0))
        throw InvalidArgument("tori chain requires eps > ell");
    const double h = std::sqrt(h2);
    double r = h;
    if (!(r < rd))
        throw InvalidArgument("tori chain requires h < 1-delta");

    CounterexampleMetadata meta;
    meta.tori = true;
    meta.eps = eps;
    meta.delta = delta;
    meta.ell = ell;
    meta.h = h;
    meta.self_centred_ok = true;
    meta.min_barycentric = std::numeric_limits<double>::infinity();
    meta.growth_margin = std::numeric_limits<double>::infinity();
    meta.r_seq.push_back(r);

    const double le = 1.0 + ell;
    // Pairs lie on the circle of radius 1-delta (t^2 + r^2 = rd^2), so the
    // circumcenter numerator le^2 + h^2 - t^2 - r^2 is constant.
    const double num_const = le * le + h2 - rd * rd;

    for (int step = 0; step < max_steps; ++step) {
        const double t = std::sqrt(std::max(0.0, rd * rd - r * r));
        // Circumcenter of the tetrahedron {p, ~p, q, ~q} with
        // p = (t, +-r, 0), q = (1+ell, 0, +-h) lies on the x axis at u.
        const double u = num_const / (2.0 * (le - t));
        const double R = std::sqrt((u - t) * (u - t) + r * r);
        meta.growth_margin = std::min(meta.growth_margin, u - t);
        const Vec3 tet[4] = {
            {t, r, 0.0}, {t, -r, 0.0}, {le, 0.0, h}, {le, 0.0, -h}};
        record_certificate(meta, tet);
        meta.circum_seq.push_back(R);
        if (R >= rd) {
            meta.r_seq.push_back(rd);
            meta.k = static_cast<int>(meta.r_seq.size()) - 1;
            const double uk = (le * le + h2 - rd * rd) / (2.0 * le);
            const double Rk = std::sqrt(uk * uk + rd * rd);
            const Vec3 last[4] = {
                {0.0, rd, 0.0}, {0.0, -rd, 0.0}, {le, 0.0, h}, {le, 0.0, -h}};
            record_certificate(meta, last);
            meta.circum_seq.push_back(Rk);
            finish_criticals(meta);
            return meta;
        }
        meta.r_seq.push_back(R);
        r = R;
    }
    throw Error("tori_radius_sequence did not terminate");
}

std::pair<Vec3, Vec3> component_pair(const CounterexampleMetadata& meta, int i) {
    const double t = meta.t_of(i);
    const double r = meta.r_seq[static_cast<std::size_t>(i)];
    return {Vec3{t, r, 0.0}, Vec3{t, -r, 0.0}};
}

bool is_strictly_acute(const Vec3& a, const Vec3& b, const Vec3& c) {
    return dot(b - a, c - a) > 0.0 && dot(a - b, c - b) > 0.0 && dot(a - c, b - c) > 0.0;
}

bool is_strictly_self_centred(std::span<const Vec3> pts) {
    const auto lam = circumcenter_barycentric(pts);
    for (double l : lam)
        if (!(l > 0.0)) return false;
    return true;
}

bool claim_b1_check(double eps, double delta, int grid) {
    validate_params(eps, delta, true);
    if (grid < 2)
        throw InvalidArgument("claim_b1_check needs a grid of at least 2");
    const double rd = 1.0 - delta;
    const double ell = 0.5 * (eps * eps - delta * delta) + delta;
    const double h2 = eps * eps - ell * ell;
    const double le = 1.0 + ell;
    const double tmax = 1.0 - ell;  // equals sqrt((1-delta)^2 - h^2)

    // Apex angle at q of the isoceles triangle p ~p q: acute iff
    // Q(t) = 2t^2 - 2t(1+ell) + 4ell > 0. When the discriminant is
    // negative this holds everywhere; otherwise scan the range.
    const double disc = le * le - 8.0 * ell;
    if (disc >= 0.0) {
        for (int i = 0; i <= grid; ++i) {
            const double t = tmax * static_cast<double>(i) / static_cast<double>(grid);
            const double q = 2.0 * t * t - 2.0 * t * le + 4.0 * ell;
            if (!(q > 0.0)) return false;
        }
    }
    // Apex angle at p of the isoceles triangle q ~q p: acute iff the
    // squared distance from p to the base midpoint exceeds h^2.
    for (int i = 0; i <= grid; ++i) {
        const double t = tmax * static_cast<double>(i) / static_cast<double>(grid);
        const double r2 = std::max(0.0, rd * rd - t * t);
        const double apex2 = (le - t) * (le - t) + r2;
        if (!(apex2 > h2)) return false;
    }
    return true;
}

namespace {

void append_annuli_component(PointCloud& cloud, const CounterexampleMetadata& meta,
                             int i, double h, std::size_t max_points) {
    const double re = 1.0 + meta.eps;
    const Vec3 off = meta.component_offsets[static_cast<std::size_t>(i)];
    const auto n = static_cast<std::size_t>(std::ceil(4.0 * kPi * re / h));
    if (cloud.points.size() + n + 2 > max_points)
        throw ResourceLimit("counterexample cloud would exceed max_points");
    for (std::size_t j = 0; j < n; ++j) {
        const double a = 2.0 * kPi * static_cast<double>(j) / static_cast<double>(n);
        cloud.points.push_back({off.x + re * std::cos(a), off.y + re * std::sin(a), 0.0});
        cloud.labels.push_back(i);
    }
    const auto [p, q] = component_pair(meta, i);
    cloud.points.push_back(p + off);
    cloud.labels.push_back(i);
    cloud.points.push_back(q + off);
    cloud.labels.push_back(i);
}

void append_tori_component(PointCloud& cloud, const CounterexampleMetadata& meta,
                           int i, double h, std::size_t max_points) {
    const double rd = 1.0 - meta.delta;
    const Vec3 off = meta.component_offsets[static_cast<std::size_t>(i)];
    // Tube angle theta measured from the outward equator; the retained
    // part keeps every point at distance >= eps from the unit circle,
    // which works out to |theta| <= vc.
    const double cos_vc =
        (meta.eps * meta.eps - 1.0 - rd * rd) / (2.0 * rd);
    if (!(cos_vc > -1.0) || !(cos_vc < 1.0))
        throw Error("tori cut angle out of range");
    const double vc = std::acos(cos_vc);
    const double s = grid_step(h);
    const auto nrow = std::max<std::size_t>(
        2, static_cast<std::size_t>(std::ceil(2.0 * vc * rd / s)) + 1);
    for (std::size_t row = 0; row < nrow; ++row) {
        const double theta = -vc + 2.0 * vc * static_cast<double>(row) /
                                       static_cast<double>(nrow - 1);
        const double rho = 2.0 + rd * std::cos(theta);
        const double z = rd * std::sin(theta);
        const auto ncol = std::max<std::size_t>(
            3, static_cast<std::size_t>(std::ceil(2.0 * kPi * rho / s)));
        if (cloud.points.size() + ncol > max_points)
            throw ResourceLimit("counterexample cloud would exceed max_points");
        for (std::size_t col = 0; col < ncol; ++col) {
            const double phi = 2.0 * kPi * static_cast<double>(col) / static_cast<double>(ncol);
            cloud.points.push_back(
                {off.x + rho * std::cos(phi), off.y + rho * std::sin(phi), off.z + z});
            cloud.labels.push_back(i);
        }
    }
    if (cloud.points.size() + 2 > max_points)
        throw ResourceLimit("counterexample cloud would exceed max_points");
    const auto [p, q] = component_pair(meta, i);
    cloud.points.push_back(p + off);
    cloud.labels.push_back(i);
    cloud.points.push_back(q + off);
    cloud.labels.push_back(i);
}

}

PointCloud build_counterexample_cloud(const CounterexampleMetadata& meta, double h,
                                      const std::vector<int>& components,
                                      std::size_t max_points) {
    if (!(h > 0.0))
        throw InvalidArgument("density h must be positive");
    if (components.empty())
        throw InvalidArgument("component subset must be non-empty");
    for (std::size_t i = 0; i < components.size(); ++i) {
        if (components[i] < 0 || components[i] > meta.k)
            throw InvalidArgument("component index out of range");
        if (i > 0 && components[i] <= components[i - 1])
            throw InvalidArgument("component subset must be strictly increasing");
    }
    PointCloud cloud;
    cloud.dim = meta.tori ? 3 : 2;
    for (int i : components) {
        if (meta.tori)
            append_tori_component(cloud, meta, i, h, max_points);
        else
            append_annuli_component(cloud, meta, i, h, max_points);
    }
    return cloud;
}

double component_curve_distance(const CounterexampleMetadata& meta, int i, Vec3 x) {
    if (i < 0 || i > meta.k)
        throw InvalidArgument("component index out of range");
    if (!meta.tori) {
        const double re = 1.0 + meta.eps;
        return std::abs(std::sqrt(x.x * x.x + x.y * x.y) - re);
    }
    const double rd = 1.0 - meta.delta;
    const double cos_vc = (meta.eps * meta.eps - 1.0 - rd * rd) / (2.0 * rd);
    const double rho = std::sqrt(x.x * x.x + x.y * x.y);
    const double a = rho - 2.0;
    const double w = std::sqrt(a * a + x.z * x.z);
    if (a >= w * cos_vc)  // |theta| <= vc: nearest point on the retained tube
        return std::abs(w - rd);
    // Otherwise the nearest points are on the two cut boundary circles at
    // cylinder radius 1+ell, height +-h.
    const double dr = rho - (1.0 + meta.ell);
    const double dz1 = x.z - meta.h;
    const double dz2 = x.z + meta.h;
    return std::sqrt(dr * dr + std::min(dz1 * dz1, dz2 * dz2));
}

double component_distance(const CounterexampleMetadata& meta, int i, Vec3 x) {
    const auto [p, q] = component_pair(meta, i);
    const double dp = std::min(dist(x, p), dist(x, q));
    return std::min(dp, component_curve_distance(meta, i, x));
}

}
