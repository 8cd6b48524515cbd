#include "reachkit/verify.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <random>

#include "reachkit/bounds.hpp"
#include "reachkit/counterexample.hpp"
#include "reachkit/errors.hpp"
#include "reachkit/filtration.hpp"
#include "reachkit/meb.hpp"
#include "reachkit/persistence.hpp"
#include "reachkit/raster.hpp"

namespace reachkit {

namespace {

std::string strf(const char* fmt, ...) {
    char buf[512];
    va_list ap;
    va_start(ap, fmt);
    std::vsnprintf(buf, sizeof buf, fmt, ap);
    va_end(ap);
    return buf;
}

std::array<long, 3> to_triple(const RasterBetti& rb) { return {rb.b0, rb.b1, rb.b2}; }

bool triple_match(const std::array<long, 3>& expected, const std::array<long, 3>& observed) {
    for (int i = 0; i < 3; ++i)
        if (expected[static_cast<std::size_t>(i)] >= 0 &&
            expected[static_cast<std::size_t>(i)] != observed[static_cast<std::size_t>(i)])
            return false;
    return true;
}

double shape_reach(const ShapeSpec& shape) {
    switch (shape.kind) {
        case ShapeSpec::Kind::circle: return shape.radius;
        case ShapeSpec::Kind::annulus: return shape.inner;
        case ShapeSpec::Kind::torus: return std::min(shape.minor, shape.major - shape.minor);
        default:
            throw InvalidArgument("verify_reconstruction expects circle, annulus or torus");
    }
}

// Voxel size for a certified probe: eta = voxel*sqrt(dim)/2 must stay a
// factor below the distance to the nearest topology-changing radius.
double pick_voxel(double cap, double margin, int dim, double scale) {
    const double sqrtd = std::sqrt(static_cast<double>(dim));
    const double v = std::min(cap, margin / (2.0 * sqrtd));
    if (v < 5e-4 * scale)
        throw DensityTooCoarse(
            strf("certificate margin %.6g forces voxel %.3g below %.3g; "
                 "probe too close to a critical radius",
                 margin, v, 5e-4 * scale));
    return v;
}

Box2 square_box(double cx, double cy, double half) {
    return {cx - half, cx + half, cy - half, cy + half};
}

}

VerificationReport verify_reconstruction(const ShapeSpec& shape, double h,
                                         const VerifyOptions& opt) {
    if (!(h > 0.0) || !std::isfinite(h))
        throw InvalidArgument("verify_reconstruction requires h > 0");
    if (!std::isfinite(opt.eps))
        throw InvalidArgument("verify_reconstruction requires eps");

    const double reach = shape_reach(shape);
    const ReachParams p(reach, opt.eps, opt.delta);
    const bool planar = shape.kind != ShapeSpec::Kind::torus;

    VerificationReport report;
    switch (shape.kind) {
        case ShapeSpec::Kind::circle: report.scenario = "reconstruction-circle"; break;
        case ShapeSpec::Kind::annulus: report.scenario = "reconstruction-annulus"; break;
        default: report.scenario = "reconstruction-torus"; break;
    }

    ReconstructionMode mode = opt.mode;
    if (mode == ReconstructionMode::manifold && shape.kind == ShapeSpec::Kind::annulus)
        throw InvalidArgument("the solid annulus is verified with the set bounds");
    if (mode == ReconstructionMode::automatic) {
        if (shape.kind != ShapeSpec::Kind::annulus && p.delta <= p.eps &&
            check_manifold_condition(p))
            mode = ReconstructionMode::manifold;
        else
            mode = ReconstructionMode::set;
    }
    const bool manifold = mode == ReconstructionMode::manifold;

    const Interval window =
        manifold ? manifold_radius_interval(p) : set_radius_interval(p);
    report.checks.push_back(
        {"feasibility", 0.0, -1, {-1, -1, -1}, {-1, -1, -1},
         manifold ? "(reach-delta)^2 - eps^2 >= (4*sqrt(2)-5)*reach^2"
                  : "eps + sqrt(2)*delta <= (sqrt(2)-1)*reach",
         !window.empty()});
    report.notes.push_back(strf("mode = %s", manifold ? "manifold" : "set"));
    if (window.empty()) {
        report.passed = false;
        return report;
    }
    report.notes.push_back(strf("radius window [%.17g, %.17g]", window.lo, window.hi));

    const double r = std::isnan(opt.radius) ? window.mid() : opt.radius;
    report.checks.push_back({"radius-in-window", r, -1, {-1, -1, -1}, {-1, -1, -1},
                             "window.lo <= r <= window.hi", window.contains(r)});
    if (!window.contains(r)) {
        report.passed = false;
        return report;
    }

    const double h_eff = p.eps > 0.0 ? std::min(h, p.eps) : h;
    const PointCloud cloud = sample_shape(shape, h_eff, opt.max_points);
    report.notes.push_back(
        strf("sampled %zu points at step %.6g (on-shape, coverage radius h/2)",
             cloud.points.size(), h_eff));

    const std::array<long, 3> expected =
        shape.kind == ShapeSpec::Kind::torus ? std::array<long, 3>{1, 2, 1}
                                             : std::array<long, 3>{1, 1, 0};

    std::array<long, 3> observed{-1, -1, -1};
    bool measured = false;
    if (opt.engine != HomologyEngine::raster) {
        try {
            const Filtration f = cech_filtration(cloud, 3, r, opt.max_simplices);
            const Barcode bar = persistence(f);
            observed = betti_profile(bar, r);
            measured = true;
            report.notes.push_back(
                strf("engine = cech (%zu simplices)", f.entries.size()));
        } catch (const ResourceLimit& e) {
            if (opt.engine == HomologyEngine::cech) throw;
            report.notes.push_back(
                strf("cech attempt hit the simplex cap (%s); falling back to raster",
                     e.what()));
        }
    }
    if (!measured) {
        const double margin = std::min(r - window.lo, window.hi - r);
        const double v =
            opt.voxel > 0.0 ? opt.voxel : pick_voxel(0.02 * reach, margin, planar ? 2 : 3, reach);
        double lo[3] = {1e300, 1e300, 1e300}, hi[3] = {-1e300, -1e300, -1e300};
        for (const Vec3& q : cloud.points) {
            const double c[3] = {q.x, q.y, q.z};
            for (int i = 0; i < 3; ++i) {
                lo[i] = std::min(lo[i], c[i]);
                hi[i] = std::max(hi[i], c[i]);
            }
        }
        const double pad = r + 4.0 * v;
        const CloudDistance cd(cloud);
        RasterBetti rb;
        if (planar) {
            rb = raster_betti_2d(
                [&](double x, double y) { return cd({x, y, 0.0}); },
                {lo[0] - pad, hi[0] + pad, lo[1] - pad, hi[1] + pad}, v, r);
        } else {
            rb = raster_betti_3d(
                [&](double x, double y, double z) { return cd({x, y, z}); },
                {lo[0] - pad, hi[0] + pad, lo[1] - pad, hi[1] + pad, lo[2] - pad,
                 hi[2] + pad},
                v, r);
        }
        observed = to_triple(rb);
        report.notes.push_back(strf(
            "engine = raster (voxel %.6g, eta %.6g, certificate margin %.6g)", v,
            rb.eta, margin));
    }

    report.checks.push_back({"betti", r, -1, expected, observed,
                             "union of balls at r has the Betti numbers of the shape",
                             triple_match(expected, observed)});
    report.passed = std::all_of(report.checks.begin(), report.checks.end(),
                                [](const VerificationCheck& c) { return c.passed; });
    return report;
}

namespace {

// Covering radius of the closed unit disk around component i's center with
// respect to X_i (middle circle plus exact pair): the radius at which the
// central hole of the annulus is entirely filled. Grid search with three
// refinement rounds; the maximizer is an interior equidistant point, so
// the coarse grid cannot miss it by more than a cell.
double annulus_fill_radius(const CounterexampleMetadata& meta, int i) {
    const auto [p, q] = component_pair(meta, i);
    const double re = 1.0 + meta.eps;
    const auto depth = [&](double x, double y) {
        const double rho = std::hypot(x, y);
        if (rho > 1.0) return -1.0;
        double d = re - rho;
        d = std::min(d, std::hypot(x - p.x, y - p.y));
        d = std::min(d, std::hypot(x - q.x, y - q.y));
        return d;
    };
    double cx = 0.0, cy = 0.0, best = -1.0, half = 1.0;
    for (int round = 0; round < 4; ++round) {
        const int n = round == 0 ? 400 : 40;
        double bx = cx, by = cy;
        for (int iy = 0; iy <= n; ++iy)
            for (int ix = 0; ix <= n; ++ix) {
                const double x = cx - half + 2.0 * half * ix / n;
                const double y = cy - half + 2.0 * half * iy / n;
                const double d = depth(x, y);
                if (d > best) {
                    best = d;
                    bx = x;
                    by = y;
                }
            }
        cx = bx;
        cy = by;
        half = 4.0 * half / n;
    }
    return best;
}

std::array<long, 3> expected_annuli_profile(double r, double contact, double rj,
                                            double Rj, double fillj) {
    if (r < contact && r < rj) return {3, 1, 0};
    if (r < rj) return {1, 1, 0};
    if (r < Rj) return {1, 2, 0};
    if (r < fillj) return {1, 1, 0};
    return {1, 0, 0};
}

}

VerificationReport verify_annuli_counterexample(double eps, double delta, double h,
                                                std::vector<int> components,
                                                std::size_t max_points) {
    if (!(h > 0.0) || !std::isfinite(h))
        throw InvalidArgument("verify_annuli_counterexample requires h > 0");
    const CounterexampleMetadata meta = annuli_radius_sequence(eps, delta);

    if (components.empty()) {
        components = {0};
        if (meta.k >= 1) components.push_back(1);
        if (meta.k >= 2) components.push_back(meta.k);
    }
    std::sort(components.begin(), components.end());
    components.erase(std::unique(components.begin(), components.end()), components.end());
    for (int c : components)
        if (c < 0 || c > meta.k) throw InvalidArgument("component index out of range");

    VerificationReport report;
    report.scenario = "annuli-counterexample";
    report.checks.push_back(
        {"certificates", 0.0, -1, {-1, -1, -1}, {-1, -1, -1},
         "every witness triangle is strictly self-centred",
         meta.self_centred_ok && meta.min_barycentric > 0.0});
    const double Rk = meta.critical_radii.back();
    const double rk = meta.r_seq.back();
    report.notes.push_back(strf("k = %d", meta.k));
    report.notes.push_back(strf("R_k = %.17g", Rk));

    // One probe below every window, one inside the window of each requested
    // component, one past the final collapse.
    std::vector<double> probes;
    probes.push_back(0.5 * meta.r_seq[0]);
    for (int c : components) {
        const double next = c < meta.k ? meta.r_seq[static_cast<std::size_t>(c) + 1]
                                       : meta.circum_seq.back();
        probes.push_back(0.5 * (meta.r_seq[static_cast<std::size_t>(c)] + next));
    }
    probes.push_back(Rk + 0.5 * (Rk - rk));
    std::sort(probes.begin(), probes.end());
    probes.erase(std::unique(probes.begin(), probes.end()), probes.end());

    const double contact = 0.5 * (eps + delta);
    std::vector<double> fill(components.size());
    for (std::size_t ci = 0; ci < components.size(); ++ci) {
        fill[ci] = annulus_fill_radius(meta, components[ci]);
        report.notes.push_back(
            strf("fill radius of component %d = %.9g", components[ci], fill[ci]));
    }

    for (const double r : probes) {
        for (std::size_t ci = 0; ci < components.size(); ++ci) {
            const int c = components[ci];
            const double rj = meta.r_seq[static_cast<std::size_t>(c)];
            const double Rj = meta.circum_seq[static_cast<std::size_t>(c)];
            const std::array<long, 3> expected =
                expected_annuli_profile(r, contact, rj, Rj, fill[ci]);
            double margin = 1e300;
            for (const double e : {contact, rj, Rj, fill[ci]})
                margin = std::min(margin, std::abs(r - e));
            if (margin < 2.0 * h)
                throw DensityTooCoarse(
                    strf("h = %.6g leaves margin %.6g < 2h between probe radius %.6g "
                         "and a critical radius of component %d",
                         h, margin, r, c));
            const double v = pick_voxel(0.008, margin, 2, 1.0);
            const RasterBetti rb = raster_betti_2d(
                [&](double x, double y) {
                    return component_distance(meta, c, {x, y, 0.0});
                },
                square_box(0.0, 0.0, 1.0 + eps + r + 4.0 * v), v, r);
            const std::array<long, 3> observed = to_triple(rb);
            report.checks.push_back({strf("comp%d-r%.6g", c, r), r, c, expected,
                                     observed, "betti profile of the probe window",
                                     expected == observed});
        }
    }

    // The sample cloud realizes the continuum distances to within h/2.
    for (const int c : components) {
        const PointCloud cloud =
            build_counterexample_cloud(meta, h, {c}, max_points);
        const CloudDistance cd(cloud);
        const Vec3 off = meta.component_offsets[static_cast<std::size_t>(c)];
        std::mt19937_64 rng(20240815u + static_cast<unsigned>(c));
        std::uniform_real_distribution<double> u(-(2.0 + eps), 2.0 + eps);
        double worst = 0.0;
        bool ok = true;
        for (int s = 0; s < 500; ++s) {
            const Vec3 x{u(rng), u(rng), 0.0};
            const double dc = component_distance(meta, c, x);
            const double ds = cd(x + off);
            if (ds < dc - 1e-9 || ds > dc + 0.5 * h + 1e-9) ok = false;
            worst = std::max(worst, ds - dc);
        }
        report.checks.push_back(
            {strf("fidelity-comp%d", c), 0.0, c, {-1, -1, -1}, {-1, -1, -1},
             "continuum distance <= sample distance <= continuum + h/2", ok});
        report.notes.push_back(
            strf("component %d: %zu sample points, worst sample-vs-continuum gap %.3g",
                 c, cloud.points.size(), worst));
    }

    report.passed = std::all_of(report.checks.begin(), report.checks.end(),
                                [](const VerificationCheck& c) { return c.passed; });
    return report;
}

VerificationReport verify_tori_counterexample(double eps, double delta, double h,
                                              std::size_t max_points) {
    if (!(h > 0.0) || !std::isfinite(h))
        throw InvalidArgument("verify_tori_counterexample requires h > 0");
    const CounterexampleMetadata meta = tori_radius_sequence(eps, delta);

    VerificationReport report;
    report.scenario = "tori-counterexample";
    report.checks.push_back(
        {"certificates", 0.0, -1, {-1, -1, -1}, {-1, -1, -1},
         "witness tetrahedra strictly self-centred, circumradius gap positive",
         meta.self_centred_ok && meta.min_barycentric > 0.0 && meta.growth_margin > 0.0});
    report.checks.push_back(
        {"window-independence", 0.0, -1, {-1, -1, -1}, {-1, -1, -1},
         "the cycle count b1 + b2 is constant across the first window",
         claim_b1_check(eps, delta)});

    const double r0 = meta.r_seq[0];
    const double r1 = meta.k >= 1 ? meta.r_seq[1] : meta.circum_seq[0];
    if (h > 0.125 * (r1 - r0))
        throw DensityTooCoarse(strf(
            "h = %.6g exceeds (r1 - r0)/8 = %.6g; probes would not separate the "
            "window ends",
            h, 0.125 * (r1 - r0)));
    report.notes.push_back(strf("k = %d", meta.k));
    report.notes.push_back(strf("R_k = %.17g", meta.critical_radii.back()));

    const auto [p, ptil] = component_pair(meta, 0);
    const double contact = 0.5 * component_curve_distance(meta, 0, p);
    const Vec3 q{1.0 + meta.ell, 0.0, meta.h};
    const Vec3 qtil{1.0 + meta.ell, 0.0, -meta.h};
    const std::array<Vec3, 3> tri{q, qtil, p};
    const double R_tri = circumsphere(tri).radius;
    report.notes.push_back(
        strf("events: pair-to-surface contact %.9g, pair gap r0 %.9g, "
             "triple circumradius %.9g, next gap r1 %.9g",
             contact, r0, R_tri, r1));

    // The sample cloud realizes the continuum distances to within h/2.
    {
        const PointCloud cloud = build_counterexample_cloud(meta, h, {0}, max_points);
        const CloudDistance cd(cloud);
        const Vec3 off = meta.component_offsets[0];
        std::mt19937_64 rng(20240816u);
        std::uniform_real_distribution<double> uxy(-3.4, 3.4);
        std::uniform_real_distribution<double> uz(-1.4, 1.4);
        double worst = 0.0;
        bool ok = true;
        for (int s = 0; s < 2000; ++s) {
            const Vec3 x{uxy(rng), uxy(rng), uz(rng)};
            const double dc = component_distance(meta, 0, x);
            const double ds = cd(x + off);
            if (ds < dc - 1e-9 || ds > dc + 0.5 * h + 1e-9) ok = false;
            worst = std::max(worst, ds - dc);
        }
        report.checks.push_back(
            {"fidelity-comp0", 0.0, 0, {-1, -1, -1}, {-1, -1, -1},
             "continuum distance <= sample distance <= continuum + h/2", ok});
        report.notes.push_back(
            strf("component 0: %zu sample points, worst sample-vs-continuum gap %.3g",
                 cloud.points.size(), worst));
    }

    const double rd = 1.0 - delta;
    const auto probe = [&](double r, double vcap, double margin) {
        const double v = pick_voxel(vcap, 2.0 * margin, 3, 1.0);  // eta <= margin/2
        const double half_xy = 2.0 + rd + r + 4.0 * v;
        const double half_z = rd + r + 4.0 * v;
        const RasterBetti rb = raster_betti_3d(
            [&](double x, double y, double z) {
                return component_distance(meta, 0, {x, y, z});
            },
            {-half_xy, half_xy, -half_xy, half_xy, -half_z, half_z}, v, r);
        report.notes.push_back(
            strf("probe r = %.9g: voxel %.6g, eta %.6g, margin %.6g, betti "
                 "(%ld, %ld, %ld)",
                 r, v, rb.eta, margin, rb.b0, rb.b1, rb.b2));
        return rb;
    };

    {
        const double r = 0.9 * r0;
        double margin = 1e300;
        for (const double e : {contact, r0, R_tri}) margin = std::min(margin, std::abs(r - e));
        if (margin < 2.0 * h)
            throw DensityTooCoarse(
                strf("h = %.6g leaves margin %.6g < 2h at probe radius %.6g", h,
                     margin, r));
        const RasterBetti rb = probe(r, 0.008, margin);
        const std::array<long, 3> observed = to_triple(rb);
        report.checks.push_back({"below-gap", r, 0, {-1, -1, 0}, observed,
                                 "b2 == 0 below the pair gap", observed[2] == 0});
    }
    {
        const double r = 0.5 * (R_tri + r1);
        double margin = std::min(r - R_tri, r1 - r);
        if (margin < 2.0 * h)
            throw DensityTooCoarse(
                strf("h = %.6g leaves margin %.6g < 2h at probe radius %.6g", h,
                     margin, r));
        const RasterBetti rb = probe(r, 0.005, margin);
        const std::array<long, 3> observed = to_triple(rb);
        report.checks.push_back({"first-window", r, 0, {1, -1, -1}, observed,
                                 "b0 == 1 and b1 + b2 == 4",
                                 observed[0] == 1 && observed[1] + observed[2] == 4});
    }

    report.passed = std::all_of(report.checks.begin(), report.checks.end(),
                                [](const VerificationCheck& c) { return c.passed; });
    return report;
}

}
