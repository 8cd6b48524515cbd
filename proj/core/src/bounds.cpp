#include "reachkit/bounds.hpp"

#include <cmath>
#include <string>

namespace reachkit {

ReachParams::ReachParams(double reach_, double eps_, double delta_)
    : reach(reach_), eps(eps_), delta(delta_) {
    if (!(reach > 0.0) || !std::isfinite(reach))
        throw InvalidArgument("reach must be positive and finite");
    if (!(eps >= 0.0) || !(delta >= 0.0))
        throw InvalidArgument("eps and delta must be non-negative");
    if (!(eps < reach) || !(delta < reach))
        throw InvalidArgument("eps and delta must be smaller than reach");
}

double Interval::mid() const {
    if (empty())
        throw Infeasible("interval is empty");
    return 0.5 * (lo + hi);
}

namespace {
constexpr double kSqrt2 = 1.4142135623730950488;

Interval empty_interval() { return Interval{0.0, -1.0}; }
}

bool check_set_condition(const ReachParams& p) {
    return p.eps + kSqrt2 * p.delta <= (kSqrt2 - 1.0) * p.reach;
}

bool check_manifold_condition(const ReachParams& p) {
    if (p.delta > p.eps)
        throw Inapplicable("manifold bounds require delta <= eps");
    const double g = (p.reach - p.delta) * (p.reach - p.delta) - p.eps * p.eps;
    return g >= (4.0 * kSqrt2 - 5.0) * p.reach * p.reach;
}

Interval set_radius_interval(const ReachParams& p, bool extended) {
    const double rd = p.reach - p.delta;
    const double re = p.reach + p.eps;
    const double disc = 2.0 * rd * rd - re * re;
    if (disc < 0.0)
        return empty_interval();
    const double s = std::sqrt(disc);
    const double lo = 0.5 * (re - s);
    double hi = 0.5 * (re + s);
    if (extended)
        hi = std::sqrt(0.5 * rd * rd + 0.5 * re * s);
    return Interval{lo, hi};
}

namespace {

// Discriminant of the quadratic whose roots are the admissible alpha.
// With g = (reach-delta)^2 - eps^2 it reads g^2/R^2 + 10 g - 7 R^2 and is
// non-negative exactly when the manifold condition holds.
double manifold_disc(const ReachParams& p) {
    const double R = p.reach;
    const double g = (R - p.delta) * (R - p.delta) - p.eps * p.eps;
    return (g / R) * (g / R) + 10.0 * g - 7.0 * R * R;
}

}

Interval manifold_alpha_interval(const ReachParams& p) {
    if (p.delta > p.eps)
        throw Inapplicable("manifold bounds require delta <= eps");
    const double disc = manifold_disc(p);
    if (disc < 0.0)
        return empty_interval();
    const double R = p.reach;
    const double rd = R - p.delta;
    const double s = std::sqrt(disc);
    const double base = (rd * rd + R * R - p.eps * p.eps) / R;
    return Interval{0.25 * (base - s), 0.25 * (base + s)};
}

Interval manifold_radius_interval(const ReachParams& p) {
    const Interval alpha = manifold_alpha_interval(p);
    if (alpha.empty())
        return empty_interval();
    const double R = p.reach;
    const double rd = R - p.delta;
    const double e2 = p.eps * p.eps;
    const double a_lo = alpha.lo;
    const double a_hi = alpha.hi;
    const double lo2 = (1.0 + a_lo / R) * e2 + a_lo * a_lo + (a_lo / R) * (R * R - rd * rd);
    const double hi2 = rd * rd - (R - a_hi) * (R - a_hi);
    if (lo2 < 0.0 || hi2 < 0.0 || lo2 > hi2)
        return empty_interval();
    return Interval{std::sqrt(lo2), std::sqrt(hi2)};
}

bool retract_condition(double r, double alpha, const ReachParams& p, Mode mode) {
    if (!(alpha >= 0.0) || !(alpha <= r))
        throw InvalidArgument("retract_condition requires 0 <= alpha <= r");
    const double R = p.reach;
    const double rd = R - p.delta;
    const bool star = r * r <= rd * rd - (R - alpha) * (R - alpha);
    bool coverage;
    if (mode == Mode::set) {
        coverage = alpha <= r - p.eps;
    } else {
        if (p.delta > p.eps)
            throw Inapplicable("manifold bounds require delta <= eps");
        const double e2 = p.eps * p.eps;
        coverage = r * r >= alpha * alpha + (alpha / R) * (R * R + e2 - rd * rd) + e2;
    }
    return star && coverage;
}

std::vector<RegionCell> feasibility_region(double reach, int resolution) {
    if (!(reach > 0.0))
        throw InvalidArgument("reach must be positive");
    if (resolution < 1)
        throw InvalidArgument("resolution must be at least 1");
    std::vector<RegionCell> cells;
    cells.reserve(static_cast<std::size_t>(resolution) * resolution);
    for (int i = 0; i < resolution; ++i) {
        const double eps = reach * i / resolution;
        for (int j = 0; j < resolution; ++j) {
            const double delta = reach * j / resolution;
            const ReachParams p(reach, eps, delta);
            RegionCell cell;
            cell.eps = eps;
            cell.delta = delta;
            cell.set_feasible = check_set_condition(p);
            if (delta > eps)
                cell.manifold_feasible = -1;
            else
                cell.manifold_feasible = check_manifold_condition(p) ? 1 : 0;
            cells.push_back(cell);
        }
    }
    return cells;
}

}
