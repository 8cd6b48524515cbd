#pragma once

#include <vector>

#include "reachkit/errors.hpp"

namespace reachkit {

// Sampling model parameters. reach is the reach of the unknown shape S.
// eps bounds the shape-to-sample one-sided Hausdorff distance (every point
// of S has a sample point within eps), delta the sample-to-shape one
// (every sample point lies within delta of S). Both must be < reach.
struct ReachParams {
    double reach;
    double eps;
    double delta;

    ReachParams(double reach_, double eps_, double delta_);
};

enum class Mode { set, manifold };

// Closed interval [lo, hi] of admissible values; empty when hi < lo.
struct Interval {
    double lo = 0.0;
    double hi = -1.0;

    bool empty() const { return !(lo <= hi); }
    bool contains(double v) const { return !empty() && lo <= v && v <= hi; }
    double length() const { return empty() ? 0.0 : hi - lo; }
    double mid() const;  // throws Infeasible when empty
};

// General sets: eps + sqrt(2) delta <= (sqrt(2) - 1) reach.
bool check_set_condition(const ReachParams& p);

// Closed manifolds: (reach - delta)^2 - eps^2 >= (4 sqrt(2) - 5) reach^2.
// Only defined for delta <= eps; throws Inapplicable otherwise.
bool check_manifold_condition(const ReachParams& p);

// Radii r for which the offset of a sample of a general set deformation
// retracts onto the set. Empty iff the set condition fails. The extended
// upper endpoint is an algebraically different expression for the same
// value; it is exposed for cross-checking.
Interval set_radius_interval(const ReachParams& p, bool extended = false);

// Offsets alpha admissible in the manifold case. Empty iff the manifold
// condition fails. Throws Inapplicable when delta > eps.
Interval manifold_alpha_interval(const ReachParams& p);

// Radii r admissible in the manifold case: lower endpoint evaluated at the
// smallest admissible alpha, upper endpoint at the largest.
Interval manifold_radius_interval(const ReachParams& p);

// Pointwise test: does radius r with offset alpha satisfy both the
// coverage and the star-shape inequality? Pre: 0 <= alpha <= r.
bool retract_condition(double r, double alpha, const ReachParams& p, Mode mode);

struct RegionCell {
    double eps;
    double delta;
    bool set_feasible;
    int manifold_feasible;  // 1 feasible, 0 infeasible, -1 not applicable (delta > eps)
};

// resolution x resolution grid over [0, reach) x [0, reach), sampled at
// (i*reach/resolution, j*reach/resolution), eps-major order.
std::vector<RegionCell> feasibility_region(double reach, int resolution);

}
