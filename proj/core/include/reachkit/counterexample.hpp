#pragma once

#include <span>
#include <utility>
#include <vector>

#include "reachkit/vec.hpp"

namespace reachkit {

// Derived data of a chained counterexample construction at parameters
// (eps, delta), reach normalized to 1.
//
// Component i consists of a closed curve or surface C_i together with an
// exact point pair {p_i, ~p_i} placed symmetrically about the x axis (in
// the component's local frame) on the circle of radius 1 - delta, at
// half-gap r_i. r_seq lists r_0 < r_1 < ... < r_k = 1 - delta; circum_seq
// lists the circumradius R_i of the witness simplex of step i, which is
// also the radius at which component i's pocket collapses. critical_radii
// is {r_0, ..., r_k, R_k}.
struct CounterexampleMetadata {
    bool tori = false;  // false: planar annuli chain, true: tori chain
    double eps = 0.0;
    double delta = 0.0;

    int k = 0;
    std::vector<double> r_seq;        // k+1 entries
    std::vector<double> circum_seq;   // k+1 entries
    std::vector<Vec3> component_offsets;
    std::vector<double> critical_radii;

    // tori chain only (NaN for annuli): the cut boundary circles sit at
    // cylinder radius 1 + ell and height +-h; h also equals r_0.
    double ell = 0.0;
    double h = 0.0;

    // Certificates recorded while building the sequence.
    bool self_centred_ok = false;   // every witness simplex strictly self-centred
    double min_barycentric = 0.0;   // smallest barycentric coordinate seen
    double growth_margin = 0.0;     // tori: min over t of u(t) - t (Euclidean gap driving R_i > r_i)

    double t_of(int i) const;       // x coordinate of the pair of component i
};

// Chain of annuli in the plane. Requires (eps + delta)/2 < 1 - delta.
CounterexampleMetadata annuli_radius_sequence(double eps, double delta,
                                              int max_steps = 100000);

// Chain of tori in R^3. Requires delta < eps and the same half-gap bound.
CounterexampleMetadata tori_radius_sequence(double eps, double delta,
                                            int max_steps = 1000000);

// Exact pair of component i in its local frame.
std::pair<Vec3, Vec3> component_pair(const CounterexampleMetadata& meta, int i);

// True when the triangle (a, b, c) has all angles strictly acute.
bool is_strictly_acute(const Vec3& a, const Vec3& b, const Vec3& c);

// True when the circumcenter of the simplex lies strictly inside it
// (all barycentric coordinates strictly positive).
bool is_strictly_self_centred(std::span<const Vec3> pts);

// Acuteness certificate for the tori chain across the whole parameter
// range of the pair position t in [0, 1 - ell]: the triangle p ~p q stays
// acute at q (checked in closed form, with a grid fallback when its
// discriminant is non-negative) and the triangle q ~q p stays acute at p
// (squared apex distance above h^2 on the grid).
bool claim_b1_check(double eps, double delta, int grid = 1024);

// Sampled cloud of the selected components, translated by their offsets,
// labels carrying the component index. Annuli components discretize the
// circle of radius 1+eps; tori components discretize the torus of tube
// radius 1-delta about the circle of radius 2, minus the open solid torus
// of radius eps about the unit circle. The exact pair is appended per
// component. components must be non-empty, strictly increasing, within
// [0, k].
PointCloud build_counterexample_cloud(const CounterexampleMetadata& meta, double h,
                                      const std::vector<int>& components,
                                      std::size_t max_points = kDefaultMaxPoints);

// Distance from x (local frame) to component i's sample set C_i u pair.
double component_distance(const CounterexampleMetadata& meta, int i, Vec3 x);

// Distance to C_i alone (no pair).
double component_curve_distance(const CounterexampleMetadata& meta, int i, Vec3 x);

}
