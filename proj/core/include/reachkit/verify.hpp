#pragma once

#include <array>
#include <limits>
#include <string>
#include <vector>

#include "reachkit/shapes.hpp"
#include "reachkit/vec.hpp"

namespace reachkit {

enum class ReconstructionMode { automatic, set, manifold };

// cech builds the nerve complex and refuses to fall back; raster always
// voxelizes the union of balls; automatic tries cech first and falls back
// to raster when the simplex cap binds.
enum class HomologyEngine { automatic, cech, raster };

struct VerificationCheck {
    std::string name;
    double radius = 0.0;
    int component = -1;                        // -1: whole scene
    std::array<long, 3> expected{-1, -1, -1};  // -1: not constrained
    std::array<long, 3> observed{-1, -1, -1};
    std::string constraint;
    bool passed = false;
};

struct VerificationReport {
    std::string scenario;
    bool passed = false;
    std::vector<VerificationCheck> checks;
    std::vector<std::string> notes;
};

struct VerifyOptions {
    double eps = std::numeric_limits<double>::quiet_NaN();
    double delta = 0.0;
    // Probe radius; NaN picks the midpoint of the feasible window.
    double radius = std::numeric_limits<double>::quiet_NaN();
    ReconstructionMode mode = ReconstructionMode::automatic;
    HomologyEngine engine = HomologyEngine::automatic;
    std::size_t max_points = kDefaultMaxPoints;
    std::size_t max_simplices = kDefaultMaxSimplices;
    double voxel = 0.0;  // 0: derived from the certificate margin
};

// Samples the shape at step min(h, eps), computes the Betti numbers of the
// union of balls at the probe radius, and compares them against the known
// homotopy type (circle and annulus (1,1,0), torus (1,2,1)).
VerificationReport verify_reconstruction(const ShapeSpec& shape, double h,
                                         const VerifyOptions& opt = {});

// Probes the annuli chain at parameters (eps, delta): for each requested
// component (default {0, 1, k}) the Betti numbers are measured below the
// first window, inside the windows of components 0, 1 and k, and past the
// final collapse radius R_k. Throws DensityTooCoarse when h leaves less
// than a 2h margin to the nearest critical radius of some probe.
VerificationReport verify_annuli_counterexample(double eps, double delta, double h,
                                                std::vector<int> components = {},
                                                std::size_t max_points = kDefaultMaxPoints);

// Probes component 0 of the tori chain: re-validates the construction
// certificates, checks the sample cloud against the closed-form surface
// distance, and measures Betti numbers below the pair gap (b2 must be 0)
// and inside the first window (b0 = 1 and b1 + b2 = 4).
VerificationReport verify_tori_counterexample(double eps, double delta, double h,
                                              std::size_t max_points = kDefaultMaxPoints);

}
