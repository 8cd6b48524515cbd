#include "reachkit/meb.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>

namespace reachkit {

namespace {

constexpr double kGramTol = 1e-12;

// Solves the m x m Gram system for the circumcenter weights of pts
// relative to pts[0]. Returns false on (relative) degeneracy.
bool circum_weights(std::span<const Vec3> pts, std::array<double, 3>& w, int& m) {
    const int n = static_cast<int>(pts.size());
    m = n - 1;
    std::array<Vec3, 3> v;
    for (int i = 0; i < m; ++i) v[i] = pts[i + 1] - pts[0];

    double G[3][3] = {};
    double b[3] = {};
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < m; ++j) G[i][j] = dot(v[i], v[j]);
        b[i] = 0.5 * norm2(v[i]);
    }

    double scale = 1.0;
    for (int i = 0; i < m; ++i) scale = std::max(scale, G[i][i]);

    if (m == 0) {
        w = {0.0, 0.0, 0.0};
        return true;
    }
    if (m == 1) {
        if (std::abs(G[0][0]) <= kGramTol * scale) return false;
        w = {b[0] / G[0][0], 0.0, 0.0};
        return true;
    }
    if (m == 2) {
        const double det = G[0][0] * G[1][1] - G[0][1] * G[1][0];
        if (std::abs(det) <= kGramTol * scale * scale) return false;
        w = {(b[0] * G[1][1] - b[1] * G[0][1]) / det,
             (G[0][0] * b[1] - G[1][0] * b[0]) / det, 0.0};
        return true;
    }
    const double det = G[0][0] * (G[1][1] * G[2][2] - G[1][2] * G[2][1])
                     - G[0][1] * (G[1][0] * G[2][2] - G[1][2] * G[2][0])
                     + G[0][2] * (G[1][0] * G[2][1] - G[1][1] * G[2][0]);
    if (std::abs(det) <= kGramTol * scale * scale * scale) return false;
    const double d0 = b[0] * (G[1][1] * G[2][2] - G[1][2] * G[2][1])
                    - G[0][1] * (b[1] * G[2][2] - G[1][2] * b[2])
                    + G[0][2] * (b[1] * G[2][1] - G[1][1] * b[2]);
    const double d1 = G[0][0] * (b[1] * G[2][2] - G[1][2] * b[2])
                    - b[0] * (G[1][0] * G[2][2] - G[1][2] * G[2][0])
                    + G[0][2] * (G[1][0] * b[2] - b[1] * G[2][0]);
    const double d2 = G[0][0] * (G[1][1] * b[2] - b[1] * G[2][1])
                    - G[0][1] * (G[1][0] * b[2] - b[1] * G[2][0])
                    + b[0] * (G[1][0] * G[2][1] - G[1][1] * G[2][0]);
    w = {d0 / det, d1 / det, d2 / det};
    return true;
}

Ball ball_from_weights(std::span<const Vec3> pts, const std::array<double, 3>& w, int m) {
    Vec3 c = pts[0];
    for (int i = 0; i < m; ++i) c += w[i] * (pts[i + 1] - pts[0]);
    double r2 = 0.0;
    for (const Vec3& p : pts) r2 = std::max(r2, dist2(c, p));
    return Ball{c, std::sqrt(r2)};
}

}

Ball circumsphere(std::span<const Vec3> pts) {
    const auto n = pts.size();
    if (n < 1 || n > 4)
        throw InvalidArgument("circumsphere takes 1 to 4 points");
    std::array<double, 3> w;
    int m = 0;
    if (!circum_weights(pts, w, m))
        throw Degenerate("circumsphere: affinely dependent points");
    return ball_from_weights(pts, w, m);
}

std::vector<double> circumcenter_barycentric(std::span<const Vec3> pts) {
    const auto n = pts.size();
    if (n < 1 || n > 4)
        throw InvalidArgument("circumcenter_barycentric takes 1 to 4 points");
    std::array<double, 3> w;
    int m = 0;
    if (!circum_weights(pts, w, m))
        throw Degenerate("circumcenter_barycentric: affinely dependent points");
    std::vector<double> lam(n);
    double rest = 0.0;
    for (int i = 0; i < m; ++i) {
        lam[static_cast<std::size_t>(i) + 1] = w[i];
        rest += w[i];
    }
    lam[0] = 1.0 - rest;
    return lam;
}

Ball min_enclosing_ball(std::span<const Vec3> pts) {
    const int n = static_cast<int>(pts.size());
    if (n < 1 || n > 4)
        throw InvalidArgument("min_enclosing_ball takes 1 to 4 points");

    double scale2 = 0.0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) scale2 = std::max(scale2, dist2(pts[i], pts[j]));
    const double tol2 = 1e-20 + 1e-12 * scale2;

    Ball best;
    best.radius = std::numeric_limits<double>::infinity();
    double best_r2 = std::numeric_limits<double>::infinity();

    // Support subsets in increasing size, lexicographic inside each size.
    // For <= 4 points the minimum ball is the circumball (in the affine
    // hull) of some subset; affinely dependent subsets can be skipped
    // because a proper subset then supports the same ball.
    std::array<Vec3, 4> buf;
    for (int mask = 1; mask < (1 << n); ++mask) {
        int k = 0;
        for (int i = 0; i < n; ++i)
            if (mask & (1 << i)) buf[k++] = pts[i];
        std::array<double, 3> w;
        int m = 0;
        if (!circum_weights(std::span<const Vec3>(buf.data(), k), w, m)) continue;
        Vec3 c = buf[0];
        for (int i = 0; i < m; ++i) c += w[i] * (buf[i + 1] - buf[0]);
        double r2 = 0.0;
        bool ok = true;
        for (int i = 0; i < k; ++i) r2 = std::max(r2, dist2(c, buf[i]));
        for (int i = 0; i < n && ok; ++i)
            if (dist2(c, pts[i]) > r2 + tol2) ok = false;
        if (ok && r2 < best_r2) {
            best_r2 = r2;
            best = Ball{c, std::sqrt(r2)};
        }
    }
    return best;
}

}
