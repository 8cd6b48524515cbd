#pragma once

#include <cmath>
#include <cstddef>
#include <vector>

#include "reachkit/errors.hpp"

namespace reachkit {

// Point in R^2 or R^3. Planar data keeps z = 0.
struct Vec3 {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;

    friend Vec3 operator+(Vec3 a, Vec3 b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
    friend Vec3 operator-(Vec3 a, Vec3 b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
    friend Vec3 operator*(double s, Vec3 a) { return {s * a.x, s * a.y, s * a.z}; }
    friend Vec3 operator*(Vec3 a, double s) { return s * a; }
    Vec3& operator+=(Vec3 b) { x += b.x; y += b.y; z += b.z; return *this; }
};

inline double dot(Vec3 a, Vec3 b) { return a.x * b.x + a.y * b.y + a.z * b.z; }

inline Vec3 cross(Vec3 a, Vec3 b) {
    return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}

inline double norm2(Vec3 a) { return dot(a, a); }
inline double norm(Vec3 a) { return std::sqrt(norm2(a)); }
inline double dist2(Vec3 a, Vec3 b) { return norm2(a - b); }
inline double dist(Vec3 a, Vec3 b) { return std::sqrt(dist2(a, b)); }

// Finite point sample. dim is 2 or 3. labels, when non-empty, assign each
// point to a construction component and must match points in length.
struct PointCloud {
    int dim = 2;
    std::vector<Vec3> points;
    std::vector<int> labels;

    std::size_t size() const { return points.size(); }

    void check() const {
        if (dim != 2 && dim != 3)
            throw InvalidArgument("PointCloud dim must be 2 or 3");
        if (!labels.empty() && labels.size() != points.size())
            throw InvalidArgument("PointCloud labels length mismatch");
    }
};

constexpr std::size_t kDefaultMaxPoints = 100000;
constexpr std::size_t kDefaultMaxSimplices = 500000;

}
