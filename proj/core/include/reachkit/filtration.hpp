#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "reachkit/vec.hpp"

namespace reachkit {

// Simplex of dimension 0..3, vertex indices sorted ascending. Unused
// slots hold -1.
struct Simplex {
    std::array<std::int32_t, 4> v{-1, -1, -1, -1};
    std::int8_t dim = 0;

    friend bool operator==(const Simplex&, const Simplex&) = default;
};

enum class ComplexKind { cech, rips };

struct FiltrationEntry {
    Simplex simplex;
    double value = 0.0;  // radius at which the simplex enters
};

// Simplices sorted by (value, dim, vertex lex). Vertices enter at 0; the
// filtration is closed under faces and monotone in value.
struct Filtration {
    ComplexKind kind = ComplexKind::cech;
    int max_dim = 0;
    double max_value = 0.0;
    std::size_t n_points = 0;
    std::vector<FiltrationEntry> entries;
};

// Cech filtration: a simplex enters at the radius of the minimum
// enclosing ball of its vertices. All simplices of dimension <= max_dim
// (max 3) with value <= max_value. Throws ResourceLimit past
// max_simplices.
Filtration cech_filtration(const PointCloud& cloud, int max_dim, double max_value,
                           std::size_t max_simplices = kDefaultMaxSimplices);

// Vietoris-Rips filtration: a simplex enters at half its largest pairwise
// distance, so that edges agree with the Cech filtration.
Filtration rips_filtration(const PointCloud& cloud, int max_dim, double max_value,
                           std::size_t max_simplices = kDefaultMaxSimplices);

}
