#pragma once

#include <array>
#include <optional>
#include <vector>

#include "reachkit/filtration.hpp"

namespace reachkit {

struct PersistenceInterval {
    int dim = 0;
    double birth = 0.0;
    double death = 0.0;    // +infinity when not finite
    bool finite = false;

    friend bool operator==(const PersistenceInterval&, const PersistenceInterval&) = default;
};

// Persistence barcode over Z/2. One interval per birth simplex, including
// zero-length intervals. Intervals cover dimensions 0..min(max_dim-1, 2);
// unpaired births in dimension max_dim are truncation artifacts (their
// cofacets were never built) and are only counted, never emitted.
struct Barcode {
    std::vector<PersistenceInterval> intervals;
    std::size_t top_births = 0;    // unpaired top-dimension birth simplices
    std::size_t n_simplices = 0;
    int max_dim = 0;
};

// Standard column reduction with the clearing optimization, processed from
// the top dimension down. Deterministic.
Barcode persistence(const Filtration& f);

// Number of classes alive at radius r: birth <= r < death (infinite
// intervals count when birth <= r). dim must be 0, 1, or 2.
long betti_at(const Barcode& b, double r, int dim);

// (b0, b1, b2) at radius r.
std::array<long, 3> betti_profile(const Barcode& b, double r);

}
