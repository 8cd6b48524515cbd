#include "reachkit/persistence.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <unordered_map>

namespace reachkit {

namespace {

struct VertexKeyHash {
    std::size_t operator()(const std::array<std::int32_t, 4>& v) const {
        std::uint64_t h = 1469598103934665603ull;
        for (std::int32_t x : v) {
            h ^= static_cast<std::uint64_t>(static_cast<std::uint32_t>(x));
            h *= 1099511628211ull;
        }
        return static_cast<std::size_t>(h);
    }
};

// Symmetric difference of two ascending position lists (GF(2) addition).
void xor_into(std::vector<std::int64_t>& a, const std::vector<std::int64_t>& b,
              std::vector<std::int64_t>& scratch) {
    scratch.clear();
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] < b[j]) scratch.push_back(a[i++]);
        else if (b[j] < a[i]) scratch.push_back(b[j++]);
        else { ++i; ++j; }
    }
    while (i < a.size()) scratch.push_back(a[i++]);
    while (j < b.size()) scratch.push_back(b[j++]);
    a.swap(scratch);
}

}

Barcode persistence(const Filtration& f) {
    const auto m = f.entries.size();
    Barcode bc;
    bc.n_simplices = m;
    bc.max_dim = f.max_dim;

    std::unordered_map<std::array<std::int32_t, 4>, std::int64_t, VertexKeyHash> position;
    position.reserve(m * 2);
    for (std::size_t p = 0; p < m; ++p)
        position.emplace(f.entries[p].simplex.v, static_cast<std::int64_t>(p));

    // owner[row] = column whose reduced pivot is `row`, -1 if none.
    std::vector<std::int64_t> owner(m, -1);
    std::vector<char> cleared(m, 0);
    std::vector<char> is_death(m, 0);

    std::vector<std::vector<std::int64_t>> reduced(m);
    std::vector<std::int64_t> scratch;

    for (int d = f.max_dim; d >= 1; --d) {
        for (std::size_t p = 0; p < m; ++p) {
            const auto& entry = f.entries[p];
            if (entry.simplex.dim != d || cleared[p]) continue;

            std::vector<std::int64_t> col;
            col.reserve(static_cast<std::size_t>(d) + 1);
            for (int skip = 0; skip <= d; ++skip) {
                std::array<std::int32_t, 4> face{-1, -1, -1, -1};
                int w = 0;
                for (int i = 0; i <= d; ++i)
                    if (i != skip) face[w++] = entry.simplex.v[static_cast<std::size_t>(i)];
                const auto it = position.find(face);
                if (it == position.end())
                    throw Error("filtration is not closed under faces");
                col.push_back(it->second);
            }
            std::sort(col.begin(), col.end());

            while (!col.empty()) {
                const std::int64_t piv = col.back();
                const std::int64_t other = owner[static_cast<std::size_t>(piv)];
                if (other < 0) {
                    owner[static_cast<std::size_t>(piv)] = static_cast<std::int64_t>(p);
                    cleared[static_cast<std::size_t>(piv)] = 1;
                    is_death[p] = 1;
                    reduced[p] = std::move(col);
                    break;
                }
                xor_into(col, reduced[static_cast<std::size_t>(other)], scratch);
            }
        }
        // Columns of dimension d are only ever added to other dimension-d
        // columns, so their storage can be dropped once the pass ends.
        if (d >= 2)
            for (std::size_t p = 0; p < m; ++p)
                if (f.entries[p].simplex.dim == d) reduced[p] = {};
    }

    // Births of the truncation dimension can never be killed (their
    // cofacets were not built), so they are artifacts, not classes.
    const int cut = std::min(f.max_dim - 1, 2);
    for (std::size_t p = 0; p < m; ++p) {
        if (is_death[p]) continue;  // death columns do not create classes
        const int d = f.entries[p].simplex.dim;
        const std::int64_t killer = owner[p];
        if (killer >= 0) {
            if (d <= cut)
                bc.intervals.push_back({d, f.entries[p].value,
                                        f.entries[static_cast<std::size_t>(killer)].value,
                                        true});
        } else {
            if (d <= cut)
                bc.intervals.push_back(
                    {d, f.entries[p].value, std::numeric_limits<double>::infinity(), false});
            else
                ++bc.top_births;
        }
    }

    std::sort(bc.intervals.begin(), bc.intervals.end(),
              [](const PersistenceInterval& a, const PersistenceInterval& b) {
                  if (a.dim != b.dim) return a.dim < b.dim;
                  if (a.birth != b.birth) return a.birth < b.birth;
                  if (a.finite != b.finite) return a.finite < b.finite;
                  return a.finite && a.death < b.death;
              });
    return bc;
}

long betti_at(const Barcode& b, double r, int dim) {
    if (dim < 0 || dim > 2)
        throw InvalidArgument("betti_at supports dimensions 0..2");
    long count = 0;
    for (const auto& iv : b.intervals) {
        if (iv.dim != dim) continue;
        if (iv.birth <= r && (!iv.finite || r < iv.death)) ++count;
    }
    return count;
}

std::array<long, 3> betti_profile(const Barcode& b, double r) {
    return {betti_at(b, r, 0), betti_at(b, r, 1), betti_at(b, r, 2)};
}

}
