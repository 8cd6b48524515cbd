#pragma once

// Independent reference computations for the tests: a dense GF(2)
// rank-nullity Betti oracle over filtration prefixes, and small helpers
// for generating reproducible random inputs. Everything here is
// deliberately naive; speed does not matter at test sizes.

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <map>
#include <random>
#include <vector>

#include "reachkit/filtration.hpp"
#include "reachkit/vec.hpp"

namespace testutil {

// Rank of a GF(2) matrix given as columns of row-index bitmasks.
inline long gf2_rank(std::vector<std::vector<std::uint64_t>> cols) {
    long rank = 0;
    std::map<long, std::size_t> pivot_owner;  // pivot row -> column index
    for (std::size_t c = 0; c < cols.size(); ++c) {
        for (;;) {
            long pivot = -1;
            for (long w = static_cast<long>(cols[c].size()) - 1; w >= 0; --w) {
                if (cols[c][w] != 0) {
                    pivot = w * 64 + (63 - std::countl_zero(cols[c][w]));
                    break;
                }
            }
            if (pivot < 0) break;
            auto it = pivot_owner.find(pivot);
            if (it == pivot_owner.end()) {
                pivot_owner.emplace(pivot, c);
                ++rank;
                break;
            }
            const auto& other = cols[it->second];
            for (std::size_t w = 0; w < cols[c].size(); ++w) cols[c][w] ^= other[w];
        }
    }
    return rank;
}

// Betti numbers of the subcomplex {value <= r}, every dimension up to 3,
// via beta_d = N_d - rank(boundary_d) - rank(boundary_{d+1}). Dimensions
// above f.max_dim report 0.
inline std::array<long, 4> betti_oracle(const reachkit::Filtration& f, double r) {
    using reachkit::Simplex;
    std::array<std::vector<Simplex>, 4> simp;
    for (const auto& e : f.entries)
        if (e.value <= r) simp[e.simplex.dim].push_back(e.simplex);

    std::array<std::map<std::array<std::int32_t, 4>, long>, 4> index;
    for (int d = 0; d <= 3; ++d)
        for (std::size_t i = 0; i < simp[d].size(); ++i) index[d].emplace(simp[d][i].v, static_cast<long>(i));

    std::array<long, 4> rank{0, 0, 0, 0};  // rank[d] = rank of boundary_d, d >= 1 meaningful
    std::array<long, 4> rank_next{0, 0, 0, 0};
    for (int d = 1; d <= 3; ++d) {
        if (simp[d].empty()) continue;
        const std::size_t words = (simp[d - 1].size() + 63) / 64;
        std::vector<std::vector<std::uint64_t>> cols;
        cols.reserve(simp[d].size());
        for (const auto& s : simp[d]) {
            std::vector<std::uint64_t> col(words, 0);
            for (int drop = 0; drop <= d; ++drop) {
                std::array<std::int32_t, 4> face{-1, -1, -1, -1};
                int w = 0;
                for (int j = 0; j <= d; ++j)
                    if (j != drop) face[w++] = s.v[j];
                const long row = index[d - 1].at(face);
                col[row / 64] ^= (std::uint64_t{1} << (row % 64));
            }
            cols.push_back(std::move(col));
        }
        rank[d] = gf2_rank(std::move(cols));
    }
    for (int d = 0; d < 3; ++d) rank_next[d] = rank[d + 1];

    std::array<long, 4> betti{0, 0, 0, 0};
    for (int d = 0; d <= 3; ++d)
        betti[d] = static_cast<long>(simp[d].size()) - rank[d] - rank_next[d];
    return betti;
}

inline reachkit::PointCloud random_cloud(std::mt19937_64& rng, int n, int dim, double scale = 1.0) {
    std::uniform_real_distribution<double> u(-scale, scale);
    reachkit::PointCloud cloud;
    cloud.dim = dim;
    for (int i = 0; i < n; ++i)
        cloud.points.push_back({u(rng), u(rng), dim == 3 ? u(rng) : 0.0});
    return cloud;
}

}
