#include "reachkit/raster.hpp"

#include <bit>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <string>
#include <vector>

#include "bucket_grid.hpp"
#include "reachkit/errors.hpp"

namespace reachkit {

namespace {

using u64 = std::uint64_t;

struct UnionFind {
    std::vector<std::int32_t> parent;

    std::int32_t make() {
        parent.push_back(static_cast<std::int32_t>(parent.size()));
        return parent.back();
    }
    std::int32_t find(std::int32_t a) {
        while (parent[static_cast<std::size_t>(a)] != a) {
            parent[static_cast<std::size_t>(a)] =
                parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(a)])];
            a = parent[static_cast<std::size_t>(a)];
        }
        return a;
    }
    void unite(std::int32_t a, std::int32_t b) {
        a = find(a);
        b = find(b);
        if (a != b) parent[static_cast<std::size_t>(b)] = a;
    }
};

struct Run {
    std::int32_t a, b;  // inclusive cell range
    std::int32_t id;
};

// Foreground runs of a bit row.
void extract_runs(const u64* row, int nx, std::vector<Run>& out) {
    out.clear();
    const int nw = (nx + 63) / 64;
    int open = -1;
    for (int w = 0; w < nw; ++w) {
        u64 bits = row[w];
        const int base = w * 64;
        while (bits) {
            const int lo = std::countr_zero(bits);
            // First zero at/above lo.
            const u64 above = ~bits & ~((lo == 0) ? u64(0) : ((u64(1) << lo) - 1));
            const int hi = above ? std::countr_zero(above) : 64;
            if (open >= 0) {
                // Row continues from previous word only if run starts at bit 0.
                if (lo == 0) {
                    out.back().b = static_cast<std::int32_t>(base + hi - 1);
                    open = (hi == 64) ? open : -1;
                    if (hi == 64) { bits = 0; continue; }
                    bits &= ~((u64(1) << hi) - 1);
                    continue;
                }
                open = -1;
            }
            out.push_back({static_cast<std::int32_t>(base + lo),
                           static_cast<std::int32_t>(base + hi - 1), -1});
            if (hi == 64) {
                open = static_cast<int>(out.size()) - 1;
                bits = 0;
            } else {
                bits &= ~((u64(1) << hi) - 1);
                open = -1;
            }
        }
        if (row[w] == 0) open = -1;
    }
}

// Complement runs over the extended range [-1, nx]: the gaps around the
// foreground runs, including the two virtual border cells.
void complement_runs(const std::vector<Run>& fg, int nx, std::vector<Run>& out) {
    out.clear();
    std::int32_t cursor = -1;
    for (const Run& r : fg) {
        if (r.a - 1 >= cursor) out.push_back({cursor, r.a - 1, -1});
        cursor = r.b + 1;
    }
    if (cursor <= nx) out.push_back({cursor, static_cast<std::int32_t>(nx), -1});
}

long count_roots(UnionFind& uf, const std::vector<std::int32_t>& ids,
                 std::int32_t exclude_root) {
    std::vector<char> seen(uf.parent.size(), 0);
    long n = 0;
    for (std::int32_t id : ids) {
        const std::int32_t r = uf.find(id);
        if (r == exclude_root) continue;
        if (!seen[static_cast<std::size_t>(r)]) {
            seen[static_cast<std::size_t>(r)] = 1;
            ++n;
        }
    }
    return n;
}

// Links runs of the current line against one previous line. tol 0 demands
// column overlap (straight adjacency), tol 1 allows diagonal contact.
void link_lines(UnionFind& uf, std::vector<Run>& cur, const std::vector<Run>& prev,
                std::int32_t tol) {
    std::size_t j = 0;
    for (Run& r : cur) {
        while (j < prev.size() && prev[j].b < r.a - tol) ++j;
        std::size_t k = j;
        while (k < prev.size() && prev[k].a <= r.b + tol) {
            uf.unite(r.id, prev[k].id);
            ++k;
        }
    }
}

// Shift a row right by one bit (toward lower x), pulling carries from the
// next word: out bit i = in bit i+1.
inline u64 shift_down(const u64* row, int w, int nw) {
    u64 v = row[w] >> 1;
    if (w + 1 < nw) v |= row[w + 1] << 63;
    return v;
}

struct Grid2D {
    int nx, ny, nw;
    std::vector<u64> bits;

    u64* row(int y) { return bits.data() + static_cast<std::size_t>(y) * nw; }
    const u64* row(int y) const { return bits.data() + static_cast<std::size_t>(y) * nw; }
};

// Fill one row by 1-Lipschitz skipping: a sample at distance d from the
// threshold lets us mark floor(|d - r| / voxel) following cells without
// evaluating them, up to a safety margin that sends near-boundary cells to
// direct evaluation.
template <typename Eval>
long long fill_row(u64* row, int nx, double x0, double voxel, double r, Eval&& eval) {
    const double safety = 1e-9 * std::max(1.0, r);
    long long filled = 0;
    int i = 0;
    while (i < nx) {
        const double d = eval(x0 + (static_cast<double>(i) + 0.5) * voxel);
        const double left = static_cast<double>(nx - i);
        if (d <= r) {
            double m = std::floor((r - safety - d) / voxel) + 1.0;
            if (!(m >= 1.0)) m = 1.0;
            if (m > left) m = left;
            const int span = static_cast<int>(m);
            for (int k = i; k < i + span; ++k)
                row[k >> 6] |= u64(1) << (k & 63);
            filled += span;
            i += span;
        } else {
            double m = std::floor((d - r - safety) / voxel) + 1.0;
            if (!(m >= 1.0)) m = 1.0;
            if (m > left) m = left;
            i += static_cast<int>(m);
        }
    }
    return filled;
}

}

RasterBetti raster_betti_2d(const std::function<double(double, double)>& dist,
                            const Box2& box, double voxel, double r,
                            std::size_t max_cells) {
    if (!(voxel > 0.0) || !(r > 0.0))
        throw InvalidArgument("raster_betti_2d requires positive voxel and r");
    const double fx = std::ceil((box.xhi - box.xlo) / voxel);
    const double fy = std::ceil((box.yhi - box.ylo) / voxel);
    if (!(fx >= 1.0) || !(fy >= 1.0))
        throw InvalidArgument("raster_betti_2d: empty box");
    if (fx > 1e9 || fy > 1e9 || fx * fy > static_cast<double>(max_cells))
        throw ResourceLimit("raster grid exceeds max_cells");
    const int nx = static_cast<int>(fx);
    const int ny = static_cast<int>(fy);

    Grid2D g{nx, ny, (nx + 63) / 64, {}};
    g.bits.assign(static_cast<std::size_t>(g.nw) * ny, 0);

    RasterBetti out;
    out.eta = voxel * std::numbers::sqrt2 / 2.0;

    for (int y = 0; y < ny; ++y) {
        const double yc = box.ylo + (static_cast<double>(y) + 0.5) * voxel;
        out.filled += fill_row(g.row(y), nx, box.xlo, voxel, r,
                               [&](double x) { return dist(x, yc); });
    }

    // Foreground components, 4-connected.
    {
        UnionFind uf;
        std::vector<Run> prev, cur;
        std::vector<std::int32_t> ids;
        for (int y = 0; y < ny; ++y) {
            extract_runs(g.row(y), nx, cur);
            for (Run& rn : cur) {
                rn.id = uf.make();
                ids.push_back(rn.id);
            }
            link_lines(uf, cur, prev, 0);
            prev.swap(cur);
        }
        out.b0 = count_roots(uf, ids, -1);
    }

    // Background components, 8-connected, over the domain padded by one
    // virtual background cell on every side. Components touching the pad
    // are unbounded; the rest count bounded faces of the foreground.
    long bounded;
    {
        UnionFind uf;
        const std::int32_t border = uf.make();
        std::vector<Run> fg, prev, cur;
        std::vector<std::int32_t> ids;
        // Virtual all-background row below.
        prev.push_back({-1, static_cast<std::int32_t>(nx), border});
        for (int y = 0; y < ny; ++y) {
            extract_runs(g.row(y), nx, fg);
            complement_runs(fg, nx, cur);
            for (Run& rn : cur) {
                rn.id = uf.make();
                ids.push_back(rn.id);
                if (rn.a <= -1 || rn.b >= nx) uf.unite(rn.id, border);
            }
            link_lines(uf, cur, prev, 1);
            prev.swap(cur);
        }
        // Virtual all-background row above.
        cur.assign(1, {-1, static_cast<std::int32_t>(nx), border});
        link_lines(uf, cur, prev, 1);
        bounded = count_roots(uf, ids, uf.find(border));
    }

    // Euler characteristic of the dual complex: cells - edges + squares.
    {
        long long C = 0, A = 0, Q = 0;
        for (int y = 0; y < ny; ++y) {
            const u64* row = g.row(y);
            const u64* up = (y + 1 < ny) ? g.row(y + 1) : nullptr;
            for (int w = 0; w < g.nw; ++w) {
                const u64 cur = row[w];
                C += std::popcount(cur);
                const u64 right = shift_down(row, w, g.nw);
                A += std::popcount(cur & right);
                if (up) {
                    const u64 upw = up[w];
                    A += std::popcount(cur & upw);
                    Q += std::popcount(cur & right & upw & shift_down(up, w, g.nw));
                }
            }
        }
        out.chi = static_cast<long>(C - A + Q);
    }

    out.b1 = out.b0 - out.chi;
    out.b2 = 0;
    if (out.b1 != bounded)
        throw Error("raster_betti_2d: Euler and duality disagree (b1 " +
                    std::to_string(out.b1) + " vs " + std::to_string(bounded) + ")");
    return out;
}

RasterBetti raster_betti_3d(const std::function<double(double, double, double)>& dist,
                            const Box3& box, double voxel, double r,
                            std::size_t max_cells) {
    if (!(voxel > 0.0) || !(r > 0.0))
        throw InvalidArgument("raster_betti_3d requires positive voxel and r");
    const double fx = std::ceil((box.xhi - box.xlo) / voxel);
    const double fy = std::ceil((box.yhi - box.ylo) / voxel);
    const double fz = std::ceil((box.zhi - box.zlo) / voxel);
    if (!(fx >= 1.0) || !(fy >= 1.0) || !(fz >= 1.0))
        throw InvalidArgument("raster_betti_3d: empty box");
    if (fx > 1e9 || fy > 1e9 || fz > 1e9 ||
        fx * fy * fz > static_cast<double>(max_cells))
        throw ResourceLimit("raster grid exceeds max_cells");
    const int nx = static_cast<int>(fx);
    const int ny = static_cast<int>(fy);
    const int nz = static_cast<int>(fz);

    const int nw = (nx + 63) / 64;
    std::vector<u64> bits(static_cast<std::size_t>(nw) * ny * nz, 0);
    auto line = [&](int y, int z) -> u64* {
        return bits.data() + (static_cast<std::size_t>(z) * ny + y) * nw;
    };

    RasterBetti out;
    out.eta = voxel * std::sqrt(3.0) / 2.0;

    for (int z = 0; z < nz; ++z) {
        const double zc = box.zlo + (static_cast<double>(z) + 0.5) * voxel;
        for (int y = 0; y < ny; ++y) {
            const double yc = box.ylo + (static_cast<double>(y) + 0.5) * voxel;
            out.filled += fill_row(line(y, z), nx, box.xlo, voxel, r,
                                   [&](double x) { return dist(x, yc, zc); });
        }
    }

    // Foreground components, 6-connected.
    {
        UnionFind uf;
        std::vector<std::vector<Run>> prev_plane(static_cast<std::size_t>(ny));
        std::vector<Run> prev_line, cur;
        std::vector<std::int32_t> ids;
        for (int z = 0; z < nz; ++z) {
            for (int y = 0; y < ny; ++y) {
                extract_runs(line(y, z), nx, cur);
                for (Run& rn : cur) {
                    rn.id = uf.make();
                    ids.push_back(rn.id);
                }
                if (y > 0) link_lines(uf, cur, prev_line, 0);
                link_lines(uf, cur, prev_plane[static_cast<std::size_t>(y)], 0);
                prev_line = cur;
                prev_plane[static_cast<std::size_t>(y)].swap(cur);
            }
        }
        out.b0 = count_roots(uf, ids, -1);
    }

    // Background components, 26-connected, padded by one background voxel
    // on all sides. Bounded ones are the enclosed cavities (b2).
    {
        UnionFind uf;
        const std::int32_t border = uf.make();
        const std::vector<Run> border_line{{-1, static_cast<std::int32_t>(nx), border}};
        // prev_plane holds lines y = -1..ny of plane z-1.
        std::vector<std::vector<Run>> prev_plane(static_cast<std::size_t>(ny) + 2,
                                                 border_line);
        std::vector<Run> fg, prev_line, cur;
        std::vector<std::int32_t> ids;
        for (int z = 0; z < nz; ++z) {
            std::vector<std::vector<Run>> cur_plane(static_cast<std::size_t>(ny) + 2);
            cur_plane[0] = border_line;
            prev_line = border_line;
            for (int y = 0; y < ny; ++y) {
                extract_runs(line(y, z), nx, fg);
                complement_runs(fg, nx, cur);
                for (Run& rn : cur) {
                    rn.id = uf.make();
                    ids.push_back(rn.id);
                    if (rn.a <= -1 || rn.b >= nx) uf.unite(rn.id, border);
                }
                link_lines(uf, cur, prev_line, 1);  // (y-1, z)
                // Against plane z-1: lines y-1, y, y+1 (stored shifted by 1).
                link_lines(uf, cur, prev_plane[static_cast<std::size_t>(y)], 1);
                link_lines(uf, cur, prev_plane[static_cast<std::size_t>(y) + 1], 1);
                link_lines(uf, cur, prev_plane[static_cast<std::size_t>(y) + 2], 1);
                prev_line = cur;
                cur_plane[static_cast<std::size_t>(y) + 1] = std::move(cur);
                cur = {};
            }
            // Virtual line y = ny of this plane.
            cur_plane[static_cast<std::size_t>(ny) + 1] = border_line;
            link_lines(uf, cur_plane[static_cast<std::size_t>(ny) + 1], prev_line, 1);
            prev_plane.swap(cur_plane);
        }
        // The plane z = nz is entirely background; link it to close the pad.
        std::vector<Run> top = border_line;
        for (std::size_t i = 0; i < prev_plane.size(); ++i)
            link_lines(uf, top, prev_plane[i], 1);
        out.b2 = count_roots(uf, ids, uf.find(border));
    }

    // chi = C - A + Q - O over the dual complex.
    {
        long long C = 0, A = 0, Q = 0, O = 0;
        for (int z = 0; z < nz; ++z)
            for (int y = 0; y < ny; ++y) {
                const u64* l00 = line(y, z);
                const u64* l10 = (y + 1 < ny) ? line(y + 1, z) : nullptr;
                const u64* l01 = (z + 1 < nz) ? line(y, z + 1) : nullptr;
                const u64* l11 = (l10 && l01) ? line(y + 1, z + 1) : nullptr;
                for (int w = 0; w < nw; ++w) {
                    const u64 c00 = l00[w];
                    const u64 s00 = shift_down(l00, w, nw);
                    C += std::popcount(c00);
                    A += std::popcount(c00 & s00);
                    if (l10) {
                        const u64 c10 = l10[w];
                        A += std::popcount(c00 & c10);
                        Q += std::popcount(c00 & s00 & c10 & shift_down(l10, w, nw));
                    }
                    if (l01) {
                        const u64 c01 = l01[w];
                        A += std::popcount(c00 & c01);
                        Q += std::popcount(c00 & s00 & c01 & shift_down(l01, w, nw));
                    }
                    if (l11) {
                        const u64 c10 = l10[w], c01 = l01[w], c11 = l11[w];
                        Q += std::popcount(c00 & c10 & c01 & c11);
                        O += std::popcount(c00 & s00 & c10 & shift_down(l10, w, nw) & c01 &
                                           shift_down(l01, w, nw) & c11 &
                                           shift_down(l11, w, nw));
                    }
                }
            }
        out.chi = static_cast<long>(C - A + Q - O);
    }

    out.b1 = out.b0 + out.b2 - out.chi;
    if (out.b1 < 0)
        throw Error("raster_betti_3d: negative b1, grid inconsistent");
    return out;
}

struct CloudDistance::Impl {
    std::vector<Vec3> pts;
    detail::BucketGrid grid;

    explicit Impl(std::vector<Vec3> p) : pts(std::move(p)), grid(pts) {}
};

CloudDistance::CloudDistance(const PointCloud& cloud) {
    cloud.check();
    if (cloud.points.empty())
        throw InvalidArgument("CloudDistance requires a non-empty cloud");
    impl_ = std::make_unique<Impl>(cloud.points);
}

CloudDistance::~CloudDistance() = default;
CloudDistance::CloudDistance(CloudDistance&&) noexcept = default;
CloudDistance& CloudDistance::operator=(CloudDistance&&) noexcept = default;

double CloudDistance::operator()(Vec3 q) const { return impl_->grid.nearest(q); }

}
