#include <array>
#include <cmath>
#include <random>

#include "doctest.h"
#include "reachkit/counterexample.hpp"
#include "reachkit/errors.hpp"
#include "reachkit/meb.hpp"

using namespace reachkit;

TEST_CASE("annuli radius sequence at the reference parameters") {
    CounterexampleMetadata meta = annuli_radius_sequence(0.25, 0.25);
    CHECK_FALSE(meta.tori);
    CHECK(meta.k == 15);
    REQUIRE(meta.r_seq.size() == 16);
    REQUIRE(meta.circum_seq.size() == 16);

    CHECK(meta.r_seq[0] == 0.25);  // (eps + delta) / 2 exactly
    CHECK(meta.r_seq[1] == doctest::Approx(0.32900857355927175322).epsilon(1e-14));
    CHECK(meta.r_seq[14] == doctest::Approx(0.73860806484108923163).epsilon(1e-14));
    CHECK(meta.r_seq[15] == 0.75);  // 1 - delta exactly
    CHECK(meta.circum_seq[14] == doctest::Approx(0.80348237551231289478).epsilon(1e-14));
    CHECK(meta.circum_seq[15] == 0.85);  // (re^2 + rd^2) / (2 re), all terms exact

    for (int i = 0; i < meta.k; ++i) {
        CHECK(meta.r_seq[i] < meta.r_seq[i + 1]);
        CHECK(meta.circum_seq[i] > meta.r_seq[i]);
        // The next half-gap is the previous collapse radius, clamped to
        // the outermost admissible circle.
        CHECK(meta.r_seq[i + 1] == std::min(meta.circum_seq[i], 0.75));
    }
    CHECK(meta.circum_seq[15] > meta.r_seq[15]);

    REQUIRE(meta.critical_radii.size() == 17);
    for (int i = 0; i <= 15; ++i) CHECK(meta.critical_radii[i] == meta.r_seq[i]);
    CHECK(meta.critical_radii[16] == meta.circum_seq[15]);

    REQUIRE(meta.component_offsets.size() == 16);
    for (int i = 0; i < 16; ++i) {
        CHECK(meta.component_offsets[i].x == 5.0 * i);  // 2 (1 + 2 eps) + 2
        CHECK(meta.component_offsets[i].y == 0.0);
        CHECK(meta.component_offsets[i].z == 0.0);
    }

    CHECK(meta.self_centred_ok);
    CHECK(meta.min_barycentric > 0.0);
    CHECK(meta.growth_margin > 0.0);
    CHECK(std::isnan(meta.h));

    for (int i : {0, 1, 7, 15}) {
        const double t = meta.t_of(i);
        CHECK(t * t + meta.r_seq[i] * meta.r_seq[i] == doctest::Approx(0.75 * 0.75).epsilon(1e-12));
        auto [p, q] = component_pair(meta, i);
        CHECK(p.x == doctest::Approx(t));
        CHECK(q.x == doctest::Approx(t));
        CHECK(p.y == doctest::Approx(meta.r_seq[i]));
        CHECK(q.y == doctest::Approx(-meta.r_seq[i]));
        CHECK(p.z == 0.0);
    }
    CHECK(std::abs(meta.t_of(15)) <= 1e-12);
}

TEST_CASE("annuli witness simplices") {
    CounterexampleMetadata meta = annuli_radius_sequence(0.25, 0.25);
    const Vec3 e{1.25, 0.0, 0.0};
    for (int i : {0, 1, 14}) {
        auto [p, q] = component_pair(meta, i);
        std::array<Vec3, 3> tri = {p, q, e};
        Ball b = circumsphere(tri);
        CHECK(b.radius == doctest::Approx(meta.circum_seq[i]).epsilon(1e-12));
        CHECK(std::abs(b.center.y) <= 1e-12);
        CHECK(is_strictly_acute(p, q, e));
        CHECK(is_strictly_self_centred(tri));
    }
}

TEST_CASE("annuli sequence across parameters") {
    {
        CounterexampleMetadata meta = annuli_radius_sequence(0.2, 0.2);
        CHECK(meta.r_seq[0] == doctest::Approx(0.2));
        CHECK(meta.r_seq.back() == doctest::Approx(0.8));
        // (re^2 + rd^2) / (2 re) with re = 1.2, rd = 0.8.
        CHECK(meta.circum_seq.back() == doctest::Approx((1.44 + 0.64) / 2.4).epsilon(1e-14));
        CHECK(meta.self_centred_ok);
        CHECK(meta.k > 0);
    }
    {
        CounterexampleMetadata meta = annuli_radius_sequence(0.3, 0.2);
        CHECK(meta.r_seq[0] == doctest::Approx(0.25));
        CHECK(meta.r_seq.back() == doctest::Approx(0.8));
    }
    CHECK_THROWS_AS(annuli_radius_sequence(0.9, 0.9), InvalidArgument);
    CHECK_THROWS_AS(annuli_radius_sequence(-0.1, 0.1), InvalidArgument);
    CHECK_THROWS_AS(annuli_radius_sequence(0.25, 0.25, 5), Error);
}

TEST_CASE("tori radius sequence at the reference parameters") {
    CounterexampleMetadata meta = tori_radius_sequence(0.4, 0.1);
    CHECK(meta.tori);
    CHECK(meta.k == 1864);
    REQUIRE(meta.r_seq.size() == 1865);
    REQUIRE(meta.circum_seq.size() == 1865);
    REQUIRE(meta.critical_radii.size() == 1866);

    CHECK(meta.ell == doctest::Approx(0.175).epsilon(1e-14));
    CHECK(meta.h == doctest::Approx(0.35968736424845399).epsilon(1e-13));
    CHECK(meta.r_seq[0] == meta.h);
    CHECK(meta.r_seq[1] == doctest::Approx(0.4).epsilon(1e-12));
    CHECK(meta.r_seq[2] == doctest::Approx(0.42474726786711142).epsilon(1e-12));
    CHECK(meta.r_seq.back() == 0.9);  // 1 - delta exactly
    CHECK(meta.circum_seq.back() == doctest::Approx(0.94801262185193713).epsilon(1e-12));
    CHECK(meta.growth_margin == doctest::Approx(0.0082159566705846121).epsilon(1e-9));

    CHECK(meta.self_centred_ok);
    CHECK(meta.min_barycentric > 0.0);
    CHECK(meta.growth_margin > 0.0);

    for (int i = 0; i < meta.k; ++i) {
        CHECK(meta.r_seq[i] < meta.r_seq[i + 1]);
        CHECK(meta.circum_seq[i] > meta.r_seq[i]);
    }
    REQUIRE(meta.component_offsets.size() == 1865);
    CHECK(meta.component_offsets[1].x == 8.0);
    CHECK(meta.component_offsets[1864].x == 8.0 * 1864);

    for (int i : {0, 1, 1864}) {
        const double t = meta.t_of(i);
        CHECK(t * t + meta.r_seq[i] * meta.r_seq[i] == doctest::Approx(0.81).epsilon(1e-12));
    }
    CHECK(std::abs(meta.t_of(1864)) <= 1e-12);

    CHECK_THROWS_AS(tori_radius_sequence(0.1, 0.1), InvalidArgument);
    CHECK_THROWS_AS(tori_radius_sequence(0.1, 0.2), InvalidArgument);
    CHECK_THROWS_AS(tori_radius_sequence(0.4, 0.1, 100), Error);
}

TEST_CASE("tori witness simplices") {
    CounterexampleMetadata meta = tori_radius_sequence(0.4, 0.1);
    const Vec3 q{1.0 + meta.ell, 0.0, meta.h};
    const Vec3 qt{1.0 + meta.ell, 0.0, -meta.h};
    for (int i : {0, 1, 500, 1864}) {
        auto [p, pt] = component_pair(meta, i);
        std::array<Vec3, 4> tet = {p, pt, q, qt};
        Ball b = circumsphere(tet);
        CHECK(b.radius == doctest::Approx(meta.circum_seq[i]).epsilon(1e-11));
        CHECK(is_strictly_self_centred(tet));
    }
    CHECK(claim_b1_check(0.4, 0.1));
    CHECK_THROWS_AS(claim_b1_check(0.4, 0.1, 1), InvalidArgument);
}

TEST_CASE("annuli cloud construction") {
    CounterexampleMetadata meta = annuli_radius_sequence(0.25, 0.25);
    PointCloud cloud = build_counterexample_cloud(meta, 0.05, {0, 2});
    CHECK(cloud.dim == 2);
    REQUIRE(cloud.labels.size() == cloud.size());

    bool saw0 = false, saw2 = false;
    for (std::size_t i = 0; i < cloud.size(); ++i) {
        const int c = cloud.labels[i];
        CHECK((c == 0 || c == 2));
        (c == 0 ? saw0 : saw2) = true;
        const Vec3 local = cloud.points[i] - meta.component_offsets[c];
        const double rho = norm(local);
        const bool on_outer = std::abs(rho - 1.25) <= 1e-9;
        const bool on_pair = std::abs(rho - 0.75) <= 1e-9;
        CHECK((on_outer || on_pair));
    }
    CHECK(saw0);
    CHECK(saw2);

    // The exact pair of each component is present.
    auto has_point = [&](Vec3 target) {
        for (const auto& p : cloud.points)
            if (dist(p, target) <= 1e-12) return true;
        return false;
    };
    for (int c : {0, 2}) {
        auto [p, q] = component_pair(meta, c);
        CHECK(has_point(p + meta.component_offsets[c]));
        CHECK(has_point(q + meta.component_offsets[c]));
    }

    PointCloud again = build_counterexample_cloud(meta, 0.05, {0, 2});
    REQUIRE(again.size() == cloud.size());
    for (std::size_t i = 0; i < cloud.size(); ++i) CHECK(dist(again.points[i], cloud.points[i]) == 0.0);

    CHECK_THROWS_AS(build_counterexample_cloud(meta, 0.05, {}), InvalidArgument);
    CHECK_THROWS_AS(build_counterexample_cloud(meta, 0.05, {2, 0}), InvalidArgument);
    CHECK_THROWS_AS(build_counterexample_cloud(meta, 0.05, {99}), InvalidArgument);
    CHECK_THROWS_AS(build_counterexample_cloud(meta, 0.05, {0}, 10), ResourceLimit);
    CHECK_THROWS_AS(build_counterexample_cloud(meta, 0.0, {0}), InvalidArgument);
}

TEST_CASE("component distance agrees with the sampled cloud") {
    CounterexampleMetadata meta = annuli_radius_sequence(0.25, 0.25);
    const double h = 0.02;
    PointCloud cloud = build_counterexample_cloud(meta, h, {1});

    std::mt19937_64 rng(4242);
    std::uniform_real_distribution<double> u(-2.0, 2.0);
    for (int iter = 0; iter < 200; ++iter) {
        const Vec3 x{u(rng), u(rng), 0.0};
        double sampled = 1e300;
        for (const auto& p : cloud.points)
            sampled = std::min(sampled, dist(x + meta.component_offsets[1], p));
        const double exact = component_distance(meta, 1, x);
        CHECK(exact <= sampled + 1e-12);
        CHECK(sampled <= exact + h / 2 + 1e-12);
    }

    auto [p, q] = component_pair(meta, 1);
    CHECK(component_distance(meta, 1, p) <= 1e-12);
    CHECK(component_distance(meta, 1, q) <= 1e-12);
    CHECK(component_curve_distance(meta, 1, p) > 0.1);
    CHECK_THROWS_AS(component_distance(meta, 99, Vec3{0, 0, 0}), InvalidArgument);
}

TEST_CASE("tori cloud construction") {
    CounterexampleMetadata meta = tori_radius_sequence(0.4, 0.1);
    PointCloud cloud = build_counterexample_cloud(meta, 0.08, {0}, 2000000);
    CHECK(cloud.dim == 3);
    REQUIRE(cloud.size() > 1000);
    REQUIRE(cloud.labels.size() == cloud.size());

    auto [pp, pt] = component_pair(meta, 0);
    int off_surface = 0;
    for (const auto& p : cloud.points) {
        const double rho = std::hypot(p.x, p.y);
        const double f = (rho - 2.0) * (rho - 2.0) + p.z * p.z;
        const bool on_surface = std::abs(f - 0.81) <= 1e-9;
        const bool is_pair = dist(p, pp) <= 1e-12 || dist(p, pt) <= 1e-12;
        CHECK((on_surface || is_pair));
        if (!on_surface) ++off_surface;
        if (on_surface) {
            // The open eps-tube around the unit circle is removed.
            const double dcut = std::hypot(rho - 1.0, p.z);
            CHECK(dcut >= 0.4 - 1e-9);
        }
    }
    CHECK(off_surface == 2);
}
