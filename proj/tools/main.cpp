#include <cstdio>
#include <iostream>
#include <limits>
#include <numeric>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "reachkit/bounds.hpp"
#include "reachkit/counterexample.hpp"
#include "reachkit/errors.hpp"
#include "reachkit/filtration.hpp"
#include "reachkit/io.hpp"
#include "reachkit/persistence.hpp"
#include "reachkit/shapes.hpp"
#include "reachkit/verify.hpp"

namespace {

using namespace reachkit;

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

void print_report(const VerificationReport& rep) {
    for (const VerificationCheck& c : rep.checks) {
        std::printf("[%s] %s", c.passed ? "ok" : "FAIL", c.name.c_str());
        if (c.radius > 0.0) std::printf(" r=%.9g", c.radius);
        bool any = false;
        for (long v : c.observed) any = any || v >= 0;
        if (any)
            std::printf(" betti=(%ld,%ld,%ld)", c.observed[0], c.observed[1],
                        c.observed[2]);
        std::printf("  %s\n", c.constraint.c_str());
    }
    std::size_t passed = 0;
    for (const VerificationCheck& c : rep.checks) passed += c.passed ? 1u : 0u;
    std::printf("%s: %s (%zu/%zu checks)\n", rep.scenario.c_str(),
                rep.passed ? "PASS" : "FAIL", passed, rep.checks.size());
}

CounterexampleMetadata make_meta(const std::string& kind, double eps, double delta) {
    if (kind == "annuli") return annuli_radius_sequence(eps, delta);
    return tori_radius_sequence(eps, delta);
}

}

int main(int argc, char** argv) {
    CLI::App app{"homotopy reconstruction bounds for sets of positive reach"};
    app.require_subcommand(1);
    bool verify_failed = false;

    // bounds
    double reach = 1.0, eps = 0.0, delta = 0.0;
    bool manifold = false, extended = false;
    auto* bounds_cmd =
        app.add_subcommand("bounds", "feasibility condition and radius window");
    bounds_cmd->add_option("--reach", reach, "reach of the shape")->required();
    bounds_cmd->add_option("--eps", eps, "shape-to-sample bound")->required();
    bounds_cmd->add_option("--delta", delta, "sample-to-shape bound")->required();
    bounds_cmd->add_flag("--manifold", manifold, "use the closed-manifold bounds");
    bounds_cmd->add_flag("--extended", extended,
                         "evaluate the alternate upper endpoint expression");
    bounds_cmd->callback([&] {
        const ReachParams p(reach, eps, delta);
        nlohmann::json j;
        if (manifold) {
            const Interval alpha = manifold_alpha_interval(p);
            const Interval win = manifold_radius_interval(p);
            j["feasible"] = !win.empty();
            j["interval_lo"] = win.empty() ? nlohmann::json() : nlohmann::json(win.lo);
            j["interval_hi"] = win.empty() ? nlohmann::json() : nlohmann::json(win.hi);
            j["alpha_lo"] = alpha.empty() ? nlohmann::json() : nlohmann::json(alpha.lo);
            j["alpha_hi"] = alpha.empty() ? nlohmann::json() : nlohmann::json(alpha.hi);
        } else {
            const Interval win = set_radius_interval(p, extended);
            j["feasible"] = !win.empty();
            j["interval_lo"] = win.empty() ? nlohmann::json() : nlohmann::json(win.lo);
            j["interval_hi"] = win.empty() ? nlohmann::json() : nlohmann::json(win.hi);
        }
        std::cout << j.dump(2) << "\n";
    });

    // region
    int resolution = 100;
    std::string out_path;
    auto* region_cmd =
        app.add_subcommand("region", "feasibility over the (eps, delta) square");
    region_cmd->add_option("--reach", reach, "reach of the shape")->required();
    region_cmd->add_option("--res", resolution, "grid resolution")->required();
    region_cmd->add_option("--out", out_path, "output CSV (default stdout)");
    region_cmd->callback([&] {
        const auto cells = feasibility_region(reach, resolution);
        if (out_path.empty())
            write_region_csv(std::cout, cells);
        else
            write_region_csv(out_path, cells);
    });

    // construct
    std::string kind, meta_path;
    double density = 0.05;
    std::vector<int> components;
    std::size_t max_points = kDefaultMaxPoints;
    auto* construct_cmd =
        app.add_subcommand("construct", "sample a chained counterexample");
    construct_cmd->add_option("kind", kind, "annuli or tori")
        ->required()
        ->check(CLI::IsMember({"annuli", "tori"}));
    construct_cmd->add_option("--eps", eps, "shape-to-sample bound")->required();
    construct_cmd->add_option("--delta", delta, "sample-to-shape bound")->required();
    construct_cmd->add_option("--density", density, "sampling step h")->required();
    construct_cmd->add_option("--components", components, "component indices (default all)")
        ->delimiter(',');
    construct_cmd->add_option("--out", out_path, "cloud CSV path")->required();
    construct_cmd->add_option("--meta", meta_path, "metadata JSON path");
    construct_cmd->add_option("--max-points", max_points, "point cap");
    construct_cmd->callback([&] {
        const CounterexampleMetadata meta = make_meta(kind, eps, delta);
        std::vector<int> comps = components;
        if (comps.empty()) {
            comps.resize(static_cast<std::size_t>(meta.k) + 1);
            std::iota(comps.begin(), comps.end(), 0);
        }
        const PointCloud cloud = build_counterexample_cloud(meta, density, comps, max_points);
        write_cloud_csv(out_path, cloud);
        if (!meta_path.empty()) write_metadata_json(meta_path, meta);
        std::fprintf(stderr, "wrote %zu points over %zu components (k = %d)\n",
                     cloud.points.size(), comps.size(), meta.k);
    });

    // persist
    std::string in_path, complex_kind = "cech";
    int max_dim = 3;
    double max_value = 0.0;
    std::size_t max_simplices = kDefaultMaxSimplices;
    auto* persist_cmd =
        app.add_subcommand("persist", "persistent homology of a point cloud");
    persist_cmd->add_option("--in", in_path, "cloud CSV")->required();
    persist_cmd->add_option("--complex", complex_kind, "cech or rips")
        ->check(CLI::IsMember({"cech", "rips"}));
    persist_cmd->add_option("--max-dim", max_dim, "largest simplex dimension");
    persist_cmd->add_option("--max-value", max_value, "filtration cutoff")->required();
    persist_cmd->add_option("--out", out_path, "barcode JSON path")->required();
    persist_cmd->add_option("--max-points", max_points, "point cap");
    persist_cmd->add_option("--max-simplices", max_simplices, "simplex cap");
    persist_cmd->callback([&] {
        const PointCloud cloud = read_cloud_csv(in_path, max_points);
        const Filtration f = complex_kind == "cech"
                                 ? cech_filtration(cloud, max_dim, max_value, max_simplices)
                                 : rips_filtration(cloud, max_dim, max_value, max_simplices);
        const Barcode barcode = persistence(f);
        write_barcode_json(out_path, barcode);
        std::fprintf(stderr, "%zu simplices, %zu intervals\n", f.entries.size(),
                     barcode.intervals.size());
    });

    // betti
    double radius = 0.0;
    auto* betti_cmd =
        app.add_subcommand("betti", "Betti numbers at a radius from a barcode");
    betti_cmd->add_option("--barcode", in_path, "barcode JSON")->required();
    betti_cmd->add_option("--radius", radius, "probe radius")->required();
    betti_cmd->callback([&] {
        const Barcode barcode = read_barcode_json(in_path);
        const auto b = betti_profile(barcode, radius);
        nlohmann::json j;
        j["b0"] = b[0];
        j["b1"] = b[1];
        j["b2"] = b[2];
        std::cout << j.dump(2) << "\n";
    });

    // verify
    std::string scenario, mode_name = "auto", engine_name = "auto";
    double probe_radius = kNaN, voxel = 0.0;
    auto* verify_cmd = app.add_subcommand("verify", "end-to-end scenario checks");
    verify_cmd->add_option("scenario", scenario, "circle, torus, annuli or tori")
        ->required()
        ->check(CLI::IsMember({"circle", "torus", "annuli", "tori"}));
    verify_cmd->add_option("--eps", eps, "shape-to-sample bound")->required();
    verify_cmd->add_option("--delta", delta, "sample-to-shape bound");
    verify_cmd->add_option("--density", density, "sampling step h")->required();
    verify_cmd->add_option("--radius", probe_radius, "probe radius (default window midpoint)");
    verify_cmd->add_option("--mode", mode_name, "auto, set or manifold")
        ->check(CLI::IsMember({"auto", "set", "manifold"}));
    verify_cmd->add_option("--engine", engine_name, "auto, cech or raster")
        ->check(CLI::IsMember({"auto", "cech", "raster"}));
    verify_cmd->add_option("--components", components, "annuli component indices")
        ->delimiter(',');
    verify_cmd->add_option("--voxel", voxel, "raster voxel override");
    verify_cmd->add_option("--max-points", max_points, "point cap");
    verify_cmd->add_option("--max-simplices", max_simplices, "simplex cap");
    verify_cmd->add_option("--out", out_path, "report JSON path");
    verify_cmd->callback([&] {
        VerificationReport rep;
        if (scenario == "annuli") {
            rep = verify_annuli_counterexample(eps, delta, density, components, max_points);
        } else if (scenario == "tori") {
            rep = verify_tori_counterexample(eps, delta, density, max_points);
        } else {
            VerifyOptions opt;
            opt.eps = eps;
            opt.delta = delta;
            opt.radius = probe_radius;
            opt.voxel = voxel;
            opt.max_points = max_points;
            opt.max_simplices = max_simplices;
            opt.mode = mode_name == "set"        ? ReconstructionMode::set
                       : mode_name == "manifold" ? ReconstructionMode::manifold
                                                 : ReconstructionMode::automatic;
            opt.engine = engine_name == "cech"     ? HomologyEngine::cech
                         : engine_name == "raster" ? HomologyEngine::raster
                                                   : HomologyEngine::automatic;
            const ShapeSpec shape = scenario == "circle"
                                        ? ShapeSpec::make_circle({0.0, 0.0, 0.0}, 1.0)
                                        : ShapeSpec::make_torus({0.0, 0.0, 0.0});
            rep = verify_reconstruction(shape, density, opt);
        }
        print_report(rep);
        if (!out_path.empty()) write_report_json(out_path, rep);
        verify_failed = !rep.passed;
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const InvalidArgument& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    } catch (const Inapplicable& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    } catch (const Error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
    return verify_failed ? 1 : 0;
}
