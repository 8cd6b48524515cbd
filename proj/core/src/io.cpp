#include "reachkit/io.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <limits>
#include <sstream>

#include "reachkit/errors.hpp"

namespace reachkit {

namespace {

std::ofstream open_out(const std::string& path) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot open " + path + " for writing");
    return out;
}

std::ifstream open_in(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open " + path);
    return in;
}

std::string num(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

}

void write_cloud_csv(const std::string& path, const PointCloud& cloud) {
    cloud.check();
    std::ofstream out = open_out(path);
    out << "# dim=" << cloud.dim << "\n";
    for (std::size_t i = 0; i < cloud.points.size(); ++i) {
        const Vec3& p = cloud.points[i];
        out << num(p.x) << ',' << num(p.y);
        if (cloud.dim == 3) out << ',' << num(p.z);
        if (!cloud.labels.empty()) out << ',' << cloud.labels[i];
        out << "\n";
    }
    if (!out) throw IoError("write failed: " + path);
}

PointCloud read_cloud_csv(const std::string& path, std::size_t max_points) {
    std::ifstream in = open_in(path);
    std::string line;
    PointCloud cloud;
    cloud.dim = 0;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line == "\r") continue;
        if (line[0] == '#') {
            const auto pos = line.find("dim=");
            if (pos != std::string::npos && cloud.dim == 0)
                cloud.dim = std::atoi(line.c_str() + pos + 4);
            continue;
        }
        if (cloud.dim != 2 && cloud.dim != 3)
            throw IoError(path + ": missing or invalid '# dim=' header");
        double x = 0, y = 0, z = 0;
        long label = 0;
        const char* s = line.c_str();
        char* end = nullptr;
        const auto field = [&](double& v) {
            v = std::strtod(s, &end);
            if (end == s)
                throw IoError(path + ": malformed row at line " + std::to_string(lineno));
            s = (*end == ',') ? end + 1 : end;
        };
        field(x);
        field(y);
        if (cloud.dim == 3) field(z);
        bool have_label = false;
        if (*s != '\0' && *s != '\r') {
            label = std::strtol(s, &end, 10);
            if (end == s)
                throw IoError(path + ": malformed label at line " + std::to_string(lineno));
            have_label = true;
        }
        if (cloud.points.size() >= max_points)
            throw ResourceLimit("cloud in " + path + " exceeds max_points");
        if (have_label ? cloud.labels.size() != cloud.points.size() : !cloud.labels.empty())
            throw IoError(path + ": label column must be present on all rows or none");
        cloud.points.push_back({x, y, z});
        if (have_label) cloud.labels.push_back(static_cast<int>(label));
    }
    if (cloud.dim != 2 && cloud.dim != 3)
        throw IoError(path + ": missing or invalid '# dim=' header");
    cloud.check();
    return cloud;
}

void write_metadata_json(const std::string& path, const CounterexampleMetadata& meta) {
    nlohmann::json j;
    j["k"] = meta.k;
    j["r_seq"] = meta.r_seq;
    j["circum_seq"] = meta.circum_seq;
    j["critical_radii"] = meta.critical_radii;
    if (meta.tori) {
        j["ell"] = meta.ell;
        j["h"] = meta.h;
    } else {
        j["ell"] = nullptr;
        j["h"] = nullptr;
    }
    auto& offsets = j["offsets"] = nlohmann::json::array();
    for (const Vec3& o : meta.component_offsets)
        offsets.push_back({o.x, o.y, o.z});
    std::ofstream out = open_out(path);
    out << j.dump(2) << "\n";
    if (!out) throw IoError("write failed: " + path);
}

void write_barcode_json(const std::string& path, const Barcode& barcode) {
    nlohmann::json j;
    auto& intervals = j["intervals"] = nlohmann::json::array();
    for (const PersistenceInterval& iv : barcode.intervals) {
        nlohmann::json e;
        e["dim"] = iv.dim;
        e["birth"] = iv.birth;
        if (iv.finite)
            e["death"] = iv.death;
        else
            e["death"] = nullptr;
        intervals.push_back(std::move(e));
    }
    j["top_births"] = barcode.top_births;
    j["n_simplices"] = barcode.n_simplices;
    j["max_dim"] = barcode.max_dim;
    std::ofstream out = open_out(path);
    out << j.dump(2) << "\n";
    if (!out) throw IoError("write failed: " + path);
}

Barcode read_barcode_json(const std::string& path) {
    std::ifstream in = open_in(path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw IoError(path + ": " + e.what());
    }
    Barcode barcode;
    try {
        for (const auto& e : j.at("intervals")) {
            PersistenceInterval iv;
            iv.dim = e.at("dim").get<int>();
            iv.birth = e.at("birth").get<double>();
            if (e.at("death").is_null()) {
                iv.finite = false;
                iv.death = std::numeric_limits<double>::infinity();
            } else {
                iv.finite = true;
                iv.death = e.at("death").get<double>();
            }
            barcode.intervals.push_back(iv);
        }
        barcode.top_births = j.value("top_births", std::size_t{0});
        barcode.n_simplices = j.value("n_simplices", std::size_t{0});
        barcode.max_dim = j.value("max_dim", 0);
    } catch (const nlohmann::json::exception& e) {
        throw IoError(path + ": " + e.what());
    }
    return barcode;
}

void write_region_csv(std::ostream& out, const std::vector<RegionCell>& cells) {
    out << "eps,delta,set,manifold\n";
    for (const RegionCell& c : cells) {
        out << num(c.eps) << ',' << num(c.delta) << ',' << (c.set_feasible ? 1 : 0)
            << ',';
        if (c.manifold_feasible < 0)
            out << "na";
        else
            out << c.manifold_feasible;
        out << "\n";
    }
    if (!out) throw IoError("region write failed");
}

void write_region_csv(const std::string& path, const std::vector<RegionCell>& cells) {
    std::ofstream out = open_out(path);
    write_region_csv(out, cells);
}

nlohmann::json report_to_json(const VerificationReport& report) {
    nlohmann::json j;
    j["scenario"] = report.scenario;
    j["passed"] = report.passed;
    auto& checks = j["checks"] = nlohmann::json::array();
    for (const VerificationCheck& c : report.checks) {
        nlohmann::json e;
        e["name"] = c.name;
        e["radius"] = c.radius;
        e["component"] = c.component;
        e["expected"] = c.expected;
        e["observed"] = c.observed;
        e["constraint"] = c.constraint;
        e["passed"] = c.passed;
        checks.push_back(std::move(e));
    }
    j["notes"] = report.notes;
    return j;
}

void write_report_json(const std::string& path, const VerificationReport& report) {
    std::ofstream out = open_out(path);
    out << report_to_json(report).dump(2) << "\n";
    if (!out) throw IoError("write failed: " + path);
}

}
