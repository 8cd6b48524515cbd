#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "reachkit/bounds.hpp"
#include "reachkit/counterexample.hpp"
#include "reachkit/persistence.hpp"
#include "reachkit/vec.hpp"
#include "reachkit/verify.hpp"

namespace reachkit {

// Point cloud CSV: a `# dim=<d>` header line, then one
// `x,y[,z],label` row per point, doubles printed with %.17g
// (lossless round trip). Reading accepts rows without the label column.
void write_cloud_csv(const std::string& path, const PointCloud& cloud);
PointCloud read_cloud_csv(const std::string& path,
                          std::size_t max_points = kDefaultMaxPoints);

// Counterexample metadata JSON with fields k, r_seq, circum_seq,
// critical_radii, ell, h, offsets; ell and h are null for the planar chain.
void write_metadata_json(const std::string& path, const CounterexampleMetadata& meta);

// Barcode JSON: {"intervals": [{"dim", "birth", "death"}...], "top_births",
// "n_simplices", "max_dim"}; death is null for infinite intervals.
void write_barcode_json(const std::string& path, const Barcode& barcode);
Barcode read_barcode_json(const std::string& path);

// Feasibility region CSV: header `eps,delta,set,manifold`, one row per
// grid cell; manifold prints `na` where the column does not apply.
void write_region_csv(const std::string& path, const std::vector<RegionCell>& cells);
void write_region_csv(std::ostream& out, const std::vector<RegionCell>& cells);

nlohmann::json report_to_json(const VerificationReport& report);
void write_report_json(const std::string& path, const VerificationReport& report);

}
