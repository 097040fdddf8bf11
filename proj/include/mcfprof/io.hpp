#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "mcfprof/flow.hpp"
#include "mcfprof/geometry.hpp"

namespace mcfprof {

using json = nlohmann::json;

json snapshot_to_json(const FlowSnapshot& snapshot);
/// Rebuilds the surface and recomputes curvature. Throws ErrorKind::io on a
/// malformed document.
FlowSnapshot snapshot_from_json(const json& doc);

std::string_view to_string(Topology topology) noexcept;

/// Shortest decimal that round-trips; "nan" / "inf" / "-inf" otherwise.
std::string format_double(double value);

/// Pretty JSON with a trailing newline.
std::string dump_json(const json& doc);

std::string read_file(const std::filesystem::path& path);
/// Writes bytes verbatim. Throws ErrorKind::io on failure.
void write_file(const std::filesystem::path& path, std::string_view bytes);

std::string sha256_hex(std::string_view bytes);

/// File name of the k-th snapshot, zero padded to a fixed width.
std::string snapshot_file_name(std::size_t index);

struct CsvColumns {
  bool kappa_min = false;
  bool neck_radius = false;
};

/// One row per accepted step. `kappa_min[s]` belongs to snapshot s and is
/// written on the row that recorded it; other rows leave the cell empty.
std::string timeseries_csv(const Trajectory& traj, const CsvColumns& columns,
                           const std::vector<double>& kappa_min);

}  // namespace mcfprof
