#pragma once

#include <filesystem>
#include <string>

#include <nlohmann/json_fwd.hpp>

#include "qpw/grid.hpp"

// File formats.  Quaternions serialize as [w, x, y, z], imaginary units as
// [x, y, z]; sampled data as {grid: {min, max, n}, unit: [..] | null,
// values: [[w,x,y,z], ...]}, with "band", "cutoff" or "boundary" tags for
// the specialized containers.  Readers ignore unknown keys; writers are
// atomic (temp file + rename).

namespace qpw::io {

nlohmann::json to_json(const Quat& q);
nlohmann::json to_json(const Unit& u);
nlohmann::json to_json(const LineSamples& s);
nlohmann::json to_json(const Spectrum& s);
nlohmann::json to_json(const CompactSpectrum& s);
nlohmann::json to_json(const HalfLineSpectrum& s);
nlohmann::json to_json(const BoundaryTrace& s);
nlohmann::json to_json(const SampleSet& s);

Quat quat_from_json(const nlohmann::json& j);
Unit unit_from_json(const nlohmann::json& j);
LineSamples line_samples_from_json(const nlohmann::json& j);
Spectrum spectrum_from_json(const nlohmann::json& j);
CompactSpectrum compact_from_json(const nlohmann::json& j);
HalfLineSpectrum halfline_from_json(const nlohmann::json& j);
BoundaryTrace trace_from_json(const nlohmann::json& j);
SampleSet samples_from_json(const nlohmann::json& j);

nlohmann::json read_json(const std::filesystem::path& path);
void write_json_atomic(const std::filesystem::path& path, const nlohmann::json& j);

/// CSV export, columns t,w,x,y,z (grid node then value components).
std::string csv_string(const UniformGrid& grid, const QuatArray& values);
void write_csv_atomic(const std::filesystem::path& path, const UniformGrid& grid,
                      const QuatArray& values);

/// CSV mirror of a sample set, columns k,w,x,y,z.
std::string csv_string(const SampleSet& s);

}  // namespace qpw::io
