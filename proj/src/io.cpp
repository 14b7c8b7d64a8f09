#include "qpw/io.hpp"

#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

namespace qpw::io {

using nlohmann::json;

namespace {

json grid_to_json(const UniformGrid& g) {
  return json{{"min", g.min}, {"max", g.max}, {"n", g.n}};
}

UniformGrid grid_from_json(const json& j) {
  if (!j.is_object() || !j.contains("min") || !j.contains("max") || !j.contains("n"))
    throw UsageError("grid must be an object with min, max, n");
  UniformGrid g{j.at("min").get<double>(), j.at("max").get<double>(),
                j.at("n").get<Eigen::Index>()};
  try {
    require_grid(g);
  } catch (const DomainError& e) {
    throw UsageError(e.what());
  }
  return g;
}

json values_to_json(const QuatArray& values) {
  json out = json::array();
  for (Eigen::Index i = 0; i < values.rows(); ++i)
    out.push_back(json::array({values(i, 0), values(i, 1), values(i, 2), values(i, 3)}));
  return out;
}

QuatArray values_from_json(const json& j, Eigen::Index expected) {
  if (!j.is_array() || Eigen::Index(j.size()) != expected)
    throw UsageError("values must be an array with one [w,x,y,z] entry per grid node");
  QuatArray out(expected, 4);
  for (Eigen::Index i = 0; i < expected; ++i) {
    const json& row = j.at(std::size_t(i));
    if (!row.is_array() || row.size() != 4)
      throw UsageError("each value must be a [w,x,y,z] quadruple");
    for (int c = 0; c < 4; ++c) out(i, c) = row.at(std::size_t(c)).get<double>();
  }
  return out;
}

Unit unit_or_default(const json& j) {
  if (!j.contains("unit") || j.at("unit").is_null()) return Unit::i();  // unit-free (real) data
  return unit_from_json(j.at("unit"));
}

}  // namespace

json to_json(const Quat& q) { return json::array({q.w, q.x, q.y, q.z}); }

json to_json(const Unit& u) { return json::array({u.x, u.y, u.z}); }

json to_json(const LineSamples& s) {
  return json{{"grid", grid_to_json(s.grid)}, {"unit", nullptr}, {"values", values_to_json(s.values)}};
}

json to_json(const Spectrum& s) {
  return json{{"grid", grid_to_json(s.grid)}, {"unit", to_json(s.unit)},
              {"values", values_to_json(s.values)}};
}

json to_json(const CompactSpectrum& s) {
  json j = to_json(s.as_spectrum());
  j["band"] = s.band;
  return j;
}

json to_json(const HalfLineSpectrum& s) {
  json j = to_json(Spectrum{s.grid, s.values, s.unit});
  j["cutoff"] = s.cutoff;
  return j;
}

json to_json(const BoundaryTrace& s) {
  json j = to_json(Spectrum{s.samples.grid, s.samples.values, s.unit});
  j["boundary"] = true;
  return j;
}

json to_json(const SampleSet& s) {
  return json{{"band", s.band}, {"K", s.half_width}, {"values", values_to_json(s.values)}};
}

Quat quat_from_json(const json& j) {
  if (!j.is_array() || j.size() != 4) throw UsageError("quaternion must be [w,x,y,z]");
  return {j.at(0).get<double>(), j.at(1).get<double>(), j.at(2).get<double>(),
          j.at(3).get<double>()};
}

Unit unit_from_json(const json& j) {
  if (!j.is_array() || j.size() != 3) throw UsageError("unit must be [x,y,z]");
  try {
    return Unit::from_vector(j.at(0).get<double>(), j.at(1).get<double>(), j.at(2).get<double>());
  } catch (const DomainError& e) {
    throw UsageError(e.what());
  }
}

LineSamples line_samples_from_json(const json& j) {
  if (!j.is_object() || !j.contains("grid") || !j.contains("values"))
    throw UsageError("line samples need grid and values");
  const UniformGrid g = grid_from_json(j.at("grid"));
  return {g, values_from_json(j.at("values"), g.n)};
}

Spectrum spectrum_from_json(const json& j) {
  LineSamples base = line_samples_from_json(j);
  return {base.grid, std::move(base.values), unit_or_default(j)};
}

CompactSpectrum compact_from_json(const json& j) {
  if (!j.contains("band")) throw UsageError("compact spectrum needs a band field");
  Spectrum s = spectrum_from_json(j);
  CompactSpectrum out{j.at("band").get<double>(), s.grid, std::move(s.values), s.unit};
  try {
    require_compact(out);
  } catch (const DomainError& e) {
    throw UsageError(e.what());
  }
  return out;
}

HalfLineSpectrum halfline_from_json(const json& j) {
  if (!j.contains("cutoff")) throw UsageError("half-line spectrum needs a cutoff field");
  Spectrum s = spectrum_from_json(j);
  HalfLineSpectrum out{j.at("cutoff").get<double>(), s.grid, std::move(s.values), s.unit};
  try {
    require_halfline(out);
  } catch (const DomainError& e) {
    throw UsageError(e.what());
  }
  return out;
}

BoundaryTrace trace_from_json(const json& j) {
  Spectrum s = spectrum_from_json(j);
  return {{s.grid, std::move(s.values)}, s.unit};
}

SampleSet samples_from_json(const json& j) {
  if (!j.is_object() || !j.contains("band") || !j.contains("K") || !j.contains("values"))
    throw UsageError("sample set needs band, K and values");
  SampleSet out;
  out.band = j.at("band").get<double>();
  out.half_width = j.at("K").get<int>();
  if (out.half_width < 0 || !(out.band > 0)) throw UsageError("sample set needs band > 0, K >= 0");
  out.values = values_from_json(j.at("values"), 2 * Eigen::Index(out.half_width) + 1);
  return out;
}

json read_json(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open " + path.string());
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw UsageError("malformed JSON in " + path.string() + ": " + e.what());
  }
  return j;
}

namespace {

void write_atomic(const std::filesystem::path& path, const std::string& body) {
  const std::filesystem::path tmp = path.string() + ".tmp";
  {
    std::ofstream out(tmp);
    if (!out) throw UsageError("cannot write " + tmp.string());
    out << body;
  }
  std::filesystem::rename(tmp, path);
}

}  // namespace

void write_json_atomic(const std::filesystem::path& path, const json& j) {
  write_atomic(path, j.dump(2) + "\n");
}

std::string csv_string(const UniformGrid& grid, const QuatArray& values) {
  std::ostringstream out;
  out.precision(17);
  out << "t,w,x,y,z\n";
  for (Eigen::Index i = 0; i < grid.n; ++i)
    out << grid.node(i) << ',' << values(i, 0) << ',' << values(i, 1) << ',' << values(i, 2)
        << ',' << values(i, 3) << '\n';
  return out.str();
}

void write_csv_atomic(const std::filesystem::path& path, const UniformGrid& grid,
                      const QuatArray& values) {
  write_atomic(path, csv_string(grid, values));
}

std::string csv_string(const SampleSet& s) {
  std::ostringstream out;
  out.precision(17);
  out << "k,w,x,y,z\n";
  for (int k = -s.half_width; k <= s.half_width; ++k) {
    const Quat v = s.sample(k);
    out << k << ',' << v.w << ',' << v.x << ',' << v.y << ',' << v.z << '\n';
  }
  return out.str();
}

}  // namespace qpw::io
