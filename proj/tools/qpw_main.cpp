// qpw: synthesis, transforms, sampling reconstruction and verification for
// slice regular Paley-Wiener and Hardy functions, with JSON/CSV I/O.
//
// Exit codes: 0 success, 2 usage, 3 truncation/admissibility,
//             4 invariant failure, 5 domain guard.

#include <CLI11.hpp>

#include <array>
#include <filesystem>
#include <iostream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "qpw/entire.hpp"
#include "qpw/hardy.hpp"
#include "qpw/io.hpp"
#include "qpw/paley_wiener.hpp"
#include "qpw/qft.hpp"
#include "qpw/sampling.hpp"
#include "qpw/verify.hpp"

namespace {

namespace fs = std::filesystem;
using nlohmann::json;
using namespace qpw;

Unit parse_unit(const std::string& text) {
  std::array<double, 3> v{};
  char comma = 0;
  std::istringstream in(text);
  if (!(in >> v[0] >> comma >> v[1] >> comma >> v[2]) || !in.eof())
    throw UsageError("unit must be x,y,z");
  return Unit::from_vector(v[0], v[1], v[2]);
}

Quat parse_quat(const std::string& text) {
  std::array<double, 4> v{};
  char comma = 0;
  std::istringstream in(text);
  if (!(in >> v[0] >> comma >> v[1] >> comma >> v[2] >> comma >> v[3]) || !in.eof())
    throw UsageError("point must be w,x,y,z");
  return {v[0], v[1], v[2], v[3]};
}

bool wants_csv(const fs::path& out) { return out.extension() == ".csv"; }

void write_samples(const fs::path& out, const LineSamples& samples, const json& manifest) {
  if (wants_csv(out)) {
    io::write_csv_atomic(out, samples.grid, samples.values);
    return;
  }
  json j = io::to_json(samples);
  j["manifest"] = manifest;
  io::write_json_atomic(out, j);
}

// ---------------------------------------------------------------------------

struct SynthConfig {
  std::string in, out, unit;
  double grid_step = 0.01;
  double extent = 20.0;
  double imag = 0.0;
  double re = 1.0;
  double band = 0.0;  // interprets an untagged spectrum as compact
};

int cmd_synth(const SynthConfig& cfg) {
  const json j = io::read_json(cfg.in);
  const UniformGrid out_grid = symmetric_grid(cfg.extent, cfg.grid_step);
  json manifest{{"command", "synth"}, {"input", cfg.in}, {"grid-step", out_grid.step()},
                {"extent", cfg.extent}};

  if (j.contains("cutoff")) {
    const HalfLineSpectrum S = io::halfline_from_json(j);
    const Unit slice = cfg.unit.empty() ? S.unit : parse_unit(cfg.unit);
    manifest["re"] = cfg.re;
    manifest["unit"] = io::to_json(slice);
    manifest["quadrature"] = json{{"nodes", S.grid.n}, {"step", S.grid.step()}};
    const LineSamples samples = sample_line(
        out_grid, [&](double y) { return synthesize_hardy(S, slice_point(cfg.re, y, slice)); });
    write_samples(cfg.out, samples, manifest);
    return 0;
  }

  CompactSpectrum S;
  if (j.contains("band")) {
    S = io::compact_from_json(j);
  } else if (cfg.band > 0) {
    const Spectrum base = io::spectrum_from_json(j);
    S = CompactSpectrum{cfg.band, base.grid, base.values, base.unit};
    require_compact(S);
  } else {
    throw UsageError("spectrum file has no band/cutoff tag; pass --band to treat it as compact");
  }
  const Unit slice = cfg.unit.empty() ? S.unit : parse_unit(cfg.unit);
  const PWFunction f = synthesize_compact(S);
  manifest["imag"] = cfg.imag;
  manifest["unit"] = io::to_json(slice);
  manifest["band"] = S.band;
  manifest["quadrature"] = json{{"nodes", S.grid.n}, {"step", S.grid.step()}};
  const LineSamples samples =
      sample_line(out_grid, [&](double x) { return f(slice_point(x, cfg.imag, slice)); });
  write_samples(cfg.out, samples, manifest);
  return 0;
}

// ---------------------------------------------------------------------------

struct QftConfig {
  std::string in, out, unit = "1,0,0";
  bool unit_given = false;
  double max_freq = 40.0;
  bool essential = false;
  double tol = 1e-8;
  double support_tol = 1e-6;
};

int cmd_qft(const QftConfig& cfg) {
  const json in_json = io::read_json(cfg.in);
  const LineSamples F = io::line_samples_from_json(in_json);

  // refuse mixed units: a unit-tagged input may not be re-interpreted
  Unit unit = parse_unit(cfg.unit);
  if (in_json.contains("unit") && !in_json.at("unit").is_null()) {
    const Unit file_unit = io::unit_from_json(in_json.at("unit"));
    if (cfg.unit_given && std::abs(dot(file_unit, unit) - 1.0) > 1e-12)
      throw UsageError("input is tagged with a different unit; refusing the mixed-unit transform");
    unit = file_unit;
  }
  const double extent = std::max(std::abs(F.grid.min), F.grid.max);
  const UniformGrid lattice = frequency_lattice(extent, cfg.max_freq);

  if (!cfg.essential) {
    const Spectrum S = qft_left(F, unit, lattice);
    json j = io::to_json(S);
    j["manifest"] = json{{"command", "qft"}, {"input", cfg.in}, {"unit", io::to_json(unit)}};
    if (wants_csv(cfg.out))
      io::write_csv_atomic(cfg.out, S.grid, S.values);
    else
      io::write_json_atomic(cfg.out, j);
    return 0;
  }

  // Essential transform: rebuild each probe unit's boundary trace from the
  // stem of the input trace, transform with the matching kernel, and demand
  // unit independence plus half-line support.
  if (!F.grid.symmetric()) throw UsageError("--essential needs a grid symmetric about 0");
  const std::array<Unit, 3> probes{Unit::i(), Unit::j(), Unit::from_vector(1, 1, 0)};
  const auto trace_for = [&](const Unit& u) {
    LineSamples t = zeros_like(F.grid);
    for (Eigen::Index n = 0; n < F.grid.n; ++n) {
      const Quat at = get(F.values, n);
      const Quat mir = get(F.values, F.grid.mirror(n));
      const Quat alpha = 0.5 * (at + mir);
      const Quat beta = -0.5 * (unit.quat() * (at - mir));
      set(t.values, n, alpha + u.quat() * beta);
    }
    return t;
  };
  const EssentialSpectrum ess = essential_ft_probe(trace_for, probes, lattice);

  double positive_mass = 0;
  const double half_bin = 0.5 * ess.spectrum.grid.step();
  for (Eigen::Index m = 0; m < ess.spectrum.grid.n; ++m)
    if (ess.spectrum.grid.node(m) > half_bin)
      positive_mass = std::max(positive_mass, get(ess.spectrum.values, m).norm());
  const double support_floor = cfg.support_tol * std::max(max_norm(ess.spectrum.values), 1e-300);
  const bool hardy = positive_mass <= support_floor;
  const bool agrees = ess.cross_unit_deviation <= cfg.tol;

  json j = io::to_json(ess.spectrum);
  j["manifest"] = json{{"command", "qft"},
                       {"essential", true},
                       {"input", cfg.in},
                       {"max-deviation", ess.cross_unit_deviation},
                       {"positive-frequency-mass", positive_mass},
                       {"hardy", hardy}};
  if (wants_csv(cfg.out))
    io::write_csv_atomic(cfg.out, ess.spectrum.grid, ess.spectrum.values);
  else
    io::write_json_atomic(cfg.out, j);
  std::cout.precision(17);
  std::cout << "essential deviation " << ess.cross_unit_deviation << ", positive-frequency mass "
            << positive_mass << "\n";
  if (!agrees || !hardy)
    throw InvariantError(!agrees ? "essential spectra disagree across units"
                                 : "spectrum has mass at positive frequencies");
  return 0;
}

// ---------------------------------------------------------------------------

struct ReconstructConfig {
  std::string in, out, unit = "1,0,0";
  double grid_step = 0.1;
  double extent = 10.0;
  double imag = 0.0;
  double omega_m = 1.0;
  int trunc_k = -1;
  bool kernel = false;
  std::vector<std::string> at;
};

int cmd_reconstruct(const ReconstructConfig& cfg) {
  const SampleSet S = io::samples_from_json(io::read_json(cfg.in));
  const Unit slice = parse_unit(cfg.unit);

  LineSamples line{{-S.node(S.half_width), S.node(S.half_width), 2 * S.half_width + 1},
                   S.values};

  const auto value_at = [&](const Quat& q) {
    if (split(q).im > cfg.omega_m)
      throw DomainError("query point leaves the declared strip |im q| <= M");
    return cfg.kernel ? reproduce(line, S.band, q) : wks_reconstruct(S, q, cfg.trunc_k);
  };

  const UniformGrid out_grid = symmetric_grid(cfg.extent, cfg.grid_step);
  const LineSamples samples =
      sample_line(out_grid, [&](double x) { return value_at(slice_point(x, cfg.imag, slice)); });

  json points = json::array();
  for (const std::string& text : cfg.at) {
    const Quat q = parse_quat(text);
    points.push_back(json{{"at", io::to_json(q)}, {"value", io::to_json(value_at(q))}});
  }

  json manifest{{"command", "reconstruct"}, {"input", cfg.in},  {"band", S.band},
                {"K", S.half_width},        {"kernel", cfg.kernel}, {"omega-m", cfg.omega_m},
                {"trunc-K", cfg.trunc_k}};
  if (wants_csv(cfg.out)) {
    io::write_csv_atomic(cfg.out, samples.grid, samples.values);
  } else {
    json j = io::to_json(samples);
    j["manifest"] = manifest;
    if (!points.empty()) j["points"] = points;
    io::write_json_atomic(cfg.out, j);
  }
  return 0;
}

// ---------------------------------------------------------------------------

struct VerifyConfig {
  std::vector<std::string> suites;
  std::string out;
  std::uint64_t seed = 7240011;
  int trunc_k = 200;
};

int cmd_verify(const VerifyConfig& cfg) {
  if (cfg.suites.empty()) throw UsageError("verify needs at least one --suite");
  VerifyOptions opts;
  opts.seed = cfg.seed;
  opts.trunc_k = cfg.trunc_k;
  std::error_code ec;
  const fs::path self = fs::read_symlink("/proc/self/exe", ec);
  if (!ec) opts.cli_path = self.string();

  json reports = json::array();
  bool all_pass = true;
  for (const std::string& name : cfg.suites) {
    const SuiteReport report = run_suite(name, opts);
    reports.push_back(report_to_json(report));
    all_pass = all_pass && report.all_pass();
    std::cout.precision(17);
    for (const auto& chk : report.checks)
      std::cout << report.suite << "/" << chk.name << ": " << (chk.pass ? "pass" : "FAIL")
                << " (max_error " << chk.max_error << ", tolerance " << chk.tolerance << ")\n";
  }
  const json out = reports.size() == 1 ? reports.front() : json{{"reports", reports}};
  if (!cfg.out.empty())
    io::write_json_atomic(cfg.out, out);
  else
    std::cout << out.dump(2) << "\n";
  if (!all_pass) throw InvariantError("one or more verification checks failed");
  return 0;
}

// ---------------------------------------------------------------------------

struct KernelConfig {
  std::string kind = "halfspace";
  std::string q1, q2, unit = "1,0,0";
  double x = 1.0, y = 0.0;
  std::string out;
};

int cmd_kernel_eval(const KernelConfig& cfg) {
  json result{{"kind", cfg.kind}};
  if (cfg.kind == "halfspace") {
    if (cfg.q1.empty() || cfg.q2.empty()) throw UsageError("halfspace kernel needs --q1 and --q2");
    result["value"] = io::to_json(rk_halfspace(parse_quat(cfg.q1), parse_quat(cfg.q2)));
  } else if (cfg.kind == "cauchy") {
    result["value"] = io::to_json(cauchy_kernel(cfg.x, cfg.y, parse_unit(cfg.unit)));
  } else if (cfg.kind == "poisson") {
    result["value"] = poisson_kernel(cfg.x, cfg.y);
  } else {
    throw UsageError("kernel kind must be halfspace, cauchy or poisson");
  }
  if (!cfg.out.empty())
    io::write_json_atomic(cfg.out, result);
  else
    std::cout << result.dump(2) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"quaternionic Paley-Wiener and Hardy-space toolkit"};
  app.require_subcommand(1);

  SynthConfig synth;
  auto* synth_cmd = app.add_subcommand("synth", "synthesize a function from a spectrum file");
  synth_cmd->add_option("--in", synth.in, "spectrum JSON (band or cutoff tagged)")->required();
  synth_cmd->add_option("--out", synth.out, "output samples (.json or .csv)")->required();
  synth_cmd->add_option("--unit", synth.unit, "evaluation slice x,y,z (default: file unit)");
  synth_cmd->add_option("--grid-step", synth.grid_step, "output grid step");
  synth_cmd->add_option("--extent", synth.extent, "output grid half width");
  synth_cmd->add_option("--imag", synth.imag, "imaginary offset for whole-space synthesis");
  synth_cmd->add_option("--re", synth.re, "real part for half-space synthesis");
  synth_cmd->add_option("--band", synth.band, "band for an untagged spectrum file");

  QftConfig qft_cfg;
  auto* qft_cmd = app.add_subcommand("qft", "left-sided quaternion Fourier transform");
  qft_cmd->add_option("--in", qft_cfg.in, "line samples JSON")->required();
  qft_cmd->add_option("--out", qft_cfg.out, "output spectrum (.json or .csv)")->required();
  qft_cmd->add_option("--unit", qft_cfg.unit, "kernel unit x,y,z")
      ->each([&](const std::string&) { qft_cfg.unit_given = true; });
  qft_cmd->add_option("--max-freq", qft_cfg.max_freq, "frequency grid extent");
  qft_cmd->add_flag("--essential", qft_cfg.essential, "essential transform with unit-agreement check");
  qft_cmd->add_option("--tol", qft_cfg.tol, "cross-unit agreement tolerance");
  qft_cmd->add_option("--support-tol", qft_cfg.support_tol, "relative half-line support tolerance");

  ReconstructConfig rec;
  auto* rec_cmd = app.add_subcommand("reconstruct", "sampling-series reconstruction");
  rec_cmd->add_option("--in", rec.in, "sample set JSON")->required();
  rec_cmd->add_option("--out", rec.out, "output (.json or .csv)")->required();
  rec_cmd->add_option("--unit", rec.unit, "evaluation slice x,y,z");
  rec_cmd->add_option("--grid-step", rec.grid_step, "output grid step");
  rec_cmd->add_option("--extent", rec.extent, "output grid half width");
  rec_cmd->add_option("--imag", rec.imag, "imaginary offset of the output line");
  rec_cmd->add_option("--omega-m", rec.omega_m, "declared strip half width M");
  rec_cmd->add_option("--trunc-K", rec.trunc_k, "series truncation (-1: all samples)");
  rec_cmd->add_flag("--kernel", rec.kernel, "use the sinc reproducing integral instead");
  rec_cmd->add_option("--at", rec.at, "extra query points w,x,y,z");

  VerifyConfig ver;
  auto* ver_cmd = app.add_subcommand("verify", "run named verification suites");
  ver_cmd->add_option("--suite", ver.suites, "suite name (algebra, entire, structure, qft, "
                                             "pw-compact, hardy, kernel, sampling, cli)");
  ver_cmd->add_option("--out", ver.out, "report JSON path (default: stdout)");
  ver_cmd->add_option("--seed", ver.seed, "probe seed");
  ver_cmd->add_option("--trunc-K", ver.trunc_k, "sampling suite truncation order");

  KernelConfig ker;
  auto* ker_cmd = app.add_subcommand("kernel-eval", "evaluate reproducing/boundary kernels");
  ker_cmd->add_option("--kind", ker.kind, "halfspace, cauchy or poisson");
  ker_cmd->add_option("--q1", ker.q1, "first point w,x,y,z");
  ker_cmd->add_option("--q2", ker.q2, "second point w,x,y,z");
  ker_cmd->add_option("--x", ker.x, "real part for cauchy/poisson");
  ker_cmd->add_option("--y", ker.y, "imaginary part for cauchy/poisson");
  ker_cmd->add_option("--unit", ker.unit, "slice unit for the cauchy kernel");
  ker_cmd->add_option("--out", ker.out, "result JSON path (default: stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (synth_cmd->parsed()) return cmd_synth(synth);
    if (qft_cmd->parsed()) return cmd_qft(qft_cfg);
    if (rec_cmd->parsed()) return cmd_reconstruct(rec);
    if (ver_cmd->parsed()) return cmd_verify(ver);
    if (ker_cmd->parsed()) return cmd_kernel_eval(ker);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const AdmissibilityError& e) {
    std::cerr << "admissibility error: " << e.what() << "\n";
    return 3;
  } catch (const InvariantError& e) {
    std::cerr << "invariant failure: " << e.what() << "\n";
    return 4;
  } catch (const DomainError& e) {
    std::cerr << "domain error: " << e.what() << "\n";
    return 5;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
