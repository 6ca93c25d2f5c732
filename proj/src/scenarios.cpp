#include "blipfield/scenarios.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <stdexcept>

#include "blipfield/dynamics.hpp"
#include "blipfield/errors.hpp"
#include "blipfield/version.hpp"

namespace blipfield {

namespace {

std::string fmt17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.16e", v);
  return buf;
}

std::vector<double> linspace(const TimeGrid& tg) {
  if (tg.samples < 1) throw std::invalid_argument("samples must be >= 1");
  if (tg.t1 < tg.t0) throw std::invalid_argument("t1 must be >= t0");
  std::vector<double> ts(static_cast<std::size_t>(tg.samples));
  if (tg.samples == 1) {
    ts[0] = tg.t0;
    return ts;
  }
  const double step = (tg.t1 - tg.t0) / (tg.samples - 1);
  for (int i = 0; i < tg.samples; ++i) ts[static_cast<std::size_t>(i)] = tg.t0 + i * step;
  return ts;
}

// Snap sample times to integer multiples of the site-crossing time dx/c so
// transport comparisons line up with the shift oracle.
std::vector<double> snapped_times(const TimeGrid& tg, const Lattice& lat,
                                  const PhysicalConstants& consts) {
  std::vector<double> ts = linspace(tg);
  const double unit = lat.dx / consts.c;
  for (double& t : ts) t = std::round(t / unit) * unit;
  return ts;
}

Channel channel_from_json(const nlohmann::json& j) {
  Channel ch;
  if (j.contains("direction")) {
    const std::string d = j.at("direction").get<std::string>();
    if (d == "left") ch.dir = Direction::Left;
    else if (d == "right") ch.dir = Direction::Right;
    else throw std::invalid_argument("packet direction must be \"left\" or \"right\"");
  }
  if (j.contains("polarization")) {
    const std::string p = j.at("polarization").get<std::string>();
    if (p == "H" || p == "h") ch.pol = Polarization::H;
    else if (p == "V" || p == "v") ch.pol = Polarization::V;
    else throw std::invalid_argument("packet polarization must be \"H\" or \"V\"");
  }
  return ch;
}

PacketSpec packet_from_json(const nlohmann::json& j) {
  PacketSpec p;
  for (const auto& [key, value] : j.items()) {
    if (key == "shape") {
      const std::string s = value.get<std::string>();
      if (s == "gaussian") p.shape = PacketShape::Gaussian;
      else if (s == "rectangular") p.shape = PacketShape::Rectangular;
      else if (s == "custom") p.shape = PacketShape::Custom;
      else throw std::invalid_argument("unknown packet shape: " + s);
    } else if (key == "direction" || key == "polarization") {
      // handled below through channel_from_json
    } else if (key == "center") p.center = value.get<double>();
    else if (key == "width") p.width = value.get<double>();
    else if (key == "carrier") p.carrier = value.get<double>();
    else if (key == "phase") p.phase = value.get<double>();
    else if (key == "amplitude") p.amplitude = value.get<double>();
    else if (key == "samples_file") p.samples_file = value.get<std::string>();
    else throw std::invalid_argument("unknown packet key: " + key);
  }
  p.channel = channel_from_json(j);
  if (p.shape == PacketShape::Custom && p.samples_file.empty())
    throw std::invalid_argument("custom packet requires samples_file");
  return p;
}

std::string direction_name(Direction d) { return d == Direction::Left ? "left" : "right"; }
std::string pol_name(Polarization p) { return p == Polarization::H ? "H" : "V"; }

// Splits "dir/name.ext" so suffixed outputs become "dir/name<suffix>.ext".
std::pair<std::string, std::string> split_extension(const std::string& path) {
  const auto slash = path.find_last_of('/');
  const auto dot = path.find_last_of('.');
  if (dot == std::string::npos || (slash != std::string::npos && dot < slash))
    return {path, ""};
  return {path.substr(0, dot), path.substr(dot)};
}

void materialize_custom_samples(ScenarioConfig& cfg) {
  for (auto& p : cfg.packets)
    if (p.shape == PacketShape::Custom && p.samples.empty())
      p.samples = load_samples_csv(p.samples_file, cfg.n);
}

struct ScenarioSetup {
  std::shared_ptr<const Lattice> lattice;
  PhysicalConstants consts;
};

ScenarioSetup setup(const ScenarioConfig& cfg) {
  ScenarioSetup s;
  s.lattice = std::make_shared<Lattice>(build_lattice(cfg.n, cfg.length));
  s.consts = cfg.constants();
  return s;
}

}  // namespace

PhysicalConstants ScenarioConfig::constants() const {
  return units == Units::Si ? PhysicalConstants::si() : PhysicalConstants::natural();
}

ScenarioConfig config_from_json(const nlohmann::json& j) {
  ScenarioConfig cfg;
  for (const auto& [key, value] : j.items()) {
    if (key == "scenario") cfg.scenario = value.get<std::string>();
    else if (key == "n") cfg.n = value.get<int>();
    else if (key == "length") cfg.length = value.get<double>();
    else if (key == "units") {
      const std::string u = value.get<std::string>();
      if (u == "natural") cfg.units = Units::Natural;
      else if (u == "si") cfg.units = Units::Si;
      else throw std::invalid_argument("units must be \"natural\" or \"si\"");
    } else if (key == "t0") { cfg.time.t0 = value.get<double>(); cfg.time_set = true; }
    else if (key == "t1") { cfg.time.t1 = value.get<double>(); cfg.time_set = true; }
    else if (key == "samples") { cfg.time.samples = value.get<int>(); cfg.time_set = true; }
    else if (key == "beta") cfg.beta = value.get<double>();
    else if (key == "out") cfg.out = value.get<std::string>();
    else if (key == "format") {
      const std::string f = value.get<std::string>();
      if (f == "csv") cfg.format = OutputFormat::Csv;
      else if (f == "json") cfg.format = OutputFormat::Json;
      else throw std::invalid_argument("format must be \"csv\" or \"json\"");
    } else if (key == "packets") {
      if (!value.is_array()) throw std::invalid_argument("packets must be an array");
      for (const auto& pj : value) cfg.packets.push_back(packet_from_json(pj));
    } else {
      throw std::invalid_argument("unknown config key: " + key);
    }
  }
  return cfg;
}

void resolve_defaults(ScenarioConfig& cfg) {
  if (cfg.scenario.empty()) throw std::invalid_argument("scenario name is required");
  const bool known = cfg.scenario == "orthogonality" || cfg.scenario == "dispersion-compare" ||
                     cfg.scenario == "kernel" || cfg.scenario == "boost" ||
                     cfg.scenario == "spectra" || cfg.scenario == "propagate";
  if (!known) throw std::invalid_argument("unknown scenario: " + cfg.scenario);

  if (cfg.length == 0.0) cfg.length = 200.0;
  if (cfg.n == 0) {
    if (cfg.scenario == "boost") cfg.n = 2048;
    else if (cfg.scenario == "spectra") cfg.n = 256;
    else cfg.n = 4096;
  }
  const PhysicalConstants consts = cfg.constants();
  const double c = consts.c;

  if (cfg.scenario == "orthogonality") {
    if (cfg.packets.empty()) {
      PacketSpec right;
      right.center = -0.25 * cfg.length;
      right.width = 4.0;
      right.carrier = 10.0;
      right.channel = {Direction::Right, Polarization::H};
      PacketSpec left = right;
      left.center = 0.25 * cfg.length;
      left.channel = {Direction::Left, Polarization::H};
      cfg.packets = {right, left};
    }
    if (!cfg.time_set)
      cfg.time = {0.0, std::abs(cfg.packets[1].center - cfg.packets[0].center) / c, 101};
  } else if (cfg.scenario == "dispersion-compare") {
    if (cfg.packets.empty()) {
      PacketSpec p;
      p.center = 0.0;
      p.width = 2.0 * cfg.length / cfg.n;  // two sites: spectrum straddles k = 0
      p.carrier = 0.0;
      p.channel = {Direction::Right, Polarization::H};
      cfg.packets = {p};
    }
    if (!cfg.time_set) cfg.time = {0.0, cfg.length / (8.0 * c), 26};
  } else if (cfg.scenario == "kernel") {
    if (cfg.n < 1024)
      throw std::invalid_argument("kernel scenario needs n >= 1024 for a meaningful tail");
  } else if (cfg.scenario == "boost") {
    if (std::abs(cfg.beta) > 0.6)
      throw std::invalid_argument("boost scenario supports |beta| <= 0.6");
    if (cfg.packets.empty()) {
      PacketSpec p;
      p.center = 0.0;
      p.width = 4.0;
      p.carrier = 10.0;
      p.channel = {Direction::Right, Polarization::H};
      cfg.packets = {p};
    }
  } else if (cfg.scenario == "propagate") {
    if (cfg.packets.empty()) {
      PacketSpec p;
      p.center = -0.25 * cfg.length;
      p.width = 4.0;
      p.carrier = 10.0;
      p.channel = {Direction::Right, Polarization::H};
      cfg.packets = {p};
    }
    if (!cfg.time_set) cfg.time = {0.0, 0.25 * cfg.length / c, 3};
  }

  if (cfg.out.empty())
    cfg.out = cfg.scenario + (cfg.format == OutputFormat::Json ? ".json" : ".csv");
  materialize_custom_samples(cfg);
}

nlohmann::ordered_json config_to_json(const ScenarioConfig& cfg) {
  nlohmann::ordered_json j;
  j["scenario"] = cfg.scenario;
  j["n"] = cfg.n;
  j["length"] = cfg.length;
  j["units"] = cfg.units == Units::Si ? "si" : "natural";
  j["t0"] = cfg.time.t0;
  j["t1"] = cfg.time.t1;
  j["samples"] = cfg.time.samples;
  j["beta"] = cfg.beta;
  j["out"] = cfg.out;
  j["format"] = cfg.format == OutputFormat::Json ? "json" : "csv";
  j["packets"] = nlohmann::ordered_json::array();
  for (const auto& p : cfg.packets) {
    nlohmann::ordered_json pj;
    pj["shape"] = p.shape == PacketShape::Gaussian      ? "gaussian"
                  : p.shape == PacketShape::Rectangular ? "rectangular"
                                                        : "custom";
    pj["direction"] = direction_name(p.channel.dir);
    pj["polarization"] = pol_name(p.channel.pol);
    pj["center"] = p.center;
    pj["width"] = p.width;
    pj["carrier"] = p.carrier;
    pj["phase"] = p.phase;
    pj["amplitude"] = p.amplitude;
    if (!p.samples_file.empty()) pj["samples_file"] = p.samples_file;
    j["packets"].push_back(pj);
  }
  return j;
}

ScenarioResult run_orthogonality(const ScenarioConfig& cfg) {
  if (cfg.packets.size() != 2)
    throw std::invalid_argument("orthogonality scenario takes exactly two packets");
  if (cfg.packets[0].channel.dir == cfg.packets[1].channel.dir)
    throw std::invalid_argument("orthogonality packets must move in opposite directions");
  const ScenarioSetup s = setup(cfg);

  const StateVector a = make_packet(cfg.packets[0], s.lattice, StateKind::SingleExcitation);
  const StateVector b = make_packet(cfg.packets[1], s.lattice, StateKind::SingleExcitation);

  // The packets cross at the midpoint; include that time exactly, snapped
  // grid or not, since it is the interesting sample.
  const PacketSpec& rightward = cfg.packets[0].channel.dir == Direction::Right
                                    ? cfg.packets[0]
                                    : cfg.packets[1];
  const PacketSpec& leftward = cfg.packets[0].channel.dir == Direction::Left
                                   ? cfg.packets[0]
                                   : cfg.packets[1];
  const double t_cross = (leftward.center - rightward.center) / (2.0 * s.consts.c);

  std::vector<double> ts = snapped_times(cfg.time, *s.lattice, s.consts);
  if (t_cross >= cfg.time.t0 && t_cross <= cfg.time.t1) ts.push_back(t_cross);
  std::sort(ts.begin(), ts.end());
  ts.erase(std::unique(ts.begin(), ts.end()), ts.end());

  ScenarioResult res;
  Table table;
  table.columns = {"t", "re_overlap", "im_overlap", "abs_overlap"};
  double worst = 0.0;
  for (double t : ts) {
    const StateVector ea = evolve(a, t, EvolutionLaw::Blip, s.consts);
    const StateVector eb = evolve(b, t, EvolutionLaw::Blip, s.consts);
    const std::complex<double> ov = inner_product(ea, eb);
    worst = std::max(worst, std::abs(ov));
    table.rows.push_back({t, ov.real(), ov.imag(), std::abs(ov)});
  }
  res.tables.emplace_back("", std::move(table));
  res.report["max_abs_overlap"] = worst;
  res.report["t_cross"] = t_cross;
  res.report["norm_a"] = norm(a);
  res.report["norm_b"] = norm(b);
  return res;
}

ScenarioResult run_dispersion_compare(const ScenarioConfig& cfg) {
  if (cfg.packets.empty())
    throw std::invalid_argument("dispersion-compare scenario needs a packet");
  const ScenarioSetup s = setup(cfg);
  const StateVector st = make_packet(cfg.packets[0], s.lattice, StateKind::SingleExcitation);
  const Channel ch = cfg.packets[0].channel;

  const std::vector<double> ts = snapped_times(cfg.time, *s.lattice, s.consts);
  const double w0 = rms_width(st, ch);

  ScenarioResult res;
  Table table;
  table.columns = {"t", "width_blip", "width_standard", "ratio"};
  double blip_drift = 0.0, last_ratio = 1.0;
  for (double t : ts) {
    const double wb = rms_width(evolve(st, t, EvolutionLaw::Blip, s.consts), ch);
    const double ws = rms_width(evolve(st, t, EvolutionLaw::Standard, s.consts), ch);
    blip_drift = std::max(blip_drift, std::abs(wb - w0) / w0);
    last_ratio = ws / w0;
    table.rows.push_back({t, wb, ws, ws / wb});
  }
  res.tables.emplace_back("", std::move(table));
  res.report["width_t0"] = w0;
  res.report["blip_relative_drift_max"] = blip_drift;
  res.report["standard_final_ratio"] = last_ratio;

  const double negative_weight = project_positive_wavenumbers(st).discarded_fraction;
  res.report["nonpositive_k_weight"] = negative_weight;
  if (negative_weight < 0.01)
    res.report["note"] =
        "spectrum is nearly one-sided in k; the two evolution laws almost coincide";
  return res;
}

ScenarioResult run_kernel(const ScenarioConfig& cfg) {
  const ScenarioSetup s = setup(cfg);
  const std::vector<double> kernel = kernel_real_space(*s.lattice, s.consts);
  const SlopeFit fit = kernel_tail_slope(kernel, *s.lattice);

  ScenarioResult res;
  Table table;
  table.columns = {"x", "kernel"};
  for (int j = 0; j < s.lattice->n; ++j)
    table.rows.push_back(
        {s.lattice->xs[static_cast<std::size_t>(j)], kernel[static_cast<std::size_t>(j)]});
  res.tables.emplace_back("", std::move(table));

  int positives = 0;
  double evenness = 0.0;
  for (int j = 1; j < s.lattice->n; ++j) {
    if (kernel[static_cast<std::size_t>(j)] > 0.0 && j != s.lattice->zero_index()) ++positives;
    evenness = std::max(evenness, std::abs(kernel[static_cast<std::size_t>(j)] -
                                           kernel[static_cast<std::size_t>(s.lattice->n - j)]));
  }
  res.report["tail_slope"] = fit.slope;
  res.report["fit_window"] = {fit.window_lo, fit.window_hi};
  res.report["fit_points"] = fit.points;
  res.report["off_origin_positive_count"] = positives;
  res.report["evenness_residual"] = evenness;
  res.report["value_at_origin"] = kernel[static_cast<std::size_t>(s.lattice->zero_index())];
  return res;
}

ScenarioResult run_boost(const ScenarioConfig& cfg) {
  if (cfg.packets.empty()) throw std::invalid_argument("boost scenario needs a packet");
  const ScenarioSetup s = setup(cfg);
  const StateVector st = make_packet(cfg.packets[0], s.lattice, StateKind::SingleExcitation);

  const double drift = std::abs(norm(boost_state(st, cfg.beta)) - 1.0);

  PacketSpec coh_spec = cfg.packets[0];
  const StateVector coh = make_packet(coh_spec, s.lattice, StateKind::Coherent);
  const TwoPathResult two = covariance_two_path(coh, cfg.beta, s.consts, 0.5);
  const TwoPathResult control = covariance_two_path(coh, cfg.beta, s.consts, 1.0);

  ScenarioResult res;
  Table table;
  table.columns = {"beta", "doppler_right", "doppler_left", "norm_drift",
                   "two_path_normalized", "two_path_control_normalized"};
  table.rows.push_back({cfg.beta, doppler_factor(cfg.beta, Direction::Right),
                        doppler_factor(cfg.beta, Direction::Left), drift, two.normalized,
                        control.normalized});
  res.tables.emplace_back("", std::move(table));
  res.report["norm_drift"] = drift;
  res.report["two_path_normalized"] = two.normalized;
  res.report["two_path_peak_field"] = two.peak_field;
  res.report["two_path_control_normalized"] = control.normalized;
  return res;
}

ScenarioResult run_spectra(const ScenarioConfig& cfg) {
  const ScenarioSetup s = setup(cfg);
  const SpectraResult spec = single_excitation_spectra(*s.lattice, s.consts);

  ScenarioResult res;
  Table table;
  table.columns = {"channel", "k", "hdyn", "henergy"};
  for (Channel ch : all_channels())
    for (int i = 0; i < s.lattice->n; ++i)
      table.rows.push_back({static_cast<double>(ch.index()),
                            s.lattice->ks[static_cast<std::size_t>(i)],
                            spec.hdyn[static_cast<std::size_t>(i)],
                            spec.henergy[static_cast<std::size_t>(i)]});
  res.tables.emplace_back("", std::move(table));
  res.report["commutator_max_abs"] = spec.commutator_max_abs;
  return res;
}

ScenarioResult run_propagate(const ScenarioConfig& cfg) {
  if (cfg.packets.empty()) throw std::invalid_argument("propagate scenario needs a packet");
  const ScenarioSetup s = setup(cfg);

  StateVector coh = make_packet(cfg.packets[0], s.lattice, StateKind::Coherent);
  for (std::size_t i = 1; i < cfg.packets.size(); ++i)
    coh = superpose(coh, make_packet(cfg.packets[i], s.lattice, StateKind::Coherent));

  const std::vector<double> ts = snapped_times(cfg.time, *s.lattice, s.consts);

  ScenarioResult res;
  res.report["times"] = ts;
  for (std::size_t idx = 0; idx < ts.size(); ++idx) {
    const FieldSnapshot snap = field_expectation(coh, ts[idx], s.consts);
    Table table;
    table.columns = {"x", "Re Ey", "Im Ey", "Re Ez", "Im Ez",
                     "Re By", "Im By", "Re Bz", "Im Bz"};
    for (int j = 0; j < s.lattice->n; ++j) {
      const auto ju = static_cast<std::size_t>(j);
      table.rows.push_back({s.lattice->xs[ju], snap.ey[ju].real(), snap.ey[ju].imag(),
                            snap.ez[ju].real(), snap.ez[ju].imag(), snap.by[ju].real(),
                            snap.by[ju].imag(), snap.bz[ju].real(), snap.bz[ju].imag()});
    }
    char suffix[16];
    std::snprintf(suffix, sizeof suffix, "_t%03zu", idx);
    res.tables.emplace_back(suffix, std::move(table));
  }
  return res;
}

ScenarioResult run_scenario(const ScenarioConfig& cfg) {
  if (cfg.scenario == "orthogonality") return run_orthogonality(cfg);
  if (cfg.scenario == "dispersion-compare") return run_dispersion_compare(cfg);
  if (cfg.scenario == "kernel") return run_kernel(cfg);
  if (cfg.scenario == "boost") return run_boost(cfg);
  if (cfg.scenario == "spectra") return run_spectra(cfg);
  if (cfg.scenario == "propagate") return run_propagate(cfg);
  throw std::invalid_argument("unknown scenario: " + cfg.scenario);
}

std::vector<std::string> write_output(const ScenarioResult& result, const ScenarioConfig& cfg) {
  const auto [stem, ext] = split_extension(cfg.out);
  std::vector<std::string> written;

  for (const auto& [suffix, table] : result.tables) {
    const std::string path = stem + suffix + ext;
    std::ofstream out(path);
    if (!out) throw std::invalid_argument("cannot open output file: " + path);
    if (cfg.format == OutputFormat::Csv) {
      for (std::size_t c = 0; c < table.columns.size(); ++c)
        out << (c ? ", " : "") << table.columns[c];
      out << "\n";
      for (const auto& row : table.rows) {
        for (std::size_t c = 0; c < row.size(); ++c) out << (c ? ", " : "") << fmt17(row[c]);
        out << "\n";
      }
    } else {
      nlohmann::ordered_json j;
      j["columns"] = table.columns;
      j["rows"] = table.rows;
      out << j.dump(2) << "\n";
    }
    written.push_back(path);
  }

  nlohmann::ordered_json meta;
  meta["config"] = config_to_json(cfg);
  const PhysicalConstants consts = cfg.constants();
  meta["constants"] = {{"c", consts.c},
                       {"hbar", consts.hbar},
                       {"eps0", consts.eps0},
                       {"area", consts.area}};
  meta["version"] = version_string;
  meta["report"] = result.report;
  meta["outputs"] = written;

  const std::string meta_path = cfg.out + ".meta.json";
  std::ofstream meta_out(meta_path);
  if (!meta_out) throw std::invalid_argument("cannot open output file: " + meta_path);
  meta_out << meta.dump(2) << "\n";
  written.push_back(meta_path);
  return written;
}

}
