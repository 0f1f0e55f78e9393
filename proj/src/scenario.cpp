#include "nhnet/scenario.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "nhnet/dynamics.hpp"
#include "nhnet/io.hpp"
#include "nhnet/network.hpp"
#include "nhnet/reduction.hpp"
#include "nhnet/scattering.hpp"
#include "nhnet/spectra.hpp"

namespace nhnet {

using nlohmann::json;

namespace {

[[noreturn]] void config_error(const std::string& msg) { throw Error(ErrorKind::InvalidConfig, msg); }

void require_config(bool cond, const std::string& msg) {
  if (!cond) config_error(msg);
}

json cplx_json(Cplx z) { return json::array({z.real(), z.imag()}); }

// ---------------------------------------------------------------------------
// Parameter access with the schema already enforced by parse_config.

struct Params {
  const json& j;
  [[nodiscard]] double num(const char* key) const { return j.at(key).get<double>(); }
  [[nodiscard]] int integer(const char* key) const { return j.at(key).get<int>(); }
  [[nodiscard]] std::string str(const char* key) const { return j.at(key).get<std::string>(); }
  [[nodiscard]] bool flag(const char* key) const { return j.at(key).get<bool>(); }
  [[nodiscard]] std::vector<double> nums(const char* key) const { return j.at(key).get<std::vector<double>>(); }
  [[nodiscard]] std::vector<int> ints(const char* key) const { return j.at(key).get<std::vector<int>>(); }
};

bool same_kind(const json& def, const json& val) {
  if (def.is_number_integer()) return val.is_number_integer();
  if (def.is_number()) return val.is_number();
  if (def.is_boolean()) return val.is_boolean();
  if (def.is_string()) return val.is_string();
  if (def.is_object()) return val.is_object();
  if (def.is_array()) {
    if (!val.is_array() || val.empty()) return false;
    const bool ints = !def.empty() && def.front().is_number_integer();
    return std::all_of(val.begin(), val.end(),
                       [ints](const json& v) { return ints ? v.is_number_integer() : v.is_number(); });
  }
  return false;
}

void check_scenario_ranges(const std::string& scenario, const Params& p) {
  const auto positive = [&](const char* key) {
    require_config(p.num(key) > 0.0, std::string("parameter '") + key + "' must be positive");
  };
  if (scenario == "defect") {
    positive("kappa");
    positive("band_window");
    require_config(p.integer("n_q") >= 2, "parameter 'n_q' must be at least 2");
  } else if (scenario == "lee") {
    positive("kappa");
    positive("t_max");
    positive("dt");
    require_config(p.num("g_imag") >= 0.0, "parameter 'g_imag' must be non-negative");
    require_config(p.integer("n_trunc") >= 2, "parameter 'n_trunc' must be at least 2");
    require_config(p.integer("sample_every") >= 1, "parameter 'sample_every' must be at least 1");
    const auto ref = p.str("e_ref");
    require_config(ref == "E1" || ref == "E2", "parameter 'e_ref' must be \"E1\" or \"E2\"");
  } else if (scenario == "ptbic") {
    positive("kappa");
    positive("eps_imag");
    positive("threshold_resolution");
    positive("band_edge");
    const int total = p.integer("total_sites");
    require_config(total >= 5 && total % 2 == 1, "parameter 'total_sites' must be odd and at least 5");
    require_config(p.num("threshold_lo") < p.num("threshold_hi"), "need threshold_lo < threshold_hi");
    require_config(p.num("u_aux") != 0.0, "parameter 'u_aux' must be nonzero");
  } else if (scenario == "reduce") {
    const auto mode = p.str("mode");
    require_config(mode == "exact" || mode == "large_potential" || mode == "markov",
                   "parameter 'mode' must be one of exact, large_potential, markov");
    network_from_json(p.j.at("network"));
  } else if (scenario == "sweep") {
    positive("kappa");
    positive("eps_imag");
    positive("threshold_resolution");
    require_config(p.integer("u_steps") >= 2, "parameter 'u_steps' must be at least 2");
    require_config(p.num("u_min") < p.num("u_max"), "need u_min < u_max");
    require_config(p.integer("threads") >= 0, "parameter 'threads' must be non-negative");
    for (int n : p.ints("total_sites")) {
      require_config(n >= 5 && n % 2 == 1, "every entry of 'total_sites' must be odd and at least 5");
    }
  }
}

// ---------------------------------------------------------------------------

struct Writer {
  const ScenarioConfig& cfg;
  RunResult& result;

  [[nodiscard]] bool wants(OutputFormat f) const { return cfg.formats.contains(f); }

  void emit(const std::string& name, const std::string& content) {
    const auto path = cfg.output / name;
    io::write_file(path, content);
    result.files.push_back(path);
  }
  void csv(const std::string& name, const io::CsvTable& t) {
    if (wants(OutputFormat::Csv)) emit(name, t.str());
  }
  void svg(const std::string& name, const io::SvgPlot& plot) {
    if (wants(OutputFormat::Svg)) emit(name, plot.render());
  }
  void summary(const json& doc) {
    if (wants(OutputFormat::Json)) emit("summary.json", doc.dump(2) + "\n");
  }
};

void run_defect(const Params& p, Writer& out) {
  const double kappa = p.num("kappa");
  const double theta = p.num("theta");
  const int n_q = p.integer("n_q");
  const double window = p.num("band_window") * kappa;

  io::CsvTable table({"U_over_kappa", "E_over_kappa", "abs_t_sq", "arg_t", "abs_r_sq"});
  io::SvgPlot plot{"Spectral transmittance", "E / kappa", "|t|^2", {}};
  io::CsvTable poles_table({"U_over_kappa", "y_re", "y_im", "E_re", "E_im"});
  json curves = json::array();
  std::vector<double> deviations;

  for (double u : p.nums("u_values")) {
    const auto params = DefectChainParams::invisible(theta, u, kappa);
    io::PlotSeries line;
    std::ostringstream label;
    label << "U/kappa = " << u;
    line.label = label.str();
    double worst = 0.0;
    for (int k = n_q - 1; k >= 0; --k) {
      const double q = std::numbers::pi * (k + 1) / (n_q + 1);
      const auto sp = defect_transmission(params, q);
      table.add_row({u / kappa, sp.energy / kappa, sp.transmittance(), std::arg(sp.t), sp.reflectance()});
      line.x.push_back(sp.energy / kappa);
      line.y.push_back(sp.transmittance());
      if (std::abs(sp.energy) < window) worst = std::max(worst, std::abs(1.0 - sp.transmittance()));
    }
    plot.series.push_back(std::move(line));
    deviations.push_back(worst);

    json poles = json::array();
    for (const auto& pole : bound_state_poles(u, theta, kappa)) {
      poles_table.add_row({u / kappa, pole.y.real(), pole.y.imag(), pole.energy.real(), pole.energy.imag()});
      poles.push_back({{"y", cplx_json(pole.y)}, {"energy", cplx_json(pole.energy)}, {"residual", pole.residual}});
    }
    curves.push_back({{"U", u},
                      {"omega", params.omega},
                      {"sigma", params.sigma},
                      {"max_abs_one_minus_transmittance", worst},
                      {"bound_states", poles}});
  }

  bool decreasing = true;
  for (std::size_t i = 1; i < deviations.size(); ++i) decreasing = decreasing && deviations[i] < deviations[i - 1];

  out.csv("transmission.csv", table);
  out.csv("bound_states.csv", poles_table);
  out.svg("transmission.svg", plot);
  out.summary({{"scenario", "defect"},
               {"theta", theta},
               {"band_window", window},
               {"curves", curves},
               {"deviation_strictly_decreasing", decreasing}});
}

void run_lee(const Params& p, Writer& out) {
  LeeParams lp;
  lp.kappa = p.num("kappa");
  lp.sigma = p.num("sigma");
  lp.g_imag = p.num("g_imag");
  lp.theta = p.num("theta");
  lp.omega = p.num("omega");
  lp.n_trunc = p.integer("n_trunc");
  const auto ref = p.str("e_ref") == "E1" ? LeeReference::Physical : LeeReference::Ghost;
  const int every = p.integer("sample_every");

  const auto [e1, e2] = lee_bound_energies(lp.sigma, lp.g_imag, lp.kappa);
  const auto synth = build_lee_synth(lp, ref);
  const auto cmp = compare_lee(lp, p.num("t_max"), p.num("dt"), ref);

  io::CsvTable table({"t", "P_exact", "P_synth"});
  io::SvgPlot plot{"Occupation probability of site 0", "t * kappa", "P(t)", {}};
  io::PlotSeries exact_line{"exact Lee chain", {}, {}};
  io::PlotSeries synth_line{"synthesized lattice", {}, {}};
  for (std::size_t k = 0; k < cmp.exact.times.size(); k += static_cast<std::size_t>(every)) {
    table.add_row({cmp.exact.times[k], cmp.exact.values[k], cmp.synth.values[k]});
    exact_line.x.push_back(cmp.exact.times[k]);
    exact_line.y.push_back(cmp.exact.values[k]);
    synth_line.x.push_back(cmp.synth.times[k]);
    synth_line.y.push_back(cmp.synth.values[k]);
  }
  plot.series = {std::move(exact_line), std::move(synth_line)};

  io::CsvTable phase({"sigma_over_kappa", "G_curve1_over_kappa", "G_curve2_over_kappa"});
  for (int k = 0; k <= 80; ++k) {
    const double s = 2.0 + 0.05 * k;
    const auto curves = lee_phase_boundaries(s);
    phase.add_row({s, curves.g_curve1, curves.g_curve2});
  }

  std::string region = "undefined";
  std::optional<LeePhaseBoundaries> curves;
  if (lp.sigma >= 2.0 * lp.kappa) {
    curves = lee_phase_boundaries(lp.sigma, lp.kappa);
    switch (classify_lee(lp.sigma, lp.g_imag, lp.kappa)) {
      case LeeRegion::OneBoundState: region = "I"; break;
      case LeeRegion::TwoBoundStates: region = "II"; break;
      case LeeRegion::BrokenPT: region = "broken"; break;
    }
  }

  out.csv("pt_compare.csv", table);
  out.csv("phase_boundaries.csv", phase);
  out.svg("pt_compare.svg", plot);
  json summary{{"scenario", "lee"},
               {"E1", cplx_json(e1)},
               {"E2", cplx_json(e2)},
               {"e_ref", p.str("e_ref")},
               {"U_aux", cplx_json(synth.h_a(0, 0))},
               {"sigma1", cplx_json(synth.h_s(0, 0))},
               {"sigma2", cplx_json(synth.h_s(1, 1))},
               {"region", region},
               {"beat_expected", cmp.beat_expected},
               {"dominant_frequency_exact", cmp.dominant_frequency},
               {"dominant_frequency_synth", cmp.dominant_frequency_synth},
               {"linf_gap", cmp.linf_gap},
               {"echo_time", cmp.echo_time},
               {"trustworthy_window", json::array({0.0, cmp.echo_time})}};
  if (curves) summary["phase_boundaries"] = json{{"G_curve1", curves->g_curve1}, {"G_curve2", curves->g_curve2}};
  out.summary(summary);
}

void run_ptbic(const Params& p, Writer& out) {
  const auto params =
      PtBicParams::with_total_sites(p.integer("total_sites"), p.num("omega"), p.num("u_aux"), p.num("kappa"));
  const auto net = build_pt_bic(params);
  const auto rep = spectrum(assemble_composite(net));
  const double band_edge = p.num("band_edge") * params.kappa;

  io::CsvTable table({"index", "re_E", "im_E", "R"});
  io::PlotSeries levels{"eigenvalues", {}, {}, io::PlotSeries::Style::Points};
  io::PlotSeries ratios{"participation ratio", {}, {}, io::PlotSeries::Style::Points};
  for (std::size_t k = 0; k < rep.energies.size(); ++k) {
    const double kk = static_cast<double>(k);
    table.add_row({kk, rep.energies[k].real(), rep.energies[k].imag(), rep.participation[k]});
    levels.x.push_back(kk);
    levels.y.push_back(rep.energies[k].real());
    ratios.x.push_back(rep.energies[k].real());
    ratios.y.push_back(rep.participation[k]);
  }

  json gap_states = json::array();
  for (auto k : rep.outside_band(band_edge)) {
    gap_states.push_back({{"index", k}, {"energy", cplx_json(rep.energies[k])}, {"R", rep.participation[k]}});
  }
  const auto bic_index = rep.nearest(Cplx{0.0, 0.0});
  const CVector bic_mode = rep.modes.col(static_cast<Eigen::Index>(bic_index));
  const auto residual = verify_bic(params);

  json summary{{"scenario", "ptbic"},
               {"n_sys", params.n_sites},
               {"total_sites", params.n_sites + 2},
               {"g", params.g()},
               {"max_abs_imag", rep.max_abs_imag},
               {"conjugation_defect", conjugation_defect(rep.energies)},
               {"gap_states", gap_states},
               {"bic",
                {{"index", bic_index},
                 {"energy", cplx_json(rep.energies[bic_index])},
                 {"R", rep.participation[bic_index]},
                 {"odd_site_mass", odd_site_mass(bic_mode, net.n_sys(), net.site_offset)},
                 {"overlap_with_analytic", overlap(bic_mode, embed_bic_composite(params))},
                 {"interior_residual", residual.interior},
                 {"boundary_residual", residual.boundary},
                 {"tail_bound", residual.tail_bound}}}};
  if (p.flag("scan_threshold")) {
    const auto builder = [&](double u) {
      auto q = params;
      q.u_aux = u;
      return assemble_composite(build_pt_bic(q));
    };
    summary["pt_threshold"] = pt_threshold_scan(builder, p.num("threshold_lo"), p.num("threshold_hi"),
                                                p.num("eps_imag"), p.num("threshold_resolution"));
    summary["eps_imag"] = p.num("eps_imag");
  }

  out.csv("spectrum.csv", table);
  out.svg("spectrum.svg", io::SvgPlot{"Energy spectrum", "mode index", "Re E / kappa", {std::move(levels)}});
  out.svg("participation.svg", io::SvgPlot{"Participation ratio", "Re E / kappa", "R", {std::move(ratios)}});
  out.summary(summary);
}

void run_reduce(const Params& p, Writer& out) {
  const auto net = network_from_json(p.j.at("network"));
  const auto mode = p.str("mode");
  const Cplx energy{p.num("energy_re"), p.num("energy_im")};

  CMatrix h;
  json extra = json::object();
  if (mode == "exact") {
    h = effective_hamiltonian(net, energy);
  } else if (mode == "large_potential") {
    h = large_potential_effective(net);
  } else {
    h = markov_effective(net);
    extra["weak_coupling_ratio"] = weak_coupling_ratio(net);
  }

  io::CsvTable table({"i", "j", "re", "im"});
  json entries = json::array();
  for (Eigen::Index i = 0; i < h.rows(); ++i) {
    for (Eigen::Index j = 0; j < h.cols(); ++j) {
      if (h(i, j) == Cplx{0.0, 0.0}) continue;
      table.add_row({static_cast<double>(i), static_cast<double>(j), h(i, j).real(), h(i, j).imag()});
      entries.push_back({i, j, h(i, j).real(), h(i, j).imag()});
    }
  }
  json violations = json::array();
  for (const auto& v : validate(net).violations) violations.push_back(v.describe());

  out.csv("effective.csv", table);
  json summary{{"scenario", "reduce"},
               {"mode", mode},
               {"energy", cplx_json(energy)},
               {"n_sys", net.n_sys()},
               {"entries", entries},
               {"violations", violations}};
  summary.update(extra);
  out.summary(summary);
}

void run_sweep(const Params& p, Writer& out) {
  const double kappa = p.num("kappa");
  const double omega = p.num("omega");
  const double eps = p.num("eps_imag");
  const auto sizes = p.ints("total_sites");
  const int steps = p.integer("u_steps");
  const double u_min = p.num("u_min");
  const double u_max = p.num("u_max");

  std::vector<double> us(static_cast<std::size_t>(steps));
  for (int k = 0; k < steps; ++k) us[static_cast<std::size_t>(k)] = u_min + (u_max - u_min) * k / (steps - 1);

  const auto composite = [&](int total, double u) {
    return assemble_composite(build_pt_bic(PtBicParams::with_total_sites(total, omega, u, kappa)));
  };

  const std::size_t jobs = sizes.size() * us.size();
  std::vector<double> imag(jobs, 0.0);
  std::vector<std::string> failures(jobs);
  unsigned threads = static_cast<unsigned>(p.integer("threads"));
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, static_cast<unsigned>(jobs));

  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < threads; ++w) {
    pool.emplace_back([&] {
      for (std::size_t job = next++; job < jobs; job = next++) {
        try {
          imag[job] = max_abs_imag(composite(sizes[job / us.size()], us[job % us.size()]));
        } catch (const std::exception& e) {
          failures[job] = e.what();
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  for (const auto& f : failures) {
    if (!f.empty()) throw Error(ErrorKind::ConvergenceFailure, "sweep: " + f);
  }

  io::CsvTable table({"total_sites", "U_over_kappa", "max_abs_imag", "broken"});
  io::SvgPlot plot{"PT breaking vs auxiliary gain/loss", "U / kappa", "max |Im E| / kappa", {}};
  json thresholds = json::array();
  for (std::size_t s = 0; s < sizes.size(); ++s) {
    io::PlotSeries line;
    line.label = "N = " + std::to_string(sizes[s]);
    std::optional<double> threshold;
    for (std::size_t k = 0; k < us.size(); ++k) {
      const double v = imag[s * us.size() + k];
      const bool broken = v > eps;
      table.add_row({static_cast<double>(sizes[s]), us[k], v, broken ? 1.0 : 0.0});
      line.x.push_back(us[k]);
      line.y.push_back(v);
      if (!threshold && broken && k > 0) {
        threshold = pt_threshold_scan([&](double u) { return composite(sizes[s], u); }, us[k - 1], us[k], eps,
                                      p.num("threshold_resolution"));
      }
    }
    plot.series.push_back(std::move(line));
    thresholds.push_back({{"total_sites", sizes[s]}, {"pt_threshold", threshold ? json(*threshold) : json(nullptr)}});
  }

  out.csv("sweep.csv", table);
  out.svg("sweep.svg", plot);
  out.summary({{"scenario", "sweep"}, {"eps_imag", eps}, {"thresholds", thresholds}});
}

std::string format_list(const std::set<OutputFormat>& formats) {
  std::string out;
  for (auto f : formats) {
    if (!out.empty()) out += ',';
    out += f == OutputFormat::Csv ? "csv" : f == OutputFormat::Json ? "json" : "svg";
  }
  return out;
}

}  // namespace

const std::vector<std::string>& scenario_names() {
  static const std::vector<std::string> names{"defect", "lee", "ptbic", "reduce", "sweep"};
  return names;
}

json default_parameters(const std::string& scenario) {
  if (scenario == "defect") {
    return {{"kappa", 1.0}, {"theta", 0.2}, {"u_values", {-5.0, -10.0, -20.0, -40.0}}, {"n_q", 2000},
            {"band_window", 1.9}};
  }
  if (scenario == "lee") {
    return {{"kappa", 1.0}, {"sigma", 3.0},    {"g_imag", 1.05}, {"theta", 0.2},       {"omega", 7.0},
            {"n_trunc", 300}, {"t_max", kDynamicsTMax}, {"dt", kDynamicsDt}, {"e_ref", "E2"}, {"sample_every", 20}};
  }
  if (scenario == "ptbic") {
    return {{"kappa", 1.0},         {"omega", 1.0},          {"u_aux", 0.4},          {"total_sites", 403},
            {"eps_imag", 1e-6},     {"scan_threshold", true}, {"threshold_lo", 0.3},  {"threshold_hi", 0.6},
            {"threshold_resolution", 1e-3}, {"band_edge", 2.0}};
  }
  if (scenario == "reduce") {
    return {{"mode", "exact"}, {"energy_re", 0.0}, {"energy_im", 0.0}};
  }
  if (scenario == "sweep") {
    return {{"kappa", 1.0},  {"omega", 1.0},    {"total_sites", {103, 203, 403}}, {"u_min", 0.3},
            {"u_max", 0.6},  {"u_steps", 7},   {"eps_imag", 1e-6},               {"threads", 0},
            {"threshold_resolution", 1e-3}};
  }
  config_error("unknown scenario '" + scenario + "'");
}

ScenarioConfig parse_config(const std::string& scenario, const json& doc, const std::filesystem::path& output) {
  const auto& names = scenario_names();
  require_config(std::find(names.begin(), names.end(), scenario) != names.end(),
                 "unknown scenario '" + scenario + "'");
  require_config(doc.is_object(), "config must be a JSON object");
  for (const auto& [key, _] : doc.items()) {
    require_config(key == "schema_version" || key == "scenario" || key == "parameters",
                   "unknown config key '" + key + "'");
  }
  require_config(doc.contains("schema_version"), "config is missing 'schema_version'");
  require_config(doc["schema_version"] == kConfigSchemaVersion,
                 "unsupported schema_version " + doc["schema_version"].dump());
  if (doc.contains("scenario")) {
    require_config(doc["scenario"] == scenario,
                   "config is for scenario " + doc["scenario"].dump() + ", not '" + scenario + "'");
  }
  const json given = doc.value("parameters", json::object());
  require_config(given.is_object(), "'parameters' must be an object");

  ScenarioConfig cfg;
  cfg.scenario = scenario;
  cfg.output = output;
  cfg.parameters = default_parameters(scenario);
  for (const auto& [key, val] : given.items()) {
    if (scenario == "reduce" && key == "network") {
      require_config(val.is_object(), "parameter 'network' must be a network object");
      cfg.parameters[key] = val;
      continue;
    }
    require_config(cfg.parameters.contains(key), "unknown parameter '" + key + "' for scenario '" + scenario + "'");
    require_config(same_kind(cfg.parameters[key], val),
                   "parameter '" + key + "' has the wrong type (expected like " + cfg.parameters[key].dump() + ")");
    cfg.parameters[key] = cfg.parameters[key].is_number_float() ? json(val.get<double>()) : val;
  }
  if (scenario == "reduce") require_config(cfg.parameters.contains("network"), "scenario 'reduce' needs 'network'");
  for (const auto& [key, _] : cfg.parameters.items()) {
    if (!given.contains(key)) cfg.defaulted.insert(key);
  }
  check_scenario_ranges(scenario, Params{cfg.parameters});
  return cfg;
}

std::set<OutputFormat> parse_formats(const std::string& list) {
  std::set<OutputFormat> out;
  std::stringstream ss(list);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item == "csv") out.insert(OutputFormat::Csv);
    else if (item == "json") out.insert(OutputFormat::Json);
    else if (item == "svg") out.insert(OutputFormat::Svg);
    else config_error("unknown output format '" + item + "'");
  }
  require_config(!out.empty(), "no output format selected");
  return out;
}

RunResult run(const ScenarioConfig& cfg) {
  const auto start = std::chrono::steady_clock::now();
  std::error_code ec;
  std::filesystem::create_directories(cfg.output, ec);
  require_config(!ec && std::filesystem::is_directory(cfg.output),
                 "cannot create output directory " + cfg.output.string());

  RunResult result;
  Writer out{cfg, result};
  const Params p{cfg.parameters};
  if (cfg.scenario == "defect") run_defect(p, out);
  else if (cfg.scenario == "lee") run_lee(p, out);
  else if (cfg.scenario == "ptbic") run_ptbic(p, out);
  else if (cfg.scenario == "reduce") run_reduce(p, out);
  else if (cfg.scenario == "sweep") run_sweep(p, out);
  else config_error("unknown scenario '" + cfg.scenario + "'");

  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::ostringstream m;
  m << "tool: nhnet " << kToolVersion << "\n";
  m << "scenario: " << cfg.scenario << "\n";
  m << "schema_version: " << kConfigSchemaVersion << "\n";
  m << "formats: " << format_list(cfg.formats) << "\n";
  m << "parameters:\n";
  for (const auto& [key, val] : cfg.parameters.items()) {
    m << "  " << key << " = " << val.dump() << (cfg.defaulted.contains(key) ? "  (default)" : "") << "\n";
  }
  m << "files:\n";
  for (const auto& f : result.files) m << "  " << f.filename().string() << "\n";
  m << "runtime_seconds: " << seconds << "\n";
  out.emit("manifest.txt", m.str());
  return result;
}

int cli_main(int argc, char** argv) {
  CLI::App app{"Non-Hermitian tight-binding network engineering: batch scenarios"};
  std::string scenario;
  std::string config_path;
  std::string out_dir;
  std::string formats = "csv,json,svg";
  bool seedless = false;
  app.add_option("scenario", scenario, "defect | lee | ptbic | reduce | sweep")->required();
  app.add_option("--config", config_path, "scenario config (JSON)")->required();
  app.add_option("--out", out_dir, "output directory")->required();
  app.add_option("--format", formats, "comma-separated subset of csv,json,svg");
  app.add_flag("--seedless", seedless, "accepted for compatibility; every run is deterministic");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    std::ifstream in(config_path);
    if (!in) config_error("cannot read config file " + config_path);
    json doc;
    try {
      doc = json::parse(in);
    } catch (const json::parse_error& e) {
      config_error(std::string("config is not valid JSON: ") + e.what());
    }
    auto cfg = parse_config(scenario, doc, out_dir);
    cfg.formats = parse_formats(formats);
    const auto result = run(cfg);
    for (const auto& f : result.files) std::cout << f.string() << "\n";
    return 0;
  } catch (const Error& e) {
    std::cerr << "nhnet: " << e.what() << "\n";
    return e.kind() == ErrorKind::InvalidConfig ? 2 : 3;
  } catch (const std::exception& e) {
    std::cerr << "nhnet: " << e.what() << "\n";
    return 3;
  }
}

}  // namespace nhnet
