#include "cli.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <mutex>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "dipolar/core_model.hpp"
#include "dipolar/correlations.hpp"
#include "dipolar/errors.hpp"
#include "dipolar/extremum.hpp"
#include "dipolar/materials.hpp"
#include "dipolar/oracle.hpp"

namespace dipolar::cli {

namespace {

using nlohmann::ordered_json;

// Raised for flag combinations CLI11 cannot express.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct OutputOptions {
  std::string format;
  int precision = 12;
  std::string path;
};

struct MaterialOptions {
  bool kelvin = false;
  std::string name;
  double gamma = 0.0;
  double r = 0.0;
  std::string config;
};

struct Range {
  std::optional<double> single;
  std::string range;
  int count = 0;
  double step = 0.0;
};

double round_sig(double v, int precision) {
  if (!std::isfinite(v)) return v;
  return std::strtod(format_number(v, precision).c_str(), nullptr);
}

ordered_json json_number(double v, int precision) {
  if (!std::isfinite(v)) return nullptr;
  return round_sig(v, precision);
}

ordered_json json_optional(const std::optional<double>& v, int precision) {
  if (!v) return nullptr;
  return json_number(*v, precision);
}

void add_output_flags(CLI::App* cmd, OutputOptions& o, const std::string& default_format) {
  o.format = default_format;
  cmd->add_option("--format", o.format, "Output format")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  cmd->add_option("--precision", o.precision, "Significant digits")
      ->check(CLI::Range(1, 17))
      ->capture_default_str();
  cmd->add_option("--out", o.path, "Write to FILE instead of stdout");
}

void add_material_flags(CLI::App* cmd, MaterialOptions& m) {
  cmd->add_flag("--kelvin", m.kelvin, "Temperatures are in kelvin (needs a material)");
  cmd->add_option("--material", m.name, "Material preset name");
  cmd->add_option("--gamma", m.gamma, "Gyromagnetic ratio, rad s^-1 T^-1");
  cmd->add_option("--r", m.r, "Interspin distance, m");
  cmd->add_option("--config", m.config, "Material config file: 'name gamma r' per line");
}

std::optional<materials::MaterialSpec> resolve_material(const MaterialOptions& m) {
  materials::MaterialTable table = materials::MaterialTable::builtin();
  if (!m.config.empty()) table.load_file(m.config);
  if (!m.name.empty() && m.r == 0.0) {
    auto spec = table.find(m.name);
    if (!spec) throw UsageError("unknown material '" + m.name + "'");
    if (m.gamma != 0.0) spec->gamma = m.gamma;
    return spec;
  }
  if (m.r != 0.0) {
    materials::MaterialSpec spec{m.name.empty() ? "custom" : m.name,
                                 m.gamma != 0.0 ? m.gamma : materials::kProtonGyromagneticRatio,
                                 m.r};
    spec.validate();
    return spec;
  }
  return std::nullopt;
}

// Converts a temperature flag value to k_B T / D.
std::function<double(double)> temperature_converter(const MaterialOptions& m) {
  if (!m.kelvin) return [](double t) { return t; };
  const auto spec = resolve_material(m);
  if (!spec) throw UsageError("--kelvin requires --material NAME or --r DISTANCE");
  const double d_kelvin = materials::dipolar_constant(*spec).d_kelvin;
  return [d_kelvin](double t) { return t / d_kelvin; };
}

std::vector<double> expand_range(const Range& r, const char* name) {
  if (r.range.empty()) {
    if (!r.single) throw UsageError(std::string("missing --") + name + " or --" + name + "-range");
    return {*r.single};
  }
  if (r.single) throw UsageError(std::string("--") + name + " and --" + name + "-range are exclusive");
  const auto colon = r.range.find(':');
  if (colon == std::string::npos) throw UsageError(std::string("--") + name + "-range expects LO:HI");
  double lo = 0.0;
  double hi = 0.0;
  try {
    lo = std::stod(r.range.substr(0, colon));
    hi = std::stod(r.range.substr(colon + 1));
  } catch (const std::exception&) {
    throw UsageError(std::string("--") + name + "-range expects numeric LO:HI");
  }
  if (!(lo <= hi)) throw UsageError(std::string("--") + name + "-range must satisfy LO <= HI");
  if ((r.count > 0) == (r.step > 0.0)) {
    throw UsageError(std::string("give exactly one of --") + name + "-count and --" + name + "-step");
  }
  std::vector<double> values;
  if (r.count > 0) {
    if (r.count == 1) {
      if (lo != hi) throw UsageError(std::string("--") + name + "-count 1 requires LO == HI");
      return {lo};
    }
    for (int i = 0; i < r.count; ++i) values.push_back(lo + (hi - lo) * i / (r.count - 1));
    values.back() = hi;
  } else {
    const double slack = 1e-9 * r.step;
    for (long i = 0;; ++i) {
      const double v = lo + r.step * static_cast<double>(i);
      if (v > hi + slack) break;
      values.push_back(std::min(v, hi));
    }
  }
  return values;
}

void add_range_flags(CLI::App* cmd, Range& r, const std::string& name, const std::string& what) {
  cmd->add_option("--" + name, r.single, what);
  cmd->add_option("--" + name + "-range", r.range, what + " range LO:HI");
  cmd->add_option("--" + name + "-count", r.count, "Number of " + name + " points")->check(CLI::PositiveNumber);
  cmd->add_option("--" + name + "-step", r.step, name + " step")->check(CLI::PositiveNumber);
}

void write_output(const std::string& content, const std::string& path, std::ostream& out) {
  if (path.empty()) {
    out << content;
    return;
  }
  const std::filesystem::path target(path);
  std::filesystem::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    if (!f) throw UsageError("cannot open '" + tmp.string() + "' for writing");
    f << content;
    f.flush();
    if (!f) {
      f.close();
      std::filesystem::remove(tmp);
      throw UsageError("failed writing '" + tmp.string() + "'");
    }
  }
  std::filesystem::rename(tmp, target);
}

// ---------------------------------------------------------------------------
// Thermal point evaluation shared by point and scan.

struct PointResult {
  double t = 0.0;
  double eta = 0.0;
  XState state;
  Correlators corr;
  CorrelationSet set;
};

PointResult evaluate_point(double delta, double t, double eta) {
  DimerParams params;
  params.delta = delta;
  params.eta = eta;
  params.validate();
  const ThermalPoint tp = ThermalPoint::from_reduced_temperature(t);
  PointResult r;
  r.t = t;
  r.eta = eta;
  r.state = gibbs_xstate(params, tp);
  r.corr = correlators(params, tp);
  r.set = correlation_set(r.state, eta);
  return r;
}

struct Column {
  const char* name;
  std::function<std::optional<double>(const PointResult&)> get;
};

const std::vector<Column>& quantity_columns() {
  static const std::vector<Column> cols = {
      {"m", [](const PointResult& p) { return std::optional(p.corr.m); }},
      {"g_par", [](const PointResult& p) { return std::optional(p.corr.g_par); }},
      {"g_perp", [](const PointResult& p) { return std::optional(p.corr.g_perp); }},
      {"I", [](const PointResult& p) { return std::optional(p.set.mutual); }},
      {"C", [](const PointResult& p) { return std::optional(p.set.classical); }},
      {"Q", [](const PointResult& p) { return std::optional(p.set.discord); }},
      {"Q1", [](const PointResult& p) { return std::optional(p.set.q1); }},
      {"Q2", [](const PointResult& p) { return std::optional(p.set.q2); }},
      {"E", [](const PointResult& p) { return std::optional(p.set.entanglement); }},
      {"Qg", [](const PointResult& p) { return p.set.geometric; }},
  };
  return cols;
}

std::vector<const Column*> select_columns(const std::vector<std::string>& requested) {
  const auto& all = quantity_columns();
  std::vector<const Column*> out;
  for (const Column& c : all) {
    if (requested.empty() || std::find(requested.begin(), requested.end(), c.name) != requested.end()) {
      out.push_back(&c);
    }
  }
  for (const std::string& q : requested) {
    const bool known = std::any_of(all.begin(), all.end(), [&](const Column& c) { return q == c.name; });
    if (!known) throw UsageError("unknown quantity '" + q + "'");
  }
  return out;
}

std::string render_table(const std::vector<PointResult>& rows, const std::vector<const Column*>& cols,
                         const OutputOptions& o) {
  std::ostringstream s;
  if (o.format == "csv") {
    s << "t,eta";
    for (const Column* c : cols) s << ',' << c->name;
    s << '\n';
    for (const PointResult& r : rows) {
      s << format_number(r.t, o.precision) << ',' << format_number(r.eta, o.precision);
      for (const Column* c : cols) {
        s << ',';
        if (const auto v = c->get(r)) s << format_number(*v, o.precision);
      }
      s << '\n';
    }
    return s.str();
  }
  ordered_json j = ordered_json::array();
  for (const PointResult& r : rows) {
    ordered_json row;
    row["t"] = json_number(r.t, o.precision);
    row["eta"] = json_number(r.eta, o.precision);
    for (const Column* c : cols) row[c->name] = json_optional(c->get(r), o.precision);
    j.push_back(std::move(row));
  }
  s << j.dump(2) << '\n';
  return s.str();
}

// ---------------------------------------------------------------------------

struct PointArgs {
  double delta = kDipolarAnisotropy;
  double t = 0.0;
  double eta = 0.0;
  OutputOptions out;
  MaterialOptions material;
};

std::string cmd_point(const PointArgs& a) {
  const auto to_reduced = temperature_converter(a.material);
  const double t = to_reduced(a.t);
  const PointResult r = evaluate_point(a.delta, t, a.eta);
  if (a.out.format == "csv") {
    std::vector<const Column*> cols;
    for (const Column& c : quantity_columns()) cols.push_back(&c);
    return render_table({r}, cols, a.out);
  }
  DimerParams params;
  params.delta = a.delta;
  params.eta = a.eta;
  const Spectrum sp = spectrum(params);
  const int p = a.out.precision;
  const double x = ThermalPoint::from_reduced_temperature(t).x();

  ordered_json j;
  j["params"] = {{"delta", json_number(a.delta, p)},
                 {"eta", json_number(a.eta, p)},
                 {"t", json_number(t, p)},
                 {"x", json_number(x, p)}};
  if (a.material.kelvin) j["params"]["temperature_kelvin"] = json_number(a.t, p);
  j["spectrum"] = {{"e1", json_number(sp.e1, p)}, {"e2", json_number(sp.e2, p)},
                   {"e3", json_number(sp.e3, p)}, {"e4", json_number(sp.e4, p)},
                   {"ground", json_number(sp.ground, p)}};
  j["xstate"] = {{"a", json_number(r.state.a, p)}, {"b", json_number(r.state.b, p)},
                 {"d", json_number(r.state.d, p)}, {"v", json_number(r.state.v, p)}};
  j["correlators"] = {{"m", json_number(r.corr.m, p)},
                      {"g_par", json_number(r.corr.g_par, p)},
                      {"g_perp", json_number(r.corr.g_perp, p)}};
  j["correlations"] = {{"S_A", json_number(r.set.s_a, p)},
                       {"S_AB", json_number(r.set.s_ab, p)},
                       {"I", json_number(r.set.mutual, p)},
                       {"C", json_number(r.set.classical, p)},
                       {"Q", json_number(r.set.discord, p)},
                       {"Q1", json_number(r.set.q1, p)},
                       {"Q2", json_number(r.set.q2, p)},
                       {"active_branch", DiscordBranches{r.set.q1, r.set.q2}.active()},
                       {"concurrence", json_number(r.set.concurrence, p)},
                       {"E", json_number(r.set.entanglement, p)},
                       {"Qg", json_optional(r.set.geometric, p)}};
  return j.dump(2) + "\n";
}

struct ScanArgs {
  double delta = kDipolarAnisotropy;
  Range t;
  Range eta;
  std::vector<std::string> quantities;
  OutputOptions out;
  MaterialOptions material;
  int jobs = 1;
};

std::string cmd_scan(ScanArgs a) {
  if (!a.eta.single && a.eta.range.empty()) a.eta.single = 0.0;
  const auto to_reduced = temperature_converter(a.material);
  std::vector<double> ts = expand_range(a.t, "t");
  for (double& t : ts) {
    if (!(t >= 0.0)) throw UsageError("temperatures must be >= 0");
    t = to_reduced(t);
  }
  const std::vector<double> etas = expand_range(a.eta, "eta");
  const auto cols = select_columns(a.quantities);
  const bool qg_requested = std::find(a.quantities.begin(), a.quantities.end(), "Qg") != a.quantities.end();
  if (qg_requested && std::any_of(etas.begin(), etas.end(), [](double e) { return e != 0.0; })) {
    throw UsageError("Qg is only defined at eta = 0");
  }

  // t outer, eta inner; workers fill fixed slots so the order is independent
  // of scheduling.
  std::vector<PointResult> rows(ts.size() * etas.size());
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (std::size_t i = next++; i < rows.size(); i = next++) {
      try {
        rows[i] = evaluate_point(a.delta, ts[i / etas.size()], etas[i % etas.size()]);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  const int jobs = std::max(1, a.jobs);
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (int i = 0; i < jobs; ++i) pool.emplace_back(worker);
  }
  if (failure) std::rethrow_exception(failure);
  return render_table(rows, cols, a.out);
}

struct SolveArgs {
  double delta = kDipolarAnisotropy;
  double eta = 0.0;
  OutputOptions out;
};

std::string cmd_solve_max(const SolveArgs& a) {
  const ExtremumResult r = a.eta == 0.0 ? solve_zero_field_max(a.delta) : locate_max_in_field(a.delta, a.eta);
  const int p = a.out.precision;
  if (a.out.format == "csv") {
    std::ostringstream s;
    s << "delta,eta,x_m,t_m,q_m,residual,cross_check_gap\n"
      << format_number(a.delta, p) << ',' << format_number(a.eta, p) << ',' << format_number(r.x_m, p)
      << ',' << format_number(r.t_m, p) << ',' << format_number(r.q_m, p) << ','
      << format_number(r.residual, p) << ',';
    if (r.cross_check_gap) s << format_number(*r.cross_check_gap, p);
    s << '\n';
    return s.str();
  }
  ordered_json j;
  j["delta"] = json_number(a.delta, p);
  j["eta"] = json_number(a.eta, p);
  j["method"] = a.eta == 0.0 ? "stationarity-root" : "direct-maximization";
  j["x_m"] = json_number(r.x_m, p);
  j["t_m"] = json_number(r.t_m, p);
  j["q_m"] = json_number(r.q_m, p);
  j["residual"] = json_number(r.residual, p);
  j["cross_check_gap"] = json_optional(r.cross_check_gap, p);
  return j.dump(2) + "\n";
}

struct MaterialArgs {
  MaterialOptions material;
  std::optional<double> at;
  OutputOptions out;
};

std::string cmd_material(const MaterialArgs& a) {
  const auto spec = resolve_material(a.material);
  if (!spec) throw UsageError("material requires --material NAME or --r DISTANCE");
  const materials::MaterialPrediction pr = materials::predict(*spec, a.at);
  const int p = a.out.precision;
  if (a.out.format == "csv") {
    std::ostringstream s;
    s << "name,gamma,r,d_joule,d_kelvin,t_max,q_max,temperature,q_at,q_series\n"
      << spec->name << ',' << format_number(spec->gamma, p) << ',' << format_number(spec->r, p) << ','
      << format_number(pr.d_joule, p) << ',' << format_number(pr.d_kelvin, p) << ','
      << format_number(pr.t_max, p) << ',' << format_number(pr.q_max, p) << ',';
    if (pr.q_at) {
      s << format_number(pr.q_at->temperature_kelvin, p) << ',' << format_number(pr.q_at->q, p) << ','
        << format_number(pr.q_at->q_series, p);
    } else {
      s << ",,";
    }
    s << '\n';
    return s.str();
  }
  ordered_json j;
  j["name"] = spec->name;
  j["gamma"] = json_number(spec->gamma, p);
  j["r"] = json_number(spec->r, p);
  j["d_joule"] = json_number(pr.d_joule, p);
  j["d_kelvin"] = json_number(pr.d_kelvin, p);
  j["t_max"] = json_number(pr.t_max, p);
  j["q_max"] = json_number(pr.q_max, p);
  if (pr.q_at) {
    j["at"] = {{"temperature", json_number(pr.q_at->temperature_kelvin, p)},
               {"x", json_number(pr.q_at->x, p)},
               {"q", json_number(pr.q_at->q, p)},
               {"q_series", json_number(pr.q_at->q_series, p)}};
  }
  return j.dump(2) + "\n";
}

struct VerifyArgs {
  double delta = kDipolarAnisotropy;
  std::vector<double> ts{0.3, 0.5, 1.0, 2.0, 5.0};
  std::vector<double> etas{0.0, 0.2, 1.0, 3.0};
  double tol = 1e-6;
  int grid_n = 64;
  int refine_iters = 40;
  OutputOptions out;
};

struct VerifyPoint {
  double t, eta, q_closed, q_oracle, c_closed, c_oracle, conc_closed, conc_oracle;
  bool pass;
};

std::pair<std::string, bool> cmd_verify(const VerifyArgs& a) {
  if (!(a.tol > 0.0)) throw UsageError("--tol must be positive");
  std::vector<VerifyPoint> points;
  for (double t : a.ts) {
    if (!(t >= 0.0)) throw UsageError("temperatures must be >= 0");
    for (double eta : a.etas) {
      DimerParams params;
      params.delta = a.delta;
      params.eta = eta;
      params.validate();
      const ThermalPoint tp = ThermalPoint::from_reduced_temperature(t);
      const XState s = gibbs_xstate(params, tp);
      // The oracle builds its own thermal state unless T = 0, where only the
      // analytic limit exists.
      const oracle::DensityMatrix4 rho =
          tp.is_zero_temperature() ? oracle::DensityMatrix4::from_xstate(s) : oracle::gibbs_general(params, tp);
      const oracle::MeasurementOptimum opt =
          oracle::optimize_classical_correlation(rho, {a.grid_n, a.refine_iters});
      VerifyPoint vp{};
      vp.t = t;
      vp.eta = eta;
      vp.q_closed = discord(s);
      vp.c_closed = classical_correlation(s);
      vp.c_oracle = opt.value;
      vp.q_oracle = std::max(0.0, oracle::mutual_information_numeric(rho) - opt.value);
      vp.conc_closed = concurrence(s);
      vp.conc_oracle = oracle::concurrence_general(rho);
      vp.pass = std::abs(vp.q_closed - vp.q_oracle) <= a.tol && std::abs(vp.c_closed - vp.c_oracle) <= a.tol &&
                std::abs(vp.conc_closed - vp.conc_oracle) <= a.tol;
      if (a.delta <= -1.0) vp.pass = vp.pass && vp.conc_closed == 0.0;
      points.push_back(vp);
    }
  }
  const bool all = std::all_of(points.begin(), points.end(), [](const VerifyPoint& p) { return p.pass; });
  const int p = a.out.precision;
  std::ostringstream s;
  if (a.out.format == "json") {
    ordered_json j;
    j["delta"] = json_number(a.delta, p);
    j["tolerance"] = a.tol;
    j["pass"] = all;
    j["points"] = ordered_json::array();
    for (const VerifyPoint& v : points) {
      j["points"].push_back({{"t", json_number(v.t, p)},
                             {"eta", json_number(v.eta, p)},
                             {"q_closed", json_number(v.q_closed, p)},
                             {"q_oracle", json_number(v.q_oracle, p)},
                             {"dq", json_number(std::abs(v.q_closed - v.q_oracle), 3)},
                             {"c_closed", json_number(v.c_closed, p)},
                             {"c_oracle", json_number(v.c_oracle, p)},
                             {"dc", json_number(std::abs(v.c_closed - v.c_oracle), 3)},
                             {"concurrence_closed", json_number(v.conc_closed, p)},
                             {"concurrence_oracle", json_number(v.conc_oracle, p)},
                             {"pass", v.pass}});
    }
    s << j.dump(2) << '\n';
  } else {
    s << "t,eta,dQ,dC,concurrence_closed,concurrence_oracle,status\n";
    for (const VerifyPoint& v : points) {
      s << format_number(v.t, p) << ',' << format_number(v.eta, p) << ','
        << format_number(std::abs(v.q_closed - v.q_oracle), 3) << ','
        << format_number(std::abs(v.c_closed - v.c_oracle), 3) << ',' << format_number(v.conc_closed, p) << ','
        << format_number(v.conc_oracle, p) << ',' << (v.pass ? "PASS" : "FAIL") << '\n';
    }
    s << "# verify " << (all ? "PASS" : "FAIL") << ": " << points.size() << " points, tolerance "
      << format_number(a.tol, 3) << '\n';
  }
  return {s.str(), all};
}

}  // namespace

std::string format_number(double v, int precision) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", precision, v == 0.0 ? 0.0 : v);
  return buf;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Correlations of a thermal dipolar spin-1/2 dimer"};
  app.require_subcommand(1);

  PointArgs point;
  auto* point_cmd = app.add_subcommand("point", "All correlations at one thermal point");
  point_cmd->add_option("--delta", point.delta, "Anisotropy")->capture_default_str();
  point_cmd->add_option("--t", point.t, "Reduced temperature k_B T/D (0 = ground state)")->required();
  point_cmd->add_option("--eta", point.eta, "Reduced field h/D")->capture_default_str();
  add_output_flags(point_cmd, point.out, "json");
  add_material_flags(point_cmd, point.material);

  ScanArgs scan;
  auto* scan_cmd = app.add_subcommand("scan", "Tabulate quantities over a (t, eta) grid");
  scan_cmd->add_option("--delta", scan.delta, "Anisotropy")->capture_default_str();
  add_range_flags(scan_cmd, scan.t, "t", "Reduced temperature");
  add_range_flags(scan_cmd, scan.eta, "eta", "Reduced field");
  scan_cmd->add_option("--quantities", scan.quantities, "Subset of m,g_par,g_perp,I,C,Q,Q1,Q2,E,Qg")
      ->delimiter(',');
  scan_cmd->add_option("--jobs", scan.jobs, "Worker threads")->check(CLI::PositiveNumber);
  add_output_flags(scan_cmd, scan.out, "csv");
  add_material_flags(scan_cmd, scan.material);

  SolveArgs solve;
  auto* solve_cmd = app.add_subcommand("solve-max", "Temperature of maximal discord");
  solve_cmd->add_option("--delta", solve.delta, "Anisotropy")->capture_default_str();
  solve_cmd->add_option("--eta", solve.eta, "Reduced field h/D")->capture_default_str();
  add_output_flags(solve_cmd, solve.out, "json");

  MaterialArgs material;
  auto* material_cmd = app.add_subcommand("material", "Dipolar constant and discord predictions");
  add_material_flags(material_cmd, material.material);
  material_cmd->add_option("--at", material.at, "Also evaluate Q at this temperature, K");
  add_output_flags(material_cmd, material.out, "json");

  VerifyArgs verify;
  auto* verify_cmd = app.add_subcommand("verify", "Compare closed forms with the measurement oracle");
  verify_cmd->add_option("--delta", verify.delta, "Anisotropy")->capture_default_str();
  verify_cmd->add_option("--t-list", verify.ts, "Reduced temperatures")->delimiter(',');
  verify_cmd->add_option("--eta-list", verify.etas, "Reduced fields")->delimiter(',');
  verify_cmd->add_option("--tol", verify.tol, "Absolute tolerance")->capture_default_str();
  verify_cmd->add_option("--grid-n", verify.grid_n, "Oracle grid size per angle")->check(CLI::Range(16, 4096));
  verify_cmd->add_option("--refine-iters", verify.refine_iters, "Oracle refinement halvings")
      ->check(CLI::NonNegativeNumber);
  add_output_flags(verify_cmd, verify.out, "csv");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }

  try {
    if (point_cmd->parsed()) {
      write_output(cmd_point(point), point.out.path, out);
    } else if (scan_cmd->parsed()) {
      write_output(cmd_scan(scan), scan.out.path, out);
    } else if (solve_cmd->parsed()) {
      write_output(cmd_solve_max(solve), solve.out.path, out);
    } else if (material_cmd->parsed()) {
      write_output(cmd_material(material), material.out.path, out);
    } else if (verify_cmd->parsed()) {
      auto [report, pass] = cmd_verify(verify);
      write_output(report, verify.out.path, out);
      if (!pass) {
        err << "verification failed\n";
        return kVerificationFailure;
      }
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const InvalidArgument& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const Error& e) {
    err << "numerical error: " << e.what() << '\n';
    return kNumericalError;
  } catch (const std::filesystem::filesystem_error& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }
  return kSuccess;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv;
  argv.reserve(args.size() + 1);
  argv.push_back("dipolar");
  for (const std::string& a : args) argv.push_back(a.c_str());
  return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace dipolar::cli
