#include "dipolar/materials.hpp"

#include <cmath>
#include <fstream>
#include <istream>
#include <sstream>

#include "dipolar/asymptotics.hpp"
#include "dipolar/core_model.hpp"
#include "dipolar/correlations.hpp"
#include "dipolar/errors.hpp"
#include "dipolar/extremum.hpp"

namespace dipolar::materials {

void MaterialSpec::validate() const {
  if (!(gamma > 0.0) || !std::isfinite(gamma)) {
    throw InvalidArgument("material '" + name + "': gamma must be positive");
  }
  if (!(r > 0.0) || !std::isfinite(r)) {
    throw InvalidArgument("material '" + name + "': r must be positive");
  }
}

DipolarConstant dipolar_constant(const MaterialSpec& spec, const PhysicalConstants& k) {
  spec.validate();
  const double gh = spec.gamma * k.hbar;
  DipolarConstant d;
  d.d_joule = k.mu0_over_4pi * gh * gh / (2.0 * spec.r * spec.r * spec.r);
  d.d_kelvin = d.d_joule / k.k_boltzmann;
  return d;
}

MaterialPrediction predict(const MaterialSpec& spec, std::optional<double> temperature_kelvin,
                           const PhysicalConstants& k) {
  const DipolarConstant d = dipolar_constant(spec, k);
  const ExtremumResult max = solve_zero_field_max(kDipolarAnisotropy);

  MaterialPrediction p;
  p.name = spec.name;
  p.d_joule = d.d_joule;
  p.d_kelvin = d.d_kelvin;
  p.t_max = max.t_m * d.d_kelvin;
  p.q_max = max.q_m;
  if (temperature_kelvin) {
    const double t = *temperature_kelvin;
    if (!(t > 0.0) || !std::isfinite(t)) {
      throw InvalidArgument("temperature must be a positive number of kelvin");
    }
    TemperatureEvaluation e;
    e.temperature_kelvin = t;
    e.x = d.d_kelvin / t;
    e.q = discord_thermal_zero_field(kDipolarAnisotropy, e.x);
    e.q_series = asymptotics::high_t_discord(e.x);
    p.q_at = e;
  }
  return p;
}

MaterialTable MaterialTable::builtin() {
  MaterialTable t;
  t.add({"gypsum", kProtonGyromagneticRatio, 0.158e-9});
  t.add({"dichloroethane", kProtonGyromagneticRatio, 0.17e-9});
  return t;
}

void MaterialTable::add(MaterialSpec spec) {
  spec.validate();
  std::string key = spec.name;
  entries_.insert_or_assign(std::move(key), std::move(spec));
}

void MaterialTable::load(std::istream& in) {
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    MaterialSpec spec;
    if (!(fields >> spec.name)) continue;
    std::string extra;
    if (!(fields >> spec.gamma >> spec.r) || (fields >> extra)) {
      throw InvalidArgument("material config line " + std::to_string(line_no) +
                            ": expected 'name gamma r'");
    }
    try {
      add(std::move(spec));
    } catch (const InvalidArgument& e) {
      throw InvalidArgument("material config line " + std::to_string(line_no) + ": " + e.what());
    }
  }
}

void MaterialTable::load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot open material config '" + path + "'");
  load(in);
}

std::optional<MaterialSpec> MaterialTable::find(const std::string& name) const {
  if (auto it = entries_.find(name); it != entries_.end()) return it->second;
  return std::nullopt;
}

}  // namespace dipolar::materials
