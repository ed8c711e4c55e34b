#pragma once

// SI-unit bridge between nuclear spin pairs and the reduced model.

#include <iosfwd>
#include <map>
#include <optional>
#include <string>

namespace dipolar::materials {

/// Physical constants used for every conversion.
struct PhysicalConstants {
  double hbar = 1.054571817e-34;     ///< J s
  double k_boltzmann = 1.380649e-23; ///< J / K
  double mu0_over_4pi = 1e-7;        ///< T m / A
};

inline constexpr double kProtonGyromagneticRatio = 2.675e8;  ///< rad s^-1 T^-1

struct MaterialSpec {
  std::string name;
  double gamma = kProtonGyromagneticRatio;  ///< rad s^-1 T^-1
  double r = 0.0;                           ///< interspin distance, m

  /// Throws InvalidArgument unless gamma > 0 and r > 0.
  void validate() const;
};

struct DipolarConstant {
  double d_joule = 0.0;
  double d_kelvin = 0.0;
};

struct TemperatureEvaluation {
  double temperature_kelvin = 0.0;
  double x = 0.0;         ///< D / (k_B T)
  double q = 0.0;         ///< exact zero-field discord, bits
  double q_series = 0.0;  ///< high-temperature leading term, bits
};

struct MaterialPrediction {
  std::string name;
  double d_joule = 0.0;
  double d_kelvin = 0.0;
  double t_max = 0.0;  ///< K
  double q_max = 0.0;  ///< bits
  std::optional<TemperatureEvaluation> q_at;
};

/// D = (mu0/4pi) gamma^2 hbar^2 / (2 r^3).
DipolarConstant dipolar_constant(const MaterialSpec& spec, const PhysicalConstants& k = {});

/// Zero-field discord maximum in kelvin, optionally Q at a given temperature.
MaterialPrediction predict(const MaterialSpec& spec,
                           std::optional<double> temperature_kelvin = std::nullopt,
                           const PhysicalConstants& k = {});

/// Named material presets. Built-ins: gypsum (r = 0.158 nm) and
/// dichloroethane (r = 0.17 nm), both protons.
class MaterialTable {
 public:
  static MaterialTable builtin();

  /// Merge records from a plain-text stream, one "name gamma r" per line
  /// (SI units, '#' starts a comment). Records replace same-named entries.
  /// Throws InvalidArgument with the line number on malformed input.
  void load(std::istream& in);
  void load_file(const std::string& path);

  void add(MaterialSpec spec);
  std::optional<MaterialSpec> find(const std::string& name) const;
  const std::map<std::string, MaterialSpec>& entries() const noexcept { return entries_; }

 private:
  std::map<std::string, MaterialSpec> entries_;
};

}  // namespace dipolar::materials
