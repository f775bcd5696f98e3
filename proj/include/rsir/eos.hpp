#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace rsir {

/// Noble-Abel stiffened-gas parameters. b = 0 gives the stiffened gas, b = 0 and
/// p_inf = 0 the ideal gas; all three share the same code path.
struct EosParams {
  double gamma = 1.4;
  double p_inf = 0.0;  // Pa
  double b = 0.0;      // covolume, m^3/kg
  double cv = 1.0;     // only scales the diagnostic entropy

  static EosParams ideal(double gamma) { return {gamma, 0.0, 0.0, 1.0}; }
  static EosParams stiffened(double gamma, double p_inf) { return {gamma, p_inf, 0.0, 1.0}; }
  static EosParams nasg(double gamma, double p_inf, double b) { return {gamma, p_inf, b, 1.0}; }

  bool has_covolume() const { return b != 0.0; }
  /// Throws std::invalid_argument when gamma <= 1, p_inf < 0, b < 0 or cv <= 0.
  void validate() const;
};

double pressure(const EosParams& eos, double rho, double e);
double internal_energy(const EosParams& eos, double rho, double p);
/// rho * e evaluated without dividing by rho; exactly rho-independent for b = 0.
double internal_energy_density(const EosParams& eos, double rho, double p);
double sound_speed_sq(const EosParams& eos, double rho, double p);
double sound_speed(const EosParams& eos, double rho, double p);

/// Diagnostic specific entropy cv * ln((p + p_inf) * (1/rho - b)^gamma), defined up to
/// an additive constant.
double entropy(const EosParams& eos, double rho, double p);

/// Throws DomainError unless rho > 0, 1 - rho*b > 0 and p + p_inf > 0.
void check_admissible(const EosParams& eos, double rho, double p);
bool is_admissible(const EosParams& eos, double rho, double p);

/// Named presets: "air-ideal", "water-sg", "water-nasg".
std::optional<EosParams> eos_preset(std::string_view name);
std::vector<std::string> eos_preset_names();

}  // namespace rsir
