#include "rsir/eos.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "rsir/errors.hpp"

namespace rsir {

namespace {

double covolume_factor(const EosParams& eos, double rho) {
  const double f = 1.0 - rho * eos.b;
  if (!(rho > 0.0) || !(f > 0.0)) {
    std::ostringstream msg;
    msg << "density " << rho << " outside the EOS domain (1 - rho*b = " << f << ")";
    throw DomainError(msg.str());
  }
  return f;
}

}  // namespace

void EosParams::validate() const {
  if (!(gamma > 1.0)) throw std::invalid_argument("EOS gamma must exceed 1");
  if (!(p_inf >= 0.0)) throw std::invalid_argument("EOS p_inf must be non-negative");
  if (!(b >= 0.0)) throw std::invalid_argument("EOS covolume must be non-negative");
  if (!(cv > 0.0)) throw std::invalid_argument("EOS cv must be positive");
}

double pressure(const EosParams& eos, double rho, double e) {
  const double f = covolume_factor(eos, rho);
  return (eos.gamma - 1.0) * rho * e / f - eos.gamma * eos.p_inf;
}

double internal_energy(const EosParams& eos, double rho, double p) {
  const double f = covolume_factor(eos, rho);
  return (p + eos.gamma * eos.p_inf) * f / ((eos.gamma - 1.0) * rho);
}

double internal_energy_density(const EosParams& eos, double rho, double p) {
  const double f = covolume_factor(eos, rho);
  return (p + eos.gamma * eos.p_inf) * f / (eos.gamma - 1.0);
}

double sound_speed_sq(const EosParams& eos, double rho, double p) {
  const double f = covolume_factor(eos, rho);
  const double c2 = eos.gamma * (p + eos.p_inf) / (rho * f);
  if (!(c2 > 0.0) || !std::isfinite(c2)) {
    std::ostringstream msg;
    msg << "non-positive squared sound speed at rho=" << rho << ", p=" << p;
    throw DomainError(msg.str());
  }
  return c2;
}

double sound_speed(const EosParams& eos, double rho, double p) {
  return std::sqrt(sound_speed_sq(eos, rho, p));
}

double entropy(const EosParams& eos, double rho, double p) {
  check_admissible(eos, rho, p);
  const double v = 1.0 / rho - eos.b;
  return eos.cv * (std::log(p + eos.p_inf) + eos.gamma * std::log(v));
}

bool is_admissible(const EosParams& eos, double rho, double p) {
  return rho > 0.0 && 1.0 - rho * eos.b > 0.0 && p + eos.p_inf > 0.0 && std::isfinite(p);
}

void check_admissible(const EosParams& eos, double rho, double p) {
  covolume_factor(eos, rho);
  if (!(p + eos.p_inf > 0.0) || !std::isfinite(p)) {
    std::ostringstream msg;
    msg << "pressure " << p << " outside the EOS domain (p + p_inf must be positive)";
    throw DomainError(msg.str());
  }
}

std::optional<EosParams> eos_preset(std::string_view name) {
  if (name == "air-ideal") return EosParams::ideal(1.4);
  if (name == "water-sg") return EosParams::stiffened(4.4, 6.0e8);
  if (name == "water-nasg") return EosParams::nasg(4.4, 6.0e8, 5.0e-5);
  return std::nullopt;
}

std::vector<std::string> eos_preset_names() { return {"air-ideal", "water-sg", "water-nasg"}; }

}  // namespace rsir
