#include "rsir/cases.hpp"

#include <utility>

#include "rsir/config.hpp"

namespace rsir {

namespace {

// Initial data are chosen to reproduce the qualitative wave pattern of each test. Units
// are SI throughout.
const std::vector<std::pair<std::string, std::string>>& catalog() {
  static const std::vector<std::pair<std::string, std::string>> entries = {
      {"euler-contact-rest", R"(# Contact discontinuity at rest in air: a 10:1 density jump at uniform
# pressure and zero velocity.
model.type = euler
model.description = contact discontinuity at rest
model.eos = air-ideal
model.x_min = 0
model.x_max = 1
model.x_disc = 0.5
model.cells = 100
model.t_end = 6e-3
left.rho = 1
left.u = 0
left.p = 1e5
right.rho = 0.1
right.u = 0
right.p = 1e5
solver.name = rsir
)"},
      {"euler-contact-transport", R"(# The same density jump carried at 100 m/s from x = 0.2 m.
model.type = euler
model.description = transported contact discontinuity
model.eos = air-ideal
model.x_min = 0
model.x_max = 1
model.x_disc = 0.2
model.cells = 100
model.t_end = 6e-3
left.rho = 1
left.u = 100
left.p = 1e5
right.rho = 0.1
right.u = 100
right.p = 1e5
solver.name = rsir
)"},
      {"euler-shock-tube", R"(# Sod ratios in SI units: rarefaction, contact and shock.
model.type = euler
model.description = shock tube
model.eos = air-ideal
model.x_min = 0
model.x_max = 1
model.x_disc = 0.5
model.cells = 100
model.t_end = 3e-4
left.rho = 1
left.u = 0
left.p = 1e5
right.rho = 0.125
right.u = 0
right.p = 1e4
solver.name = rsir
)"},
      {"euler-double-expansion", R"(# Two receding streams: symmetric rarefactions around a low-pressure,
# low-density centre.
model.type = euler
model.description = double expansion
model.eos = air-ideal
model.x_min = 0
model.x_max = 1
model.x_disc = 0.5
model.cells = 100
model.t_end = 8.5e-4
left.rho = 1
left.u = -100
left.p = 1e5
right.rho = 1
right.u = 100
right.p = 1e5
solver.name = rsir
)"},
      {"euler-double-shock", R"(# Two colliding streams: symmetric shocks moving away from a
# compressed centre.
model.type = euler
model.description = double shock
model.eos = air-ideal
model.x_min = 0
model.x_max = 1
model.x_disc = 0.5
model.cells = 100
model.t_end = 8.5e-4
left.rho = 1
left.u = 200
left.p = 1e5
right.rho = 1
right.u = -200
right.p = 1e5
solver.name = rsir
)"},
      {"water-nasg-transport", R"(# Liquid water density jump carried at 100 m/s; the discontinuity starts at
# x = 0.2 m.
model.type = euler
model.description = transported density jump in NASG water
model.eos = water-nasg
model.x_min = 0
model.x_max = 1
model.x_disc = 0.2
model.cells = 100
model.t_end = 6e-3
left.rho = 1000
left.u = 100
left.p = 1e5
right.rho = 500
right.u = 100
right.p = 1e5
solver.name = rsir
)"},
      {"water-nasg-shock-tube", R"(# Liquid water shock tube, 1 GPa against atmospheric pressure.
model.type = euler
model.description = NASG water shock tube
model.eos = water-nasg
model.x_min = 0
model.x_max = 1
model.x_disc = 0.5
model.cells = 100
model.t_end = 7.5e-5
left.rho = 1000
left.u = 0
left.p = 1e9
right.rho = 1000
right.u = 0
right.p = 1e5
solver.name = rsir
)"},
      {"tp-alpha-rest", R"(# Water droplets in air at rest; only the droplet volume fraction jumps.
model.type = two-phase
model.description = volume fraction discontinuity at rest
model.eos1 = water-sg
model.eos2 = air-ideal
model.x_min = 0
model.x_max = 1
model.x_disc = 0.5
model.cells = 100
model.t_end = 6e-3
left.alpha1 = 0.1
left.rho1 = 1000
left.u1 = 0
left.p1 = 1e5
left.rho2 = 1
left.u2 = 0
left.p2 = 1e5
right.alpha1 = 0.001
right.rho1 = 1000
right.u1 = 0
right.p1 = 1e5
right.rho2 = 1
right.u2 = 0
right.p2 = 1e5
solver.name = rsir-tp
relax.pressure = on
)"},
      {"tp-alpha-transport", R"(# The same volume fraction jump carried at 100 m/s by both phases.
model.type = two-phase
model.description = transported volume fraction discontinuity
model.eos1 = water-sg
model.eos2 = air-ideal
model.x_min = 0
model.x_max = 1
model.x_disc = 0.2
model.cells = 100
model.t_end = 6e-3
left.alpha1 = 0.1
left.rho1 = 1000
left.u1 = 100
left.p1 = 1e5
left.rho2 = 1
left.u2 = 100
left.p2 = 1e5
right.alpha1 = 0.001
right.rho1 = 1000
right.u1 = 100
right.p1 = 1e5
right.rho2 = 1
right.u2 = 100
right.p2 = 1e5
solver.name = rsir-tp
relax.pressure = on
)"},
      {"tp-shock-tube", R"(# Dilute water droplets in air: high-pressure gas on the left, no drag,
# stiff pressure relaxation.
model.type = two-phase
model.description = two-phase shock tube
model.eos1 = water-sg
model.eos2 = air-ideal
model.x_min = 0
model.x_max = 1
model.x_disc = 0.5
model.cells = 100
model.t_end = 3e-4
left.alpha1 = 0.01
left.rho1 = 1000
left.u1 = 0
left.p1 = 1e6
left.rho2 = 10
left.u2 = 0
left.p2 = 1e6
right.alpha1 = 0.01
right.rho1 = 1000
right.u1 = 0
right.p1 = 1e5
right.rho2 = 1
right.u2 = 0
right.p2 = 1e5
solver.name = rsir-tp
relax.pressure = on
)"},
      {"tp-shock-tube-long", R"(# The two-phase shock tube on a 5 m domain with 1000 cells, sampled at
# several times to follow the loss of self-similarity.
model.type = two-phase
model.description = two-phase shock tube, long domain
model.eos1 = water-sg
model.eos2 = air-ideal
model.x_min = 0
model.x_max = 5
model.x_disc = 2.5
model.cells = 1000
model.t_end = 3e-3
model.outputs = 1e-3, 2e-3, 3e-3
left.alpha1 = 0.01
left.rho1 = 1000
left.u1 = 0
left.p1 = 1e6
left.rho2 = 10
left.u2 = 0
left.p2 = 1e6
right.alpha1 = 0.01
right.rho1 = 1000
right.u1 = 0
right.p1 = 1e5
right.rho2 = 1
right.u2 = 0
right.p2 = 1e5
solver.name = rsir-tp
relax.pressure = on
)"},
  };
  return entries;
}

}  // namespace

std::vector<std::string> builtin_case_names() {
  std::vector<std::string> names;
  for (const auto& e : catalog()) names.push_back(e.first);
  return names;
}

const std::string& builtin_case_text(std::string_view name) {
  for (const auto& e : catalog())
    if (e.first == name) return e.second;
  std::string list;
  for (const auto& n : builtin_case_names()) list += "\n  " + n;
  throw ConfigError("unknown case '" + std::string(name) + "'; available cases:" + list);
}

CaseConfig builtin_case(std::string_view name) {
  CaseConfig c = parse_config(builtin_case_text(name), std::string(name));
  c.name = std::string(name);
  return c;
}

}  // namespace rsir
