#include "rsir/config.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <sstream>

namespace rsir {

namespace {

const std::vector<std::pair<std::string, EulerSolver>> kEulerSolvers = {
    {"rusanov", EulerSolver::rusanov}, {"hll", EulerSolver::hll}, {"hllc", EulerSolver::hllc},
    {"linde", EulerSolver::linde},     {"rsir", EulerSolver::rsir}};

const std::vector<std::pair<std::string, TwoPhaseSolver>> kTwoPhaseSolvers = {
    {"rusanov-basic", TwoPhaseSolver::rusanov_basic},
    {"rusanov-local", TwoPhaseSolver::rusanov_local},
    {"hll-tp", TwoPhaseSolver::hll},
    {"rsir-tp", TwoPhaseSolver::rsir}};

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

std::string join(const std::vector<std::string>& v) {
  std::string out;
  for (const auto& s : v) out += (out.empty() ? "" : ", ") + s;
  return out;
}

double parse_number(const std::string& key, const std::string& text) {
  const std::string t = trim(text);
  double x = 0.0;
  const auto [end, ec] = std::from_chars(t.data(), t.data() + t.size(), x);
  if (ec != std::errc() || end != t.data() + t.size() || t.empty() || !std::isfinite(x))
    throw ConfigKeyError(key, "expected a number, got '" + t + "'");
  return x;
}

std::vector<double> parse_list(const std::string& key, const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(parse_number(key, item));
  return out;
}

bool parse_bool(const std::string& key, const std::string& text) {
  const std::string t = trim(text);
  if (t == "on" || t == "true" || t == "yes" || t == "1") return true;
  if (t == "off" || t == "false" || t == "no" || t == "0") return false;
  throw ConfigKeyError(key, "expected on/off, got '" + t + "'");
}

// Preset name or "gamma, p_inf[, b]".
EosParams parse_eos(const std::string& key, const std::string& text, std::string& name) {
  const std::string t = trim(text);
  if (auto preset = eos_preset(t)) {
    name = t;
    return *preset;
  }
  const std::vector<double> v = parse_list(key, t);
  if (v.size() < 2 || v.size() > 3)
    throw ConfigKeyError(key, "expected a preset (" + join(eos_preset_names()) +
                                  ") or 'gamma, p_inf[, b]'");
  name.clear();
  return EosParams::nasg(v[0], v[1], v.size() == 3 ? v[2] : 0.0);
}

std::string eos_text(const EosParams& eos, const std::string& name) {
  if (!name.empty()) return name;
  std::ostringstream os;
  os.precision(17);
  os << eos.gamma << ", " << eos.p_inf << ", " << eos.b;
  return os.str();
}

bool set_euler_state(EulerPrim& w, const std::string& field, double x) {
  if (field == "rho") w.rho = x;
  else if (field == "u") w.u = x;
  else if (field == "p") w.p = x;
  else return false;
  return true;
}

bool set_tp_state(TwoPhasePrim& w, const std::string& field, double x) {
  if (field == "alpha1") w.alpha1 = x;
  else if (field == "rho1") w.rho1 = x;
  else if (field == "u1") w.u1 = x;
  else if (field == "p1") w.p1 = x;
  else if (field == "rho2") w.rho2 = x;
  else if (field == "u2") w.u2 = x;
  else if (field == "p2") w.p2 = x;
  else return false;
  return true;
}

const std::vector<std::string> kEulerStateFields = {"rho", "u", "p"};
const std::vector<std::string> kTwoPhaseStateFields = {"alpha1", "rho1", "u1", "p1",
                                                       "rho2",   "u2",   "p2"};

void check_state(const EosParams& eos, double rho, double p, const std::string& key_rho,
                 const std::string& key_p) {
  if (!(rho > 0.0) || !(1.0 - rho * eos.b > 0.0))
    throw ConfigKeyError(key_rho, "density outside the EOS domain");
  if (!is_admissible(eos, rho, p))
    throw ConfigKeyError(key_p, "pressure must exceed -p_inf");
}

}  // namespace

std::vector<std::string> euler_solver_names() {
  std::vector<std::string> out;
  for (const auto& s : kEulerSolvers) out.push_back(s.first);
  return out;
}

std::vector<std::string> two_phase_solver_names() {
  std::vector<std::string> out;
  for (const auto& s : kTwoPhaseSolvers) out.push_back(s.first);
  return out;
}

EulerSolver parse_euler_solver(const std::string& name) {
  for (const auto& s : kEulerSolvers)
    if (s.first == name) return s.second;
  throw ConfigKeyError("solver.name", "solver '" + name + "' is not available for the Euler model (choose " +
                                          join(euler_solver_names()) + ")");
}

TwoPhaseSolver parse_two_phase_solver(const std::string& name) {
  for (const auto& s : kTwoPhaseSolvers)
    if (s.first == name) return s.second;
  throw ConfigKeyError("solver.name", "solver '" + name +
                                          "' is not available for the two-phase model (choose " +
                                          join(two_phase_solver_names()) + ")");
}

void CaseConfig::validate() {
  if (model == ModelKind::euler) {
    try {
      eos.validate();
    } catch (const std::invalid_argument& e) {
      throw ConfigKeyError("model.eos", e.what());
    }
    check_state(eos, euler_left.rho, euler_left.p, "left.rho", "left.p");
    check_state(eos, euler_right.rho, euler_right.p, "right.rho", "right.p");
    if (solver.empty()) solver = "rsir";
    parse_euler_solver(solver);
  } else {
    for (const auto& [key, e] : {std::pair{"model.eos1", tp_eos.phase1}, {"model.eos2", tp_eos.phase2}}) {
      try {
        e.validate();
      } catch (const std::invalid_argument& err) {
        throw ConfigKeyError(key, err.what());
      }
    }
    for (const auto& [side, w] : {std::pair{std::string("left"), tp_left}, {std::string("right"), tp_right}}) {
      if (!(w.alpha1 > 0.0 && w.alpha1 < 1.0))
        throw ConfigKeyError(side + ".alpha1", "volume fraction must lie in (0,1)");
      check_state(tp_eos.phase1, w.rho1, w.p1, side + ".rho1", side + ".p1");
      check_state(tp_eos.phase2, w.rho2, w.p2, side + ".rho2", side + ".p2");
    }
    if (solver.empty()) solver = "rsir-tp";
    const TwoPhaseSolver s = parse_two_phase_solver(solver);
    if (s == TwoPhaseSolver::rsir &&
        (tp_eos.phase1.has_covolume() || tp_eos.phase2.has_covolume()))
      throw ConfigKeyError("solver.name", "rsir-tp requires ideal or stiffened-gas phases");
  }
  if (!(beta >= 0.0 && beta <= 1.0)) throw ConfigKeyError("solver.beta", "beta must lie in [0,1]");
  if (!(cfl > 0.0 && cfl <= 1.0)) throw ConfigKeyError("solver.cfl", "CFL must lie in (0,1]");
  if (!(mesh.x_max > mesh.x_min)) throw ConfigKeyError("model.x_max", "domain requires x_max > x_min");
  if (mesh.n_cells < 4) throw ConfigKeyError("model.cells", "at least 4 cells are required");
  if (!(x_disc >= mesh.x_min && x_disc <= mesh.x_max))
    throw ConfigKeyError("model.x_disc", "discontinuity must lie inside the domain");
  if (!(t_end > 0.0)) throw ConfigKeyError("model.t_end", "end time must be positive");
  std::sort(outputs.begin(), outputs.end());
  outputs.erase(std::unique(outputs.begin(), outputs.end()), outputs.end());
  for (double t : outputs)
    if (!(t >= 0.0 && t <= t_end))
      throw ConfigKeyError("model.outputs", "output times must lie in [0, t_end]");
  if (outputs.empty() || outputs.back() != t_end) outputs.push_back(t_end);
  if (!(relax.lambda >= 0.0)) throw ConfigKeyError("relax.lambda", "lambda must be non-negative");
  if (!(relax.radius > 0.0)) throw ConfigKeyError("relax.radius", "radius must be positive");
  if (!(relax.mu2 > 0.0)) throw ConfigKeyError("relax.mu2", "viscosity must be positive");
}

void set_config_key(CaseConfig& c, const std::string& key, const std::string& raw) {
  const std::string value = trim(raw);
  const auto dot = key.find('.');
  const std::string section = dot == std::string::npos ? "" : key.substr(0, dot);
  const std::string field = dot == std::string::npos ? key : key.substr(dot + 1);
  const bool euler = c.model == ModelKind::euler;

  if (section == "model") {
    if (field == "type") {
      if (value == "euler") c.model = ModelKind::euler;
      else if (value == "two-phase") c.model = ModelKind::two_phase;
      else throw ConfigKeyError(key, "model must be 'euler' or 'two-phase'");
      return;
    }
    if (field == "name") { c.name = value; return; }
    if (field == "description") { c.description = value; return; }
    if (field == "eos" && euler) { c.eos = parse_eos(key, value, c.eos_name); return; }
    if (field == "eos1" && !euler) { c.tp_eos.phase1 = parse_eos(key, value, c.eos1_name); return; }
    if (field == "eos2" && !euler) { c.tp_eos.phase2 = parse_eos(key, value, c.eos2_name); return; }
    if (field == "x_min") { c.mesh.x_min = parse_number(key, value); return; }
    if (field == "x_max") { c.mesh.x_max = parse_number(key, value); return; }
    if (field == "x_disc") { c.x_disc = parse_number(key, value); return; }
    if (field == "t_end") { c.t_end = parse_number(key, value); return; }
    if (field == "outputs") { c.outputs = parse_list(key, value); return; }
    if (field == "cells") {
      const double n = parse_number(key, value);
      if (!(n >= 1.0) || n != std::floor(n)) throw ConfigKeyError(key, "expected a positive integer");
      c.mesh.n_cells = static_cast<std::size_t>(n);
      return;
    }
  } else if (section == "left" || section == "right") {
    const double x = parse_number(key, value);
    const bool ok = euler ? set_euler_state(section == "left" ? c.euler_left : c.euler_right, field, x)
                          : set_tp_state(section == "left" ? c.tp_left : c.tp_right, field, x);
    if (ok) return;
  } else if (section == "solver") {
    if (field == "name") { c.solver = value; return; }
    if (field == "beta") { c.beta = parse_number(key, value); return; }
    if (field == "cfl") { c.cfl = parse_number(key, value); return; }
    if (field == "limiter") {
      if (value == "minmod") c.limiter = Limiter::minmod;
      else if (value == "none") c.limiter = Limiter::none;
      else throw ConfigKeyError(key, "limiter must be 'minmod' or 'none'");
      return;
    }
    if (field == "boundary") {
      if (value == "transmissive") c.boundary = Boundary::transmissive;
      else if (value == "reflective") c.boundary = Boundary::reflective;
      else if (value == "periodic") c.boundary = Boundary::periodic;
      else throw ConfigKeyError(key, "boundary must be transmissive, reflective or periodic");
      return;
    }
  } else if (section == "relax" && !euler) {
    if (field == "pressure") { c.relax.pressure = parse_bool(key, value); return; }
    if (field == "lambda") { c.relax.lambda = parse_number(key, value); return; }
    if (field == "radius") { c.relax.radius = parse_number(key, value); return; }
    if (field == "mu2") { c.relax.mu2 = parse_number(key, value); return; }
    if (field == "drag") {
      if (value == "none") c.relax.drag = DragKind::none;
      else if (value == "constant") c.relax.drag = DragKind::constant;
      else if (value == "clift-gauvin") c.relax.drag = DragKind::clift_gauvin;
      else throw ConfigKeyError(key, "drag must be none, constant or clift-gauvin");
      return;
    }
  }
  throw ConfigKeyError(key, std::string("unknown key for the ") + (euler ? "euler" : "two-phase") +
                                " model");
}

std::vector<std::string> config_keys() {
  std::vector<std::string> keys = {"model.type",   "model.name",   "model.description",
                                   "model.eos",    "model.eos1",   "model.eos2",
                                   "model.x_min",  "model.x_max",  "model.x_disc",
                                   "model.cells",  "model.t_end",  "model.outputs"};
  for (const char* side : {"left", "right"}) {
    for (const auto& f : kEulerStateFields) keys.push_back(std::string(side) + "." + f);
    for (const auto& f : kTwoPhaseStateFields) keys.push_back(std::string(side) + "." + f);
  }
  for (const char* k : {"solver.name", "solver.beta", "solver.cfl", "solver.limiter",
                        "solver.boundary", "relax.pressure", "relax.drag", "relax.lambda",
                        "relax.radius", "relax.mu2"})
    keys.emplace_back(k);
  return keys;
}

CaseConfig parse_config(std::string_view text, std::string_view source) {
  struct Entry {
    std::string key, value;
    int line;
  };
  std::vector<Entry> entries;
  std::map<std::string, int> seen;
  std::istringstream in{std::string(text)};
  std::string line;
  int number = 0;
  auto where = [&](int l) { return std::string(source) + ":" + std::to_string(l) + ": "; };
  while (std::getline(in, line)) {
    ++number;
    const auto hash = line.find('#');
    const std::string body = trim(hash == std::string::npos ? line : line.substr(0, hash));
    if (body.empty()) continue;
    const auto eq = body.find('=');
    if (eq == std::string::npos) throw ConfigError(where(number) + "expected 'key = value'");
    Entry e{trim(body.substr(0, eq)), trim(body.substr(eq + 1)), number};
    if (e.key.empty()) throw ConfigError(where(number) + "missing key");
    if (auto it = seen.find(e.key); it != seen.end())
      throw ConfigError(where(number) + "duplicate key '" + e.key + "' (first set on line " +
                        std::to_string(it->second) + ")");
    seen[e.key] = number;
    entries.push_back(e);
  }

  CaseConfig c;
  c.eos = *eos_preset("air-ideal");
  c.eos_name = "air-ideal";
  c.tp_eos = {*eos_preset("water-sg"), *eos_preset("air-ideal")};
  c.eos1_name = "water-sg";
  c.eos2_name = "air-ideal";
  c.solver.clear();
  // model.type first: the meaning of the state keys depends on it.
  std::stable_partition(entries.begin(), entries.end(),
                        [](const Entry& e) { return e.key == "model.type"; });
  for (const Entry& e : entries) {
    try {
      set_config_key(c, e.key, e.value);
    } catch (const ConfigKeyError& err) {
      throw err.located(where(e.line));
    } catch (const ConfigError& err) {
      throw ConfigError(where(e.line) + err.what());
    }
  }
  try {
    c.validate();
  } catch (const ConfigKeyError& err) {
    auto it = seen.find(err.key());
    const std::string prefix =
        it != seen.end() ? where(it->second) : std::string(source) + ": ";
    throw err.located(prefix);
  }
  return c;
}

CaseConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read config file '" + path.string() + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_config(ss.str(), path.string());
}

std::string to_config_text(const CaseConfig& c) {
  std::ostringstream os;
  os.precision(17);
  const bool euler = c.model == ModelKind::euler;
  os << "model.type = " << (euler ? "euler" : "two-phase") << "\n";
  if (!c.name.empty()) os << "model.name = " << c.name << "\n";
  if (!c.description.empty()) os << "model.description = " << c.description << "\n";
  if (euler) {
    os << "model.eos = " << eos_text(c.eos, c.eos_name) << "\n";
  } else {
    os << "model.eos1 = " << eos_text(c.tp_eos.phase1, c.eos1_name) << "\n";
    os << "model.eos2 = " << eos_text(c.tp_eos.phase2, c.eos2_name) << "\n";
  }
  os << "model.x_min = " << c.mesh.x_min << "\nmodel.x_max = " << c.mesh.x_max
     << "\nmodel.x_disc = " << c.x_disc << "\nmodel.cells = " << c.mesh.n_cells
     << "\nmodel.t_end = " << c.t_end << "\nmodel.outputs = ";
  for (std::size_t i = 0; i < c.outputs.size(); ++i) os << (i ? ", " : "") << c.outputs[i];
  os << "\n";
  auto state = [&](const char* side, const auto& w) {
    if constexpr (std::is_same_v<std::decay_t<decltype(w)>, EulerPrim>) {
      os << side << ".rho = " << w.rho << "\n" << side << ".u = " << w.u << "\n"
         << side << ".p = " << w.p << "\n";
    } else {
      os << side << ".alpha1 = " << w.alpha1 << "\n" << side << ".rho1 = " << w.rho1 << "\n"
         << side << ".u1 = " << w.u1 << "\n" << side << ".p1 = " << w.p1 << "\n"
         << side << ".rho2 = " << w.rho2 << "\n" << side << ".u2 = " << w.u2 << "\n"
         << side << ".p2 = " << w.p2 << "\n";
    }
  };
  if (euler) {
    state("left", c.euler_left);
    state("right", c.euler_right);
  } else {
    state("left", c.tp_left);
    state("right", c.tp_right);
  }
  os << "solver.name = " << c.solver << "\nsolver.beta = " << c.beta
     << "\nsolver.cfl = " << c.cfl << "\nsolver.limiter = " << to_string(c.limiter)
     << "\nsolver.boundary = " << to_string(c.boundary) << "\n";
  if (!euler) {
    os << "relax.pressure = " << (c.relax.pressure ? "on" : "off") << "\nrelax.drag = "
       << (c.relax.drag == DragKind::none       ? "none"
           : c.relax.drag == DragKind::constant ? "constant"
                                                : "clift-gauvin")
       << "\nrelax.lambda = " << c.relax.lambda << "\nrelax.radius = " << c.relax.radius
       << "\nrelax.mu2 = " << c.relax.mu2 << "\n";
  }
  return os.str();
}

}  // namespace rsir
