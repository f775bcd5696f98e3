#pragma once

#include <string>
#include <vector>

#include "rsir/euler.hpp"
#include "rsir/fv.hpp"
#include "rsir/mesh.hpp"
#include "rsir/twophase.hpp"

namespace rsir {

enum class ModelKind { euler, two_phase };

enum class DragKind { none, constant, clift_gauvin };

struct RelaxConfig {
  bool pressure = true;
  DragKind drag = DragKind::none;
  double lambda = 0.0;     // kg/(m^3 s), constant drag
  double radius = 5e-4;    // m, Clift-Gauvin particle radius
  double mu2 = 18e-6;      // Pa s, carrier viscosity
};

struct CaseConfig {
  std::string name;
  std::string description;
  ModelKind model = ModelKind::euler;

  EosParams eos;          // Euler
  std::string eos_name;   // preset name or empty
  TwoPhaseEos tp_eos;     // two-phase
  std::string eos1_name, eos2_name;

  EulerPrim euler_left, euler_right;
  TwoPhasePrim tp_left, tp_right;

  Mesh1D mesh;
  double x_disc = 0.5;
  double t_end = 0.0;
  std::vector<double> outputs;  // sorted, last entry == t_end

  std::string solver = "rsir";
  double beta = 1.0;
  double cfl = 0.5;
  Limiter limiter = Limiter::minmod;
  Boundary boundary = Boundary::transmissive;
  RelaxConfig relax;

  /// Throws ConfigError for inadmissible states, unknown or incompatible solvers and
  /// out-of-range parameters. Sorts the outputs and appends t_end when missing.
  void validate();
};

std::vector<std::string> euler_solver_names();
std::vector<std::string> two_phase_solver_names();
EulerSolver parse_euler_solver(const std::string& name);
TwoPhaseSolver parse_two_phase_solver(const std::string& name);

}  // namespace rsir
