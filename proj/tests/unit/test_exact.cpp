#include <doctest.h>

#include <cmath>
#include <vector>

#include "helpers.hpp"
#include "rsir/errors.hpp"
#include "rsir/exact_riemann.hpp"

using namespace rsir;

namespace {

// Ideal-gas pressure function written independently of the library.
double f_side(double p, const EulerPrim& w, double g) {
  const double c = std::sqrt(g * w.p / w.rho);
  if (p > w.p) {
    const double a = 2.0 / ((g + 1.0) * w.rho), b = (g - 1.0) / (g + 1.0) * w.p;
    return (p - w.p) * std::sqrt(a / (p + b));
  }
  return 2.0 * c / (g - 1.0) * (std::pow(p / w.p, (g - 1.0) / (2.0 * g)) - 1.0);
}

double bisect_p_star(const EulerPrim& l, const EulerPrim& r, double g) {
  double lo = 1e-12, hi = 100.0 * std::max(l.p, r.p);
  for (int i = 0; i < 300; ++i) {
    const double mid = 0.5 * (lo + hi);
    (f_side(mid, l, g) + f_side(mid, r, g) + r.u - l.u < 0.0 ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

}  // namespace

TEST_CASE("Sod problem star state") {
  const EosParams g = EosParams::ideal(1.4);
  const EulerPrim l{1.0, 0.0, 1.0}, r{0.125, 0.0, 0.1};
  const ExactSolution sol(l, r, g);
  CHECK(sol.p_star() == doctest::Approx(0.30313).epsilon(1e-4));
  CHECK(sol.u_star() == doctest::Approx(0.92745).epsilon(1e-4));
  CHECK(sol.residual() < 1e-10);
  CHECK(sol.p_star() == doctest::Approx(bisect_p_star(l, r, 1.4)).epsilon(1e-12));
  CHECK(sol.left_wave() == WaveKind::rarefaction);
  CHECK(sol.right_wave() == WaveKind::shock);
}

TEST_CASE("bisection oracle agrees on strong and expansive data") {
  const EosParams g = EosParams::ideal(1.4);
  const std::vector<std::pair<EulerPrim, EulerPrim>> cases{
      {{1.0, 0.0, 1000.0}, {1.0, 0.0, 0.01}},
      {{1.0, -2.0, 0.4}, {1.0, 2.0, 0.4}},
      {{5.99924, 19.5975, 460.894}, {5.99242, -6.19633, 46.095}}};
  for (const auto& [l, r] : cases) {
    const ExactSolution sol(l, r, g);
    CHECK(sol.p_star() == doctest::Approx(bisect_p_star(l, r, 1.4)).epsilon(1e-10));
  }
}

TEST_CASE("equal states and mirror data") {
  const auto a = testing::air();
  const EulerPrim w{1.2, 40.0, 1e5};
  const ExactSolution same(w, w, a);
  CHECK(same.p_star() == doctest::Approx(1e5).epsilon(1e-12));
  CHECK(same.u_star() == doctest::Approx(40.0).epsilon(1e-12));
  for (double xi : {-1e4, -100.0, 0.0, 100.0, 1e4}) {
    const EulerPrim s = same.sample(xi);
    CHECK(s.rho == doctest::Approx(1.2).epsilon(1e-12));
    CHECK(s.p == doctest::Approx(1e5).epsilon(1e-12));
  }
  const ExactSolution mirror({1.0, -100.0, 1e5}, {1.0, 100.0, 1e5}, a);
  CHECK(std::fabs(mirror.u_star()) <= 1e-10);
}

TEST_CASE("sampling far field, contact and rarefaction") {
  const auto a = testing::air();
  const EulerPrim l{1.0, 0.0, 1e5}, r{0.125, 0.0, 1e4};
  const ExactSolution sol(l, r, a);
  CHECK(sol.sample(-1e6).rho == l.rho);
  CHECK(sol.sample(1e6).rho == r.rho);

  const double eps = 1e-9 * sol.u_star();
  const EulerPrim lo = sol.sample(sol.u_star() - eps), hi = sol.sample(sol.u_star() + eps);
  CHECK(lo.p == doctest::Approx(hi.p).epsilon(1e-12));
  CHECK(lo.rho > hi.rho * 1.01);

  // u + 2c/(gamma-1) is constant through the left fan.
  const double inv = l.u + 2.0 * sound_speed(a, l.rho, l.p) / 0.4;
  const double head = sol.left_head_speed(), tail = sol.left_tail_speed();
  for (int k = 1; k < 20; ++k) {
    const double xi = head + (tail - head) * k / 20.0;
    const EulerPrim s = sol.sample(xi);
    CHECK(s.u + 2.0 * sound_speed(a, s.rho, s.p) / 0.4 == doctest::Approx(inv).epsilon(1e-10));
  }
}

TEST_CASE("NASG fan sample lies on the isentrope") {
  const auto n = testing::water_nasg();
  const EulerPrim l{1000.0, 0.0, 1e9}, r{1000.0, 0.0, 1e5};
  const ExactSolution sol(l, r, n);
  const double xi = 0.5 * (sol.left_head_speed() + sol.left_tail_speed());
  const EulerPrim s = sol.sample(xi);
  CHECK(entropy(n, s.rho, s.p) == doctest::Approx(entropy(n, l.rho, l.p)).epsilon(1e-9));
  CHECK(s.u - sound_speed(n, s.rho, s.p) == doctest::Approx(xi).epsilon(1e-9));
}

TEST_CASE("Galilean invariance") {
  const auto a = testing::air();
  const EulerPrim l{1.0, 0.0, 1e5}, r{0.125, 0.0, 1e4};
  const ExactSolution base(l, r, a);
  const ExactSolution boosted({1.0, 150.0, 1e5}, {0.125, 150.0, 1e4}, a);
  CHECK(boosted.p_star() == doctest::Approx(base.p_star()).epsilon(1e-12));
  CHECK(boosted.rho_star_l() == doctest::Approx(base.rho_star_l()).epsilon(1e-12));
  CHECK(boosted.rho_star_r() == doctest::Approx(base.rho_star_r()).epsilon(1e-12));
  CHECK(boosted.u_star() == doctest::Approx(base.u_star() + 150.0).epsilon(1e-12));
}

TEST_CASE("entropy rises across both exact shocks") {
  const auto a = testing::air();
  const EulerPrim l{1.0, 300.0, 1e5}, r{1.0, -300.0, 1e5};
  const ExactSolution sol(l, r, a);
  REQUIRE(sol.left_wave() == WaveKind::shock);
  REQUIRE(sol.right_wave() == WaveKind::shock);
  CHECK(entropy(a, sol.rho_star_l(), sol.p_star()) > entropy(a, l.rho, l.p));
  CHECK(entropy(a, sol.rho_star_r(), sol.p_star()) > entropy(a, r.rho, r.p));
}

TEST_CASE("vacuum-generating data raise") {
  const auto a = testing::air();
  CHECK_THROWS_AS(ExactSolution({1.0, -5000.0, 1e5}, {1.0, 5000.0, 1e5}, a), VacuumError);
}

TEST_CASE("l1 error of the sampled solution is zero") {
  const auto a = testing::air();
  const ExactSolution sol({1.0, 0.0, 1e5}, {0.125, 0.0, 1e4}, a);
  const Mesh1D mesh{0.0, 1.0, 50};
  const double t = 3e-4;
  std::vector<double> rho(mesh.n_cells);
  for (std::size_t i = 0; i < mesh.n_cells; ++i) rho[i] = sol.sample((mesh.center(i) - 0.5) / t).rho;
  CHECK(l1_error(rho, EulerField::density, sol, t, mesh, 0.5) == 0.0);
  rho[0] += 1.0;
  CHECK(l1_error(rho, EulerField::density, sol, t, mesh, 0.5) == doctest::Approx(mesh.dx()));
  CHECK_THROWS_AS(l1_error(rho, EulerField::density, sol, 0.0, mesh, 0.5), std::invalid_argument);
}
