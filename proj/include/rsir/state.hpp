#pragma once

#include <array>
#include <cmath>
#include <cstddef>

namespace rsir {

/// Fixed-size vector of conserved variables or fluxes.
template <std::size_t N>
struct StateVec {
  std::array<double, N> v{};

  static constexpr std::size_t size() { return N; }

  constexpr double& operator[](std::size_t i) { return v[i]; }
  constexpr const double& operator[](std::size_t i) const { return v[i]; }

  constexpr StateVec& operator+=(const StateVec& o) {
    for (std::size_t i = 0; i < N; ++i) v[i] += o.v[i];
    return *this;
  }
  constexpr StateVec& operator-=(const StateVec& o) {
    for (std::size_t i = 0; i < N; ++i) v[i] -= o.v[i];
    return *this;
  }
  constexpr StateVec& operator*=(double s) {
    for (auto& x : v) x *= s;
    return *this;
  }

  friend constexpr StateVec operator+(StateVec a, const StateVec& b) { return a += b; }
  friend constexpr StateVec operator-(StateVec a, const StateVec& b) { return a -= b; }
  friend constexpr StateVec operator*(double s, StateVec a) { return a *= s; }
  friend constexpr StateVec operator*(StateVec a, double s) { return a *= s; }
  friend constexpr bool operator==(const StateVec&, const StateVec&) = default;
};

template <std::size_t N>
double max_abs(const StateVec<N>& a) {
  double m = 0.0;
  for (double x : a.v) m = std::fmax(m, std::fabs(x));
  return m;
}

}  // namespace rsir
