#pragma once

#include <array>
#include <cmath>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "stretchlab/shear.hpp"
#include "stretchlab/surface.hpp"

namespace testsupport {

inline constexpr std::uint64_t kSeed = 20240611;

// Complete torus structure with hyperplane coordinates uniform in [-r, r]^2.
inline stretchlab::ShearStructure random_torus(std::mt19937_64& rng, double r = 1.0) {
  std::uniform_real_distribution<double> u(-r, r);
  const double c0 = u(rng);
  const double c1 = u(rng);
  return stretchlab::from_hyperplane_coords(stretchlab::standard_torus_triangulation(), {c0, c1});
}

// Independent holonomy oracle for the standard torus: plain 2x2 products of
// diagonal shears and the two turn matrices, no library code involved.
using M = std::array<double, 4>;  // a b c d

inline M mul(const M& x, const M& y) {
  return {x[0] * y[0] + x[1] * y[2], x[0] * y[1] + x[1] * y[3], x[2] * y[0] + x[3] * y[2],
          x[2] * y[1] + x[3] * y[3]};
}
inline M inv(const M& x) { return {x[3], -x[1], -x[2], x[0]}; }
inline M shear_step(double x, bool left) {
  const double s = std::exp(x / 2), t = std::exp(-x / 2);
  return left ? M{s, 0, -t, t} : M{s, -s, 0, t};
}

struct OracleRep {
  M a, b;
};

inline OracleRep oracle_rep(const std::vector<double>& x) {
  const M a = mul(shear_step(x[2], true), shear_step(x[1], false));
  const M b_loop = mul(shear_step(x[2], false), shear_step(x[0], true));
  return {a, inv(b_loop)};
}

inline double oracle_trace(const OracleRep& r, std::string_view w) {
  M m{1, 0, 0, 1};
  for (char c : w) {
    const M g = c == 'a' ? r.a : c == 'b' ? r.b : c == 'A' ? inv(r.a) : inv(r.b);
    m = mul(m, g);
  }
  return m[0] + m[3];
}

inline double oracle_length(const OracleRep& r, std::string_view w) {
  const double t = std::abs(oracle_trace(r, w));
  return t <= 2 ? 0.0 : 2 * std::acosh(t / 2);
}

}  // namespace testsupport
