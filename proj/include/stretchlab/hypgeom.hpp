#pragma once

#include <array>
#include <cmath>

namespace stretchlab {

// Element of PSL(2,R) stored as a row-major SL(2,R) representative
// [[a, b], [c, d]]. The public constructor normalizes to det 1 and picks the
// sign so that the first entry with magnitude above 1e-12 is positive, which
// makes equality of projective classes testable entry-wise.
class IsometryMatrix {
 public:
  IsometryMatrix() : IsometryMatrix(1.0, 0.0, 0.0, 1.0) {}
  IsometryMatrix(double a, double b, double c, double d);

  static IsometryMatrix identity() { return {}; }

  double a() const { return a_; }
  double b() const { return b_; }
  double c() const { return c_; }
  double d() const { return d_; }

  double trace() const { return a_ + d_; }
  double det() const { return a_ * d_ - b_ * c_; }
  IsometryMatrix inverse() const { return {d_, -b_, -c_, a_}; }

  // Entry-wise comparison of canonical representatives.
  bool approx_equal(const IsometryMatrix& other, double tol) const;

 private:
  double a_, b_, c_, d_;
};

// Unnormalized 2x2 product used inside long holonomy products; callers
// canonicalize once at the end.
struct Mat2 {
  double a = 1.0, b = 0.0, c = 0.0, d = 1.0;

  friend Mat2 operator*(const Mat2& m, const Mat2& n) {
    return {m.a * n.a + m.b * n.c, m.a * n.b + m.b * n.d,
            m.c * n.a + m.d * n.c, m.c * n.b + m.d * n.d};
  }
  double trace() const { return a + d; }
  Mat2 inverse() const { return {d, -b, -c, a}; }
  IsometryMatrix canonical() const { return {a, b, c, d}; }
};

inline Mat2 raw(const IsometryMatrix& m) { return {m.a(), m.b(), m.c(), m.d()}; }

// Point of the upper half-plane model.
struct HPoint {
  double x = 0.0;
  double y = 1.0;
};

enum class IsometryKind { Identity, Elliptic, Parabolic, Hyperbolic };

struct IsometryClass {
  IsometryKind kind;
  double translation_length;  // 0 unless Hyperbolic
};

inline constexpr double kParabolicTol = 1e-9;
inline constexpr double kIdentityTol = 1e-12;

IsometryMatrix compose(const IsometryMatrix& m, const IsometryMatrix& n);

IsometryClass classify(const IsometryMatrix& m);

// 2 arccosh(|tr|/2), or 0 when |tr| is within kParabolicTol of 2 (or below).
double trace_to_length(double trace);

HPoint apply(const IsometryMatrix& m, const HPoint& p);

double hyp_distance(const HPoint& p, const HPoint& q);

// Hyperbolic isometry with the axis of m and translation length |t|; t > 0
// translates in the same direction as m. Throws NotHyperbolic.
IsometryMatrix axis_translation(const IsometryMatrix& m, double t);

// Ideal triangle with vertices 0, 1, infinity and the symmetric horocycles
// y = 1, |z - i/2| = 1/2, |z - 1 - i/2| = 1/2 (pairwise tangent at the
// midpoints of the sides).
bool in_ideal_triangle(const HPoint& p, double tol = 1e-12);

// K-Lipschitz self-map of the ideal triangle: identity on the central region
// cut out by the three horocycles; in each corner the horocycle at distance t
// from the central region goes to the one at distance K t, linearly in
// horocyclic arc length. Throws OutsideTriangle / InvalidArgument (K < 1).
HPoint stretch_triangle_map(const HPoint& p, double K);

}  // namespace stretchlab
