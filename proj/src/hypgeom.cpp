#include "stretchlab/hypgeom.hpp"

#include <string>

#include "stretchlab/error.hpp"

namespace stretchlab {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NotHyperbolic: return "NotHyperbolic";
    case ErrorKind::OutsideTriangle: return "OutsideTriangle";
    case ErrorKind::InvalidTriangulation: return "InvalidTriangulation";
    case ErrorKind::InvalidCurve: return "InvalidCurve";
    case ErrorKind::IncompatibleLoop: return "IncompatibleLoop";
    case ErrorKind::EllipticHolonomy: return "EllipticHolonomy";
    case ErrorKind::NotStandardTorus: return "NotStandardTorus";
    case ErrorKind::BasisChangeFailed: return "BasisChangeFailed";
    case ErrorKind::ZeroLength: return "ZeroLength";
    case ErrorKind::IncompleteStructure: return "IncompleteStructure";
    case ErrorKind::InvalidTrack: return "InvalidTrack";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::Parse: return "Parse";
  }
  return "Unknown";
}

IsometryMatrix::IsometryMatrix(double a, double b, double c, double d) {
  const double det = a * d - b * c;
  if (!(det > 0.0) || !std::isfinite(det)) {
    throw StretchError(ErrorKind::InvalidArgument,
                       "isometry matrix needs positive finite determinant, got " +
                           std::to_string(det));
  }
  double s = 1.0 / std::sqrt(det);
  for (double e : {a, b, c, d}) {
    if (std::abs(e * s) > 1e-12) {
      if (e < 0) s = -s;
      break;
    }
  }
  a_ = a * s;
  b_ = b * s;
  c_ = c * s;
  d_ = d * s;
}

bool IsometryMatrix::approx_equal(const IsometryMatrix& o, double tol) const {
  return std::abs(a_ - o.a_) <= tol && std::abs(b_ - o.b_) <= tol &&
         std::abs(c_ - o.c_) <= tol && std::abs(d_ - o.d_) <= tol;
}

IsometryMatrix compose(const IsometryMatrix& m, const IsometryMatrix& n) {
  return (raw(m) * raw(n)).canonical();
}

double trace_to_length(double trace) {
  const double t = std::abs(trace);
  if (t <= 2.0 + kParabolicTol) return 0.0;
  return 2.0 * std::acosh(t / 2.0);
}

IsometryClass classify(const IsometryMatrix& m) {
  if (m.approx_equal(IsometryMatrix::identity(), kIdentityTol)) {
    return {IsometryKind::Identity, 0.0};
  }
  const double t = std::abs(m.trace());
  if (t < 2.0 - kParabolicTol) return {IsometryKind::Elliptic, 0.0};
  if (t <= 2.0 + kParabolicTol) return {IsometryKind::Parabolic, 0.0};
  return {IsometryKind::Hyperbolic, trace_to_length(t)};
}

HPoint apply(const IsometryMatrix& m, const HPoint& p) {
  const double re = m.c() * p.x + m.d();
  const double im = m.c() * p.y;
  const double den = re * re + im * im;
  const double nx = (m.a() * p.x + m.b()) * re + m.a() * m.c() * p.y * p.y;
  return {nx / den, p.y / den};
}

double hyp_distance(const HPoint& p, const HPoint& q) {
  // 2 asinh(|p - q| / (2 sqrt(y_p y_q))) equals
  // arccosh(1 + |p - q|^2 / (2 y_p y_q)) and keeps precision near 0.
  const double dx = p.x - q.x;
  const double dy = p.y - q.y;
  const double chord = std::sqrt(dx * dx + dy * dy);
  return 2.0 * std::asinh(chord / (2.0 * std::sqrt(p.y * q.y)));
}

IsometryMatrix axis_translation(const IsometryMatrix& m, double t) {
  if (classify(m).kind != IsometryKind::Hyperbolic) {
    throw StretchError(ErrorKind::NotHyperbolic,
                       "axis_translation needs a hyperbolic isometry");
  }
  // m = cosh(l/2) I + sinh(l/2) N with N^2 = I; keep N, replace l by t.
  const double sign = m.trace() < 0 ? -1.0 : 1.0;
  const double half_trace = sign * m.trace() / 2.0;
  const double sh = std::sqrt(half_trace * half_trace - 1.0);
  const double na = (sign * m.a() - half_trace) / sh;
  const double nb = sign * m.b() / sh;
  const double nc = sign * m.c() / sh;
  const double nd = (sign * m.d() - half_trace) / sh;
  const double ct = std::cosh(t / 2.0);
  const double st = std::sinh(t / 2.0);
  return {ct + st * na, st * nb, st * nc, ct + st * nd};
}

bool in_ideal_triangle(const HPoint& p, double tol) {
  if (!(p.y > 0.0)) return false;
  if (p.x < -tol || p.x > 1.0 + tol) return false;
  // outside the geodesic |z - 1/2| = 1/2
  return p.x * p.x + p.y * p.y - p.x >= -tol;
}

namespace {

// Order-3 rotation of the triangle: z -> 1/(1 - z) sends inf -> 0 -> 1 -> inf.
const IsometryMatrix kRotate{0.0, 1.0, -1.0, 1.0};
const IsometryMatrix kRotateInv{1.0, -1.0, 1.0, 0.0};

HPoint stretch_infinity_corner(const HPoint& p, double K) {
  // horocycle y = e^t goes to y = e^{K t}; x is the normalized arc length.
  return {p.x, std::pow(p.y, K)};
}

}  // namespace

HPoint stretch_triangle_map(const HPoint& p, double K) {
  if (!(K >= 1.0)) {
    throw StretchError(ErrorKind::InvalidArgument, "stretch factor must be >= 1");
  }
  if (!in_ideal_triangle(p)) {
    throw StretchError(ErrorKind::OutsideTriangle, "point outside the ideal triangle");
  }
  if (p.y >= 1.0) return stretch_infinity_corner(p, K);
  if (p.x * p.x + p.y * p.y <= p.y) {
    // corner at 0: rotate it to infinity, stretch, rotate back
    return apply(kRotate, stretch_infinity_corner(apply(kRotateInv, p), K));
  }
  const double u = p.x - 1.0;
  if (u * u + p.y * p.y <= p.y) {
    return apply(kRotateInv, stretch_infinity_corner(apply(kRotate, p), K));
  }
  return p;
}

}  // namespace stretchlab
