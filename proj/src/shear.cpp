#include "stretchlab/shear.hpp"

#include <cmath>

#include "stretchlab/error.hpp"

namespace stretchlab {

namespace {

Mat2 edge_factor(double shear) {
  const double e = std::exp(shear / 2.0);
  return {e, 0.0, 0.0, 1.0 / e};
}

constexpr Mat2 kTurnLeft{1.0, 0.0, -1.0, 1.0};
constexpr Mat2 kTurnRight{1.0, -1.0, 0.0, 1.0};

Mat2 loop_product(const std::vector<double>& shears, const CombinatorialLoop& loop) {
  Mat2 m;
  for (const LoopStep& step : loop.steps) {
    m = m * edge_factor(shears[step.edge]) *
        (step.turn == Turn::Left ? kTurnLeft : kTurnRight);
  }
  return m;
}

double dot(const std::vector<double>& x, const std::vector<double>& y) {
  double s = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) s += x[i] * y[i];
  return s;
}

// Modified Gram-Schmidt; appends v (normalized) when it is independent.
bool orthonormal_append(std::vector<std::vector<double>>& basis, std::vector<double> v) {
  for (const auto& b : basis) {
    const double c = dot(v, b);
    for (std::size_t i = 0; i < v.size(); ++i) v[i] -= c * b[i];
  }
  const double n = std::sqrt(dot(v, v));
  if (n < 1e-9) return false;
  for (double& x : v) x /= n;
  basis.push_back(std::move(v));
  return true;
}

void require_torus(const IdealTriangulation& tri, const char* what) {
  if (!tri.is_standard_torus()) {
    throw StretchError(ErrorKind::NotStandardTorus,
                       std::string(what) + " needs the standard punctured-torus triangulation");
  }
}

}  // namespace

std::vector<double> completeness_residuals(const IdealTriangulation& tri,
                                           const std::vector<double>& shears) {
  std::vector<double> out;
  for (const auto& loop : puncture_loops(tri)) {
    out.push_back(std::abs(std::abs(loop_product(shears, loop).trace()) - 2.0));
  }
  return out;
}

ShearStructure::ShearStructure(IdealTriangulation tri, std::vector<double> shears)
    : tri_(std::move(tri)), shears_(std::move(shears)) {
  if (static_cast<int>(shears_.size()) != tri_.edge_count()) {
    throw StretchError(ErrorKind::InvalidArgument,
                       "expected " + std::to_string(tri_.edge_count()) + " shears, got " +
                           std::to_string(shears_.size()));
  }
  for (double x : shears_) {
    if (!std::isfinite(x)) {
      throw StretchError(ErrorKind::InvalidArgument, "shear coordinates must be finite");
    }
  }
  const auto residuals = completeness_residuals(tri_, shears_);
  for (std::size_t p = 0; p < residuals.size(); ++p) {
    if (!(residuals[p] <= kCompletenessTol)) {
      throw StretchError(ErrorKind::IncompleteStructure,
                         "puncture " + std::to_string(p) +
                             " holonomy is not parabolic: | |trace| - 2 | = " +
                             std::to_string(residuals[p]));
    }
  }
}

std::vector<std::vector<double>> completeness_constraints(const IdealTriangulation& tri) {
  std::vector<std::vector<double>> rows;
  for (const auto& orbit : tri.punctures()) {
    std::vector<double> row(tri.edge_count(), 0.0);
    for (const Corner& c : orbit) row[tri.edge(c)] += 1.0;
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<std::vector<double>> completeness_basis(const IdealTriangulation& tri) {
  std::vector<std::vector<double>> rowspace;
  for (auto& row : completeness_constraints(tri)) orthonormal_append(rowspace, row);
  std::vector<std::vector<double>> basis;
  const int E = tri.edge_count();
  for (int k = 0; k < E; ++k) {
    std::vector<double> v(E, 0.0);
    v[k] = 1.0;
    for (const auto& r : rowspace) {
      const double c = r[k];
      for (int i = 0; i < E; ++i) v[i] -= c * r[i];
    }
    orthonormal_append(basis, std::move(v));
  }
  return basis;
}

ShearStructure from_hyperplane_coords(const IdealTriangulation& tri,
                                      const std::vector<double>& coords) {
  const auto basis = completeness_basis(tri);
  if (coords.size() != basis.size()) {
    throw StretchError(ErrorKind::InvalidArgument,
                       "expected " + std::to_string(basis.size()) + " hyperplane coordinates");
  }
  std::vector<double> shears(tri.edge_count(), 0.0);
  for (std::size_t k = 0; k < basis.size(); ++k) {
    for (std::size_t i = 0; i < shears.size(); ++i) shears[i] += coords[k] * basis[k][i];
  }
  return {tri, std::move(shears)};
}

IsometryMatrix holonomy_of_loop(const ShearStructure& s, const CombinatorialLoop& loop) {
  resolve_loop(s.triangulation(), loop);
  return loop_product(s.shears(), loop).canonical();
}

Mat2 evaluate_word(const HolonomyRep& h, std::string_view word) {
  const Mat2 A = raw(h.A), B = raw(h.B);
  const Mat2 Ai = A.inverse(), Bi = B.inverse();
  Mat2 m;
  for (char c : word) {
    switch (c) {
      case 'a': m = m * A; break;
      case 'b': m = m * B; break;
      case 'A': m = m * Ai; break;
      case 'B': m = m * Bi; break;
      default:
        throw StretchError(ErrorKind::InvalidCurve, std::string("bad letter ") + c);
    }
  }
  return m;
}

double word_length(const HolonomyRep& h, const FreeWord& w) {
  return trace_to_length(evaluate_word(h, w.letters).trace());
}

double commutator_trace(const HolonomyRep& h) {
  return evaluate_word(h, "abAB").trace();
}

HolonomyRep shear_to_holonomy_rep(const ShearStructure& s) {
  require_torus(s.triangulation(), "shear_to_holonomy_rep");
  return {loop_product(s.shears(), torus_a_loop()).canonical(),
          loop_product(s.shears(), torus_b_loop()).inverse().canonical()};
}

ShearStructure shears_from_torus_rep(const HolonomyRep& h) {
  const std::array<double, 3> t{std::abs(h.A.trace()), std::abs(h.B.trace()),
                                std::abs(evaluate_word(h, "ab").trace())};
  for (double x : t) {
    if (!(x > 2.0)) {
      throw StretchError(ErrorKind::EllipticHolonomy,
                         "representation is not a complete hyperbolic torus");
    }
  }
  std::vector<double> shears(3);
  for (int k = 0; k < 3; ++k) {
    shears[k] = 2.0 * std::log(t[(k + 2) % 3] / t[(k + 1) % 3]);
  }
  return {standard_torus_triangulation(), std::move(shears)};
}

namespace {

double checked_length(double trace, const std::string& curve) {
  const double t = std::abs(trace);
  if (t < 2.0 - kParabolicTol) {
    throw StretchError(ErrorKind::EllipticHolonomy,
                       "elliptic holonomy (|trace| = " + std::to_string(t) + ") for " + curve);
  }
  return trace_to_length(t);
}

}  // namespace

double curve_length(const ShearStructure& s, const Curve& c) {
  if (const auto* loop = std::get_if<CombinatorialLoop>(&c)) {
    resolve_loop(s.triangulation(), *loop);
    return checked_length(loop_product(s.shears(), *loop).trace(), to_string(c));
  }
  const HolonomyRep h = shear_to_holonomy_rep(s);
  const FreeWord w = std::holds_alternative<Slope>(c) ? slope_word(std::get<Slope>(c))
                                                      : std::get<FreeWord>(c);
  return checked_length(evaluate_word(h, w.letters).trace(), to_string(c));
}

ShearStructure stretch(const ShearStructure& s, double t) {
  std::vector<double> shears = s.shears();
  const double factor = std::exp(t);
  for (double& x : shears) x *= factor;
  return {s.triangulation(), std::move(shears)};
}

namespace {

// Substitute a -> sa, b -> sb (and inverses) in w, then reduce.
std::string substitute(std::string_view w, std::string_view sa, std::string_view sb) {
  const std::string ia = inverse_word(sa), ib = inverse_word(sb);
  std::string out;
  for (char c : w) {
    switch (c) {
      case 'a': out += sa; break;
      case 'b': out += sb; break;
      case 'A': out += ia; break;
      case 'B': out += ib; break;
    }
  }
  return free_reduce(out);
}

bool is_rotation_of(const std::string& w, const std::string& target) {
  return w.size() == target.size() && (target + target).find(w) != std::string::npos;
}

}  // namespace

std::string AdaptedBasis::rewrite(std::string_view word) const {
  return substitute(word, a_in_xy, b_in_xy);
}

AdaptedBasis adapted_basis(const Slope& s) {
  const long p = std::labs(s.p);
  const long q = s.q;
  AdaptedBasis basis{s.p < 0 ? "A" : "a", "b", s.p < 0 ? "A" : "a", "b"};
  long lp = 1, lq = 0, rp = 0, rq = 1;
  // Stern-Brocot descent; the pair (x, y) always spells the slopes (l, r).
  while (!(p == lp && q == lq) && !(p == rp && q == rq)) {
    const long mp = lp + rp, mq = lq + rq;
    if (p * mq > q * mp) {
      // (x, y) -> (x, xy): y_old = X y_new
      basis.y = free_reduce(basis.x + basis.y);
      basis.a_in_xy = substitute(basis.a_in_xy, "a", "Ab");
      basis.b_in_xy = substitute(basis.b_in_xy, "a", "Ab");
      rp = mp;
      rq = mq;
    } else {
      // (x, y) -> (xy, y): x_old = x_new Y
      basis.x = free_reduce(basis.x + basis.y);
      basis.a_in_xy = substitute(basis.a_in_xy, "aB", "b");
      basis.b_in_xy = substitute(basis.b_in_xy, "aB", "b");
      lp = mp;
      lq = mq;
    }
  }
  if (p == rp && q == rq) {
    std::swap(basis.x, basis.y);
    basis.a_in_xy = substitute(basis.a_in_xy, "b", "a");
    basis.b_in_xy = substitute(basis.b_in_xy, "b", "a");
  }
  const std::string comm =
      cyclic_reduce(basis.x + basis.y + inverse_word(basis.x) + inverse_word(basis.y));
  if (is_rotation_of(comm, "baBA")) {
    basis.y = inverse_word(basis.y);
    basis.a_in_xy = substitute(basis.a_in_xy, "a", "B");
    basis.b_in_xy = substitute(basis.b_in_xy, "a", "B");
  } else if (!is_rotation_of(comm, "abAB")) {
    throw StretchError(ErrorKind::BasisChangeFailed,
                       "no orientation-preserving basis found for " + to_string(s));
  }
  return basis;
}

namespace {

HolonomyRep twisted_basis_rep(const HolonomyRep& h, const AdaptedBasis& basis, double t) {
  const IsometryMatrix X = evaluate_word(h, basis.x).canonical();
  const IsometryMatrix Y = evaluate_word(h, basis.y).canonical();
  if (t == 0.0) return {X, Y};
  return {X, compose(axis_translation(X, t), Y)};
}

}  // namespace

HolonomyRep earthquake_twist(const HolonomyRep& h, const Slope& s, double t) {
  if (t == 0.0) return h;
  const AdaptedBasis basis = adapted_basis(s);
  const HolonomyRep twisted = twisted_basis_rep(h, basis, t);
  return {evaluate_word(twisted, basis.a_in_xy).canonical(),
          evaluate_word(twisted, basis.b_in_xy).canonical()};
}

double twisted_word_length(const HolonomyRep& h, const Slope& s, double t,
                           const FreeWord& w) {
  const AdaptedBasis basis = adapted_basis(s);
  return trace_to_length(evaluate_word(twisted_basis_rep(h, basis, t), basis.rewrite(w.letters))
                             .trace());
}

double alternating_shear(const std::array<double, 4>& sides) {
  return 0.5 * (sides[0] - sides[1] + sides[2] - sides[3]);
}

std::vector<double> shear_from_transverse(const IdealTriangulation& tri,
                                          const TransverseWeights& w) {
  const int E = tri.edge_count();
  if (static_cast<int>(w.weights.size()) != E) {
    throw StretchError(ErrorKind::InvalidArgument, "one transverse weight per edge expected");
  }
  for (double x : w.weights) {
    if (!(x >= 0.0) || !std::isfinite(x)) {
      throw StretchError(ErrorKind::InvalidArgument, "transverse weights must be finite and >= 0");
    }
  }
  std::vector<double> out(E);
  for (int e = 0; e < E; ++e) {
    const auto& [s1, s2] = tri.edge_sides(e);
    auto weight_at = [&](SideRef s, int offset) {
      return w.weights[tri.edge({s.triangle, (s.side + offset) % 3})];
    };
    out[e] = alternating_shear(
        {weight_at(s1, 2), weight_at(s1, 1), weight_at(s2, 2), weight_at(s2, 1)});
  }
  return out;
}

}  // namespace stretchlab
